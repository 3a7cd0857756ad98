#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace freegroup {

// Raised for violated domain preconditions (rank mismatch, bad bounds, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest supported rank. Cut descriptors keep S as a bitmask over the 2n
// signed letters.
inline constexpr int kMaxRank = 32;

// A signed generator: +i is x_i, -i is x_i^{-1}.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(int value) : value_(value) {}

  static constexpr Letter generator(int i) { return Letter(i); }
  static constexpr Letter inverse_of(int i) { return Letter(-i); }

  constexpr int value() const { return value_; }
  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool is_inverse() const { return value_ < 0; }
  constexpr Letter inverse() const { return Letter(-value_); }

  // Position of this letter in the bit layout x_1, x_1^{-1}, x_2, ...
  constexpr int index() const {
    return 2 * (generator() - 1) + (is_inverse() ? 1 : 0);
  }
  static constexpr Letter from_index(int idx) {
    int g = idx / 2 + 1;
    return Letter(idx % 2 == 0 ? g : -g);
  }

  // Signed-integer order.
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  int value_ = 0;
};

// Alphabet order a < A < b < B < ...; used for shortlex word order.
constexpr bool alphabet_less(Letter x, Letter y) {
  return x.index() < y.index();
}

// A finite letter sequence over F_rank. The sequence is kept exactly as
// built; group-level operations below always return freely reduced words.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(check_rank(rank)) {}
  Word(int rank, std::vector<Letter> letters);
  Word(int rank, std::initializer_list<int> signed_letters);

  int rank() const { return rank_; }
  // Raw length |W|.
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  // Graphical append, no cancellation.
  void push_back(Letter x);
  void append(const Word& other);

  bool is_reduced() const;
  bool is_cyclically_reduced() const;

  // Graphical equality (letter by letter, same rank).
  friend bool operator==(const Word&, const Word&) = default;

 private:
  static int check_rank(int rank);
  void check_letter(Letter x) const;

  int rank_ = 1;
  std::vector<Letter> letters_;
};

// Shortlex order: shorter first, then lexicographic in alphabet order.
bool shortlex_less(const Word& u, const Word& v);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Result of peeling matching end letters: original = conjugator.core.conjugator^{-1}.
struct CyclicDecomposition {
  Word conjugator;
  Word core;
};

Word free_reduce(const Word& w);
// Reduced length ||W||.
std::size_t reduced_length(const Word& w);
Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
// Reduced w^k for any integer k.
Word power(const Word& w, int k);
CyclicDecomposition cyclic_reduce(const Word& w);
bool graphically_equal(const Word& u, const Word& v);

// The one-letter word x_i^{±1}.
Word letter_word(int rank, Letter x);

// All reduced words of length exactly `length`, in shortlex order.
std::vector<Word> reduced_words_of_length(int rank, std::size_t length);
// All reduced words of length <= `max_length` (including the empty word), shortlex.
std::vector<Word> reduced_words_up_to(int rank, std::size_t max_length);

}  // namespace freegroup
