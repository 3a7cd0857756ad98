#include "freegroup/word.hpp"

#include <algorithm>
#include <utility>

namespace freegroup {

int Word::check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw Error("rank " + std::to_string(rank) + " out of range 1.."
                + std::to_string(kMaxRank));
  }
  return rank;
}

void Word::check_letter(Letter x) const {
  if (x.value() == 0 || x.generator() > rank_) {
    throw Error("letter " + std::to_string(x.value())
                + " outside rank " + std::to_string(rank_));
  }
}

Word::Word(int rank, std::vector<Letter> letters)
    : rank_(check_rank(rank)), letters_(std::move(letters)) {
  for (Letter x : letters_) {
    check_letter(x);
  }
}

Word::Word(int rank, std::initializer_list<int> signed_letters)
    : rank_(check_rank(rank)) {
  letters_.reserve(signed_letters.size());
  for (int v : signed_letters) {
    push_back(Letter(v));
  }
}

void Word::push_back(Letter x) {
  check_letter(x);
  letters_.push_back(x);
}

void Word::append(const Word& other) {
  if (other.rank_ != rank_) {
    throw Error("rank mismatch: " + std::to_string(rank_) + " vs "
                + std::to_string(other.rank_));
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1].inverse()) {
      return false;
    }
  }
  return true;
}

bool Word::is_cyclically_reduced() const {
  return is_reduced()
         && (letters_.size() < 2 || letters_.front() != letters_.back().inverse());
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  auto lu = u.letters();
  auto lv = v.letters();
  return std::lexicographical_compare(lu.begin(), lu.end(), lv.begin(), lv.end(),
                                      alphabet_less);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the signed letters.
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(w.rank());
  for (Letter x : w.letters()) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x.value()));
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter x : w.letters()) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(w.rank(), std::move(stack));
}

std::size_t reduced_length(const Word& w) {
  return free_reduce(w).size();
}

Word concat(const Word& u, const Word& v) {
  Word joined = u;
  joined.append(v);
  return free_reduce(joined);
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(w.rank(), std::move(out));
}

Word power(const Word& w, int k) {
  Word base = free_reduce(k < 0 ? invert(w) : w);
  Word out(w.rank());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) {
    out.append(base);
  }
  return free_reduce(out);
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  Word reduced = free_reduce(w);
  auto letters = reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {Word(w.rank(), {letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(lo)}),
          Word(w.rank(), {letters.begin() + static_cast<std::ptrdiff_t>(lo),
                          letters.begin() + static_cast<std::ptrdiff_t>(hi)})};
}

bool graphically_equal(const Word& u, const Word& v) {
  return u == v;
}

Word letter_word(int rank, Letter x) {
  Word w(rank);
  w.push_back(x);
  return w;
}

std::vector<Word> reduced_words_of_length(int rank, std::size_t length) {
  std::vector<Word> level{Word(rank)};
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<Word> next;
    next.reserve(level.size() * static_cast<std::size_t>(2 * rank));
    for (const Word& w : level) {
      for (int idx = 0; idx < 2 * rank; ++idx) {
        Letter x = Letter::from_index(idx);
        if (!w.empty() && w.back() == x.inverse()) {
          continue;
        }
        Word extended = w;
        extended.push_back(x);
        next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Word> reduced_words_up_to(int rank, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    auto level = reduced_words_of_length(rank, len);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace freegroup
