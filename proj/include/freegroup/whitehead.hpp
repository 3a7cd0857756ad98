#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "freegroup/word.hpp"

namespace freegroup {

// Type (W1): a permutation of the signed letters commuting with inversion.
// images[i-1] is the image of x_i.
struct SignedPermutation {
  int rank = 1;
  std::vector<Letter> images;

  Letter operator()(Letter x) const {
    Letter y = images[static_cast<std::size_t>(x.generator() - 1)];
    return x.is_inverse() ? y.inverse() : y;
  }
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

// Type (W2): omega(S, a) with a in S and a^{-1} not in S.
class Cut {
 public:
  Cut(int rank, Letter multiplier, std::uint64_t mask);
  Cut(int rank, Letter multiplier, const std::vector<Letter>& set);

  int rank() const { return rank_; }
  Letter multiplier() const { return multiplier_; }
  // Bit k set iff Letter::from_index(k) is in S.
  std::uint64_t mask() const { return mask_; }
  bool contains(Letter x) const { return (mask_ >> x.index()) & 1U; }
  std::vector<Letter> members() const;

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  int rank_;
  Letter multiplier_;
  std::uint64_t mask_;
};

using WhiteheadDescriptor = std::variant<Cut, SignedPermutation>;

int rank_of(const WhiteheadDescriptor& d);

// Which of the four defining rules of omega(S, a) governs a letter x:
//   (a) FixMultiplier  x = a^{+-1}:                     omega(x) = x
//   (b) Multiply       x in S, x^{-1} not in S:        omega(x) = x a
//   (c) Conjugate      x and x^{-1} both in S:         omega(x) = a^{-1} x a
//   (d) Fix            neither x nor x^{-1} in S:      omega(x) = x
// Rule (b) also covers x^{-1} in S, x not in S, where omega(x) = a^{-1} x.
enum class CutRule { FixMultiplier, Multiply, Conjugate, Fix };

CutRule cut_rule(const Cut& d, Letter x);
// Number of rule predicates (a)..(d) that hold for x; always 1.
int matching_rule_count(const Cut& d, Letter x);

Word apply_letter(const WhiteheadDescriptor& d, Letter x);
Word apply_whitehead(const WhiteheadDescriptor& d, const Word& w);
WhiteheadDescriptor inverse_descriptor(const WhiteheadDescriptor& d);
bool acts_as_identity(const WhiteheadDescriptor& d);

// Canonical order: Cut before SignedPermutation; Cuts by multiplier
// (signed-integer order) then mask; permutations lexicographically.
bool canonical_less(const WhiteheadDescriptor& x, const WhiteheadDescriptor& y);

// Every Cut (2n * 4^{n-1}) followed by every signed permutation (2^n n!),
// in canonical order. Memoized per rank; the reference stays valid.
const std::vector<WhiteheadDescriptor>& enumerate_whitehead(int rank);
// The Cut prefix of enumerate_whitehead(rank).
std::vector<Cut> enumerate_cuts(int rank);

// Precomputed letter images of a descriptor, for applying it to many or
// long words without building intermediate Word objects.
class CompiledDescriptor {
 public:
  explicit CompiledDescriptor(const WhiteheadDescriptor& d);

  const WhiteheadDescriptor& descriptor() const { return descriptor_; }
  bool identity() const { return identity_; }
  int rank() const { return rank_of(descriptor_); }

  // Reduced image of w, written into `out` (cleared first).
  void apply_into(std::span<const Letter> w, std::vector<Letter>& out) const;
  std::size_t image_length(std::span<const Letter> w) const;
  Word apply(const Word& w) const;

 private:
  struct Image {
    Letter letters[3];
    std::uint8_t size = 0;
  };
  WhiteheadDescriptor descriptor_;
  std::vector<Image> table_;
  bool identity_ = false;
};

// Compiled forms of enumerate_whitehead(rank), same order. Memoized.
const std::vector<CompiledDescriptor>& compiled_whitehead(int rank);

// Endomorphism of F_n given by the images of x_1..x_n, each stored reduced.
class Endomorphism {
 public:
  Endomorphism(int rank, std::vector<Word> images);

  static Endomorphism identity(int rank);
  // tau_y: x -> y x y^{-1}.
  static Endomorphism inner(int rank, Letter y);
  // pi_y: y -> 1, every other generator fixed.
  static Endomorphism kill(int rank, Letter y);
  static Endomorphism from_descriptor(const WhiteheadDescriptor& d);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const {
    return images_[static_cast<std::size_t>(generator - 1)];
  }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  int rank_;
  std::vector<Word> images_;
};

Word apply_endo(const Endomorphism& phi, const Word& w);
// (f o g)(x_i) = f(g(x_i)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

}  // namespace freegroup
