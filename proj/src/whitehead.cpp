#include "freegroup/whitehead.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace freegroup {

namespace {

std::uint64_t letter_bit(Letter x) { return std::uint64_t{1} << x.index(); }

void check_word_rank(int rank, const Word& w) {
  if (w.rank() > rank) {
    throw Error("word of rank " + std::to_string(w.rank())
                + " does not fit rank " + std::to_string(rank));
  }
}

// Pushes x onto a reduced stack, cancelling against the top.
inline void push_reduced(std::vector<Letter>& stack, Letter x) {
  if (!stack.empty() && stack.back() == x.inverse()) {
    stack.pop_back();
  } else {
    stack.push_back(x);
  }
}

}  // namespace

Cut::Cut(int rank, Letter multiplier, std::uint64_t mask)
    : rank_(rank), multiplier_(multiplier), mask_(mask) {
  if (rank < 1 || rank > kMaxRank) {
    throw Error("rank out of range");
  }
  if (multiplier.value() == 0 || multiplier.generator() > rank) {
    throw Error("multiplier outside rank");
  }
  if (rank < kMaxRank && (mask >> (2 * rank)) != 0) {
    throw Error("S contains letters outside rank");
  }
  if (!contains(multiplier)) {
    throw Error("S must contain the multiplier a");
  }
  if (contains(multiplier.inverse())) {
    throw Error("S must not contain a^{-1}");
  }
}

namespace {
std::uint64_t mask_of(int rank, const std::vector<Letter>& set) {
  std::uint64_t mask = 0;
  for (Letter x : set) {
    if (x.value() == 0 || x.generator() > rank) {
      throw Error("S contains letters outside rank");
    }
    mask |= letter_bit(x);
  }
  return mask;
}
}  // namespace

Cut::Cut(int rank, Letter multiplier, const std::vector<Letter>& set)
    : Cut(rank, multiplier, mask_of(rank, set)) {}

std::vector<Letter> Cut::members() const {
  std::vector<Letter> out;
  for (int idx = 0; idx < 2 * rank_; ++idx) {
    if ((mask_ >> idx) & 1U) {
      out.push_back(Letter::from_index(idx));
    }
  }
  return out;
}

int rank_of(const WhiteheadDescriptor& d) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Cut>) {
          return v.rank();
        } else {
          return v.rank;
        }
      },
      d);
}

CutRule cut_rule(const Cut& d, Letter x) {
  Letter a = d.multiplier();
  if (x == a || x == a.inverse()) {
    return CutRule::FixMultiplier;
  }
  bool in = d.contains(x);
  bool inv_in = d.contains(x.inverse());
  if (in && inv_in) {
    return CutRule::Conjugate;
  }
  if (!in && !inv_in) {
    return CutRule::Fix;
  }
  return CutRule::Multiply;
}

int matching_rule_count(const Cut& d, Letter x) {
  Letter a = d.multiplier();
  bool in = d.contains(x);
  bool inv_in = d.contains(x.inverse());
  bool rule_a = x == a || x == a.inverse();
  bool rule_b = !rule_a && in != inv_in;
  bool rule_c = in && inv_in;
  bool rule_d = !in && !inv_in;
  return int{rule_a} + int{rule_b} + int{rule_c} + int{rule_d};
}

namespace {

// Image of one letter as at most three letters.
std::vector<Letter> letter_image(const WhiteheadDescriptor& d, Letter x) {
  if (const auto* p = std::get_if<SignedPermutation>(&d)) {
    return {(*p)(x)};
  }
  const Cut& c = std::get<Cut>(d);
  Letter a = c.multiplier();
  switch (cut_rule(c, x)) {
    case CutRule::FixMultiplier:
    case CutRule::Fix:
      return {x};
    case CutRule::Conjugate:
      return {a.inverse(), x, a};
    case CutRule::Multiply:
      if (c.contains(x)) {
        return {x, a};
      }
      return {a.inverse(), x};
  }
  return {x};
}

}  // namespace

Word apply_letter(const WhiteheadDescriptor& d, Letter x) {
  int rank = rank_of(d);
  if (x.value() == 0 || x.generator() > rank) {
    throw Error("letter outside descriptor rank");
  }
  return Word(rank, letter_image(d, x));
}

Word apply_whitehead(const WhiteheadDescriptor& d, const Word& w) {
  check_word_rank(rank_of(d), w);
  return CompiledDescriptor(d).apply(w);
}

WhiteheadDescriptor inverse_descriptor(const WhiteheadDescriptor& d) {
  if (const auto* p = std::get_if<SignedPermutation>(&d)) {
    SignedPermutation inv{p->rank, std::vector<Letter>(p->images.size())};
    for (int i = 1; i <= p->rank; ++i) {
      Letter y = (*p)(Letter::generator(i));
      inv.images[static_cast<std::size_t>(y.generator() - 1)] =
          y.is_inverse() ? Letter::inverse_of(i) : Letter::generator(i);
    }
    return inv;
  }
  const Cut& c = std::get<Cut>(d);
  Letter a = c.multiplier();
  std::uint64_t mask = (c.mask() & ~letter_bit(a)) | letter_bit(a.inverse());
  return Cut(c.rank(), a.inverse(), mask);
}

bool acts_as_identity(const WhiteheadDescriptor& d) {
  int rank = rank_of(d);
  for (int i = 1; i <= rank; ++i) {
    auto img = letter_image(d, Letter::generator(i));
    if (img.size() != 1 || img[0] != Letter::generator(i)) {
      return false;
    }
  }
  return true;
}

bool canonical_less(const WhiteheadDescriptor& x, const WhiteheadDescriptor& y) {
  if (x.index() != y.index()) {
    return x.index() < y.index();
  }
  if (const auto* cx = std::get_if<Cut>(&x)) {
    const Cut& cy = std::get<Cut>(y);
    if (cx->multiplier() != cy.multiplier()) {
      return cx->multiplier() < cy.multiplier();
    }
    return cx->mask() < cy.mask();
  }
  const auto& px = std::get<SignedPermutation>(x).images;
  const auto& py = std::get<SignedPermutation>(y).images;
  return std::lexicographical_compare(px.begin(), px.end(), py.begin(), py.end());
}

namespace {

std::vector<WhiteheadDescriptor> build_whitehead(int rank) {
  std::vector<WhiteheadDescriptor> out;
  // Multipliers in signed-integer order: -n..-1, 1..n.
  std::vector<Letter> multipliers;
  for (int v = -rank; v <= rank; ++v) {
    if (v != 0) {
      multipliers.emplace_back(v);
    }
  }
  for (Letter a : multipliers) {
    std::vector<int> others;
    for (int g = 1; g <= rank; ++g) {
      if (g != a.generator()) {
        others.push_back(g);
      }
    }
    std::vector<std::uint64_t> masks;
    std::uint64_t combos = std::uint64_t{1} << (2 * others.size());
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::uint64_t mask = letter_bit(a);
      for (std::size_t k = 0; k < others.size(); ++k) {
        std::uint64_t state = (code >> (2 * k)) & 3U;
        int base = 2 * (others[k] - 1);
        mask |= state << base;
      }
      masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());
    for (std::uint64_t m : masks) {
      out.emplace_back(Cut(rank, a, m));
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> perms;
  do {
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << rank); ++signs) {
      SignedPermutation p{rank, {}};
      for (int i = 0; i < rank; ++i) {
        int g = perm[static_cast<std::size_t>(i)];
        p.images.emplace_back(((signs >> i) & 1U) ? -g : g);
      }
      perms.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(perms.begin(), perms.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.images.begin(), x.images.end(),
                                        y.images.begin(), y.images.end());
  });
  for (auto& p : perms) {
    out.emplace_back(std::move(p));
  }
  return out;
}

template <typename T, typename Build>
const T& memoized(int rank, Build build) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<T>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[rank];
  if (!slot) {
    slot = std::make_unique<T>(build(rank));
  }
  return *slot;
}

}  // namespace

const std::vector<WhiteheadDescriptor>& enumerate_whitehead(int rank) {
  if (rank < 1 || rank > 8) {
    // 2^n n! permutations make larger ranks impractical to list.
    throw Error("enumerate_whitehead supports ranks 1..8");
  }
  return memoized<std::vector<WhiteheadDescriptor>>(rank, build_whitehead);
}

std::vector<Cut> enumerate_cuts(int rank) {
  std::vector<Cut> out;
  for (const auto& d : enumerate_whitehead(rank)) {
    if (const auto* c = std::get_if<Cut>(&d)) {
      out.push_back(*c);
    }
  }
  return out;
}

CompiledDescriptor::CompiledDescriptor(const WhiteheadDescriptor& d)
    : descriptor_(d), identity_(acts_as_identity(d)) {
  int rank = rank_of(d);
  table_.resize(static_cast<std::size_t>(2 * rank));
  for (int idx = 0; idx < 2 * rank; ++idx) {
    auto img = letter_image(d, Letter::from_index(idx));
    Image& slot = table_[static_cast<std::size_t>(idx)];
    slot.size = static_cast<std::uint8_t>(img.size());
    std::copy(img.begin(), img.end(), slot.letters);
  }
}

void CompiledDescriptor::apply_into(std::span<const Letter> w,
                                    std::vector<Letter>& out) const {
  out.clear();
  for (Letter x : w) {
    const Image& img = table_[static_cast<std::size_t>(x.index())];
    for (std::uint8_t k = 0; k < img.size; ++k) {
      push_reduced(out, img.letters[k]);
    }
  }
}

std::size_t CompiledDescriptor::image_length(std::span<const Letter> w) const {
  thread_local std::vector<Letter> scratch;
  apply_into(w, scratch);
  return scratch.size();
}

Word CompiledDescriptor::apply(const Word& w) const {
  check_word_rank(rank(), w);
  std::vector<Letter> out;
  out.reserve(w.size() + 4);
  apply_into(w.letters(), out);
  return Word(rank(), std::move(out));
}

const std::vector<CompiledDescriptor>& compiled_whitehead(int rank) {
  return memoized<std::vector<CompiledDescriptor>>(rank, [](int r) {
    std::vector<CompiledDescriptor> out;
    for (const auto& d : enumerate_whitehead(r)) {
      out.emplace_back(d);
    }
    return out;
  });
}

Endomorphism::Endomorphism(int rank, std::vector<Word> images) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw Error("rank out of range");
  }
  if (static_cast<int>(images.size()) != rank) {
    throw Error("endomorphism of rank " + std::to_string(rank) + " needs "
                + std::to_string(rank) + " images, got "
                + std::to_string(images.size()));
  }
  images_.reserve(images.size());
  for (const Word& w : images) {
    check_word_rank(rank, w);
    Word lifted(rank, std::vector<Letter>(w.letters().begin(), w.letters().end()));
    images_.push_back(free_reduce(lifted));
  }
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) {
    images.push_back(letter_word(rank, Letter::generator(i)));
  }
  return Endomorphism(rank, std::move(images));
}

Endomorphism Endomorphism::inner(int rank, Letter y) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) {
    images.push_back(free_reduce(Word(rank, {y.value(), i, -y.value()})));
  }
  return Endomorphism(rank, std::move(images));
}

Endomorphism Endomorphism::kill(int rank, Letter y) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) {
    images.push_back(i == y.generator() ? Word(rank) : letter_word(rank, Letter::generator(i)));
  }
  return Endomorphism(rank, std::move(images));
}

Endomorphism Endomorphism::from_descriptor(const WhiteheadDescriptor& d) {
  int rank = rank_of(d);
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) {
    images.push_back(apply_letter(d, Letter::generator(i)));
  }
  return Endomorphism(rank, std::move(images));
}

Word apply_endo(const Endomorphism& phi, const Word& w) {
  if (w.rank() > phi.rank()) {
    throw Error("word rank " + std::to_string(w.rank())
                + " exceeds endomorphism rank " + std::to_string(phi.rank()));
  }
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (Letter x : w.letters()) {
    const Word& img = phi.image(x.generator());
    auto letters = img.letters();
    if (x.is_inverse()) {
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        push_reduced(out, it->inverse());
      }
    } else {
      for (Letter y : letters) {
        push_reduced(out, y);
      }
    }
  }
  return Word(phi.rank(), std::move(out));
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.rank() != g.rank()) {
    throw Error("rank mismatch in compose");
  }
  std::vector<Word> images;
  for (const Word& w : g.images()) {
    images.push_back(apply_endo(f, w));
  }
  return Endomorphism(f.rank(), std::move(images));
}

}  // namespace freegroup
