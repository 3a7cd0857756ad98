#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace fgtest;

namespace {

Cut cut(int rank, const char* a, std::vector<const char*> members) {
  std::vector<Letter> s;
  for (const char* m : members) {
    s.push_back(io::parse_letter(m[0], rank));
  }
  return Cut(rank, io::parse_letter(a[0], rank), s);
}

bool fixes_generators(const WhiteheadDescriptor& first, const WhiteheadDescriptor& second) {
  int rank = rank_of(first);
  for (int i = 1; i <= rank; ++i) {
    Word x = letter_word(rank, Letter::generator(i));
    if (apply_whitehead(second, apply_whitehead(first, x)) != x) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Cut invariants") {
  CHECK_THROWS_AS(cut(2, "a", {"b"}), Error);       // a not in S
  CHECK_THROWS_AS(cut(2, "a", {"a", "A"}), Error);  // a^{-1} in S
  CHECK_NOTHROW(cut(2, "a", {"a", "B"}));
}

TEST_CASE("apply_letter follows rules (a)-(d)") {
  Cut d = cut(3, "b", {"b", "c", "C"});
  CHECK(S(apply_letter(d, Letter(3))) == "Bcb");  // (c)
  CHECK(S(apply_letter(d, Letter(2))) == "b");    // (a)
  CHECK(S(apply_letter(d, Letter(-2))) == "B");   // (a)
  CHECK(S(apply_letter(d, Letter(1))) == "a");    // (d)

  Cut e = cut(2, "B", {"a", "B"});
  CHECK(S(apply_letter(e, Letter(1))) == "aB");   // (b)
  CHECK(S(apply_letter(e, Letter(-1))) == "bA");  // inverse of (b)
  CHECK(cut_rule(e, Letter(1)) == CutRule::Multiply);
  CHECK(cut_rule(e, Letter(-2)) == CutRule::FixMultiplier);
}

TEST_CASE("apply examples") {
  Cut d = cut(2, "B", {"a", "B"});
  CHECK(S(apply_whitehead(d, W(2, "ab"))) == "a");
  for (const auto& desc : enumerate_whitehead(2)) {
    CHECK(apply_whitehead(desc, Word(2)).empty());
  }
  SignedPermutation swap{2, {Letter(2), Letter(1)}};
  CHECK(S(apply_whitehead(swap, W(2, "aB"))) == "bA");
}

TEST_CASE("inverse_descriptor examples") {
  SignedPermutation p{3, {Letter(-2), Letter(3), Letter(1)}};
  auto pinv = inverse_descriptor(p);
  CHECK(fixes_generators(p, pinv));
  CHECK(fixes_generators(pinv, p));

  // Oracle: search every rank-2 Cut for one undoing d.
  Cut d = cut(2, "B", {"a", "B"});
  std::vector<Cut> undoers;
  for (const Cut& c : enumerate_cuts(2)) {
    if (fixes_generators(d, c)) {
      undoers.push_back(c);
    }
  }
  REQUIRE(undoers.size() == 1);
  CHECK(std::get<Cut>(inverse_descriptor(d)) == undoers.front());
  CHECK(io::render_descriptor(undoers.front()) == "W2(a=b; S=a,b)");

  Cut trivial = cut(3, "c", {"c"});
  CHECK(acts_as_identity(trivial));
  CHECK(fixes_generators(trivial, trivial));
}

TEST_CASE("enumerate_whitehead counts, order, uniqueness") {
  auto count_cuts = [](int n) { return enumerate_cuts(n).size(); };
  CHECK(count_cuts(1) == 2);
  CHECK(count_cuts(2) == 16);
  CHECK(count_cuts(3) == 96);
  CHECK(count_cuts(4) == 8 * 64);
  CHECK(enumerate_whitehead(1).size() == 2 + 2);
  CHECK(enumerate_whitehead(3).size() == 96 + 48);
  // Rank 1: both Cuts and the identity permutation fix x1; x1 -> x1^{-1} does not.
  std::size_t rank_one_identities = 0;
  for (const auto& d : enumerate_whitehead(1)) {
    rank_one_identities += acts_as_identity(d) ? 1 : 0;
  }
  CHECK(rank_one_identities == 3);
  for (int n = 1; n <= 3; ++n) {
    const auto& all = enumerate_whitehead(n);
    for (std::size_t k = 1; k < all.size(); ++k) {
      REQUIRE(canonical_less(all[k - 1], all[k]));
    }
  }
  // Distinct descriptors: no two share the same letter images except the
  // identity-acting Cuts (S = {a}) and the identity permutation.
  std::set<std::string> seen;
  std::size_t identities = 0;
  for (const auto& d : enumerate_whitehead(3)) {
    if (acts_as_identity(d)) {
      ++identities;
      continue;
    }
    CHECK(seen.insert(io::render_endomorphism(Endomorphism::from_descriptor(d))).second);
  }
  CHECK(identities == 6 + 1);
}

TEST_CASE("rule partition and inverses, exhaustive for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& d : enumerate_whitehead(n)) {
      if (const auto* c = std::get_if<Cut>(&d)) {
        for (int idx = 0; idx < 2 * n; ++idx) {
          REQUIRE(matching_rule_count(*c, Letter::from_index(idx)) == 1);
        }
      }
      auto inv = inverse_descriptor(d);
      REQUIRE(compose(Endomorphism::from_descriptor(inv), Endomorphism::from_descriptor(d))
              == Endomorphism::identity(n));
    }
  }
}

TEST_CASE("descriptors act as homomorphisms") {
  std::mt19937 rng(3);
  const auto& all = enumerate_whitehead(3);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int k = 0; k < 300; ++k) {
    const auto& d = all[pick(rng)];
    Word u = random_word(rng, 3, 8);
    Word v = random_word(rng, 3, 8);
    CHECK(apply_whitehead(d, concat(u, v)) == concat(apply_whitehead(d, u), apply_whitehead(d, v)));
    CHECK(apply_whitehead(d, invert(u)) == invert(apply_whitehead(d, u)));
    // Compiled tables agree with the endomorphism expansion.
    CHECK(apply_whitehead(d, u) == apply_endo(Endomorphism::from_descriptor(d), u));
  }
}

TEST_CASE("apply_endo examples") {
  Word w = W(3, "abBc");
  CHECK(apply_endo(Endomorphism::identity(3), w) == free_reduce(w));
  Endomorphism collapse(3, {W(3, "a"), W(3, "a"), W(3, "a")});
  CHECK(apply_endo(collapse, W(3, "aB")).empty());
  Endomorphism tau = Endomorphism::inner(3, Letter(2));
  CHECK(S(apply_endo(tau, W(3, "c"))) == "bcB");
  CHECK(S(apply_endo(tau, W(3, "b"))) == "b");
  CHECK_THROWS_AS(apply_endo(Endomorphism::identity(2), W(3, "c")), Error);
}

TEST_CASE("compose examples") {
  Endomorphism phi(3, {W(3, "ab"), W(3, "1"), W(3, "Cb")});
  CHECK(compose(Endomorphism::identity(3), phi) == phi);
  CHECK(compose(Endomorphism::inner(3, Letter(2)), Endomorphism::inner(3, Letter(-2)))
        == Endomorphism::identity(3));
  CHECK(compose(Endomorphism::kill(3, Letter(2)), Endomorphism::inner(3, Letter(2)))
        == Endomorphism::kill(3, Letter(2)));
  CHECK(Endomorphism::kill(3, Letter(-2)) == Endomorphism::kill(3, Letter(2)));
  CHECK_THROWS_AS(compose(Endomorphism::identity(2), Endomorphism::identity(3)), Error);
  CHECK_THROWS_AS(Endomorphism(3, {W(3, "a")}), Error);
}
