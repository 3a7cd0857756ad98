#include <doctest.h>

#include "support.hpp"

using namespace fgtest;

TEST_CASE("parse_word examples and errors") {
  Word w = io::parse_word("aA", 1);
  CHECK(as_ints(w) == std::vector<int>{1, -1});
  CHECK(io::parse_word("1", 3).empty());
  CHECK(as_ints(io::parse_word("abC", 3)) == std::vector<int>{1, 2, -3});
  CHECK_THROWS_AS(io::parse_word("ab", 1), Error);
  CHECK_THROWS_AS(io::parse_word("a?", 2), Error);
  CHECK_THROWS_AS(io::parse_word("", 2), Error);
  CHECK_THROWS_AS(io::parse_word("a1", 2), Error);
}

TEST_CASE("render/parse round trip for every word of length <= 6, rank <= 3") {
  for (int rank = 1; rank <= 3; ++rank) {
    for (std::size_t n = 0; n <= 6; ++n) {
      for (const Word& w : all_words(rank, n)) {
        REQUIRE(graphically_equal(io::parse_word(io::render_word(w), rank), w));
      }
    }
  }
  CHECK(io::render_word(Word(2)) == "1");
}

TEST_CASE("descriptor text and JSON round trip") {
  for (int rank = 1; rank <= 3; ++rank) {
    for (const auto& d : enumerate_whitehead(rank)) {
      std::string text = io::render_descriptor(d);
      REQUIRE(io::render_descriptor(io::parse_descriptor(text, rank)) == text);
      REQUIRE(io::render_descriptor(io::descriptor_from_json(io::to_json(d), rank)) == text);
    }
  }
  auto d = io::parse_descriptor("W2( a = B ; S = a , B )", 2);
  CHECK(io::render_descriptor(d) == "W2(a=B; S=a,B)");
  CHECK(io::render_descriptor(io::parse_descriptor("W1(perm: a->b, b->A)", 2))
        == "W1(perm: a→b, b→A)");
  CHECK_THROWS_AS(io::parse_descriptor("W2(a=B; S=a)", 2), Error);
  CHECK_THROWS_AS(io::parse_descriptor("W3(a=b)", 2), Error);
}

TEST_CASE("endomorphism text round trip") {
  Endomorphism phi = io::parse_endomorphism("ab,1,Cb", 3);
  CHECK(io::render_endomorphism(phi) == "ab,1,Cb");
  CHECK(phi.images()[1].empty());
  CHECK_THROWS_AS(io::parse_endomorphism("a,b", 3), Error);
  for (const Endomorphism& e : enumerate_endomorphisms(2, 1)) {
    REQUIRE(io::parse_endomorphism(io::render_endomorphism(e), 2) == e);
  }
}

TEST_CASE("witness kind names") {
  for (auto kind : {WitnessKind::A, WitnessKind::B, WitnessKind::BPrime, WitnessKind::C}) {
    CHECK(io::parse_witness_kind(io::render_witness_kind(kind)) == kind);
  }
  CHECK(io::parse_witness_kind("Bp") == WitnessKind::BPrime);
  CHECK_THROWS_AS(io::parse_witness_kind("D"), Error);
}

TEST_CASE("graph JSON and DOT") {
  WhiteheadGraph g = standard_graph(W(2, "abAB"));
  auto j = io::to_json(g);
  CHECK(j.at("vertices").size() == 4);
  CHECK(j.at("edges").size() == 3);
  std::string dot = io::to_dot(g);
  CHECK(dot.find("\"a\" -- \"b\";") != std::string::npos);
  CHECK(dot.find("\"A\" -- \"b\";") != std::string::npos);

  WhiteheadGraph h = standard_graph(W(2, "abab"));
  CHECK(io::to_dot(h).find("[label=\"2\"]") != std::string::npos);
}

TEST_CASE("sweep report JSON is schema-stable and round-trips") {
  SweepOptions options;
  options.rank = 2;
  options.image_length = 1;
  options.bound = 2;
  options.workers = 1;
  options.all_counterexamples = true;
  SweepReport r = theorem_sweep(options);
  io::json j = io::to_json(r);
  for (const char* key : {"params", "total", "preserving", "automorphisms", "confusion",
                          "escalated_failures", "unresolved", "counterexamples"}) {
    CHECK(j.contains(key));
  }
  SweepReport back = io::sweep_report_from_json(j);
  CHECK(back.total == r.total);
  CHECK(back.preserving == r.preserving);
  CHECK(back.automorphisms == r.automorphisms);
  CHECK(back.preserving_non_automorphisms == r.preserving_non_automorphisms);
  CHECK(back.non_preserving_non_automorphisms == r.non_preserving_non_automorphisms);
  CHECK(back.counterexamples.size() == r.counterexamples.size());
  CHECK(back.options.ceiling == r.options.ceiling);
  CHECK(io::to_json(back) == j);
  // Serialization is byte-stable.
  CHECK(io::to_json(theorem_sweep(options)).dump() == j.dump());
}
