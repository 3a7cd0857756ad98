#include <doctest.h>

#include "support.hpp"

using namespace fgtest;

namespace {

std::vector<std::string> block_strings(const ComponentPartition& p) {
  std::vector<std::string> out;
  for (const auto& b : p.blocks) {
    std::string s;
    for (Letter x : b) {
      s.push_back(io::render_letter(x));
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("standard_graph examples") {
  auto g = standard_graph(W(3, "bc"));
  CHECK(g.vertices() == std::vector<Letter>{Letter(2), Letter(-2), Letter(3), Letter(-3)});
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(Letter(2), Letter(-3)));

  auto h = standard_graph(W(2, "abab"));
  CHECK(h.edge_count() == 2);
  CHECK(h.multiplicity(Letter(1), Letter(-2)) == 2);
  CHECK(h.multiplicity(Letter(2), Letter(-1)) == 1);

  auto k = standard_graph(W(3, "a"));
  CHECK(k.vertices().size() == 2);
  CHECK(k.edge_count() == 0);
}

TEST_CASE("generalized_graph examples") {
  auto g = generalized_graph(W(3, "baaaC"), 1);
  CHECK(g.vertices() == std::vector<Letter>{Letter(2), Letter(-2), Letter(3), Letter(-3)});
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(Letter(2), Letter(3)));

  auto h = generalized_graph(W(3, "bc"), 1);
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(Letter(2), Letter(-3)));

  auto e = generalized_graph(W(3, "aaaaa"), 1);
  CHECK(e.vertices().empty());
  CHECK(e.edge_count() == 0);

  CHECK_THROWS_AS(generalized_graph(W(2, "ab"), 3), Error);
}

TEST_CASE("components and component_of examples") {
  auto g = standard_graph(W(3, "bc"));
  CHECK(block_strings(components(g)) == std::vector<std::string>{"bC", "B", "c"});
  CHECK(component_of(g, Letter(2)) == std::vector<Letter>{Letter(2), Letter(-3)});

  WhiteheadGraph edgeless(3, {Letter(1), Letter(-1), Letter(3)});
  CHECK(components(edgeless).blocks.size() == 3);

  CHECK(component_of(standard_graph(W(1, "a")), Letter(1)) == std::vector<Letter>{Letter(1)});
  CHECK(block_strings(components(standard_graph(W(2, "abab"))))
        == std::vector<std::string>{"aB", "Ab"});

  auto gen = generalized_graph(W(3, "baaaC"), 1);
  CHECK(component_of(gen, Letter(3)) == std::vector<Letter>{Letter(2), Letter(3)});

  CHECK_THROWS_AS(component_of(g, Letter(1)), Error);
}

TEST_CASE("graph properties over all reduced words of length <= 5, rank 3") {
  for (const Word& y : reduced_words_up_to(3, 5)) {
    auto g = standard_graph(y);
    REQUIRE(g.incidence_count() == (y.empty() ? 0 : y.size() - 1));
    REQUIRE(g.edge_count() <= (y.empty() ? 0 : y.size() - 1));
    auto part = components(g);
    std::vector<Letter> all;
    for (const auto& b : part.blocks) {
      all.insert(all.end(), b.begin(), b.end());
    }
    std::sort(all.begin(), all.end(), alphabet_less);
    REQUIRE(all == g.vertices());
    for (int i = 1; i <= 3; ++i) {
      auto gi = generalized_graph(y, i);
      bool absent = std::none_of(y.letters().begin(), y.letters().end(),
                                 [i](Letter x) { return x.generator() == i; });
      if (absent) {
        REQUIRE(gi.vertices() == g.vertices());
        REQUIRE(gi.edges() == g.edges());
      }
      for (Letter v : gi.vertices()) {
        REQUIRE(v.generator() != i);
      }
    }
  }
}

TEST_CASE("graphs are built from the letters as written") {
  Word y = W(3, "abCb");
  Word copy(3, std::vector<Letter>(y.letters().begin(), y.letters().end()));
  CHECK(standard_graph(y).edges() == standard_graph(copy).edges());
  CHECK(generalized_graph(y, 2).edges() == generalized_graph(copy, 2).edges());
}
