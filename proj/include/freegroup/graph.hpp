#pragma once

#include <map>
#include <utility>
#include <vector>

#include "freegroup/word.hpp"

namespace freegroup {

// Undirected simple graph on signed letters. Multiplicities record how many
// subwords produced each edge; connectivity ignores them.
class WhiteheadGraph {
 public:
  using Edge = std::pair<Letter, Letter>;  // first < second (signed order)

  WhiteheadGraph(int rank, std::vector<Letter> vertices);

  int rank() const { return rank_; }
  // Sorted in alphabet order.
  const std::vector<Letter>& vertices() const { return vertices_; }
  const std::map<Edge, int>& edges() const { return edges_; }

  bool has_vertex(Letter v) const;
  bool has_edge(Letter u, Letter v) const;
  int multiplicity(Letter u, Letter v) const;
  std::size_t edge_count() const { return edges_.size(); }
  // Sum of multiplicities.
  std::size_t incidence_count() const;

  void add_edge(Letter u, Letter v);

 private:
  static Edge key(Letter u, Letter v);

  int rank_;
  std::vector<Letter> vertices_;
  std::map<Edge, int> edges_;
};

struct ComponentPartition {
  // Each block sorted in alphabet order; blocks ordered by their first vertex.
  std::vector<std::vector<Letter>> blocks;
};

// Phi(Y): vertices are the letters of Y and their inverses; each adjacent
// pair (c, d) of the linear word contributes the edge {c, d^{-1}}.
WhiteheadGraph standard_graph(const Word& y);

// Phi_{x_i}(Y): vertices exclude x_i^{±1}; two non-x_i letters c, d separated
// only by a (possibly empty) run of x_i^{±1} contribute the edge {c, d^{-1}}.
WhiteheadGraph generalized_graph(const Word& y, int generator);

ComponentPartition components(const WhiteheadGraph& g);
std::vector<Letter> component_of(const WhiteheadGraph& g, Letter a);

}  // namespace freegroup
