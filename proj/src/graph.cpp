#include "freegroup/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace freegroup {

WhiteheadGraph::WhiteheadGraph(int rank, std::vector<Letter> vertices)
    : rank_(rank), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end(), alphabet_less);
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

WhiteheadGraph::Edge WhiteheadGraph::key(Letter u, Letter v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

bool WhiteheadGraph::has_vertex(Letter v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v, alphabet_less);
}

bool WhiteheadGraph::has_edge(Letter u, Letter v) const {
  return edges_.contains(key(u, v));
}

int WhiteheadGraph::multiplicity(Letter u, Letter v) const {
  auto it = edges_.find(key(u, v));
  return it == edges_.end() ? 0 : it->second;
}

std::size_t WhiteheadGraph::incidence_count() const {
  std::size_t total = 0;
  for (const auto& [edge, count] : edges_) {
    total += static_cast<std::size_t>(count);
  }
  return total;
}

void WhiteheadGraph::add_edge(Letter u, Letter v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw Error("edge endpoint is not a vertex");
  }
  // Loops only arise from unreduced input; the graph stays simple.
  if (u == v) {
    return;
  }
  ++edges_[key(u, v)];
}

namespace {

std::vector<Letter> occurring_letters(const Word& y, int excluded_generator) {
  std::set<int> generators;
  for (Letter x : y.letters()) {
    if (x.generator() != excluded_generator) {
      generators.insert(x.generator());
    }
  }
  std::vector<Letter> out;
  for (int g : generators) {
    out.push_back(Letter::generator(g));
    out.push_back(Letter::inverse_of(g));
  }
  return out;
}

}  // namespace

WhiteheadGraph standard_graph(const Word& y) {
  WhiteheadGraph g(y.rank(), occurring_letters(y, 0));
  for (std::size_t k = 1; k < y.size(); ++k) {
    g.add_edge(y[k - 1], y[k].inverse());
  }
  return g;
}

WhiteheadGraph generalized_graph(const Word& y, int generator) {
  if (generator < 1 || generator > y.rank()) {
    throw Error("generator index " + std::to_string(generator) + " outside rank "
                + std::to_string(y.rank()));
  }
  WhiteheadGraph g(y.rank(), occurring_letters(y, generator));
  bool have_previous = false;
  Letter previous;
  for (Letter x : y.letters()) {
    if (x.generator() == generator) {
      continue;
    }
    if (have_previous) {
      g.add_edge(previous, x.inverse());
    }
    previous = x;
    have_previous = true;
  }
  return g;
}

ComponentPartition components(const WhiteheadGraph& g) {
  const auto& vs = g.vertices();
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto position = [&](Letter x) {
    return static_cast<std::size_t>(
        std::lower_bound(vs.begin(), vs.end(), x, alphabet_less) - vs.begin());
  };
  for (const auto& [edge, count] : g.edges()) {
    std::size_t a = find(position(edge.first));
    std::size_t b = find(position(edge.second));
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  ComponentPartition out;
  std::vector<std::ptrdiff_t> block_of(vs.size(), -1);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    std::size_t root = find(v);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<std::ptrdiff_t>(out.blocks.size());
      out.blocks.emplace_back();
    }
    out.blocks[static_cast<std::size_t>(block_of[root])].push_back(vs[v]);
  }
  return out;
}

std::vector<Letter> component_of(const WhiteheadGraph& g, Letter a) {
  if (!g.has_vertex(a)) {
    throw Error("letter " + std::to_string(a.value()) + " is not a vertex of the graph");
  }
  for (auto& block : components(g).blocks) {
    if (std::binary_search(block.begin(), block.end(), a, alphabet_less)) {
      return block;
    }
  }
  return {};
}

}  // namespace freegroup
