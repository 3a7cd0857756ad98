#pragma once

// Test-only helpers and independent oracles. Nothing here calls the
// compiled-descriptor fast path or the stack reduction it checks.

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "freegroup/freegroup.hpp"

namespace fgtest {

using namespace freegroup;

inline Word W(int rank, const char* text) { return io::parse_word(text, rank); }
inline std::string S(const Word& w) { return io::render_word(w); }

// Reduction by repeatedly deleting the leftmost cancelling pair.
inline std::vector<int> naive_reduce(std::vector<int> w) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        again = true;
        break;
      }
    }
  }
  return w;
}

inline std::vector<int> as_ints(const Word& w) {
  std::vector<int> out;
  for (Letter x : w.letters()) {
    out.push_back(x.value());
  }
  return out;
}

// Every word (reduced or not) of length exactly n over the rank.
inline std::vector<Word> all_words(int rank, std::size_t n) {
  std::vector<Word> level{Word(rank)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int v = -rank; v <= rank; ++v) {
        if (v == 0) continue;
        Word e = w;
        e.push_back(Letter(v));
        next.push_back(e);
      }
    }
    level = next;
  }
  return level;
}

inline Word random_word(std::mt19937& rng, int rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution sign(0.5);
  Word w(rank);
  std::size_t n = len(rng);
  for (std::size_t k = 0; k < n; ++k) {
    int g = gen(rng);
    w.push_back(Letter(sign(rng) ? -g : g));
  }
  return w;
}

// Orbit minimum by BFS, applying descriptors through their endomorphism
// expansion rather than the compiled tables.
inline std::size_t bfs_orbit_min_via_endos(const Word& start, std::size_t cap) {
  std::vector<Endomorphism> moves;
  for (const auto& d : enumerate_whitehead(start.rank())) {
    moves.push_back(Endomorphism::from_descriptor(d));
  }
  Word s = free_reduce(start);
  std::set<std::vector<int>> seen{as_ints(s)};
  std::deque<Word> queue{s};
  std::size_t best = s.size();
  while (!queue.empty()) {
    Word u = queue.front();
    queue.pop_front();
    best = std::min(best, u.size());
    for (const auto& m : moves) {
      Word v = apply_endo(m, u);
      if (v.size() <= cap && seen.insert(as_ints(v)).second) {
        queue.push_back(v);
      }
    }
  }
  return best;
}

}  // namespace fgtest
