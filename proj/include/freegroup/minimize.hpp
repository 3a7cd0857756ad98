#pragma once

#include <cstddef>
#include <vector>

#include "freegroup/whitehead.hpp"
#include "freegroup/word.hpp"

namespace freegroup {

// Reduced length of omega(S, a)(w) for every Cut whose multiplier is
// x_g^{±1}, from one pass over w. The word is read as non-x_g letters
// y_1..y_m separated by x_g-powers k_0..k_m; then
//   ||omega(w)|| = m + |s k_0 - [y_1^{-1} in S]|
//                    + sum_j |[y_j in S] + s k_j - [y_{j+1}^{-1} in S]|
//                    + |[y_m in S] + s k_m|
// with a = x_g^s. Only the shift [y_j in S] - [y_{j+1}^{-1} in S] depends on
// the Cut, and sum_j |d + k_j| for d in {-1,0,1} follows from sum |k_j| and
// the signs of the k_j. So each (y_j, y_{j+1}) cell keeps four counters and
// evaluation cost does not grow with |w|.
class GapProfile {
 public:
  GapProfile(const Word& reduced, int generator);

  // Profiles for generators 1..n from one pass over the runs of equal
  // letters in w, so long powers cost O(1).
  static std::vector<GapProfile> for_all_generators(const Word& reduced);

  int generator() const { return generator_; }
  std::size_t image_length(const Cut& c) const;

 private:
  struct Cell {
    int left;   // index of y_j, or -1 at the start
    int right;  // index of y_{j+1}^{-1}, or -1 at the end
    std::size_t count;
    std::size_t abs_sum;
    std::size_t positive;
    std::size_t negative;
  };
  GapProfile(int rank, int generator);
  void record(int left, int right, long exponent, std::size_t times = 1);
  void finish(int left, long exponent);

  int generator_;
  int side_;
  std::vector<int> slot_;
  std::size_t others_ = 0;
  long pure_power_ = 0;
  std::vector<Cell> cells_;
};

struct MinimizationStep {
  WhiteheadDescriptor descriptor;
  Word word;  // reduced image after this step
};

struct MinimizationTrace {
  Word start;
  std::vector<MinimizationStep> steps;
  Word final_word;
};

// Greedy Whitehead descent: while some Cut strictly shortens the current
// word, apply the canonically first one achieving the largest decrease.
// Every non-orbit-minimal word admits such a Cut, so the final length is
// the minimum of ||.|| over the Aut(F_n)-orbit.
MinimizationTrace minimize(const Word& w);

// Orbit-minimal length of w.
std::size_t minimal_length(const Word& w);

// w belongs to some free basis of F_n: its orbit-minimal length is 1.
// (A standard fact about Whitehead's algorithm, not something proven here.)
bool is_primitive(const Word& w);

// Breadth-first closure of {w} under every Whitehead descriptor, keeping
// only words of reduced length <= cap; returns the least length reached.
std::size_t orbit_min_bfs(const Word& w, std::size_t cap);

// All primitive elements of reduced length <= max_length, shortlex order.
// Built by reverse search from the length-one words.
std::vector<Word> primitives_up_to(int rank, std::size_t max_length);

// True iff some single Cut strictly shortens w.
bool has_shortening_cut(const Word& w);

}  // namespace freegroup
