#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freegroup/whitehead.hpp"
#include "freegroup/word.hpp"

namespace freegroup {

// ---------------------------------------------------------------------------
// Appenders: Cuts with multiplier x_1^{-1} sending U to U x_1^{-1} (first)
// and to x_1 U (second), compared graphically.

struct Appenders {
  std::optional<Cut> right;  // gamma_1(U) == U x_1^{-1}
  std::optional<Cut> left;   // gamma_2(U) == x_1 U
};

Appenders find_appenders(const Word& u);

// ---------------------------------------------------------------------------
// Witness words built from U, V and powers of x_1.

enum class WitnessKind { A, B, BPrime, C };

struct WitnessSpec {
  WitnessKind kind = WitnessKind::A;
  Word u;
  Word v;
  long r = 0;
  long s = 0;
};

// Smallest (s, r) with s > |V| + 6|U| + 10 and r > |V| + (2s+6)|U| + 4s + 8.
std::pair<long, long> minimal_witness_parameters(const Word& u, const Word& v);

// Length of the assembled witness when no cancellation occurs:
// (2s+6)|U| + (2s+2)r + |V| for every kind.
std::size_t witness_length(const WitnessSpec& spec);

// Assembles the witness graphically and verifies that it is reduced.
// Throws Error naming the violated bound or reducedness condition.
//   A : (U x^r)^s U^3 x^r V x^r U^-3 (x^-r U)^s
//   B : (U^-1 x^-r)^s U^-3 x^r V U^3 x^-r (U x^-r)^s
//   B': (x^-r U)^s x^-r U^3 V x^r U^-3 (x^-r U^-1)^s
//   C : (x^r U)^s x^r U^3 V U^3 x^-r (U^-1 x^r)^s
Word make_witness(const WitnessSpec& spec);

// ---------------------------------------------------------------------------
// Bounded primitivity preservation.

struct PreservationReport {
  std::size_t bound = 0;
  std::size_t tested_count = 0;
  bool preserves = true;
  // Set when preserves == false: a primitive whose image is not primitive.
  std::optional<Word> primitive;
  std::optional<Word> image;
};

PreservationReport check_preserves_primitivity(const Endomorphism& phi, std::size_t bound);

// Same check against a caller-supplied primitive list (shortlex ordered).
PreservationReport check_preserves_primitivity(const Endomorphism& phi, std::size_t bound,
                                               const std::vector<Word>& primitives);

// ---------------------------------------------------------------------------
// Automorphism recognition.

// Length-decreasing Nielsen moves t_i <- t_i t_j^{±1} or t_j^{±1} t_i until
// none applies. Positions are kept; the generated subgroup is unchanged.
std::vector<Word> nielsen_reduce(std::vector<Word> tuple);

// Greedy descent of the total length of a tuple under Cut descriptors.
std::vector<Word> whitehead_reduce_tuple(std::vector<Word> tuple);

// n words of length one on pairwise distinct generators.
bool is_basis_tuple(const std::vector<Word>& tuple);

// Raised when the Whitehead and Nielsen routes disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

bool is_automorphism(const Endomorphism& phi);

// ---------------------------------------------------------------------------
// Exhaustive sweep over endomorphisms with short images.

struct SweepOptions {
  int rank = 3;
  std::size_t image_length = 1;
  std::size_t bound = 2;
  // Highest bound tried when escalating; 0 means bound + 4.
  std::size_t ceiling = 0;
  // 0 picks FREEGROUP_WORKERS or the hardware concurrency.
  unsigned workers = 0;
  // Record a counterexample for every non-preserving endomorphism, not only
  // those found by escalation.
  bool all_counterexamples = false;
  // Called from worker threads with (done, total); may be empty.
  std::function<void(std::size_t, std::size_t)> progress;
};

struct SweepCounterexample {
  Endomorphism endo;
  Word primitive;
  Word image;
  std::size_t bound;  // bound at which the failure was found
};

struct SweepReport {
  SweepOptions options;
  std::size_t total = 0;
  std::size_t preserving = 0;      // preserves at the highest bound tried
  std::size_t automorphisms = 0;
  std::size_t preserving_automorphisms = 0;
  std::size_t preserving_non_automorphisms = 0;  // == unresolved.size()
  std::size_t non_preserving_automorphisms = 0;  // must stay 0
  std::size_t non_preserving_non_automorphisms = 0;
  // Survivors of the first bound that failed after escalation.
  std::size_t escalated_failures = 0;
  std::vector<Endomorphism> unresolved;
  std::vector<SweepCounterexample> counterexamples;
};

// Endomorphisms whose images all have reduced length <= image_length, in
// lexicographic order of image tuples (each image in shortlex order).
std::vector<Endomorphism> enumerate_endomorphisms(int rank, std::size_t image_length);

SweepReport theorem_sweep(const SweepOptions& options);

// Worker count from FREEGROUP_WORKERS, else hardware concurrency (>= 1).
unsigned default_worker_count();

}  // namespace freegroup
