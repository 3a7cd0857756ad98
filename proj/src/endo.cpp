#include "freegroup/endo.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "freegroup/minimize.hpp"

namespace freegroup {

// ---------------------------------------------------------------------------
// Appenders

Appenders find_appenders(const Word& u) {
  Word target_right = u;
  target_right.push_back(Letter::inverse_of(1));
  Word target_left = letter_word(u.rank(), Letter::generator(1));
  target_left.append(u);

  Appenders out;
  for (const Cut& c : enumerate_cuts(u.rank())) {
    if (c.multiplier() != Letter::inverse_of(1)) {
      continue;
    }
    Word image = apply_whitehead(c, u);
    if (!out.right && image == target_right) {
      out.right = c;
    }
    if (!out.left && image == target_left) {
      out.left = c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Witness words

std::pair<long, long> minimal_witness_parameters(const Word& u, const Word& v) {
  long nu = static_cast<long>(u.size());
  long nv = static_cast<long>(v.size());
  long s = nv + 6 * nu + 11;
  long r = nv + (2 * s + 6) * nu + 4 * s + 9;
  return {s, r};
}

std::size_t witness_length(const WitnessSpec& spec) {
  auto nu = static_cast<std::size_t>(spec.u.size());
  auto nv = static_cast<std::size_t>(spec.v.size());
  auto s = static_cast<std::size_t>(spec.s);
  auto r = static_cast<std::size_t>(spec.r);
  return (2 * s + 6) * nu + (2 * s + 2) * r + nv;
}

namespace {

Word x1_power(int rank, long r) {
  Word out(rank);
  Letter x = r < 0 ? Letter::inverse_of(1) : Letter::generator(1);
  for (long k = 0; k < (r < 0 ? -r : r); ++k) {
    out.push_back(x);
  }
  return out;
}

// Graphical product of segments, no cancellation.
Word join(int rank, std::initializer_list<const Word*> parts, long repeat = 1) {
  Word out(rank);
  for (long k = 0; k < repeat; ++k) {
    for (const Word* p : parts) {
      out.append(*p);
    }
  }
  return out;
}

Word graphical_power(const Word& w, long k) {
  Word base = k < 0 ? invert(w) : w;
  return join(w.rank(), {&base}, k < 0 ? -k : k);
}

bool touches_x1(Letter x) { return x.generator() == 1; }

}  // namespace

Word make_witness(const WitnessSpec& spec) {
  const Word& u = spec.u;
  const Word& v = spec.v;
  if (u.rank() != v.rank()) {
    throw Error("witness: U and V have different ranks");
  }
  const long nu = static_cast<long>(u.size());
  const long nv = static_cast<long>(v.size());
  const long s_bound = nv + 6 * nu + 10;
  if (!(spec.s > s_bound)) {
    throw Error("witness: bound s > |V| + 6|U| + 10 violated (s = " + std::to_string(spec.s)
                + ", |V| + 6|U| + 10 = " + std::to_string(s_bound) + ")");
  }
  const long r_bound = nv + (2 * spec.s + 6) * nu + 4 * spec.s + 8;
  if (!(spec.r > r_bound)) {
    throw Error("witness: bound r > |V| + (2s+6)|U| + 4s + 8 violated (r = "
                + std::to_string(spec.r) + ", bound = " + std::to_string(r_bound) + ")");
  }
  if (u.empty()) {
    throw Error("witness: U must be non-empty");
  }
  if (!u.is_cyclically_reduced()) {
    throw Error("witness: U must be cyclically reduced");
  }
  if (touches_x1(u.front()) || touches_x1(u.back())) {
    throw Error("witness: U must neither begin nor end with x1^{±1}");
  }
  if (!v.is_reduced()) {
    throw Error("witness: V must be reduced");
  }
  const int rank = u.rank();
  switch (spec.kind) {
    case WitnessKind::A:
      break;
    case WitnessKind::B:
      if (!join(rank, {&v, &u}).is_reduced()) {
        throw Error("witness: kind B needs V U reduced");
      }
      break;
    case WitnessKind::BPrime:
      if (!join(rank, {&u, &v}).is_reduced()) {
        throw Error("witness: kind B' needs U V reduced");
      }
      break;
    case WitnessKind::C:
      if (!join(rank, {&u, &v, &u}).is_reduced()) {
        throw Error("witness: kind C needs U V U reduced");
      }
      break;
  }

  const Word xr = x1_power(rank, spec.r);
  const Word xmr = x1_power(rank, -spec.r);
  const Word ui = invert(u);
  const Word u3 = graphical_power(u, 3);
  const Word um3 = graphical_power(u, -3);
  const long s = spec.s;

  Word w(rank);
  switch (spec.kind) {
    case WitnessKind::A:
      w = join(rank, {&u, &xr}, s);
      w.append(join(rank, {&u3, &xr, &v, &xr, &um3}));
      w.append(join(rank, {&xmr, &u}, s));
      break;
    case WitnessKind::B:
      w = join(rank, {&ui, &xmr}, s);
      w.append(join(rank, {&um3, &xr, &v, &u3, &xmr}));
      w.append(join(rank, {&u, &xmr}, s));
      break;
    case WitnessKind::BPrime:
      w = join(rank, {&xmr, &u}, s);
      w.append(join(rank, {&xmr, &u3, &v, &xr, &um3}));
      w.append(join(rank, {&xmr, &ui}, s));
      break;
    case WitnessKind::C:
      w = join(rank, {&xr, &u}, s);
      w.append(join(rank, {&xr, &u3, &v, &u3, &xmr}));
      w.append(join(rank, {&ui, &xr}, s));
      break;
  }
  if (!w.is_reduced()) {
    throw Error("witness: assembled word is not reduced (cancellation between segments)");
  }
  if (w.size() != witness_length(spec)) {
    throw Error("witness: assembled length disagrees with the segment sum");
  }
  return w;
}

// ---------------------------------------------------------------------------
// Preservation

namespace {

// Checks primitives[first..) in order.
PreservationReport check_from(const Endomorphism& phi, std::size_t bound,
                              const std::vector<Word>& primitives, std::size_t first,
                              std::size_t already_tested) {
  PreservationReport report{bound, already_tested, true, std::nullopt, std::nullopt};
  for (std::size_t k = first; k < primitives.size(); ++k) {
    const Word& p = primitives[k];
    if (p.size() > bound) {
      break;
    }
    ++report.tested_count;
    Word image = apply_endo(phi, p);
    if (!is_primitive(image)) {
      report.preserves = false;
      report.primitive = p;
      report.image = std::move(image);
      return report;
    }
  }
  return report;
}

}  // namespace

PreservationReport check_preserves_primitivity(const Endomorphism& phi, std::size_t bound,
                                               const std::vector<Word>& primitives) {
  return check_from(phi, bound, primitives, 0, 0);
}

PreservationReport check_preserves_primitivity(const Endomorphism& phi, std::size_t bound) {
  return check_preserves_primitivity(phi, bound, primitives_up_to(phi.rank(), bound));
}

// ---------------------------------------------------------------------------
// Automorphism recognition

std::vector<Word> nielsen_reduce(std::vector<Word> tuple) {
  for (Word& t : tuple) {
    t = free_reduce(t);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < tuple.size() && !changed; ++i) {
      for (std::size_t j = 0; j < tuple.size() && !changed; ++j) {
        if (i == j || tuple[j].empty()) {
          continue;
        }
        const Word tj_inv = invert(tuple[j]);
        const Word candidates[] = {concat(tuple[i], tuple[j]), concat(tuple[i], tj_inv),
                                   concat(tuple[j], tuple[i]), concat(tj_inv, tuple[i])};
        for (const Word& c : candidates) {
          if (c.size() < tuple[i].size()) {
            tuple[i] = c;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return tuple;
}

std::vector<Word> whitehead_reduce_tuple(std::vector<Word> tuple) {
  if (tuple.empty()) {
    return tuple;
  }
  const int rank = tuple.front().rank();
  for (Word& t : tuple) {
    if (t.rank() != rank) {
      throw Error("tuple words have different ranks");
    }
    t = free_reduce(t);
  }
  const auto& all = compiled_whitehead(rank);
  auto total = [](const std::vector<Word>& ws) {
    std::size_t n = 0;
    for (const Word& w : ws) {
      n += w.size();
    }
    return n;
  };
  std::size_t current = total(tuple);
  while (true) {
    const CompiledDescriptor* best = nullptr;
    std::size_t best_total = current;
    for (const CompiledDescriptor& d : all) {
      if (d.identity() || !std::holds_alternative<Cut>(d.descriptor())) {
        continue;
      }
      std::size_t sum = 0;
      for (const Word& w : tuple) {
        sum += d.image_length(w.letters());
        if (sum >= best_total) {
          break;
        }
      }
      if (sum < best_total) {
        best_total = sum;
        best = &d;
      }
    }
    if (best == nullptr) {
      return tuple;
    }
    for (Word& w : tuple) {
      w = best->apply(w);
    }
    current = best_total;
  }
}

bool is_basis_tuple(const std::vector<Word>& tuple) {
  if (tuple.empty()) {
    return false;
  }
  const int rank = tuple.front().rank();
  if (static_cast<int>(tuple.size()) != rank) {
    return false;
  }
  std::vector<bool> used(static_cast<std::size_t>(rank) + 1, false);
  for (const Word& w : tuple) {
    Word r = free_reduce(w);
    if (r.size() != 1) {
      return false;
    }
    int g = r.front().generator();
    if (used[static_cast<std::size_t>(g)]) {
      return false;
    }
    used[static_cast<std::size_t>(g)] = true;
  }
  return true;
}

bool is_automorphism(const Endomorphism& phi) {
  const bool by_whitehead = is_basis_tuple(whitehead_reduce_tuple(phi.images()));
  const bool by_nielsen = is_basis_tuple(nielsen_reduce(phi.images()));
  if (by_whitehead != by_nielsen) {
    throw ConsistencyError("is_automorphism: Whitehead reduction says "
                           + std::string(by_whitehead ? "basis" : "not a basis")
                           + ", Nielsen reduction disagrees");
  }
  return by_whitehead;
}

// ---------------------------------------------------------------------------
// Sweep

std::vector<Endomorphism> enumerate_endomorphisms(int rank, std::size_t image_length) {
  const std::vector<Word> words = reduced_words_up_to(rank, image_length);
  std::vector<Endomorphism> out;
  std::vector<std::size_t> digits(static_cast<std::size_t>(rank), 0);
  while (true) {
    std::vector<Word> images;
    images.reserve(digits.size());
    for (std::size_t d : digits) {
      images.push_back(words[d]);
    }
    out.emplace_back(rank, std::move(images));
    // Odometer with the first image most significant.
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < words.size()) {
        break;
      }
      digits[pos] = 0;
      if (pos == 0) {
        return out;
      }
    }
  }
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("FREEGROUP_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      return static_cast<unsigned>(v);
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

// Primitive lists for bounds first..ceiling, built on first use. Each level
// is published once and read-only afterwards.
class PrimitiveLevels {
 public:
  PrimitiveLevels(int rank, std::size_t ceiling) : rank_(rank), levels_(ceiling + 1) {
    for (auto& level : levels_) {
      level = std::make_unique<Level>();
    }
  }

  const std::vector<Word>& at(std::size_t bound) {
    Level& level = *levels_[bound];
    std::call_once(level.once, [&] { level.words = primitives_up_to(rank_, bound); });
    return level.words;
  }

 private:
  struct Level {
    std::once_flag once;
    std::vector<Word> words;
  };
  int rank_;
  std::vector<std::unique_ptr<Level>> levels_;
};

struct EndoOutcome {
  bool automorphism = false;
  bool preserves = false;  // at the last bound tried
  bool escalated_failure = false;
  std::optional<SweepCounterexample> counterexample;
};

EndoOutcome classify(const Endomorphism& phi, const SweepOptions& opt, std::size_t ceiling,
                     PrimitiveLevels& levels) {
  EndoOutcome out;
  out.automorphism = is_automorphism(phi);
  PreservationReport report = check_preserves_primitivity(phi, opt.bound, levels.at(opt.bound));
  std::size_t checked_bound = opt.bound;
  // A bounded pass is only evidence; escalate survivors that are not
  // automorphisms until they fail or the ceiling is reached.
  while (report.preserves && !out.automorphism && checked_bound < ceiling) {
    ++checked_bound;
    const auto& prims = levels.at(checked_bound);
    auto first = static_cast<std::size_t>(
        std::find_if(prims.begin(), prims.end(),
                     [&](const Word& p) { return p.size() >= checked_bound; })
        - prims.begin());
    report = check_from(phi, checked_bound, prims, first, report.tested_count);
    if (!report.preserves) {
      out.escalated_failure = true;
    }
  }
  out.preserves = report.preserves;
  if (!report.preserves && (out.escalated_failure || opt.all_counterexamples)) {
    out.counterexample = SweepCounterexample{phi, *report.primitive, *report.image, checked_bound};
  }
  return out;
}

}  // namespace

SweepReport theorem_sweep(const SweepOptions& options) {
  if (options.rank < 1) {
    throw Error("sweep: rank must be at least 1");
  }
  if (options.bound < 1) {
    throw Error("sweep: bound must be at least 1");
  }
  SweepReport report;
  report.options = options;
  report.options.progress = nullptr;
  const std::size_t ceiling = options.ceiling == 0 ? options.bound + 4 : options.ceiling;
  if (ceiling < options.bound) {
    throw Error("sweep: ceiling below bound");
  }
  report.options.ceiling = ceiling;
  const unsigned workers = options.workers == 0 ? default_worker_count() : options.workers;
  report.options.workers = workers;

  const std::vector<Endomorphism> endos = enumerate_endomorphisms(options.rank, options.image_length);
  report.total = endos.size();
  PrimitiveLevels levels(options.rank, ceiling);
  levels.at(options.bound);

  std::vector<EndoOutcome> outcomes(endos.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  constexpr std::size_t kChunk = 64;

  auto work = [&] {
    try {
      while (true) {
        std::size_t begin = next.fetch_add(kChunk);
        if (begin >= endos.size()) {
          return;
        }
        std::size_t end = std::min(begin + kChunk, endos.size());
        for (std::size_t k = begin; k < end; ++k) {
          outcomes[k] = classify(endos[k], options, ceiling, levels);
        }
        std::size_t finished = done.fetch_add(end - begin) + (end - begin);
        if (options.progress) {
          options.progress(finished, endos.size());
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) {
        error = std::current_exception();
      }
      next.store(endos.size());
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back(work);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }

  for (std::size_t k = 0; k < endos.size(); ++k) {
    const EndoOutcome& o = outcomes[k];
    report.automorphisms += o.automorphism ? 1 : 0;
    report.preserving += o.preserves ? 1 : 0;
    report.escalated_failures += o.escalated_failure ? 1 : 0;
    if (o.preserves && o.automorphism) {
      ++report.preserving_automorphisms;
    } else if (o.preserves) {
      ++report.preserving_non_automorphisms;
      report.unresolved.push_back(endos[k]);
    } else if (o.automorphism) {
      ++report.non_preserving_automorphisms;
    } else {
      ++report.non_preserving_non_automorphisms;
    }
    if (o.counterexample) {
      report.counterexamples.push_back(*o.counterexample);
    }
  }
  return report;
}

}  // namespace freegroup
