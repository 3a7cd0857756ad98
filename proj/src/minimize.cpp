#include "freegroup/minimize.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace freegroup {

GapProfile::GapProfile(int rank, int generator)
    : generator_(generator),
      side_(2 * rank + 1),
      slot_(static_cast<std::size_t>(side_ * side_), -1) {}

// Slot 0 of each axis stands for "no neighbour".
void GapProfile::record(int left, int right, long k, std::size_t times) {
  int& s = slot_[static_cast<std::size_t>((left + 1) * side_ + (right + 1))];
  if (s < 0) {
    s = static_cast<int>(cells_.size());
    cells_.push_back({left, right, 0, 0, 0, 0});
  }
  Cell& cell = cells_[static_cast<std::size_t>(s)];
  cell.count += times;
  cell.abs_sum += times * static_cast<std::size_t>(k < 0 ? -k : k);
  cell.positive += k > 0 ? times : 0;
  cell.negative += k < 0 ? times : 0;
}

void GapProfile::finish(int left, long exponent) {
  if (others_ == 0) {
    pure_power_ = exponent;
  } else {
    record(left, -1, exponent);
  }
}

GapProfile::GapProfile(const Word& reduced, int generator)
    : GapProfile(reduced.rank(), generator) {
  if (!reduced.is_reduced()) {
    throw Error("GapProfile needs a reduced word");
  }
  if (generator < 1 || generator > reduced.rank()) {
    throw Error("GapProfile: generator out of range");
  }
  int left = -1;
  long exponent = 0;
  for (Letter x : reduced.letters()) {
    if (x.generator() == generator) {
      exponent += x.is_inverse() ? -1 : 1;
      continue;
    }
    record(left, x.inverse().index(), exponent);
    ++others_;
    left = x.index();
    exponent = 0;
  }
  finish(left, exponent);
}

std::vector<GapProfile> GapProfile::for_all_generators(const Word& reduced) {
  if (!reduced.is_reduced()) {
    throw Error("GapProfile needs a reduced word");
  }
  const auto n = static_cast<std::size_t>(reduced.rank());
  std::vector<GapProfile> profiles;
  profiles.reserve(n);
  for (int g = 1; g <= reduced.rank(); ++g) {
    profiles.push_back(GapProfile(reduced.rank(), g));
  }
  std::vector<int> left(n, -1);
  std::vector<long> exponent(n, 0);
  auto letters = reduced.letters();
  for (std::size_t start = 0; start < letters.size();) {
    const Letter x = letters[start];
    std::size_t end = start + 1;
    while (end < letters.size() && letters[end] == x) {
      ++end;
    }
    const std::size_t run = end - start;
    const auto h = static_cast<std::size_t>(x.generator() - 1);
    const int idx = x.index();
    const int right = x.inverse().index();
    for (std::size_t g = 0; g < n; ++g) {
      if (g == h) {
        exponent[g] += x.is_inverse() ? -static_cast<long>(run) : static_cast<long>(run);
        continue;
      }
      // The first letter of the run closes the pending gap; the remaining
      // letters are separated by empty gaps.
      profiles[g].record(left[g], right, exponent[g]);
      if (run > 1) {
        profiles[g].record(idx, right, 0, run - 1);
      }
      profiles[g].others_ += run;
      left[g] = idx;
      exponent[g] = 0;
    }
    start = end;
  }
  for (std::size_t g = 0; g < n; ++g) {
    profiles[g].finish(left[g], exponent[g]);
  }
  return profiles;
}

std::size_t GapProfile::image_length(const Cut& c) const {
  if (c.multiplier().generator() != generator_) {
    throw Error("GapProfile: multiplier does not match the profiled generator");
  }
  if (others_ == 0) {
    return static_cast<std::size_t>(pure_power_ < 0 ? -pure_power_ : pure_power_);
  }
  // |m_l + s k - m_r| = |s (m_l - m_r) + k| since s = +-1.
  const int sign = c.multiplier().is_inverse() ? -1 : 1;
  auto member = [&c](int idx) {
    return idx >= 0 && c.contains(Letter::from_index(idx)) ? 1 : 0;
  };
  std::size_t total = others_;
  for (const Cell& cell : cells_) {
    // sum_j |d + k_j| for d = +-1 adds one per gap with d k_j >= 0 and
    // subtracts one per gap with d k_j < 0.
    int d = sign * (member(cell.left) - member(cell.right));
    std::size_t opposite = d > 0 ? cell.negative : cell.positive;
    total += d == 0 ? cell.abs_sum : cell.abs_sum + (cell.count - opposite) - opposite;
  }
  return total;
}

namespace {

// Below this length, applying each compiled Cut beats building profiles.
constexpr std::size_t kProfileThreshold = 48;

// Index of the best shortening Cut for `w` (reduced), or -1.
std::ptrdiff_t best_cut(const std::vector<CompiledDescriptor>& all, const Word& w) {
  std::vector<GapProfile> profiles;
  if (w.size() >= kProfileThreshold) {
    profiles = GapProfile::for_all_generators(w);
  }
  std::ptrdiff_t best = -1;
  std::size_t best_length = w.size();
  for (std::size_t k = 0; k < all.size(); ++k) {
    const CompiledDescriptor& d = all[k];
    const Cut* c = std::get_if<Cut>(&d.descriptor());
    if (d.identity() || c == nullptr) {
      continue;
    }
    std::size_t len =
        profiles.empty()
            ? d.image_length(w.letters())
            : profiles[static_cast<std::size_t>(c->multiplier().generator() - 1)].image_length(*c);
    if (len < best_length) {
      best_length = len;
      best = static_cast<std::ptrdiff_t>(k);
    }
  }
  return best;
}

// Greedy descent from w; `on_step` sees each applied descriptor and image.
template <class OnStep>
Word descend(const Word& w, OnStep on_step) {
  const auto& all = compiled_whitehead(w.rank());
  Word current = free_reduce(w);
  while (!current.empty()) {
    std::ptrdiff_t k = best_cut(all, current);
    if (k < 0) {
      break;
    }
    const CompiledDescriptor& d = all[static_cast<std::size_t>(k)];
    current = d.apply(current);
    on_step(d, current);
  }
  return current;
}

}  // namespace

MinimizationTrace minimize(const Word& w) {
  MinimizationTrace trace{w, {}, Word(w.rank())};
  trace.final_word = descend(w, [&trace](const CompiledDescriptor& d, const Word& image) {
    trace.steps.push_back({d.descriptor(), image});
  });
  return trace;
}

std::size_t minimal_length(const Word& w) {
  // Storing every intermediate word costs O(|w|^2) memory on long inputs.
  return descend(w, [](const CompiledDescriptor&, const Word&) {}).size();
}

bool is_primitive(const Word& w) {
  // Primitivity is invariant under conjugation, so work on the cyclic core.
  Word core = cyclic_reduce(w).core;
  if (core.size() <= 1) {
    return core.size() == 1;
  }
  // The abelianized image of a primitive element is unimodular.
  std::vector<int> exponent(static_cast<std::size_t>(w.rank()), 0);
  for (Letter x : core.letters()) {
    exponent[static_cast<std::size_t>(x.generator() - 1)] += x.is_inverse() ? -1 : 1;
  }
  int g = 0;
  for (int e : exponent) {
    g = std::gcd(g, e);
  }
  if (g != 1) {
    return false;
  }
  return minimal_length(core) == 1;
}

std::size_t orbit_min_bfs(const Word& w, std::size_t cap) {
  Word start = free_reduce(w);
  if (cap < start.size()) {
    throw Error("cap " + std::to_string(cap) + " is below the reduced length "
                + std::to_string(start.size()));
  }
  const auto& all = compiled_whitehead(w.rank());
  std::unordered_set<Word, WordHash> seen{start};
  std::deque<Word> queue{start};
  std::size_t best = start.size();
  std::vector<Letter> image;
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    best = std::min(best, u.size());
    for (const CompiledDescriptor& d : all) {
      d.apply_into(u.letters(), image);
      if (image.size() > cap) {
        continue;
      }
      Word v(w.rank(), image);
      if (seen.insert(v).second) {
        queue.push_back(std::move(v));
      }
    }
  }
  return best;
}

std::vector<Word> primitives_up_to(int rank, std::size_t max_length) {
  if (max_length < 1) {
    throw Error("primitives_up_to needs a length bound of at least 1");
  }
  const auto& all = compiled_whitehead(rank);
  std::unordered_set<Word, WordHash> seen;
  std::deque<Word> queue;
  for (int idx = 0; idx < 2 * rank; ++idx) {
    Word w = letter_word(rank, Letter::from_index(idx));
    seen.insert(w);
    queue.push_back(std::move(w));
  }
  std::vector<Letter> image;
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    // The descriptor list is closed under inverses, so this covers both
    // directions of every move.
    for (const CompiledDescriptor& d : all) {
      if (d.identity()) {
        continue;
      }
      d.apply_into(u.letters(), image);
      if (image.size() > max_length) {
        continue;
      }
      Word v(rank, image);
      if (seen.insert(v).second) {
        queue.push_back(std::move(v));
      }
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

bool has_shortening_cut(const Word& w) {
  return best_cut(compiled_whitehead(w.rank()), free_reduce(w)) >= 0;
}

}  // namespace freegroup
