#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "freegroup/endo.hpp"
#include "freegroup/graph.hpp"
#include "freegroup/minimize.hpp"
#include "freegroup/whitehead.hpp"
#include "freegroup/word.hpp"

// Compact text forms and JSON encodings.
//
// Words: the k-th lowercase letter is x_k, uppercase is x_k^{-1}, "1" is the
// empty word ("abA" = x1 x2 x1^{-1}). Rank is always given separately.
// Descriptors: "W2(a=B; S=a,B,c)" and "W1(perm: a→b, b→A, c→c)".
// Endomorphisms: comma-separated images of x_1..x_n, e.g. "a,ab,1".

namespace freegroup::io {

using json = nlohmann::json;

// Ranks usable with the compact alphabet.
inline constexpr int kMaxTextRank = 26;

Letter parse_letter(char c, int rank);
char render_letter(Letter x);

// Letters as written; no reduction.
Word parse_word(std::string_view text, int rank);
std::string render_word(const Word& w);

std::string render_descriptor(const WhiteheadDescriptor& d);
// Accepts "→" or "->" in W1 forms; whitespace is ignored.
WhiteheadDescriptor parse_descriptor(std::string_view text, int rank);

Endomorphism parse_endomorphism(std::string_view text, int rank);
std::string render_endomorphism(const Endomorphism& phi);

WitnessKind parse_witness_kind(std::string_view text);
std::string render_witness_kind(WitnessKind kind);

json to_json(const WhiteheadDescriptor& d);
WhiteheadDescriptor descriptor_from_json(const json& j, int rank);

json to_json(const MinimizationTrace& trace);
json to_json(const WhiteheadGraph& g);
std::string to_dot(const WhiteheadGraph& g, std::string_view name = "whitehead");
json to_json(const ComponentPartition& p);
json to_json(const PreservationReport& r);

// {params, total, preserving, automorphisms, confusion, escalated_failures,
//  unresolved:[endo...], counterexamples:[{endo, primitive, image, bound}]}
json to_json(const SweepReport& r);
SweepReport sweep_report_from_json(const json& j);

}  // namespace freegroup::io
