#include "freegroup/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace freegroup::io {

namespace {

void check_text_rank(int rank) {
  if (rank < 1 || rank > kMaxTextRank) {
    throw Error("rank " + std::to_string(rank) + " outside 1.."
                + std::to_string(kMaxTextRank) + " supported by the text format");
  }
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

bool consume(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) == prefix) {
    s.remove_prefix(prefix.size());
    return true;
  }
  return false;
}

}  // namespace

Letter parse_letter(char c, int rank) {
  check_text_rank(rank);
  int g = 0;
  bool inverse = false;
  if (c >= 'a' && c <= 'z') {
    g = c - 'a' + 1;
  } else if (c >= 'A' && c <= 'Z') {
    g = c - 'A' + 1;
    inverse = true;
  } else {
    throw Error(std::string("unknown symbol '") + c + "'");
  }
  if (g > rank) {
    throw Error(std::string("symbol '") + c + "' exceeds rank " + std::to_string(rank));
  }
  return inverse ? Letter::inverse_of(g) : Letter::generator(g);
}

char render_letter(Letter x) {
  if (x.generator() < 1 || x.generator() > kMaxTextRank) {
    throw Error("letter outside the compact alphabet");
  }
  return static_cast<char>((x.is_inverse() ? 'A' : 'a') + x.generator() - 1);
}

Word parse_word(std::string_view text, int rank) {
  check_text_rank(rank);
  if (text == "1") {
    return Word(rank);
  }
  if (text.empty()) {
    throw Error("empty text; the empty word is written \"1\"");
  }
  Word w(rank);
  for (char c : text) {
    w.push_back(parse_letter(c, rank));
  }
  return w;
}

std::string render_word(const Word& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  out.reserve(w.size());
  for (Letter x : w.letters()) {
    out.push_back(render_letter(x));
  }
  return out;
}

std::string render_descriptor(const WhiteheadDescriptor& d) {
  std::string out;
  if (const auto* c = std::get_if<Cut>(&d)) {
    out = "W2(a=";
    out.push_back(render_letter(c->multiplier()));
    out += "; S=";
    bool first = true;
    for (Letter x : c->members()) {
      if (!first) {
        out.push_back(',');
      }
      out.push_back(render_letter(x));
      first = false;
    }
    out += ")";
    return out;
  }
  const auto& p = std::get<SignedPermutation>(d);
  out = "W1(perm: ";
  for (int i = 1; i <= p.rank; ++i) {
    if (i > 1) {
      out += ", ";
    }
    out.push_back(render_letter(Letter::generator(i)));
    out += "→";
    out.push_back(render_letter(p(Letter::generator(i))));
  }
  out += ")";
  return out;
}

namespace {

SignedPermutation make_permutation(int rank, const std::vector<std::pair<Letter, Letter>>& maps) {
  SignedPermutation p{rank, std::vector<Letter>(static_cast<std::size_t>(rank))};
  std::vector<bool> source_seen(static_cast<std::size_t>(rank) + 1, false);
  std::vector<bool> target_seen(static_cast<std::size_t>(rank) + 1, false);
  for (auto [from, to] : maps) {
    // x^{-1} -> y is the same as x -> y^{-1}.
    if (from.is_inverse()) {
      from = from.inverse();
      to = to.inverse();
    }
    auto g = static_cast<std::size_t>(from.generator());
    auto h = static_cast<std::size_t>(to.generator());
    if (source_seen[g] || target_seen[h]) {
      throw Error("permutation maps a generator twice or is not injective");
    }
    source_seen[g] = target_seen[h] = true;
    p.images[g - 1] = to;
  }
  for (int i = 1; i <= rank; ++i) {
    if (!source_seen[static_cast<std::size_t>(i)]) {
      throw Error("permutation is missing the image of generator "
                  + std::string(1, render_letter(Letter::generator(i))));
    }
  }
  return p;
}

}  // namespace

WhiteheadDescriptor parse_descriptor(std::string_view text, int rank) {
  check_text_rank(rank);
  std::string compact = strip_spaces(text);
  std::string_view s = compact;
  if (consume(s, "W2(a=")) {
    if (s.empty()) {
      throw Error("malformed W2 descriptor");
    }
    Letter a = parse_letter(s.front(), rank);
    s.remove_prefix(1);
    if (!consume(s, ";S=") || s.empty() || s.back() != ')') {
      throw Error("malformed W2 descriptor: expected \"; S=...)\"");
    }
    s.remove_suffix(1);
    std::vector<Letter> members;
    for (const std::string& item : split(s, ',')) {
      if (item.size() != 1) {
        throw Error("malformed W2 member list");
      }
      members.push_back(parse_letter(item[0], rank));
    }
    return Cut(rank, a, members);
  }
  if (consume(s, "W1(perm:")) {
    if (s.empty() || s.back() != ')') {
      throw Error("malformed W1 descriptor");
    }
    s.remove_suffix(1);
    std::vector<std::pair<Letter, Letter>> maps;
    for (const std::string& item : split(s, ',')) {
      std::string_view m = item;
      if (m.empty()) {
        throw Error("malformed W1 mapping");
      }
      Letter from = parse_letter(m.front(), rank);
      m.remove_prefix(1);
      if (!consume(m, "→") && !consume(m, "->")) {
        throw Error("malformed W1 mapping: expected an arrow");
      }
      if (m.size() != 1) {
        throw Error("malformed W1 mapping target");
      }
      maps.emplace_back(from, parse_letter(m.front(), rank));
    }
    return make_permutation(rank, maps);
  }
  throw Error("unrecognized descriptor: " + std::string(text));
}

Endomorphism parse_endomorphism(std::string_view text, int rank) {
  std::vector<Word> images;
  for (const std::string& item : split(strip_spaces(text), ',')) {
    images.push_back(parse_word(item, rank));
  }
  return Endomorphism(rank, std::move(images));
}

std::string render_endomorphism(const Endomorphism& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.images().size(); ++i) {
    if (i > 0) {
      out.push_back(',');
    }
    out += render_word(phi.images()[i]);
  }
  return out;
}

WitnessKind parse_witness_kind(std::string_view text) {
  if (text == "A") return WitnessKind::A;
  if (text == "B") return WitnessKind::B;
  if (text == "B'" || text == "Bp" || text == "BPrime") return WitnessKind::BPrime;
  if (text == "C") return WitnessKind::C;
  throw Error("unknown witness kind: " + std::string(text));
}

std::string render_witness_kind(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::A:
      return "A";
    case WitnessKind::B:
      return "B";
    case WitnessKind::BPrime:
      return "B'";
    case WitnessKind::C:
      return "C";
  }
  return "?";
}

json to_json(const WhiteheadDescriptor& d) {
  if (const auto* c = std::get_if<Cut>(&d)) {
    json members = json::array();
    for (Letter x : c->members()) {
      members.push_back(std::string(1, render_letter(x)));
    }
    return {{"type", "W2"}, {"a", std::string(1, render_letter(c->multiplier()))}, {"S", members}};
  }
  const auto& p = std::get<SignedPermutation>(d);
  json perm = json::object();
  for (int i = 1; i <= p.rank; ++i) {
    perm[std::string(1, render_letter(Letter::generator(i)))] =
        std::string(1, render_letter(p(Letter::generator(i))));
  }
  return {{"type", "W1"}, {"perm", perm}};
}

WhiteheadDescriptor descriptor_from_json(const json& j, int rank) {
  auto letter = [rank](const json& v) {
    auto s = v.get<std::string>();
    if (s.size() != 1) {
      throw Error("descriptor JSON: letters are single characters");
    }
    return parse_letter(s[0], rank);
  };
  const auto type = j.at("type").get<std::string>();
  if (type == "W2") {
    std::vector<Letter> members;
    for (const auto& m : j.at("S")) {
      members.push_back(letter(m));
    }
    return Cut(rank, letter(j.at("a")), members);
  }
  if (type == "W1") {
    std::vector<std::pair<Letter, Letter>> maps;
    for (const auto& [key, value] : j.at("perm").items()) {
      maps.emplace_back(letter(json(key)), letter(value));
    }
    return make_permutation(rank, maps);
  }
  throw Error("descriptor JSON: unknown type " + type);
}

json to_json(const MinimizationTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    steps.push_back({{"descriptor", render_descriptor(step.descriptor)},
                     {"word", render_word(step.word)},
                     {"length", step.word.size()}});
  }
  return {{"start", render_word(trace.start)},
          {"final", render_word(trace.final_word)},
          {"final_length", trace.final_word.size()},
          {"steps", steps}};
}

json to_json(const WhiteheadGraph& g) {
  json vertices = json::array();
  for (Letter v : g.vertices()) {
    vertices.push_back(std::string(1, render_letter(v)));
  }
  // Edges listed in alphabet order of their endpoints.
  std::vector<std::tuple<Letter, Letter, int>> edges;
  for (const auto& [edge, count] : g.edges()) {
    Letter u = edge.first;
    Letter v = edge.second;
    if (alphabet_less(v, u)) {
      std::swap(u, v);
    }
    edges.emplace_back(u, v, count);
  }
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
    auto key = [](const auto& e) {
      return std::pair{std::get<0>(e).index(), std::get<1>(e).index()};
    };
    return key(x) < key(y);
  });
  json edge_list = json::array();
  for (const auto& [u, v, count] : edges) {
    edge_list.push_back({std::string(1, render_letter(u)), std::string(1, render_letter(v)), count});
  }
  return {{"vertices", vertices}, {"edges", edge_list}};
}

std::string to_dot(const WhiteheadGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Letter v : g.vertices()) {
    out << "  \"" << render_letter(v) << "\";\n";
  }
  const json edges = to_json(g).at("edges");
  for (const auto& e : edges) {
    out << "  \"" << e[0].get<std::string>() << "\" -- \"" << e[1].get<std::string>() << "\"";
    if (e[2].get<int>() > 1) {
      out << " [label=\"" << e[2].get<int>() << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

json to_json(const ComponentPartition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks) {
    json b = json::array();
    for (Letter x : block) {
      b.push_back(std::string(1, render_letter(x)));
    }
    blocks.push_back(b);
  }
  return blocks;
}

json to_json(const PreservationReport& r) {
  json j = {{"bound", r.bound},
            {"tested", r.tested_count},
            {"verdict", r.preserves ? "preserves" : "counterexample"}};
  if (!r.preserves) {
    j["primitive"] = render_word(*r.primitive);
    j["image"] = render_word(*r.image);
  }
  return j;
}

json to_json(const SweepReport& r) {
  json unresolved = json::array();
  for (const auto& e : r.unresolved) {
    unresolved.push_back(render_endomorphism(e));
  }
  json counterexamples = json::array();
  for (const auto& c : r.counterexamples) {
    counterexamples.push_back({{"endo", render_endomorphism(c.endo)},
                               {"primitive", render_word(c.primitive)},
                               {"image", render_word(c.image)},
                               {"bound", c.bound}});
  }
  return {
      {"params",
       {{"rank", r.options.rank},
        {"image_len", r.options.image_length},
        {"bound", r.options.bound},
        {"ceiling", r.options.ceiling},
        {"all_counterexamples", r.options.all_counterexamples}}},
      {"total", r.total},
      {"preserving", r.preserving},
      {"automorphisms", r.automorphisms},
      {"confusion",
       {{"preserving_automorphism", r.preserving_automorphisms},
        {"preserving_non_automorphism", r.preserving_non_automorphisms},
        {"non_preserving_automorphism", r.non_preserving_automorphisms},
        {"non_preserving_non_automorphism", r.non_preserving_non_automorphisms}}},
      {"escalated_failures", r.escalated_failures},
      {"unresolved", unresolved},
      {"counterexamples", counterexamples},
  };
}

SweepReport sweep_report_from_json(const json& j) {
  SweepReport r;
  const auto& params = j.at("params");
  r.options.rank = params.at("rank").get<int>();
  r.options.image_length = params.at("image_len").get<std::size_t>();
  r.options.bound = params.at("bound").get<std::size_t>();
  r.options.ceiling = params.at("ceiling").get<std::size_t>();
  r.options.all_counterexamples = params.at("all_counterexamples").get<bool>();
  r.total = j.at("total").get<std::size_t>();
  r.preserving = j.at("preserving").get<std::size_t>();
  r.automorphisms = j.at("automorphisms").get<std::size_t>();
  const auto& confusion = j.at("confusion");
  r.preserving_automorphisms = confusion.at("preserving_automorphism").get<std::size_t>();
  r.preserving_non_automorphisms = confusion.at("preserving_non_automorphism").get<std::size_t>();
  r.non_preserving_automorphisms = confusion.at("non_preserving_automorphism").get<std::size_t>();
  r.non_preserving_non_automorphisms =
      confusion.at("non_preserving_non_automorphism").get<std::size_t>();
  r.escalated_failures = j.at("escalated_failures").get<std::size_t>();
  for (const auto& e : j.at("unresolved")) {
    r.unresolved.push_back(parse_endomorphism(e.get<std::string>(), r.options.rank));
  }
  for (const auto& c : j.at("counterexamples")) {
    r.counterexamples.push_back({parse_endomorphism(c.at("endo").get<std::string>(), r.options.rank),
                                 parse_word(c.at("primitive").get<std::string>(), r.options.rank),
                                 parse_word(c.at("image").get<std::string>(), r.options.rank),
                                 c.at("bound").get<std::size_t>()});
  }
  return r;
}

}  // namespace freegroup::io
