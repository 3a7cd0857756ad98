// fgtool: command-line front end for the freegroup library.
//
// Every verb takes an explicit --rank and prints plain text, or JSON with
// --json. Exit status is 0 on success, 1 when the library rejects the input
// and 2 for usage errors.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "freegroup/freegroup.hpp"

namespace {

using namespace freegroup;
using io::json;

struct Common {
  int rank = 0;
  bool json = false;
};

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

std::string join_words(const std::vector<Word>& words) {
  std::string out;
  for (const Word& w : words) {
    if (!out.empty()) out += '\n';
    out += io::render_word(w);
  }
  return out;
}

std::string render_partition(const ComponentPartition& p) {
  std::string out;
  for (const auto& block : p.blocks) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k > 0) out += ',';
      out += io::render_letter(block[k]);
    }
    out += '}';
  }
  return out;
}

std::string render_trace(const MinimizationTrace& t) {
  std::string out = io::render_word(free_reduce(t.start));
  for (const auto& step : t.steps) {
    out += "\n" + io::render_descriptor(step.descriptor) + " -> " + io::render_word(step.word);
  }
  out += "\nfinal " + io::render_word(t.final_word) + " (length "
         + std::to_string(t.final_word.size()) + ")";
  return out;
}

std::string render_report(const PreservationReport& r) {
  std::string out = "tested " + std::to_string(r.tested_count) + " primitives up to length "
                    + std::to_string(r.bound) + ": ";
  if (r.preserves) {
    return out + "preserves";
  }
  return out + "counterexample " + io::render_word(*r.primitive) + " -> "
         + io::render_word(*r.image);
}

std::string render_sweep(const SweepReport& r) {
  std::string out;
  auto line = [&out](const std::string& key, std::size_t value) {
    out += key + " " + std::to_string(value) + "\n";
  };
  line("total", r.total);
  line("preserving", r.preserving);
  line("automorphisms", r.automorphisms);
  line("preserving_automorphism", r.preserving_automorphisms);
  line("preserving_non_automorphism", r.preserving_non_automorphisms);
  line("non_preserving_automorphism", r.non_preserving_automorphisms);
  line("non_preserving_non_automorphism", r.non_preserving_non_automorphisms);
  line("escalated_failures", r.escalated_failures);
  out += "unresolved " + std::to_string(r.unresolved.size());
  for (const auto& e : r.unresolved) {
    out += "\n  " + io::render_endomorphism(e);
  }
  for (const auto& c : r.counterexamples) {
    out += "\ncounterexample " + io::render_endomorphism(c.endo) + " at bound "
           + std::to_string(c.bound) + ": " + io::render_word(c.primitive) + " -> "
           + io::render_word(c.image);
  }
  return out;
}

// A subcommand with the options every verb shares.
CLI::App* verb(CLI::App& app, const std::string& name, const std::string& help, Common& c) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--rank", c.rank, "rank n of the free group F_n")
      ->required()
      ->check(CLI::Range(1, io::kMaxTextRank));
  sub->add_flag("--json", c.json, "print JSON instead of text");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whitehead automorphisms and primitive elements of free groups"};
  app.require_subcommand(1);

  Common c;
  std::string word_text;
  std::string desc_text;
  std::string endo_text;
  std::string kind_text;
  std::string u_text;
  std::string v_text;
  std::optional<long> r_param;
  std::optional<long> s_param;
  int gen = 0;
  std::optional<int> component_gen;
  bool dot = false;
  std::size_t max_len = 0;
  std::size_t bound = 0;
  SweepOptions sweep;

  auto word_arg = [&](CLI::App* sub) {
    sub->add_option("word", word_text, "word: letters a,b,... and inverses A,B,...; 1 is empty")
        ->required();
  };

  auto* reduce = verb(app, "reduce", "freely reduce a word", c);
  word_arg(reduce);
  auto* invert_cmd = verb(app, "invert", "inverse of a word, reduced", c);
  word_arg(invert_cmd);
  auto* cyclic = verb(app, "cyclic", "split into conjugator and cyclically reduced core", c);
  word_arg(cyclic);

  auto* apply_cmd = verb(app, "apply", "apply a Whitehead automorphism or endomorphism", c);
  word_arg(apply_cmd);
  auto* desc_opt = apply_cmd->add_option("--desc", desc_text, "descriptor, e.g. 'W2(a=B; S=a,B)'");
  auto* endo_opt = apply_cmd->add_option("--endo", endo_text, "generator images, e.g. 'a,ab,1'");
  desc_opt->excludes(endo_opt);
  endo_opt->excludes(desc_opt);

  auto* autos = verb(app, "autos", "list Whitehead automorphisms in canonical order", c);

  auto* graph = verb(app, "graph", "standard Whitehead graph", c);
  word_arg(graph);
  graph->add_flag("--dot", dot, "print Graphviz DOT");
  auto* gengraph = verb(app, "gengraph", "generalized Whitehead graph omitting one generator", c);
  word_arg(gengraph);
  gengraph->add_option("--gen", gen, "generator index i to omit")->required();
  gengraph->add_flag("--dot", dot, "print Graphviz DOT");
  auto* comps = verb(app, "components", "connected components of a Whitehead graph", c);
  word_arg(comps);
  comps->add_option("--gen", component_gen, "use the generalized graph omitting x_i");

  auto* minimize_cmd = verb(app, "minimize", "greedy Whitehead minimization trace", c);
  word_arg(minimize_cmd);
  auto* primitive = verb(app, "primitive", "is the word primitive?", c);
  word_arg(primitive);
  auto* primitives = verb(app, "primitives", "all primitive elements up to a length", c);
  primitives->add_option("--max-len", max_len, "length bound")->required();

  auto* appenders = verb(app, "appenders", "Cuts sending U to U x1^-1 and to x1 U", c);
  word_arg(appenders);

  auto* witness = verb(app, "witness", "build a witness word of kind A, B, B' or C", c);
  witness->add_option("--kind", kind_text, "A, B, B' (or Bp) or C")->required();
  witness->add_option("--u", u_text, "word U")->required();
  witness->add_option("--v", v_text, "word V")->required();
  witness->add_option("--r", r_param, "exponent r (default: smallest valid)");
  witness->add_option("--s", s_param, "repetition count s (default: smallest valid)");

  auto* check = verb(app, "check-endo", "test an endomorphism on all short primitives", c);
  check->add_option("--endo", endo_text, "generator images")->required();
  check->add_option("--bound", bound, "length bound")->required();

  auto* is_auto = verb(app, "is-auto", "is the endomorphism an automorphism?", c);
  is_auto->add_option("--endo", endo_text, "generator images")->required();

  auto* sweep_cmd = verb(app, "sweep", "classify every endomorphism with short images", c);
  sweep_cmd->add_option("--image-len", sweep.image_length, "maximum image length")->required();
  sweep_cmd->add_option("--bound", sweep.bound, "primitive length bound")->required();
  sweep_cmd->add_option("--ceiling", sweep.ceiling, "escalation ceiling (default bound + 4)");
  sweep_cmd->add_option("--workers", sweep.workers, "worker threads (default: environment)");
  sweep_cmd->add_flag("--all-counterexamples", sweep.all_counterexamples,
                      "report a counterexample for every non-preserving endomorphism");
  bool quiet = false;
  sweep_cmd->add_flag("--quiet", quiet, "no progress on standard error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  try {
    const int n = c.rank;
    auto word = [&] { return io::parse_word(word_text, n); };

    if (*reduce) {
      std::string out = io::render_word(free_reduce(word()));
      emit(c, {{"word", out}}, out);
    } else if (*invert_cmd) {
      std::string out = io::render_word(invert(word()));
      emit(c, {{"word", out}}, out);
    } else if (*cyclic) {
      auto d = cyclic_reduce(word());
      std::string conj = io::render_word(d.conjugator);
      std::string core = io::render_word(d.core);
      emit(c, {{"conjugator", conj}, {"core", core}}, "conjugator " + conj + "\ncore " + core);
    } else if (*apply_cmd) {
      Word w = word();
      Word image(n);
      if (!desc_text.empty()) {
        image = apply_whitehead(io::parse_descriptor(desc_text, n), w);
      } else if (!endo_text.empty()) {
        image = apply_endo(io::parse_endomorphism(endo_text, n), w);
      } else {
        std::cerr << "apply: one of --desc or --endo is required\n";
        return 2;
      }
      std::string out = io::render_word(image);
      emit(c, {{"word", out}}, out);
    } else if (*autos) {
      json j = json::array();
      std::string text;
      for (const auto& d : enumerate_whitehead(n)) {
        j.push_back(io::to_json(d));
        if (!text.empty()) text += '\n';
        text += io::render_descriptor(d);
      }
      emit(c, j, text);
    } else if (*graph || *gengraph) {
      WhiteheadGraph g = *graph ? standard_graph(free_reduce(word()))
                                : generalized_graph(free_reduce(word()), gen);
      if (dot) {
        std::cout << io::to_dot(g);
      } else {
        std::string text;
        for (const auto& [edge, count] : g.edges()) {
          if (!text.empty()) text += '\n';
          text += std::string(1, io::render_letter(edge.first)) + " - "
                  + io::render_letter(edge.second) + " x" + std::to_string(count);
        }
        emit(c, io::to_json(g), text.empty() ? "(no edges)" : text);
      }
    } else if (*comps) {
      Word w = free_reduce(word());
      WhiteheadGraph g = component_gen ? generalized_graph(w, *component_gen) : standard_graph(w);
      ComponentPartition p = components(g);
      emit(c, io::to_json(p), render_partition(p));
    } else if (*minimize_cmd) {
      MinimizationTrace t = minimize(word());
      emit(c, io::to_json(t), render_trace(t));
    } else if (*primitive) {
      bool yes = is_primitive(word());
      emit(c, {{"primitive", yes}}, yes ? "true" : "false");
    } else if (*primitives) {
      auto words = primitives_up_to(n, max_len);
      json j = json::array();
      for (const Word& w : words) {
        j.push_back(io::render_word(w));
      }
      emit(c, j, join_words(words));
    } else if (*appenders) {
      Appenders a = find_appenders(word());
      auto show = [](const std::optional<Cut>& cut) {
        return cut ? io::render_descriptor(*cut) : std::string("none");
      };
      json j = {{"right", a.right ? io::to_json(WhiteheadDescriptor(*a.right)) : json(nullptr)},
                {"left", a.left ? io::to_json(WhiteheadDescriptor(*a.left)) : json(nullptr)}};
      emit(c, j, "right " + show(a.right) + "\nleft " + show(a.left));
    } else if (*witness) {
      WitnessSpec spec;
      spec.kind = io::parse_witness_kind(kind_text);
      spec.u = io::parse_word(u_text, n);
      spec.v = io::parse_word(v_text, n);
      auto [s0, r0] = minimal_witness_parameters(spec.u, spec.v);
      spec.s = s_param.value_or(s0);
      spec.r = r_param.value_or(r0);
      Word w = make_witness(spec);
      std::string out = io::render_word(w);
      emit(c,
           {{"kind", io::render_witness_kind(spec.kind)},
            {"r", spec.r},
            {"s", spec.s},
            {"length", w.size()},
            {"word", out}},
           out);
    } else if (*check) {
      PreservationReport r = check_preserves_primitivity(io::parse_endomorphism(endo_text, n), bound);
      emit(c, io::to_json(r), render_report(r));
    } else if (*is_auto) {
      bool yes = is_automorphism(io::parse_endomorphism(endo_text, n));
      emit(c, {{"automorphism", yes}}, yes ? "true" : "false");
    } else if (*sweep_cmd) {
      sweep.rank = n;
      if (!quiet) {
        sweep.progress = [](std::size_t done, std::size_t total) {
          if (done == total || done % 4096 == 0) {
            std::fprintf(stderr, "\r%zu/%zu", done, total);
            if (done == total) std::fputc('\n', stderr);
          }
        };
      }
      SweepReport r = theorem_sweep(sweep);
      emit(c, io::to_json(r), render_sweep(r));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
