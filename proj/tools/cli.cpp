// Copyright 2026 The rigidkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rigidkit/cone_laman.hpp"
#include "rigidkit/fixed_lattice.hpp"
#include "rigidkit/generators.hpp"
#include "rigidkit/graph_io.hpp"
#include "rigidkit/lemma_suite.hpp"
#include "rigidkit/oracle.hpp"

namespace rigidkit::cli {
namespace {

// Raised for bad combinations of flags and input; maps to kExitInputError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string model;
  std::optional<std::int64_t> k;
  bool spanning = false;
  bool no_dev = false;
  bool strict = false;
  bool json = false;
};

enum class Route { kRoss, kConeGeneral, kConeDevelopment };

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Route choose_route(const ColoredGraph& graph, const Options& opt) {
  if (opt.model == "fixed-lattice") {
    if (opt.k) throw UsageError("--k only applies to --model cone");
    if (!graph.group().is_lattice()) {
      throw UsageError("model fixed-lattice needs a 'group z2' file, got " +
                       graph.group().describe());
    }
    return Route::kRoss;
  }
  if (!opt.k) throw UsageError("--model cone requires --k");
  if (*opt.k < 2) throw UsageError("--k must be at least 2");
  if (graph.group().is_lattice() || graph.group().modulus() != *opt.k) {
    throw UsageError("model cone with k=" + std::to_string(*opt.k) + " does not match file group " +
                     graph.group().describe());
  }
  if (*opt.k == 3 && !opt.no_dev) return Route::kConeDevelopment;
  return Route::kConeGeneral;
}

std::string algorithm_name(Route route) {
  switch (route) {
    case Route::kRoss:
      return "ross";
    case Route::kConeGeneral:
      return "cone-general";
    case Route::kConeDevelopment:
      return "cone-development";
  }
  return "";
}

ResultDocument start_document(const std::string& command, const ColoredGraph& graph) {
  ResultDocument doc;
  doc.command = command;
  doc.group = graph.group();
  doc.n = graph.num_vertices();
  doc.m = graph.num_edges();
  return doc;
}

ResultDocument start_model_document(const std::string& command, const ColoredGraph& graph,
                                    const Options& opt, Route route) {
  ResultDocument doc = start_document(command, graph);
  doc.model = opt.model;
  doc.algorithm = algorithm_name(route);
  return doc;
}

bool positive_verdict(const ResultDocument& doc) {
  return doc.verdict == "ross-graph" || doc.verdict == "cone-laman";
}

ResultDocument run_decide(const ColoredGraph& graph, const Options& opt) {
  const Route route = choose_route(graph, opt);
  ResultDocument doc = start_model_document("decide", graph, opt, route);
  const DecideMode mode = opt.spanning ? DecideMode::kSpanning : DecideMode::kMinimal;
  const Stopwatch clock;
  switch (route) {
    case Route::kRoss: {
      const RossDecision d = ross_decide(graph, mode);
      doc.verdict = d.is_ross ? "ross-graph" : "not-ross";
      doc.processed = d.processed;
      if (d.first_discard) {
        doc.discarded.push_back({d.first_discard->edge, std::string(to_string(d.first_discard->reason))});
      }
      break;
    }
    case Route::kConeGeneral: {
      const ConeDecision d = cone_decide(graph, mode);
      doc.verdict = d.is_cone_laman ? "cone-laman" : "not-cone-laman";
      doc.processed = d.processed;
      if (d.first_discard) {
        doc.discarded.push_back({d.first_discard->edge, std::string(to_string(d.first_discard->reason))});
      }
      break;
    }
    case Route::kConeDevelopment: {
      const Cone3Decision d = cone3_decide(graph, mode);
      doc.verdict = d.is_cone_laman ? "cone-laman" : "not-cone-laman";
      doc.processed = d.lifted_processed;
      if (d.first_rejected_lift) {
        doc.discarded.push_back({Development::base_edge(*d.first_rejected_lift), "lift-rejected"});
      }
      break;
    }
  }
  doc.total_ms = clock.elapsed_ms();
  return doc;
}

ResultDocument run_extract(const ColoredGraph& graph, const Options& opt) {
  const Route route = choose_route(graph, opt);
  ResultDocument doc = start_model_document("extract", graph, opt, route);
  const Stopwatch clock;
  switch (route) {
    case Route::kRoss: {
      RossRun run(graph);
      run.process_all();
      doc.kept = run.kept();
      for (const RossDiscard& d : run.discarded()) doc.discarded.push_back({d.edge, std::string(to_string(d.reason))});
      break;
    }
    case Route::kConeGeneral: {
      ConeRun run(graph);
      run.process_all();
      doc.kept = run.kept();
      for (const ConeDiscard& d : run.discarded()) doc.discarded.push_back({d.edge, std::string(to_string(d.reason))});
      break;
    }
    case Route::kConeDevelopment: {
      doc.kept = cone3_extract(graph);
      std::size_t next = 0;
      for (EdgeId e = 0; e < graph.num_edges(); ++e) {
        if (next < doc.kept.size() && doc.kept[next] == e) {
          ++next;
        } else {
          doc.discarded.push_back({e, "lift-dependent"});
        }
      }
      break;
    }
  }
  doc.processed = static_cast<std::size_t>(graph.num_edges());
  doc.total_ms = clock.elapsed_ms();
  return doc;
}

ResultDocument run_components(const ColoredGraph& graph, const Options& opt) {
  const Route route = choose_route(graph, opt);
  ResultDocument doc = start_model_document("components", graph, opt, route);
  const Stopwatch clock;
  switch (route) {
    case Route::kRoss:
      doc.components = ross_components(graph);
      break;
    case Route::kConeGeneral:
      doc.components = cone_components(graph);
      break;
    case Route::kConeDevelopment: {
      Cone3Result r = cone3_components(graph);
      doc.components = std::move(r.components);
      doc.asymmetric_components = std::move(r.asymmetric);
      break;
    }
  }
  doc.total_ms = clock.elapsed_ms();
  return doc;
}

ResultDocument run_image(const ColoredGraph& graph) {
  ResultDocument doc = start_document("image", graph);
  doc.algorithm = "forest-potentials";
  const Stopwatch clock;
  doc.images = component_images(graph);
  const bool trivial = std::all_of(doc.images.begin(), doc.images.end(),
                                   [](const ComponentImage& c) { return c.trivial; });
  doc.verdict = trivial ? "trivial" : "non-trivial";
  doc.total_ms = clock.elapsed_ms();
  return doc;
}

std::string describe_sets(const std::vector<std::vector<VertexId>>& sets) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << (i ? " " : "") << "{";
    for (std::size_t j = 0; j < sets[i].size(); ++j) out << (j ? "," : "") << sets[i][j];
    out << "}";
  }
  out << "]";
  return out.str();
}

void compare(std::vector<std::string>& mismatches, const std::string& what, bool ours, bool oracle) {
  if (ours != oracle) {
    mismatches.push_back(what + ": algorithm " + (ours ? "yes" : "no") + ", oracle " +
                         (oracle ? "yes" : "no"));
  }
}

void compare_checks(std::vector<std::string>& mismatches, const std::string& label,
                    const ColoredGraph& graph, const SubsetOracle& oracle, Family family,
                    bool decided, bool spanning, std::size_t kept,
                    const ComponentReport& components) {
  compare(mismatches, label + " decide", decided, oracle_is_tight(graph, family));
  const int target = 2 * graph.num_vertices() - (family == Family::kRoss ? 2 : 1);
  compare(mismatches, label + " decide --spanning", spanning, oracle.rank() == target);
  if (static_cast<int>(kept) != oracle.rank()) {
    mismatches.push_back(label + " extract: algorithm kept " + std::to_string(kept) +
                         ", oracle maximum " + std::to_string(oracle.rank()));
  }
  const auto ours = vertex_sets(components);
  const auto theirs = vertex_sets(oracle.components());
  if (ours != theirs) {
    mismatches.push_back(label + " components: algorithm " + describe_sets(ours) + ", oracle " +
                         describe_sets(theirs));
  }
}

ResultDocument run_check(const ColoredGraph& graph, const Options& opt) {
  const Route route = choose_route(graph, opt);
  ResultDocument doc = start_model_document("check", graph, opt, route);
  doc.algorithm = "oracle-check";
  const Stopwatch clock;
  const Family family = route == Route::kRoss ? Family::kRoss : Family::kConeLaman;
  const SubsetOracle oracle(graph, family);
  if (route == Route::kRoss) {
    compare_checks(doc.mismatches, "ross", graph, oracle, family, ross_decide(graph).is_ross,
                   ross_decide(graph, DecideMode::kSpanning).is_ross, ross_extract(graph).size(),
                   ross_components(graph));
  } else {
    compare_checks(doc.mismatches, "cone-general", graph, oracle, family,
                   cone_decide(graph).is_cone_laman,
                   cone_decide(graph, DecideMode::kSpanning).is_cone_laman,
                   cone_extract(graph).size(), cone_components(graph));
    if (*opt.k == 3) {
      compare_checks(doc.mismatches, "cone-development", graph, oracle, family,
                     cone3_decide(graph).is_cone_laman,
                     cone3_decide(graph, DecideMode::kSpanning).is_cone_laman,
                     cone3_extract(graph).size(), cone3_components(graph).components);
    }
  }
  compare(doc.mismatches, "image trivial", is_trivial_image(graph),
          oracle_image_trivial(graph, all_edges(graph)));
  for (const ComponentImage& c : component_images(graph)) {
    compare(doc.mismatches, "image trivial on component at vertex " + std::to_string(c.vertices.front()),
            c.trivial, oracle_image_trivial(graph, c.edges));
  }
  doc.verdict = doc.mismatches.empty() ? "match" : "mismatch";
  doc.total_ms = clock.elapsed_ms();
  return doc;
}

void emit(std::ostream& out, const ResultDocument& doc, bool json) {
  if (json) {
    out << to_json(doc).dump(2) << "\n";
  } else {
    write_text(out, doc);
  }
}

void add_model_options(CLI::App& sub, Options& opt, bool with_spanning) {
  sub.add_option("file", opt.file, "Graph file")->required();
  sub.add_option("--model", opt.model, "fixed-lattice or cone")
      ->required()
      ->check(CLI::IsMember({"fixed-lattice", "cone"}));
  sub.add_option("--k", opt.k, "Rotation order for --model cone");
  sub.add_flag("--no-dev", opt.no_dev, "For k = 3, use the general cone algorithm");
  sub.add_flag("--json", opt.json, "Emit JSON");
  if (with_spanning) {
    sub.add_flag("--spanning", opt.spanning,
                 "Decide whether a spanning minimally rigid subgraph exists");
    sub.add_flag("--strict", opt.strict, "Exit 1 on a negative verdict");
  }
}

}  // namespace

nlohmann::json to_json(const ResultDocument& doc) {
  using nlohmann::json;
  json group = {{"kind", doc.group.is_lattice() ? "z2" : "zk"}};
  group["modulus"] = doc.group.is_lattice() ? json(nullptr) : json(doc.group.modulus());

  json discarded = json::array();
  for (const Discard& d : doc.discarded) discarded.push_back({{"edge", d.edge}, {"reason", d.reason}});
  json components = json::array();
  for (const Component& c : doc.components) {
    components.push_back({{"vertices", c.vertices}, {"edges", c.edges}});
  }
  json images = json::array();
  for (const ComponentImage& c : doc.images) {
    images.push_back({{"vertices", c.vertices}, {"edges", c.edges}, {"trivial", c.trivial}});
  }
  json asymmetric = json::array();
  for (const LiftedSubgraph& s : doc.asymmetric_components) {
    asymmetric.push_back({{"lifted_vertices", s.vertices}, {"lifted_edges", s.edges}});
  }

  json out;
  out["command"] = doc.command;
  out["model"] = doc.model ? json(*doc.model) : json(nullptr);
  out["algorithm"] = doc.algorithm;
  out["group"] = group;
  out["n"] = doc.n;
  out["m"] = doc.m;
  out["verdict"] = doc.verdict ? json(*doc.verdict) : json(nullptr);
  out["processed"] = doc.processed ? json(*doc.processed) : json(nullptr);
  out["kept"] = doc.kept;
  out["discarded"] = discarded;
  out["components"] = components;
  out["images"] = images;
  out["asymmetric_components"] = asymmetric;
  out["mismatches"] = doc.mismatches;
  out["timings"] = {{"total_ms", doc.total_ms}};
  return out;
}

void write_text(std::ostream& out, const ResultDocument& doc) {
  auto list = [&](const std::vector<std::int32_t>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + std::to_string(ids[i]);
    return s;
  };
  out << "command: " << doc.command << "\n";
  if (doc.model) out << "model: " << *doc.model << "\n";
  out << "algorithm: " << doc.algorithm << "\n";
  out << "graph: n=" << doc.n << " m=" << doc.m << " group " << doc.group.describe() << "\n";
  if (doc.verdict) out << "verdict: " << *doc.verdict << "\n";
  if (doc.processed) out << "processed: " << *doc.processed << "\n";
  if (doc.command == "extract") out << "kept (" << doc.kept.size() << "): " << list(doc.kept) << "\n";
  for (const Discard& d : doc.discarded) out << "discarded: edge " << d.edge << " (" << d.reason << ")\n";
  if (doc.command == "components") out << "components: " << doc.components.size() << "\n";
  for (const Component& c : doc.components) {
    out << "  vertices " << list(c.vertices) << " | edges " << list(c.edges) << "\n";
  }
  for (const ComponentImage& c : doc.images) {
    out << "  component vertices " << list(c.vertices) << ": "
        << (c.trivial ? "trivial" : "non-trivial") << "\n";
  }
  if (!doc.asymmetric_components.empty()) {
    out << "asymmetric development components: " << doc.asymmetric_components.size() << "\n";
  }
  for (const std::string& m : doc.mismatches) out << "mismatch: " << m << "\n";
  out << "time: " << doc.total_ms << " ms\n";
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Rigidity of periodic and cone frameworks from colored graphs", "rigidkit");
  app.require_subcommand(1);

  Options opt;
  CLI::App* decide = app.add_subcommand("decide", "Is the graph minimally rigid?");
  add_model_options(*decide, opt, true);
  CLI::App* extract = app.add_subcommand("extract", "Maximum independent edge set");
  add_model_options(*extract, opt, false);
  CLI::App* components = app.add_subcommand("components", "Rigid components");
  add_model_options(*components, opt, false);
  CLI::App* check = app.add_subcommand("check", "Compare every algorithm with the brute-force oracle");
  add_model_options(*check, opt, false);

  CLI::App* image = app.add_subcommand("image", "Triviality of the image per connected component");
  image->add_option("file", opt.file, "Graph file")->required();
  image->add_flag("--json", opt.json, "Emit JSON");

  std::string out_path;
  std::string format = "graph";
  CLI::App* develop = app.add_subcommand("develop", "Threefold development of a Z/3Z graph");
  develop->add_option("file", opt.file, "Graph file")->required();
  develop->add_option("--out", out_path, "Output path (default stdout)");
  develop->add_option("--format", format, "graph or dot")->check(CLI::IsMember({"graph", "dot"}));

  std::string family = "random";
  std::string group_name = "z2";
  VertexId gen_n = 1;
  EdgeId gen_m = 0;
  std::int64_t gen_k = 3;
  std::uint64_t seed = 0;
  CLI::App* generate = app.add_subcommand("generate", "Write a generated graph");
  generate->add_option("--family", family, "random, ross, cone or path-chords")
      ->check(CLI::IsMember({"random", "ross", "cone", "path-chords"}));
  generate->add_option("--group", group_name, "z2 or zk (random family)")
      ->check(CLI::IsMember({"z2", "zk"}));
  generate->add_option("--n", gen_n, "Vertex count")->check(CLI::PositiveNumber);
  generate->add_option("--m", gen_m, "Edge count (random family)")->check(CLI::NonNegativeNumber);
  generate->add_option("--k", gen_k, "Modulus for zk")->check(CLI::Range(2, 1 << 30));
  generate->add_option("--seed", seed, "Random seed");
  generate->add_option("--out", out_path, "Output path (default stdout)");

  LemmaSuiteOptions lemma_options;
  std::string reproducer_dir;
  CLI::App* lemmas = app.add_subcommand("lemmas", "Run the structural lemma checks");
  lemmas->add_option("--seed", lemma_options.seed, "Random seed");
  lemmas->add_option("--max-vertices", lemma_options.max_vertices, "Exhaustive vertex bound")
      ->check(CLI::Range(1, 5));
  lemmas->add_option("--random", lemma_options.random_z3_graphs, "Random Z/3Z graphs");
  lemmas->add_option("--reproducers", reproducer_dir, "Directory for counterexample files");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*generate) {
      ColoredGraph graph = family == "ross"   ? ross_family(gen_n)
                           : family == "cone" ? cone_family(gen_n, gen_k)
                           : family == "path-chords"
                               ? path_plus_chords(gen_n, seed)
                               : random_colored({.seed = seed,
                                                 .n = gen_n,
                                                 .m = gen_m,
                                                 .group = group_name == "z2" ? Group::Z2()
                                                                             : Group::Zk(gen_k),
                                                 .family_bias = std::nullopt});
      if (out_path.empty()) {
        write_graph(out, graph);
      } else {
        write_graph_file(out_path, graph);
      }
      return kExitOk;
    }
    if (*lemmas) {
      if (!reproducer_dir.empty()) lemma_options.reproducer_dir = reproducer_dir;
      const LemmaReport report = lemma_suite(lemma_options);
      for (const LemmaResult& r : report.results) {
        out << (r.counterexamples == 0 ? "PASS " : "FAIL ") << r.name << " instances=" << r.instances
            << " counterexamples=" << r.counterexamples << "\n";
        for (const auto& path : r.reproducers) out << "  reproducer " << path.string() << "\n";
      }
      return report.passed() ? kExitOk : kExitNegative;
    }

    const ColoredGraph graph = read_graph_file(opt.file);
    if (*develop) {
      const Development dev(graph);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot write " + out_path);
      }
      std::ostream& sink = out_path.empty() ? out : file;
      if (format == "dot") {
        dev.write_dot(sink);
      } else {
        write_graph(sink, dev.as_colored_graph());
      }
      return kExitOk;
    }
    if (*image) {
      emit(out, run_image(graph), opt.json);
      return kExitOk;
    }
    if (*decide) {
      const ResultDocument doc = run_decide(graph, opt);
      emit(out, doc, opt.json);
      return opt.strict && !positive_verdict(doc) ? kExitNegative : kExitOk;
    }
    if (*extract) {
      emit(out, run_extract(graph, opt), opt.json);
      return kExitOk;
    }
    if (*components) {
      emit(out, run_components(graph, opt), opt.json);
      return kExitOk;
    }
    const ResultDocument doc = run_check(graph, opt);
    emit(out, doc, opt.json);
    return doc.mismatches.empty() ? kExitOk : kExitNegative;
  } catch (const ParseError& e) {
    err << "error: " << opt.file << ": " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const OracleBoundExceeded& e) {
    err << "error: " << e.what() << " (raise RIGIDKIT_ORACLE_BOUND to allow)\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace rigidkit::cli
