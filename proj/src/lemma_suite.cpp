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

#include "rigidkit/lemma_suite.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "rigidkit/generators.hpp"
#include "rigidkit/graph_io.hpp"
#include "rigidkit/oracle.hpp"

namespace rigidkit {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

bool subset_of(EdgeMask inner, EdgeMask outer) { return (inner & outer) == inner; }

bool pairwise_disjoint(const std::vector<EdgeMask>& sets) {
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if ((sets[a] & sets[b]) != 0) return false;
    }
  }
  return true;
}

std::set<EdgeMask> fundamental_circuits(const SubsetOracle& oracle, EdgeMask basis) {
  std::set<EdgeMask> out;
  for (EdgeId e = 0; e < oracle.graph().num_edges(); ++e) {
    if ((basis >> e) & 1U) continue;
    out.insert(oracle.fundamental_circuit(basis, e));
  }
  return out;
}

bool is_two_two_graph(const ColoredGraph& g) {
  return g.num_edges() == 2 * g.num_vertices() - 2 && oracle_is_sparse(g, Family::kTwoTwo);
}

bool is_two_one_graph(const ColoredGraph& g) {
  return g.num_edges() == 2 * g.num_vertices() - 1 && oracle_is_sparse(g, Family::kTwoOne);
}

bool has_loop(const ColoredGraph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [](const ColoredEdge& e) { return e.is_loop(); });
}

// Each predicate answers "is this graph a counterexample": hypothesis holds
// and conclusion fails.

bool violates_laman_disjoint(const ColoredGraph& g) {
  if (has_loop(g) || !is_two_two_graph(g)) return false;
  return !pairwise_disjoint(SubsetOracle(g, Family::kLaman).circuits());
}

bool violates_basis_independence(const ColoredGraph& g) {
  if (has_loop(g) || !is_two_two_graph(g)) return false;
  const SubsetOracle laman(g, Family::kLaman);
  const auto all = laman.circuits();
  const std::set<EdgeMask> expected(all.begin(), all.end());
  for (EdgeMask basis : laman.bases()) {
    if (fundamental_circuits(laman, basis) != expected) return true;
  }
  return false;
}

bool violates_ross_criterion(const ColoredGraph& g) {
  if (has_loop(g) || !is_two_two_graph(g)) return false;
  const SubsetOracle ross(g, Family::kRoss);
  const bool is_ross = ross.is_sparse(ross.full());
  const SubsetOracle laman(g, Family::kLaman);
  for (EdgeMask basis : laman.bases()) {
    bool all_nontrivial = true;
    for (EdgeMask circuit : fundamental_circuits(laman, basis)) {
      if (oracle_image_trivial(g, from_mask(circuit))) all_nontrivial = false;
    }
    if (all_nontrivial != is_ross) return true;
  }
  return false;
}

bool violates_two_two_disjoint(const ColoredGraph& g) {
  if (has_loop(g) || !is_two_one_graph(g)) return false;
  return !pairwise_disjoint(SubsetOracle(g, Family::kTwoTwo).circuits());
}

bool violates_two_two_or_laman(const ColoredGraph& g) {
  if (has_loop(g) || !is_two_one_graph(g)) return false;
  const SubsetOracle laman(g, Family::kLaman);
  const auto two_two = SubsetOracle(g, Family::kTwoTwo).circuits();
  std::vector<std::set<EdgeMask>> per_basis;
  for (EdgeMask basis : laman.bases()) per_basis.push_back(fundamental_circuits(laman, basis));
  for (EdgeMask circuit : laman.circuits()) {
    const bool inside = std::any_of(two_two.begin(), two_two.end(),
                                    [&](EdgeMask c) { return subset_of(circuit, c); });
    const bool fundamental = std::all_of(per_basis.begin(), per_basis.end(),
                                         [&](const auto& f) { return f.count(circuit) > 0; });
    if (!inside && !fundamental) return true;
  }
  return false;
}

bool violates_two_two_circuit_cone(const ColoredGraph& g) {
  if (has_loop(g) || g.group().is_lattice() || !is_two_one_graph(g)) return false;
  const SubsetOracle two_two(g, Family::kTwoTwo);
  if (!two_two.is_circuit(two_two.full())) return false;
  const SubsetOracle cone(g, Family::kConeLaman);
  const SubsetOracle ross(g, Family::kRoss);
  bool every_deletion_ross = true;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!ross.is_sparse(ross.full() & ~(EdgeMask{1} << e))) every_deletion_ross = false;
  }
  return cone.is_sparse(cone.full()) != every_deletion_ross;
}

struct LiftScan {
  bool fiber_path = false;
  std::size_t lifted_components = 0;
};

LiftScan scan_lift(const ColoredGraph& g, EdgeMask subset) {
  DisjointSets sets(3 * static_cast<std::size_t>(g.num_vertices()));
  std::set<VertexId> touched;
  for (EdgeId e : from_mask(subset)) {
    const ColoredEdge& edge = g.edge(e);
    touched.insert(edge.tail);
    touched.insert(edge.head);
    for (int z = 0; z < 3; ++z) {
      sets.unite(3 * static_cast<std::size_t>(edge.tail) + static_cast<std::size_t>(z),
                 3 * static_cast<std::size_t>(edge.head) +
                     static_cast<std::size_t>((z + edge.color.a) % 3));
    }
  }
  LiftScan scan;
  std::set<std::size_t> roots;
  for (VertexId v : touched) {
    const std::size_t base = 3 * static_cast<std::size_t>(v);
    const std::size_t r0 = sets.find(base), r1 = sets.find(base + 1), r2 = sets.find(base + 2);
    if (r0 == r1 || r0 == r2 || r1 == r2) scan.fiber_path = true;
    roots.insert({r0, r1, r2});
  }
  scan.lifted_components = roots.size();
  return scan;
}

bool connected_subset(const ColoredGraph& g, EdgeMask subset) {
  DisjointSets sets(static_cast<std::size_t>(g.num_vertices()));
  std::set<VertexId> touched;
  for (EdgeId e : from_mask(subset)) {
    sets.unite(static_cast<std::size_t>(g.edge(e).tail), static_cast<std::size_t>(g.edge(e).head));
    touched.insert(g.edge(e).tail);
    touched.insert(g.edge(e).head);
  }
  std::set<std::size_t> roots;
  for (VertexId v : touched) roots.insert(sets.find(static_cast<std::size_t>(v)));
  return roots.size() == 1;
}

template <typename Check>
bool any_connected_subset(const ColoredGraph& g, Check check) {
  const EdgeMask full = g.num_edges() == 0 ? 0 : (EdgeMask{1} << g.num_edges()) - 1;
  for (EdgeMask s = 1; s != 0 && s <= full; ++s) {
    if (connected_subset(g, s) && check(s)) return true;
  }
  return false;
}

bool violates_fiber_path(const ColoredGraph& g) {
  if (g.group().is_lattice() || g.group().modulus() != 3) return false;
  return any_connected_subset(g, [&](EdgeMask s) {
    const bool nontrivial = !oracle_image_trivial(g, from_mask(s));
    return nontrivial != scan_lift(g, s).fiber_path;
  });
}

bool violates_lift_types(const ColoredGraph& g) {
  if (g.group().is_lattice() || g.group().modulus() != 3) return false;
  return any_connected_subset(g, [&](EdgeMask s) {
    const LiftScan scan = scan_lift(g, s);
    if (oracle_image_trivial(g, from_mask(s))) {
      return scan.fiber_path || scan.lifted_components != 3;
    }
    return scan.lifted_components != 1;
  });
}

class Runner {
 public:
  explicit Runner(const LemmaSuiteOptions& options) : options_(options) {}

  std::size_t start(std::string name) {
    report_.results.push_back({});
    report_.results.back().name = std::move(name);
    return report_.results.size() - 1;
  }

  void check(std::size_t index, const ColoredGraph& g,
             const std::function<bool(const ColoredGraph&)>& violates) {
    LemmaResult& result = report_.results[index];
    ++result.instances;
    if (!violates(g)) return;
    ++result.counterexamples;
    const ColoredGraph small = minimize_counterexample(g, violates);
    if (result.first_counterexample.empty()) result.first_counterexample = serialize_graph(small);
    if (options_.reproducer_dir) {
      std::filesystem::create_directories(*options_.reproducer_dir);
      const auto path = *options_.reproducer_dir /
                        (result.name + "-" + std::to_string(result.counterexamples) + ".graph");
      write_graph_file(path, small);
      result.reproducers.push_back(path);
    }
  }

  LemmaReport take() { return std::move(report_); }

 private:
  const LemmaSuiteOptions& options_;
  LemmaReport report_;
};

std::vector<ColoredGraph> tight_uncolored(VertexId max_vertices, int ell) {
  std::vector<ColoredGraph> out;
  for (VertexId n = 1; n <= max_vertices; ++n) {
    const EdgeId m = 2 * n - ell;
    if (m < 0) continue;
    EnumSpec spec;
    spec.group = Group::Z2();
    spec.n = n;
    spec.min_edges = m;
    spec.max_edges = m;
    spec.both_orientations = false;
    spec.loops = false;
    enumerate_multigraphs(spec, [&](const ColoredGraph& g) {
      if (oracle_is_sparse(g, ell == 2 ? Family::kTwoTwo : Family::kTwoOne)) out.push_back(g);
    });
  }
  return out;
}

ColoredGraph recolor(const ColoredGraph& g, const Group& group, std::mt19937_64& rng) {
  ColoredGraph out(group, g.num_vertices());
  for (const ColoredEdge& e : g.edges()) {
    GroupElement c;
    if (group.is_lattice()) {
      std::uniform_int_distribution<std::int64_t> bit(0, 1);
      c = {bit(rng), bit(rng)};
    } else {
      std::uniform_int_distribution<std::int64_t> r(0, group.modulus() - 1);
      c = {r(rng), 0};
    }
    out.add_edge(e.tail, e.head, c);
  }
  return out;
}

}  // namespace

bool LemmaReport::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const LemmaResult& r) { return r.counterexamples == 0; });
}

ColoredGraph minimize_counterexample(const ColoredGraph& graph,
                                     const std::function<bool(const ColoredGraph&)>& fails) {
  ColoredGraph current = graph;
  bool progress = true;
  while (progress) {
    progress = false;
    for (EdgeId drop = 0; drop < current.num_edges(); ++drop) {
      ColoredGraph trial(current.group(), current.num_vertices());
      for (EdgeId e = 0; e < current.num_edges(); ++e) {
        if (e != drop) trial.add_edge(current.edge(e).tail, current.edge(e).head, current.edge(e).color);
      }
      if (fails(trial)) {
        current = std::move(trial);
        progress = true;
        break;
      }
    }
    for (VertexId v = 0; !progress && v < current.num_vertices(); ++v) {
      const bool used = std::any_of(current.edges().begin(), current.edges().end(),
                                    [&](const ColoredEdge& e) { return e.tail == v || e.head == v; });
      if (used) continue;
      ColoredGraph trial(current.group(), current.num_vertices() - 1);
      for (const ColoredEdge& e : current.edges()) {
        trial.add_edge(e.tail - (e.tail > v ? 1 : 0), e.head - (e.head > v ? 1 : 0), e.color);
      }
      if (fails(trial)) {
        current = std::move(trial);
        progress = true;
      }
    }
  }
  return current;
}

LemmaReport lemma_suite(const LemmaSuiteOptions& options) {
  Runner runner(options);
  std::mt19937_64 rng(options.seed);

  const auto two_two_graphs = tight_uncolored(options.max_vertices, 2);
  const std::size_t disjoint = runner.start("laman-circuits-disjoint");
  for (const auto& g : two_two_graphs) runner.check(disjoint, g, violates_laman_disjoint);
  const std::size_t basis = runner.start("laman-basis-independence");
  for (const auto& g : two_two_graphs) runner.check(basis, g, violates_basis_independence);
  const std::size_t ross = runner.start("ross-by-fundamental-circuits");
  for (const auto& g : two_two_graphs) {
    for (std::size_t c = 0; c < options.colorings_per_graph; ++c) {
      runner.check(ross, recolor(g, Group::Z2(), rng), violates_ross_criterion);
    }
  }

  const auto two_one_graphs = tight_uncolored(options.max_vertices, 1);
  const std::size_t circuits = runner.start("two-two-circuits-disjoint");
  for (const auto& g : two_one_graphs) runner.check(circuits, g, violates_two_two_disjoint);
  const std::size_t either = runner.start("two-two-or-laman-circuit");
  for (const auto& g : two_one_graphs) runner.check(either, g, violates_two_two_or_laman);
  const std::size_t cone = runner.start("two-two-circuit-cone");
  for (const auto& g : two_one_graphs) {
    const SubsetOracle two_two(g, Family::kTwoTwo);
    if (!two_two.is_circuit(two_two.full())) continue;
    for (std::int64_t k = 2; k <= 5; ++k) {
      for (std::size_t c = 0; c < options.colorings_per_graph; ++c) {
        runner.check(cone, recolor(g, Group::Zk(k), rng), violates_two_two_circuit_cone);
      }
    }
  }

  const std::size_t path = runner.start("z3-fiber-path");
  const std::size_t types = runner.start("z3-lift-types");
  std::uniform_int_distribution<VertexId> n_dist(1, 6);
  std::uniform_int_distribution<EdgeId> m_dist(0, 9);
  for (std::size_t i = 0; i < options.random_z3_graphs; ++i) {
    GenSpec spec;
    spec.seed = rng();
    spec.n = n_dist(rng);
    spec.m = m_dist(rng);
    spec.group = Group::Zk(3);
    const ColoredGraph g = random_colored(spec);
    runner.check(path, g, violates_fiber_path);
    runner.check(types, g, violates_lift_types);
  }
  return runner.take();
}

}  // namespace rigidkit
