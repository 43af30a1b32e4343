// The fourteen desk-scale acceptance checks, shared by the acceptance test
// binary and `reorilat verify`. Every check is exact; the only pinned
// numbers are the graph-size scales, the expected counts and the runtime
// budgets below.
#pragma once

#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "conjectures.hpp"
#include "geometry.hpp"
#include "regions.hpp"
#include "restriction.hpp"

namespace reorilat {

namespace budget {
inline constexpr double kLatticeSeconds = 300;       // criterion 1
inline constexpr double kQuotientopeSeconds = 1800;  // criterion 8
inline constexpr double kHamiltonSeconds = 7200;     // criterion 12
inline constexpr int kHamiltonFailures = 0;
inline constexpr int kConjectureViolations = 0;
inline constexpr int kWeightSeeds = 3;
}  // namespace budget

// Largest graphs each criterion runs on at full scale.
struct Scales {
  int lattice = 5;
  int biclosed = 5;
  int biclosed_max_arcs = 10;
  int properties = 5;
  int counting = 5;
  int diagrams = 5;
  int congruences = 4;
  int catalan = 5;
  int quotientope = 4;
  int shards = 5;
  int removahedron = 5;
  int simpliciality = 6;
  int hamilton = 5;
  int conjectures = 5;

  // Caps every scale at k vertices.
  static Scales capped(int k) {
    Scales s;
    for (int* p : {&s.lattice, &s.biclosed, &s.properties, &s.counting, &s.diagrams, &s.congruences, &s.catalan,
                   &s.quotientope, &s.shards, &s.removahedron, &s.simpliciality, &s.hamilton, &s.conjectures}) {
      *p = std::min(*p, k);
    }
    return s;
  }
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline nlohmann::json to_json(CriterionResult const& r) {
  return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}};
}

namespace acceptance {

inline std::vector<Dag> graphs_upto(int n, bool skeletal_only = false) {
  std::vector<Dag> out;
  for (int k = 1; k <= n; ++k) {
    for (auto const& d : corpus_level(k)) {
      if (!skeletal_only || is_skeletal(d)) {
        out.push_back(d);
      }
    }
  }
  return out;
}

// Collects counterexample descriptions from worker threads.
class Failures {
 public:
  void add(std::string s) {
    std::lock_guard lock(mu_);
    ++count_;
    if (first_.size() < 3) {
      first_.push_back(std::move(s));
    }
  }
  int count() const { return count_; }
  std::string summary() const {
    std::string s = std::to_string(count_) + " failures";
    for (auto const& f : first_) {
      s += "; " + f;
    }
    return s;
  }

 private:
  std::mutex mu_;
  int count_ = 0;
  std::vector<std::string> first_;
};

inline std::string graph_name(Dag const& d) {
  std::string s = std::to_string(d.n()) + ":";
  for (auto [u, v] : d.arcs()) {
    s += " " + std::to_string(u + 1) + std::to_string(v + 1);
  }
  return s;
}

inline CriterionResult lattice_characterization(Scales const& s, unsigned jobs) {
  auto gs = graphs_upto(s.lattice);
  Failures f;
  auto t = std::chrono::steady_clock::now();
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    auto const& d = gs[i];
    bool brute = ReorientationLattice::enumerate(d).poset().is_lattice();
    if (brute != is_vertebrate(d) || is_vertebrate(d) != is_vertebrate_naive(d)) {
      f.add(graph_name(d));
    }
  });
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
  return {1, "lattice iff vertebrate", f.count() == 0 && secs < budget::kLatticeSeconds,
          std::to_string(gs.size()) + " DAGs up to " + std::to_string(s.lattice) + " vertices, " + f.summary()};
}

inline CriterionResult biclosed_equals_acyclic(Scales const& s, unsigned jobs) {
  std::vector<Dag> gs;
  for (auto const& d : graphs_upto(s.biclosed)) {
    if (is_vertebrate(d) && d.num_arcs() <= s.biclosed_max_arcs) {
      gs.push_back(d);
    }
  }
  Failures f;
  std::atomic<long> subsets{0};
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    auto const& d = gs[i];
    std::uint64_t lim = std::uint64_t{1} << d.num_arcs();
    for (std::uint64_t m = 0; m < lim; ++m) {
      ArcSet s(m);
      if (is_biclosed(d, s) != is_acyclic_reorientation(d, s)) {
        f.add(graph_name(d) + " subset " + std::to_string(m));
      }
    }
    subsets += static_cast<long>(lim);
  });
  return {2, "biclosed iff acyclic", f.count() == 0,
          std::to_string(gs.size()) + " vertebrate DAGs, " + std::to_string(subsets.load()) + " subsets, " + f.summary()};
}

inline CriterionResult property_table(Scales const& s, unsigned jobs) {
  std::vector<Dag> gs;
  for (auto const& d : graphs_upto(s.properties)) {
    if (is_vertebrate(d)) {
      gs.push_back(d);
    }
  }
  Failures f;
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    auto const& d = gs[i];
    auto a = structural_properties(d);
    auto b = definitional_properties(ReorientationLattice::enumerate(d));
    if (a.lattice != b.lattice || a.distributive != b.distributive || a.semidistributive != b.semidistributive ||
        a.congruence_normal != b.congruence_normal || a.congruence_uniform != b.congruence_uniform) {
      f.add(graph_name(d));
    }
  });
  return {3, "property table", f.count() == 0, std::to_string(gs.size()) + " vertebrate DAGs, " + f.summary()};
}

inline CriterionResult counting_identities(Scales const& s, unsigned jobs) {
  Failures f;
  auto c4 = ReorientationLattice::enumerate(graphs::square());
  if (c4.size() != 14 || c4.parity_even() != 8) {
    f.add("C4: " + std::to_string(c4.size()) + " elements, " + std::to_string(c4.parity_even()) + " even");
  }
  long fact = 1;
  for (int n = 1; n <= std::max(s.counting, 1); ++n) {
    fact *= n;
    int k = ReorientationLattice::enumerate(graphs::tournament(n)).size();
    if (k != fact) {
      f.add("K" + std::to_string(n) + ": " + std::to_string(k));
    }
  }
  auto gs = graphs_upto(s.counting, true);
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    auto const& d = gs[i];
    long by_support = 0;
    for (int a = 0; a < d.num_arcs(); ++a) {
      by_support += 1L << (d.transitive_support(a).size() - 2);
    }
    long ropes = RopeSet(d).size();
    long cl = static_cast<long>(cliques(d).size());
    long ji = static_cast<long>(join_irreducibles(ReorientationLattice::enumerate(d)).size());
    if (ropes != by_support || ropes != cl || ropes != ji) {
      f.add(graph_name(d));
    }
  });
  return {4, "counting identities", f.count() == 0,
          "C4 = 14 (8/6), K_n = n!, ropes on " + std::to_string(gs.size()) + " skeletal DAGs, " + f.summary()};
}

inline CriterionResult diagram_bijection(Scales const& s, unsigned jobs) {
  auto gs = graphs_upto(s.diagrams, true);
  Failures f;
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    auto const& d = gs[i];
    auto l = ReorientationLattice::enumerate(d);
    RopeSet rs(d);
    std::size_t diagrams = 0;
    bool ok = true;
    rs.for_each_noncrossing([&](Bitset const& bits) {
      ++diagrams;
      auto diag = rs.diagram_of_bits(bits);
      ok = ok && rs.diagram_bits(join_diagram(d, reorientation_of_join_diagram(d, diag))) == bits;
      ok = ok && rs.diagram_bits(meet_diagram(d, reorientation_of_meet_diagram(d, diag))) == bits;
    });
    for (ArcSet e : l.elements()) {
      ok = ok && reorientation_of_join_diagram(d, join_diagram(d, e)) == e;
      ok = ok && reorientation_of_meet_diagram(d, meet_diagram(d, e)) == e;
    }
    ok = ok && diagrams == static_cast<std::size_t>(l.size());
    ok = ok && count_bidiagrams(rs) == l.poset().interval_count();
    if (!ok) {
      f.add(graph_name(d));
    }
  });
  return {5, "non-crossing diagrams and bidiagrams", f.count() == 0,
          std::to_string(gs.size()) + " skeletal DAGs, " + f.summary()};
}

inline CriterionResult congruence_count(Scales const& s, unsigned jobs) {
  auto gs = graphs_upto(s.congruences, true);
  Failures f;
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    auto const& d = gs[i];
    SkeletalLattice sl(d);
    auto brute = all_congruences(Lattice(sl.lattice().poset())).size();
    auto ideals = count_rope_ideals(sl.ropes());
    if (brute != ideals) {
      f.add(graph_name(d) + " " + std::to_string(ideals) + " vs " + std::to_string(brute));
    }
  });
  std::size_t k3 = count_rope_ideals(RopeSet(graphs::tournament(3)));
  if (k3 != 7) {
    f.add("K3 gives " + std::to_string(k3));
  }
  return {6, "rope ideals = congruences", f.count() == 0,
          std::to_string(gs.size()) + " skeletal DAGs, K3 = " + std::to_string(k3) + ", " + f.summary()};
}

inline CriterionResult catalan_quotients(Scales const& s) {
  static constexpr int kCatalan[] = {1, 1, 2, 5, 14, 42};
  Failures f;
  std::string counts;
  for (int n = 3; n <= s.catalan; ++n) {
    auto subs = nonnesting_quotient_subgraphs(n);
    counts += (counts.empty() ? "" : ", ") + std::to_string(subs.size());
    if (static_cast<int>(subs.size()) != kCatalan[n]) {
      f.add("n=" + std::to_string(n) + " gives " + std::to_string(subs.size()));
    }
    Dag k = graphs::tournament(n);
    auto lk = ReorientationLattice::enumerate(k);
    for (auto const& sub : subs) {
      RestrictionMap m(k, sub);
      auto by_fibers = classify_lattice_map_by_fibers(m, lk, ReorientationLattice::enumerate(sub));
      if (!is_pathful(m) || !by_fibers.is_lattice_quotient_map) {
        f.add(graph_name(sub));
      }
    }
  }
  return {7, "Catalan many quotient subgraphs", f.count() == 0, "counts " + counts + ", " + f.summary()};
}

inline CriterionResult quotientope_realization(Scales const& s, unsigned jobs) {
  auto gs = graphs_upto(s.quotientope, true);
  Failures f;
  std::atomic<long> runs{0};
  auto t = std::chrono::steady_clock::now();
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    auto const& d = gs[i];
    SkeletalLattice sl(d);
    auto shards = all_shard_polytopes(sl.ropes());
    std::uint32_t ideal_no = 0;
    for_each_rope_ideal(sl.ropes(), [&](Bitset const& ideal) {
      auto c = congruence_from_ideal(sl, ideal);
      for (int seed = 1; seed <= budget::kWeightSeeds; ++seed) {
        auto q = quotientope(sl, c, shards, random_weights(ideal.count(), 1000 * ideal_no + seed));
        if (!verify_quotientope(sl, c, q).ok()) {
          f.add(graph_name(d) + " ideal #" + std::to_string(ideal_no) + " seed " + std::to_string(seed));
        }
        ++runs;
      }
      ++ideal_no;
    });
  });
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
  return {8, "quotientopes from shard polytopes", f.count() == 0 && secs < budget::kQuotientopeSeconds,
          std::to_string(runs.load()) + " weighted sums on " + std::to_string(gs.size()) + " skeletal DAGs, " +
              f.summary()};
}

inline CriterionResult shard_consistency(Scales const& s, unsigned jobs) {
  auto gs = graphs_upto(s.shards, true);
  Failures f;
  std::atomic<long> ropes{0};
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    auto const& d = gs[i];
    for (auto const& r : all_ropes(d)) {
      ++ropes;
      try {
        auto sp = shard_polytope(d, r);
        if (r.up.empty()) {
          // anchored value: simplex on {u,v} + down, shifted by -e_v
          auto expect = simplex_face(d.n(), r.down | ends(r)).vertices;
          for (auto& x : expect) {
            x = x - unit_vector(d.n(), r.v);
          }
          if (vpolytope_of(expect) != sp.polytope) {
            f.add(graph_name(d) + " rope " + to_string(r) + " anchor");
          }
        }
      } catch (Error const& e) {
        f.add(graph_name(d) + " " + e.what());
      }
    }
  });
  return {9, "shard polytope descriptions agree", f.count() == 0,
          std::to_string(ropes.load()) + " ropes on " + std::to_string(gs.size()) + " skeletal DAGs, " + f.summary()};
}

inline CriterionResult removahedron(Scales const& s, unsigned jobs) {
  auto gs = graphs_upto(s.removahedron, true);
  Failures f;
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    if (!verify_removahedron(gs[i]).ok()) {
      f.add(graph_name(gs[i]));
    }
  });
  auto k3 = verify_removahedron(graphs::tournament(3));
  if (k3.vertices != 5 || !k3.ok()) {
    f.add("K3 gives " + std::to_string(k3.vertices) + " vertices");
  }
  return {10, "removahedron", f.count() == 0,
          std::to_string(gs.size()) + " skeletal DAGs, K3 pentagon " + std::to_string(k3.vertices) + ", " + f.summary()};
}

inline CriterionResult simpliciality(Scales const& s, unsigned jobs) {
  auto gs = graphs_upto(s.simpliciality);
  Failures f;
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    if (is_fan_simplicial(gs[i]) != is_chordful(gs[i])) {
      f.add(graph_name(gs[i]));
    }
  });
  return {11, "simplicial fan iff chordful", f.count() == 0, std::to_string(gs.size()) + " DAGs, " + f.summary()};
}

inline CriterionResult hamiltonicity(Scales const& s, unsigned jobs) {
  auto t = std::chrono::steady_clock::now();
  auto rep = hamiltonian_sweep(graphs_upto(s.hamilton, true), jobs);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
  auto c4 = ReorientationLattice::enumerate(graphs::square()).poset().cover_graph();
  bool c4_none = !hamiltonian_path(c4).has_value();
  std::ostringstream os;
  os << rep.quotients << " quotients: " << rep.cycles << " cycles, " << rep.small_paths << " paths on <= 2 vertices, "
     << rep.parity_paths << " parity paths, " << rep.failures.size() << " failures; C4 without Hamiltonian path: "
     << (c4_none ? "yes" : "no");
  for (std::size_t i = 0; i < rep.failures.size() && i < 3; ++i) {
    os << "; " << rep.failures[i];
  }
  return {12, "Hamiltonian quotients",
          static_cast<int>(rep.failures.size()) <= budget::kHamiltonFailures && c4_none &&
              secs < budget::kHamiltonSeconds,
          os.str()};
}

inline CriterionResult conjecture_equivalences(Scales const& s, unsigned jobs) {
  auto rep = conjecture_harness(graphs_upto(s.conjectures, true), jobs);
  std::ostringstream os;
  os << rep.rows.size() << " skeletal DAGs, " << rep.patterns.tamari.size() << " Tamari and "
     << rep.patterns.cambrian.size() << " Cambrian patterns, " << rep.violations() << " violations";
  return {13, "Tamari and Cambrian equivalences", rep.violations() <= budget::kConjectureViolations, os.str()};
}

inline VectorConfiguration configuration_of(std::vector<std::vector<int>> const& rows) {
  std::vector<QVector> vs;
  for (auto const& r : rows) {
    QVector v;
    for (int x : r) {
      v.emplace_back(x);
    }
    vs.push_back(std::move(v));
  }
  return {static_cast<int>(rows[0].size()), std::move(vs)};
}

// Two configurations in dimension four whose regions satisfy the slice
// condition but do not form a lattice.
inline VectorConfiguration slice_counterexample() {
  return configuration_of({{1, 0, 0, 0}, {0, 1, 0, 0}, {-1, -2, -1, 0}, {2, 1, 1, 0}, {0, 0, 1, -1}, {0, 0, 0, -1}});
}

inline VectorConfiguration type_b4_counterexample() {
  return configuration_of({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 0}, {0, 1, 2, 2}});
}

inline CriterionResult regions(Scales const& s, unsigned jobs) {
  Failures f;
  for (auto [name, cfg] : {std::pair{"first", slice_counterexample()}, std::pair{"B4", type_b4_counterexample()}}) {
    if (!check_simplicial_slices(cfg) || regions_lattice(cfg)) {
      f.add(std::string(name) + " configuration");
    }
  }
  auto gs = graphs_upto(s.lattice);
  parallel_for(gs.size(), jobs, [&](std::size_t i) {
    auto const& d = gs[i];
    auto r = poset_of_regions(VectorConfiguration::incidence(d));
    auto l = ReorientationLattice::enumerate(d);
    // Positive sets are reversed-arc sets, so equal sets give equal posets.
    std::vector<std::uint64_t> es;
    for (ArcSet e : l.elements()) {
      es.push_back(e.bits());
    }
    if (es != r.positive_sets) {
      f.add(graph_name(d));
    }
  });
  return {14, "posets of regions", f.count() == 0,
          "2 configurations, " + std::to_string(gs.size()) + " incidence configurations, " + f.summary()};
}

}  // namespace acceptance

struct AcceptanceRun {
  Scales scales;
  unsigned jobs = 1;
  bool skeletal_only = false;
  std::vector<int> only;  // empty: all criteria
};

// Criteria that quantify over skeletal graphs only.
inline bool is_skeletal_criterion(int id) {
  for (int k : {4, 5, 6, 8, 9, 10, 12, 13}) {
    if (k == id) {
      return true;
    }
  }
  return false;
}

inline std::vector<CriterionResult> run_acceptance(AcceptanceRun const& run,
                                                   std::function<void(CriterionResult const&)> const& report = {}) {
  using namespace acceptance;
  auto const& s = run.scales;
  unsigned j = run.jobs;
  std::vector<std::function<CriterionResult()>> all = {
      [&] { return lattice_characterization(s, j); }, [&] { return biclosed_equals_acyclic(s, j); },
      [&] { return property_table(s, j); },           [&] { return counting_identities(s, j); },
      [&] { return diagram_bijection(s, j); },        [&] { return congruence_count(s, j); },
      [&] { return catalan_quotients(s); },           [&] { return quotientope_realization(s, j); },
      [&] { return shard_consistency(s, j); },        [&] { return removahedron(s, j); },
      [&] { return simpliciality(s, j); },            [&] { return hamiltonicity(s, j); },
      [&] { return conjecture_equivalences(s, j); },  [&] { return regions(s, j); },
  };
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(all.size()); ++id) {
    if (!run.only.empty() && std::find(run.only.begin(), run.only.end(), id) == run.only.end()) {
      continue;
    }
    if (run.skeletal_only && !is_skeletal_criterion(id)) {
      continue;
    }
    auto t = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = all[id - 1]();
    } catch (std::exception const& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
    if (report) {
      report(r);
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_result(CriterionResult const& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + " (" + r.name +
         "): " + r.detail + " [" + buf + "]";
}

}  // namespace reorilat
