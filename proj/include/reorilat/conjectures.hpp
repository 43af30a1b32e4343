// Experimental checks on Tamari and Cambrian quotients, and the
// Hamiltonicity sweep over all quotients.
#pragma once

#include <string>
#include <vector>

#include "congruence.hpp"
#include "corpus.hpp"
#include "graph.hpp"
#include "parallel.hpp"

namespace reorilat {

inline Graph quotient_cover_graph(SkeletalLattice const& sl, Congruence const& c) {
  return quotient(sl, c).cover_graph();
}

// Underlying undirected graph of R_X on the vertices of D.
inline Graph reduction_graph(Dag const& d, PartialReorientation const& p) {
  Graph g(d.n());
  for (auto [x, y] : partial_reduction(d, p)) {
    g[x].push_back(y);
    g[y].push_back(x);
  }
  return g;
}

struct TamariShape {
  int size = 0;
  bool regular = false;
  bool forests = false;  // every R_X is a forest
};

inline TamariShape tamari_shape(SkeletalLattice const& sl) {
  auto c = congruence_from_ideal(sl, sylvester_ideal(sl.ropes()));
  TamariShape t;
  t.size = c.size();
  t.regular = is_regular(quotient_cover_graph(sl, c));
  t.forests = true;
  for (int k = 0; k < c.size(); ++k) {
    t.forests = t.forests && is_forest(reduction_graph(sl.dag(), partial_reorientation(sl, c, k)));
  }
  return t;
}

struct CambrianShape {
  std::vector<int> sizes;
  bool same_size = false;
  bool isomorphic = false;  // all cover graphs isomorphic
};

inline CambrianShape cambrian_shape(SkeletalLattice const& sl) {
  CambrianShape s;
  std::vector<Graph> graphs;
  for (auto const& ideal : cambrian_ideals(sl.ropes())) {
    auto c = congruence_from_ideal(sl, ideal);
    s.sizes.push_back(c.size());
    graphs.push_back(quotient_cover_graph(sl, c));
  }
  s.same_size = std::all_of(s.sizes.begin(), s.sizes.end(), [&](int k) { return k == s.sizes.front(); });
  s.isomorphic = true;
  for (std::size_t i = 1; i < graphs.size() && s.isomorphic; ++i) {
    s.isomorphic = are_isomorphic(graphs.front(), graphs[i]);
  }
  return s;
}

inline bool contains_induced(Dag const& d, Dag const& pattern) {
  int k = pattern.n();
  if (k > d.n()) {
    return false;
  }
  auto code = canonical_code(pattern);
  bool found = false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.n()) && !found; ++m) {
    if (std::popcount(m) == k) {
      Dag sub = d.induced(VertexSet(m));
      found = sub.num_arcs() == pattern.num_arcs() && canonical_code(sub) == code;
    }
  }
  return found;
}

// The obstructions, read off the 4-vertex skeletal graphs: those with an
// irregular Tamari cover graph, and those whose Cambrian lattices differ in
// size. No 3-vertex graph fails either test.
struct Patterns {
  std::vector<Dag> tamari;
  std::vector<Dag> cambrian;
};

inline Patterns find_patterns() {
  Patterns p;
  for (int n = 1; n <= 4; ++n) {
    for (auto const& d : corpus_level(n)) {
      if (!is_skeletal(d)) {
        continue;
      }
      SkeletalLattice sl(d);
      if (!tamari_shape(sl).regular) {
        p.tamari.push_back(d);
      }
      if (!cambrian_shape(sl).same_size) {
        p.cambrian.push_back(d);
      }
    }
  }
  return p;
}

struct ConjectureRow {
  Dag dag;
  bool tamari_pattern_free = false;
  TamariShape tamari;
  bool cambrian_pattern_free = false;
  CambrianShape cambrian;

  bool tamari_agrees() const {
    return tamari_pattern_free == tamari.regular && tamari.regular == tamari.forests;
  }
  bool cambrian_agrees() const {
    return cambrian_pattern_free == cambrian.same_size && cambrian.same_size == cambrian.isomorphic;
  }
};

struct ConjectureReport {
  Patterns patterns;
  std::vector<ConjectureRow> rows;
  int violations() const {
    int v = 0;
    for (auto const& r : rows) {
      v += !r.tamari_agrees() + !r.cambrian_agrees();
    }
    return v;
  }
};

inline ConjectureReport conjecture_harness(std::vector<Dag> const& graphs, unsigned jobs = 1) {
  ConjectureReport rep;
  rep.patterns = find_patterns();
  std::vector<Dag> skeletal;
  for (auto const& d : graphs) {
    if (is_skeletal(d)) {
      skeletal.push_back(d);
    }
  }
  rep.rows.resize(skeletal.size());
  parallel_for(skeletal.size(), jobs, [&](std::size_t i) {
    auto const& d = skeletal[i];
    SkeletalLattice sl(d);
    ConjectureRow row;
    row.dag = d;
    row.tamari_pattern_free = std::none_of(rep.patterns.tamari.begin(), rep.patterns.tamari.end(),
                                           [&](Dag const& p) { return contains_induced(d, p); });
    row.cambrian_pattern_free = std::none_of(rep.patterns.cambrian.begin(), rep.patterns.cambrian.end(),
                                             [&](Dag const& p) { return contains_induced(d, p); });
    row.tamari = tamari_shape(sl);
    row.cambrian = cambrian_shape(sl);
    rep.rows[i] = std::move(row);
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Hamiltonicity of every quotient

struct HamiltonReport {
  std::size_t quotients = 0;
  std::size_t cycles = 0;
  std::size_t parity_paths = 0;
  std::size_t small_paths = 0;
  std::vector<std::string> failures;
};

inline HamiltonReport hamiltonian_sweep(std::vector<Dag> const& graphs, unsigned jobs = 1) {
  std::vector<Dag> skeletal;
  for (auto const& d : graphs) {
    if (is_skeletal(d)) {
      skeletal.push_back(d);
    }
  }
  std::vector<HamiltonReport> parts(skeletal.size());
  parallel_for(skeletal.size(), jobs, [&](std::size_t i) {
    SkeletalLattice sl(skeletal[i]);
    auto& r = parts[i];
    for_each_rope_ideal(sl.ropes(), [&](Bitset const& ideal) {
      auto c = congruence_from_ideal(sl, ideal);
      ++r.quotients;
      switch (hamiltonian_traversal(quotient_cover_graph(sl, c))) {
        case Traversal::cycle: ++r.cycles; break;
        case Traversal::path_parity: ++r.parity_paths; break;
        case Traversal::path_small: ++r.small_paths; break;
        case Traversal::none:
          r.failures.push_back("graph code " + std::to_string(canonical_code(skeletal[i])) + ", " +
                               std::to_string(c.size()) + " classes");
          break;
      }
    });
  });
  HamiltonReport total;
  for (auto const& r : parts) {
    total.quotients += r.quotients;
    total.cycles += r.cycles;
    total.parity_paths += r.parity_paths;
    total.small_paths += r.small_paths;
    total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
  }
  return total;
}

}  // namespace reorilat
