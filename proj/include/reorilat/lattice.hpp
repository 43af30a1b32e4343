// The poset of acyclic reorientations of a Dag, ordered by inclusion of
// reversed arc sets.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "dag.hpp"
#include "orientation.hpp"
#include "poset.hpp"

namespace reorilat {

inline std::size_t default_element_cap() {
  if (char const* env = std::getenv("REORILAT_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  return 1000000;
}

// Arcs (u,v) of D such that the graph (V, s) has a directed path u -> v.
inline ArcSet arc_closure(Dag const& d, ArcSet s) {
  std::vector<VertexSet> out(d.n());
  s.for_each([&](int i) { out[d.arc(i).tail].insert(d.arc(i).head); });
  // s is a subgraph of a DAG, so the topological order of d works
  std::vector<VertexSet> reach(d.n());
  auto const& topo = d.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    out[*it].for_each([&](int w) { reach[*it] |= reach[w] | VertexSet::single(w); });
  }
  ArcSet c;
  for (int i = 0; i < d.num_arcs(); ++i) {
    if (reach[d.arc(i).tail].contains(d.arc(i).head)) {
      c.insert(i);
    }
  }
  return c;
}

inline bool is_closed(Dag const& d, ArcSet s) { return arc_closure(d, s) == s; }

inline bool is_biclosed(Dag const& d, ArcSet s) {
  return is_closed(d, s) && is_closed(d, d.all_arcs() - s);
}

// Join and meet by transitive closure; valid when D is vertebrate.
inline ArcSet join_by_closure(Dag const& d, ArcSet a, ArcSet b) { return arc_closure(d, a | b); }

inline ArcSet meet_by_closure(Dag const& d, ArcSet a, ArcSet b) {
  ArcSet all = d.all_arcs();
  return all - arc_closure(d, (all - a) | (all - b));
}

// Arcs b reversed in `rev` lying on a directed path of D from tail(a) to
// head(a) along which b is the only reversed arc.
inline ArcSet lone_reversed_on_paths(Dag const& d, ArcSet rev, int a) {
  // reachability in D using unreversed arcs only
  ArcSet keep = d.all_arcs() - rev;
  std::vector<VertexSet> out(d.n());
  keep.for_each([&](int i) { out[d.arc(i).tail].insert(d.arc(i).head); });
  std::vector<VertexSet> reach(d.n());
  auto const& topo = d.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    reach[*it] = VertexSet::single(*it);
    out[*it].for_each([&](int w) { reach[*it] |= reach[w]; });
  }
  auto [u, v] = d.arc(a);
  ArcSet forced;
  rev.for_each([&](int i) {
    auto [p, q] = d.arc(i);
    if (reach[u].contains(p) && reach[q].contains(v)) {
      forced.insert(i);
    }
  });
  return forced;
}

class ReorientationLattice {
 public:
  ReorientationLattice() = default;

  // Breadth-first from D by flipping arcs of the transitive reduction.
  static ReorientationLattice enumerate(Dag const& d, std::size_t cap = default_element_cap()) {
    double predicted = predicted_reorientation_count(d);
    if (predicted > static_cast<double>(cap)) {
      fail(ErrorKind::too_large, "predicted " + std::to_string(static_cast<long long>(predicted)) +
                                     " acyclic reorientations exceeds cap " + std::to_string(cap));
    }
    ReorientationLattice l;
    l.dag_ = d;
    std::unordered_map<ArcSet, int> seen;
    std::deque<ArcSet> todo{ArcSet()};
    seen.emplace(ArcSet(), 0);
    std::vector<ArcSet> found{ArcSet()};
    while (!todo.empty()) {
      ArcSet e = todo.front();
      todo.pop_front();
      reduction_arcs(d, e).for_each([&](int i) {
        ArcSet f = e;
        f.toggle(i);
        if (seen.emplace(f, 0).second) {
          found.push_back(f);
          todo.push_back(f);
          if (found.size() > cap) {
            fail(ErrorKind::too_large, "acyclic reorientations exceed cap " + std::to_string(cap));
          }
        }
      });
    }
    std::sort(found.begin(), found.end());
    l.elements_ = std::move(found);
    for (int i = 0; i < l.size(); ++i) {
      l.index_[l.elements_[i]] = i;
    }
    return l;
  }

  Dag const& dag() const { return dag_; }
  int size() const { return static_cast<int>(elements_.size()); }
  ArcSet element(int i) const { return elements_[i]; }
  std::vector<ArcSet> const& elements() const { return elements_; }
  int index_of(ArcSet e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
  }
  int bottom() const { return index_of(ArcSet()); }
  int top() const { return index_of(dag_.all_arcs()); }

  // Order by inclusion; built on first use.
  FinitePoset const& poset() const {
    if (poset_.size() != size()) {
      int n = size();
      std::vector<Bitset> up(n, Bitset(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (elements_[i].subset_of(elements_[j])) {
            up[i].set(j);
          }
        }
      }
      poset_ = FinitePoset(std::move(up));
    }
    return poset_;
  }

  // Reversal of every arc: an order-reversing involution.
  int complement(int i) const { return index_of(dag_.all_arcs() - elements_[i]); }

  int join(int i, int j) const { return index_of(join_by_closure(dag_, elements_[i], elements_[j])); }
  int meet(int i, int j) const { return index_of(meet_by_closure(dag_, elements_[i], elements_[j])); }

  int parity_even() const {
    int c = 0;
    for (auto e : elements_) {
      c += e.size() % 2 == 0;
    }
    return c;
  }

 private:
  Dag dag_;
  std::vector<ArcSet> elements_;
  std::unordered_map<ArcSet, int> index_;
  mutable FinitePoset poset_;
};

// ---------------------------------------------------------------------------
// Irreducibles and canonical representations

inline bool is_join_irreducible(Dag const& d, ArcSet e) { return (reduction_arcs(d, e) & e).size() == 1; }

inline bool is_meet_irreducible(Dag const& d, ArcSet e) {
  return (reduction_arcs(d, e) - e).size() == 1;
}

inline std::vector<ArcSet> join_irreducibles(ReorientationLattice const& l) {
  std::vector<ArcSet> out;
  for (auto e : l.elements()) {
    if (is_join_irreducible(l.dag(), e)) {
      out.push_back(e);
    }
  }
  return out;
}

inline std::vector<ArcSet> meet_irreducibles(ReorientationLattice const& l) {
  std::vector<ArcSet> out;
  for (auto e : l.elements()) {
    if (is_meet_irreducible(l.dag(), e)) {
      out.push_back(e);
    }
  }
  return out;
}

// The arc flipped by a cover x < y, or -1 when y does not cover x.
inline int cover_arc(Dag const& d, ArcSet x, ArcSet y) {
  if (!x.subset_of(y) || (y - x).size() != 1) {
    return -1;
  }
  int a = (y - x).first();
  if (!is_acyclic_reorientation(d, x) || !is_acyclic_reorientation(d, y)) {
    return -1;
  }
  return a;
}

// Minimal z with x v z = y for a cover x < y: reverse the forced arcs.
inline ArcSet k_join(Dag const& d, ArcSet x, ArcSet y) {
  int a = cover_arc(d, x, y);
  if (a < 0) {
    fail(ErrorKind::not_a_cover, "k_join needs a cover relation");
  }
  return lone_reversed_on_paths(d, y, a);
}

// Maximal z with x ^ z = y for a cover y < x: keep the forced arcs unreversed.
inline ArcSet k_meet(Dag const& d, ArcSet x, ArcSet y) {
  int a = cover_arc(d, y, x);
  if (a < 0) {
    fail(ErrorKind::not_a_cover, "k_meet needs a cover relation");
  }
  ArcSet all = d.all_arcs();
  return all - lone_reversed_on_paths(d, all - y, a);
}

// One joinand per arc reversed in the transitive reduction of e.
inline std::vector<ArcSet> canonical_join_representation(Dag const& d, ArcSet e) {
  std::vector<ArcSet> out;
  (reduction_arcs(d, e) & e).for_each([&](int a) { out.push_back(lone_reversed_on_paths(d, e, a)); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ArcSet> canonical_meet_representation(Dag const& d, ArcSet e) {
  ArcSet all = d.all_arcs();
  std::vector<ArcSet> out;
  (reduction_arcs(d, e) - e).for_each(
      [&](int a) { out.push_back(all - lone_reversed_on_paths(d, all - e, a)); });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Structural answers for lattice properties (D vertebrate).

inline bool is_forest(Dag const& d) {
  return d.num_arcs() == d.n() - static_cast<int>(components(d).size());
}

struct LatticeProperties {
  bool lattice = false;
  bool distributive = false;
  bool semidistributive = false;
  bool congruence_normal = false;
  bool congruence_uniform = false;
};

inline LatticeProperties structural_properties(Dag const& d) {
  LatticeProperties p;
  p.lattice = is_vertebrate(d);
  if (!p.lattice) {
    return p;
  }
  bool filled = is_filled(d);
  p.distributive = is_forest(d);
  p.semidistributive = filled;
  p.congruence_normal = true;
  p.congruence_uniform = filled;
  return p;
}

inline void require_lattice(Dag const& d) {
  if (!is_vertebrate(d)) {
    fail(ErrorKind::not_a_lattice, "graph is not vertebrate");
  }
}

// The same properties from the explicit lattice, by definition.
inline LatticeProperties definitional_properties(ReorientationLattice const& l) {
  LatticeProperties p;
  p.lattice = l.poset().is_lattice();
  if (!p.lattice) {
    return p;
  }
  Lattice lat(l.poset());
  p.distributive = is_distributive(lat);
  p.semidistributive = is_semidistributive(lat);
  auto ic = irreducible_congruences(lat);
  p.congruence_normal = is_congruence_normal(lat, ic);
  p.congruence_uniform = is_congruence_uniform(ic);
  return p;
}

}  // namespace reorilat
