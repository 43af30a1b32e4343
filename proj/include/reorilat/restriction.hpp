// Restriction of reorientations of D to a spanning subgraph D'.
#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "corpus.hpp"
#include "lattice.hpp"

namespace reorilat {

class RestrictionMap {
 public:
  RestrictionMap(Dag d, Dag sub) : d_(std::move(d)), sub_(std::move(sub)) {
    if (d_.n() != sub_.n()) {
      fail(ErrorKind::invalid_dag, "subgraph must have the same vertex set");
    }
    for (auto [u, v] : sub_.arcs()) {
      int i = d_.arc_index(u, v);
      if (i < 0) {
        fail(ErrorKind::invalid_dag, "arc " + arc_string({u, v}) + " of the subgraph is not in the graph");
      }
      inj_.push_back(i);
      image_.insert(i);
    }
  }

  Dag const& dag() const { return d_; }
  Dag const& sub() const { return sub_; }
  // arcs of D that belong to D', in D's indexing
  ArcSet image() const { return image_; }
  int injection(int i) const { return inj_[i]; }

  ArcSet restrict(ArcSet e) const {
    ArcSet r;
    for (int i = 0; i < sub_.num_arcs(); ++i) {
      if (e.contains(inj_[i])) {
        r.insert(i);
      }
    }
    return r;
  }

  // Elements of AR(D) restricting to e_sub.
  std::vector<int> fiber(ReorientationLattice const& l, ArcSet e_sub) const {
    std::vector<int> out;
    for (int i = 0; i < l.size(); ++i) {
      if (restrict(l.element(i)) == e_sub) {
        out.push_back(i);
      }
    }
    return out;
  }

  // Reverse (u,v) iff E' has a path v -> u; the fiber minimum when acyclic.
  std::optional<ArcSet> fiber_min(ArcSet e_sub) const {
    auto reach = oriented_reach(oriented_out(sub_, e_sub));
    ArcSet e;
    for (int i = 0; i < d_.num_arcs(); ++i) {
      auto [u, v] = d_.arc(i);
      if (reach[v].contains(u)) {
        e.insert(i);
      }
    }
    if (!is_acyclic_reorientation(d_, e)) {
      return std::nullopt;
    }
    return e;
  }

  // Keep (u,v) iff E' has a path u -> v; the fiber maximum when acyclic.
  std::optional<ArcSet> fiber_max(ArcSet e_sub) const {
    auto reach = oriented_reach(oriented_out(sub_, e_sub));
    ArcSet e = d_.all_arcs();
    for (int i = 0; i < d_.num_arcs(); ++i) {
      auto [u, v] = d_.arc(i);
      if (reach[u].contains(v)) {
        e.erase(i);
      }
    }
    if (!is_acyclic_reorientation(d_, e)) {
      return std::nullopt;
    }
    return e;
  }

 private:
  Dag d_, sub_;
  std::vector<int> inj_;
  ArcSet image_;
};

// For every pair (s,t), the largest number of arcs outside D' on a directed
// path of D from s to t (-1 when t is unreachable, 0 when s = t).
class OutsideArcCounts {
 public:
  explicit OutsideArcCounts(RestrictionMap const& m) : n_(m.dag().n()), best_(n_ * n_, -1) {
    Dag const& d = m.dag();
    auto const& topo = d.topological_order();
    for (int s = 0; s < n_; ++s) {
      best_[s * n_ + s] = 0;
    }
    // process tails in reverse topological order so heads are done first
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      int s = *it;
      for (int i = 0; i < d.num_arcs(); ++i) {
        if (d.arc(i).tail != s) {
          continue;
        }
        int w = d.arc(i).head;
        int cost = m.image().contains(i) ? 0 : 1;
        for (int t = 0; t < n_; ++t) {
          if (best_[w * n_ + t] >= 0) {
            best_[s * n_ + t] = std::max(best_[s * n_ + t], best_[w * n_ + t] + cost);
          }
        }
      }
    }
  }
  int operator()(int s, int t) const { return best_[s * n_ + t]; }

 private:
  int n_;
  std::vector<int> best_;
};

inline bool is_weakly_pathful(RestrictionMap const& m) {
  OutsideArcCounts c(m);
  for (auto [u, v] : m.sub().arcs()) {
    if (c(u, v) > 1) {
      return false;
    }
  }
  return true;
}

inline bool is_pathful(RestrictionMap const& m) {
  OutsideArcCounts c(m);
  for (auto [u, v] : m.sub().arcs()) {
    if (c(u, v) > 0) {
      return false;
    }
  }
  return true;
}

inline bool is_strongly_pathful(RestrictionMap const& m) {
  OutsideArcCounts c(m);
  Dag const& s = m.sub();
  for (int u = 0; u < s.n(); ++u) {
    bool bad = false;
    s.reach(u).for_each([&](int v) { bad = bad || c(u, v) > 0; });
    if (bad) {
      return false;
    }
  }
  return true;
}

// A path of D from s to t through the maximum number of arcs outside D'.
inline std::vector<int> worst_path(RestrictionMap const& m, int s, int t) {
  OutsideArcCounts c(m);
  Dag const& d = m.dag();
  std::vector<int> path{s};
  while (s != t) {
    int next = -1;
    d.out(s).for_each([&](int w) {
      if (next >= 0 || c(w, t) < 0) {
        return;
      }
      int cost = m.image().contains(d.arc_index(s, w)) ? 0 : 1;
      if (c(w, t) + cost == c(s, t)) {
        next = w;
      }
    });
    path.push_back(next);
    s = next;
  }
  return path;
}

struct PathfulWitness {
  int level = 0;  // 1 weakly, 2 pathful, 3 strongly: the first level that fails
  std::vector<int> path;
};

// The first violated level together with an offending path of D.
inline std::optional<PathfulWitness> pathful_violation(RestrictionMap const& m) {
  OutsideArcCounts c(m);
  for (int level = 1; level <= 3; ++level) {
    int limit = level == 1 ? 1 : 0;
    for (int u = 0; u < m.sub().n(); ++u) {
      VertexSet targets = level == 3 ? m.sub().reach(u) : m.sub().out(u);
      std::optional<int> bad;
      targets.for_each([&](int v) {
        if (!bad && c(u, v) > limit) {
          bad = v;
        }
      });
      if (bad) {
        return PathfulWitness{level, worst_path(m, u, *bad)};
      }
    }
  }
  return std::nullopt;
}

struct LatticeMapKind {
  bool fibers_are_intervals = false;
  bool is_lattice_quotient_map = false;
  bool is_interval_isomorphism = false;
  bool operator==(LatticeMapKind const&) const = default;
};

// Fibers are convex, so each one is an interval iff it has a least and a
// greatest element. Weakly pathful implies this but not conversely: the
// tournament on 4 vertices restricted to the star {12, 13, 14} has interval
// fibers although the path 1 2 3 4 has two arcs outside the star.
inline bool fibers_are_intervals(RestrictionMap const& m, std::size_t cap = default_element_cap()) {
  auto sub = ReorientationLattice::enumerate(m.sub(), cap);
  for (ArcSet e : sub.elements()) {
    if (!m.fiber_min(e) || !m.fiber_max(e)) {
      return false;
    }
  }
  return true;
}

inline LatticeMapKind classify_lattice_map(RestrictionMap const& m) {
  if (!is_vertebrate(m.dag()) || !is_vertebrate(m.sub())) {
    fail(ErrorKind::not_a_lattice, "restriction classes need vertebrate graphs");
  }
  return {fibers_are_intervals(m), is_pathful(m), is_strongly_pathful(m)};
}

// The same three answers from the explicit posets: interval fibers, order
// preserving projections to fiber extrema, and a lower or upper interval
// mapped isomorphically.
inline LatticeMapKind classify_lattice_map_by_fibers(RestrictionMap const& m, ReorientationLattice const& l,
                                                     ReorientationLattice const& ls) {
  LatticeMapKind k;
  FinitePoset const& p = l.poset();
  int n = l.size();
  std::vector<int> image(n);
  std::vector<Bitset> fibers(ls.size(), Bitset(n));
  for (int i = 0; i < n; ++i) {
    image[i] = ls.index_of(m.restrict(l.element(i)));
    fibers[image[i]].set(i);
  }
  k.fibers_are_intervals = true;
  std::vector<int> lo(ls.size()), hi(ls.size());
  for (int f = 0; f < ls.size(); ++f) {
    if (!p.is_interval(fibers[f])) {
      k.fibers_are_intervals = false;
      break;
    }
    lo[f] = *p.least_of_within(fibers[f]);
    hi[f] = *p.greatest_of_within(fibers[f]);
  }
  if (k.fibers_are_intervals) {
    k.is_lattice_quotient_map = true;
    for (auto [x, y] : p.cover_pairs()) {
      if (!p.leq(lo[image[x]], lo[image[y]]) || !p.leq(hi[image[x]], hi[image[y]])) {
        k.is_lattice_quotient_map = false;
        break;
      }
    }
  }
  FinitePoset const& q = ls.poset();
  auto try_interval = [&](Bitset const& s) {
    if (static_cast<int>(s.count()) != ls.size()) {
      return false;
    }
    std::vector<int> elems, map;
    for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) {
      elems.push_back(static_cast<int>(i));
      map.push_back(image[i]);
    }
    return is_isomorphism(subposet(p, elems), q, map);
  };
  for (int e = 0; e < n && !k.is_interval_isomorphism; ++e) {
    k.is_interval_isomorphism = try_interval(p.down(e)) || try_interval(p.up(e));
  }
  return k;
}

// Subgraphs of the increasing tournament on n vertices closed under taking
// nested arcs: (i,l) present implies (j,k) present for i <= j < k <= l.
inline std::vector<Dag> nonnesting_quotient_subgraphs(int n) {
  Dag k = graphs::tournament(n);
  int m = k.num_arcs();
  auto poset = FinitePoset::from_relation(m, [&](int a, int b) {
    auto [j, kk] = k.arc(a);
    auto [i, l] = k.arc(b);
    return i <= j && kk <= l;
  });
  std::vector<Dag> out;
  for_each_lower_ideal(poset, [&](Bitset const& s) {
    ArcSet keep;
    for (int a = 0; a < m; ++a) {
      if (s.test(a)) {
        keep.insert(a);
      }
    }
    out.push_back(k.subgraph(keep));
    return true;
  });
  std::sort(out.begin(), out.end(), [](Dag const& a, Dag const& b) { return a.arcs() < b.arcs(); });
  return out;
}

namespace oracle {

// Simple cycles of the underlying graph, each listed once per traversal
// direction, as (arc index, forward?) sequences.
inline std::vector<std::vector<std::pair<int, bool>>> simple_cycles(Dag const& d) {
  std::vector<std::vector<std::pair<int, bool>>> out;
  std::vector<int> path;
  VertexSet on;
  auto step = [&](int a, int b) -> std::pair<int, bool> {
    return d.has_arc(a, b) ? std::pair{d.arc_index(a, b), true} : std::pair{d.arc_index(b, a), false};
  };
  for (int s = 0; s < d.n(); ++s) {
    auto rec = [&](auto&& self, int v) -> void {
      d.neighbors(v).for_each([&](int w) {
        if (w == s && path.size() >= 3) {
          std::vector<std::pair<int, bool>> cyc;
          for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            cyc.push_back(step(path[i], path[i + 1]));
          }
          cyc.push_back(step(path.back(), s));
          out.push_back(cyc);
        } else if (w > s && !on.contains(w)) {
          on.insert(w);
          path.push_back(w);
          self(self, w);
          path.pop_back();
          on.erase(w);
        }
      });
    };
    path = {s};
    on = VertexSet::single(s);
    rec(rec, s);
  }
  return out;
}

// 1 weakly balanced, 2 balanced, 3 strongly balanced: the highest level met.
inline int balanced_level(RestrictionMap const& m) {
  bool weak = true, mid = true, strong = true;
  for (auto const& cyc : simple_cycles(m.dag())) {
    bool backward_in = true;
    int forward = 0, forward_out = 0;
    for (auto [a, fwd] : cyc) {
      if (fwd) {
        ++forward;
        forward_out += !m.image().contains(a);
      } else if (!m.image().contains(a)) {
        backward_in = false;
      }
    }
    if (!backward_in) {
      continue;
    }
    weak = weak && forward_out <= 1;
    mid = mid && (forward < 2 || forward_out == 0);
    strong = strong && forward_out == 0;
  }
  return strong ? 3 : mid ? 2 : weak ? 1 : 0;
}

// Condition on cycles made of arcs of E' and of D \ D' that characterises a
// fiber minimum: removing the arcs (u,v) of D \ D' with a path v -> u in E'
// leaves an acyclic graph.
inline bool fiber_has_min_by_cycles(RestrictionMap const& m, ArcSet e_sub) {
  Dag const& d = m.dag();
  auto out = oriented_out(m.sub(), e_sub);
  auto reach = oriented_reach(out);
  for (int i = 0; i < d.num_arcs(); ++i) {
    if (m.image().contains(i)) {
      continue;
    }
    auto [u, v] = d.arc(i);
    if (!reach[v].contains(u)) {
      out[u].insert(v);
    }
  }
  return static_cast<int>(lex_topological_order(out).size()) == d.n();
}

}  // namespace oracle

}  // namespace reorilat
