// Lattice congruences of AR(D) for skeletal D, described by lower ideals of
// the subrope order. An ideal lists the ropes whose join irreducibles stay
// uncontracted.
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "restriction.hpp"
#include "ropes.hpp"

namespace reorilat {

// A lattice together with its ropes and the rope labels of its covers.
class SkeletalLattice {
 public:
  explicit SkeletalLattice(Dag const& d, std::size_t cap = default_element_cap())
      : lattice_((require_skeletal(d), ReorientationLattice::enumerate(d, cap))), ropes_(d) {
    auto const& p = lattice_.poset();
    for (auto [x, y] : p.cover_pairs()) {
      Rope r = rope_of_join_irreducible(d, k_join(d, lattice_.element(x), lattice_.element(y)));
      covers_.push_back({x, y, ropes_.index_of(r)});
    }
    for (int i = 0; i < lattice_.size(); ++i) {
      joins_.push_back(ropes_.diagram_bits(join_diagram(d, lattice_.element(i))));
      meets_.push_back(ropes_.diagram_bits(meet_diagram(d, lattice_.element(i))));
    }
  }

  struct Cover {
    int low, high, rope;
  };

  Dag const& dag() const { return lattice_.dag(); }
  ReorientationLattice const& lattice() const { return lattice_; }
  RopeSet const& ropes() const { return ropes_; }
  std::vector<Cover> const& covers() const { return covers_; }
  Bitset const& join_diagram_bits(int e) const { return joins_[e]; }
  Bitset const& meet_diagram_bits(int e) const { return meets_[e]; }

 private:
  ReorientationLattice lattice_;
  RopeSet ropes_;
  std::vector<Cover> covers_;
  std::vector<Bitset> joins_;
  std::vector<Bitset> meets_;
};

// ---------------------------------------------------------------------------
// Rope ideals

inline bool is_rope_ideal(RopeSet const& rs, Bitset const& members) {
  if (static_cast<int>(members.size()) != rs.size()) {
    return false;
  }
  auto const& p = rs.subrope_poset();
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) {
    if (!p.down(static_cast<int>(i)).is_subset_of(members)) {
      return false;
    }
  }
  return true;
}

inline Bitset require_ideal(RopeSet const& rs, Bitset members) {
  if (!is_rope_ideal(rs, members)) {
    fail(ErrorKind::invalid_ideal, "rope set is not closed under subropes");
  }
  return members;
}

inline Bitset ideal_of_ropes(RopeSet const& rs, std::vector<Rope> const& ropes) {
  return require_ideal(rs, rs.diagram_bits(ropes));
}

inline Bitset full_ideal(RopeSet const& rs) {
  Bitset s(rs.size());
  s.set();
  return s;
}

// Ropes with down inside `down_dec` and up inside `up_dec`.
inline Bitset coherent_ideal(RopeSet const& rs, VertexSet down_dec, VertexSet up_dec) {
  Bitset s(rs.size());
  for (int i = 0; i < rs.size(); ++i) {
    if (rs.rope(i).down.subset_of(down_dec) && rs.rope(i).up.subset_of(up_dec)) {
      s.set(i);
    }
  }
  return s;
}

inline Bitset sylvester_ideal(RopeSet const& rs) {
  return coherent_ideal(rs, rs.dag().vertices(), VertexSet());
}

inline Bitset cambrian_ideal(RopeSet const& rs, VertexSet down_dec) {
  return coherent_ideal(rs, down_dec, rs.dag().vertices() - down_dec);
}

inline Bitset principal_ideal(RopeSet const& rs, int rope) {
  return rs.subrope_poset().down(rope);
}

inline Bitset principal_ideal(RopeSet const& rs, Rope const& r) {
  int i = rs.index_of(r);
  if (i < 0) {
    fail(ErrorKind::invalid_rope, "not a rope of this graph: " + to_string(r));
  }
  return principal_ideal(rs, i);
}

// Vertices that occur inside some rope; decorations only matter there.
inline VertexSet decorated_vertices(RopeSet const& rs) {
  VertexSet s;
  for (auto const& r : rs.ropes()) {
    s |= r.down | r.up;
  }
  return s;
}

// Distinct Cambrian ideals, one per decoration of the decorated vertices.
inline std::vector<Bitset> cambrian_ideals(RopeSet const& rs) {
  auto free = decorated_vertices(rs).to_vector();
  std::set<Bitset> seen;
  std::vector<Bitset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
    VertexSet down;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((m >> i) & 1U) {
        down.insert(free[i]);
      }
    }
    auto ideal = cambrian_ideal(rs, down);
    if (seen.insert(ideal).second) {
      out.push_back(ideal);
    }
  }
  return out;
}

template <class Visit>
void for_each_rope_ideal(RopeSet const& rs, Visit&& visit) {
  for_each_lower_ideal(rs.subrope_poset(), [&](Bitset const& s) {
    visit(s);
    return true;
  });
}

inline std::size_t count_rope_ideals(RopeSet const& rs) {
  std::size_t c = 0;
  for_each_rope_ideal(rs, [&](Bitset const&) { ++c; });
  return c;
}

// ---------------------------------------------------------------------------
// Congruences

struct Congruence {
  Bitset ideal;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;  // sorted by their least element
  std::vector<int> minimum;
  std::vector<int> maximum;

  int size() const { return static_cast<int>(classes.size()); }
};

// Classes are the components of the contracted covers. Class extrema are
// read off the order and cross-checked against the rope diagrams.
inline Congruence congruence_from_ideal(SkeletalLattice const& sl, Bitset const& ideal) {
  require_ideal(sl.ropes(), ideal);
  auto const& l = sl.lattice();
  auto const& p = l.poset();
  int n = l.size();
  UnionFind uf(n);
  for (auto const& c : sl.covers()) {
    if (!ideal.test(c.rope)) {
      uf.unite(c.low, c.high);
    }
  }
  Partition part = uf.partition();
  Congruence out;
  out.ideal = ideal;
  out.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (part[i] == i) {
      out.class_of[i] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.class_of[i] = out.class_of[part[i]];
    out.classes[out.class_of[i]].push_back(i);
  }
  for (auto const& cls : out.classes) {
    int lo = cls.front(), hi = cls.front();
    for (int e : cls) {
      lo = p.leq(e, lo) ? e : lo;
      hi = p.leq(hi, e) ? e : hi;
    }
    for (int e : cls) {
      if (!p.leq(lo, e) || !p.leq(e, hi)) {
        throw std::logic_error("congruence class without least or greatest element");
      }
    }
    out.minimum.push_back(lo);
    out.maximum.push_back(hi);
  }
  for (int e = 0; e < n; ++e) {
    int k = out.class_of[e];
    bool is_min = sl.join_diagram_bits(e).is_subset_of(ideal);
    bool is_max = sl.meet_diagram_bits(e).is_subset_of(ideal);
    if (is_min != (out.minimum[k] == e) || is_max != (out.maximum[k] == e)) {
      throw std::logic_error("class extrema disagree with the rope diagrams");
    }
  }
  return out;
}

// The quotient, realized on the class minima.
inline FinitePoset quotient(SkeletalLattice const& sl, Congruence const& c) {
  return subposet(sl.lattice().poset(), c.minimum);
}

inline Partition as_partition(Congruence const& c) {
  Partition p(c.class_of.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = c.classes[c.class_of[i]].front();
  }
  return p;
}

struct Extremality {
  bool is_min = false;
  bool is_max = false;
};

// Minimal iff every reversed arc has its down part in down_dec and up part
// in up_dec; maximal likewise over the unreversed arcs.
inline Extremality min_max_by_decoration(Dag const& d, ArcSet e, VertexSet down_dec, VertexSet up_dec) {
  Extremality out{true, true};
  for (int a = 0; a < d.num_arcs(); ++a) {
    Rope r = rope_at(d, e, a);
    bool fits = r.down.subset_of(down_dec) && r.up.subset_of(up_dec);
    if (e.contains(a)) {
      out.is_min = out.is_min && fits;
    } else {
      out.is_max = out.is_max && fits;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Partial reorientations

// Arcs of D kept in their direction (forward) or reversed (backward); arcs
// in neither set are absent.
struct PartialReorientation {
  ArcSet forward;
  ArcSet backward;
  bool operator==(PartialReorientation const&) const = default;
  auto operator<=>(PartialReorientation const&) const = default;
};

inline bool contains_pair(Dag const& d, PartialReorientation const& p, int x, int y) {
  if (d.has_arc(x, y)) {
    return p.forward.contains(d.arc_index(x, y));
  }
  return d.has_arc(y, x) && p.backward.contains(d.arc_index(y, x));
}

inline std::vector<VertexSet> partial_out(Dag const& d, PartialReorientation const& p) {
  std::vector<VertexSet> out(d.n());
  p.forward.for_each([&](int i) { out[d.arc(i).tail].insert(d.arc(i).head); });
  p.backward.for_each([&](int i) { out[d.arc(i).head].insert(d.arc(i).tail); });
  return out;
}

inline bool is_acyclic_partial(Dag const& d, PartialReorientation const& p) {
  if (p.forward.intersects(p.backward)) {
    return false;
  }
  return static_cast<int>(lex_topological_order(partial_out(d, p)).size()) == d.n();
}

// x -> y -> z in p with x, z adjacent in D forces x -> z in p. Every
// partial reorientation cut out by an interval has this property.
inline bool is_transitive_partial(Dag const& d, PartialReorientation const& p) {
  auto out = partial_out(d, p);
  for (int x = 0; x < d.n(); ++x) {
    bool ok = true;
    out[x].for_each([&](int y) {
      (out[y] & d.neighbors(x)).for_each([&](int z) { ok = ok && out[x].contains(z); });
    });
    if (!ok) {
      return false;
    }
  }
  return true;
}

// Lower when fewer arcs are reversed and more are kept.
inline bool partial_leq(PartialReorientation const& a, PartialReorientation const& b) {
  return a.backward.subset_of(b.backward) && b.forward.subset_of(a.forward);
}

// Oriented pairs of p not implied by a longer path of p.
inline std::vector<std::pair<int, int>> partial_reduction(Dag const& d, PartialReorientation const& p) {
  auto out = partial_out(d, p);
  auto reach = oriented_reach(out);
  std::vector<std::pair<int, int>> red;
  for (int x = 0; x < d.n(); ++x) {
    out[x].for_each([&](int y) {
      bool implied = false;
      out[x].for_each([&](int z) { implied = implied || (z != y && reach[z].contains(y)); });
      if (!implied) {
        red.emplace_back(x, y);
      }
    });
  }
  return red;
}

// Arcs common to every reorientation of the classes from `low` up to `high`.
inline PartialReorientation partial_reorientation(SkeletalLattice const& sl, Congruence const& c, int low,
                                                  int high) {
  auto const& l = sl.lattice();
  if (!l.poset().leq(c.minimum[low], c.minimum[high])) {
    fail(ErrorKind::not_an_interval, "classes do not form an interval");
  }
  ArcSet lo = l.element(c.minimum[low]);
  ArcSet hi = l.element(c.maximum[high]);
  return {l.dag().all_arcs() - hi, lo};
}

inline PartialReorientation partial_reorientation(SkeletalLattice const& sl, Congruence const& c, int cls) {
  return partial_reorientation(sl, c, cls, cls);
}

// Direct intersection over all members; the cross-check of the formula above.
inline PartialReorientation partial_reorientation_of_members(Dag const& d, std::vector<ArcSet> const& members) {
  ArcSet rev_all = d.all_arcs(), rev_any;
  for (auto e : members) {
    rev_all &= e;
    rev_any |= e;
  }
  return {d.all_arcs() - rev_any, rev_all};
}

// For every oriented pair (x,y) of p and every w strictly between its
// endpoints on the reduction path: (x,w) or (w,y) in p, (x,w) in p unless
// w is down-decorated, (w,y) in p unless w is up-decorated.
inline bool coherent_interval_check(Dag const& d, PartialReorientation const& p, VertexSet down_dec,
                                    VertexSet up_dec) {
  auto test = [&](int x, int y, int a) {
    bool ok = true;
    rope_interior(d, a).for_each([&](int w) {
      bool first = contains_pair(d, p, x, w);
      bool second = contains_pair(d, p, w, y);
      ok = ok && (first || second) && (first || down_dec.contains(w)) && (second || up_dec.contains(w));
    });
    return ok;
  };
  bool ok = true;
  p.forward.for_each([&](int a) { ok = ok && test(d.arc(a).tail, d.arc(a).head, a); });
  p.backward.for_each([&](int a) { ok = ok && test(d.arc(a).head, d.arc(a).tail, a); });
  return ok;
}

// All transitive partial acyclic reorientations, from 3^|A| candidates.
inline std::vector<PartialReorientation> all_partial_reorientations(Dag const& d) {
  std::vector<PartialReorientation> out;
  int m = d.num_arcs();
  std::vector<int> digit(m, 0);
  while (true) {
    PartialReorientation p;
    for (int i = 0; i < m; ++i) {
      if (digit[i] == 1) {
        p.forward.insert(i);
      } else if (digit[i] == 2) {
        p.backward.insert(i);
      }
    }
    if (is_acyclic_partial(d, p) && is_transitive_partial(d, p)) {
      out.push_back(p);
    }
    int i = 0;
    while (i < m && digit[i] == 2) {
      digit[i++] = 0;
    }
    if (i == m) {
      break;
    }
    ++digit[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transport along a restriction map

// Ropes of D whose arc lies in D' and which belong to the ideal of D'.
inline Bitset extend_ideal(RestrictionMap const& m, RopeSet const& rs, RopeSet const& rs_sub,
                           Bitset const& ideal_sub) {
  if (!is_pathful(m)) {
    fail(ErrorKind::not_pathful, "subgraph is not pathful");
  }
  Bitset out(rs.size());
  for (int i = 0; i < rs.size(); ++i) {
    int j = rs_sub.index_of(rs.rope(i));
    if (j >= 0 && ideal_sub.test(j)) {
      out.set(i);
    }
  }
  return out;
}

inline Bitset restrict_ideal(RestrictionMap const& m, RopeSet const& rs, RopeSet const& rs_sub,
                             Bitset const& ideal) {
  if (!is_strongly_pathful(m)) {
    fail(ErrorKind::not_strongly_pathful, "subgraph is not strongly pathful");
  }
  Bitset out(rs_sub.size());
  for (int j = 0; j < rs_sub.size(); ++j) {
    int i = rs.index_of(rs_sub.rope(j));
    if (i >= 0 && ideal.test(i)) {
      out.set(j);
    }
  }
  return out;
}

inline Congruence extend_congruence(RestrictionMap const& m, SkeletalLattice const& sl,
                                    SkeletalLattice const& sl_sub, Congruence const& c_sub) {
  return congruence_from_ideal(sl, extend_ideal(m, sl.ropes(), sl_sub.ropes(), c_sub.ideal));
}

inline Congruence restrict_congruence(RestrictionMap const& m, SkeletalLattice const& sl,
                                      SkeletalLattice const& sl_sub, Congruence const& c) {
  return congruence_from_ideal(sl_sub, restrict_ideal(m, sl.ropes(), sl_sub.ropes(), c.ideal));
}

// E ~ F iff their restrictions are congruent in D'.
inline Partition extension_by_fibers(RestrictionMap const& m, SkeletalLattice const& sl,
                                     SkeletalLattice const& sl_sub, Congruence const& c_sub) {
  auto const& l = sl.lattice();
  std::vector<int> key(l.size());
  for (int i = 0; i < l.size(); ++i) {
    key[i] = c_sub.class_of[sl_sub.lattice().index_of(m.restrict(l.element(i)))];
  }
  Partition p(l.size());
  for (int i = 0; i < l.size(); ++i) {
    p[i] = static_cast<int>(std::find(key.begin(), key.end(), key[i]) - key.begin());
  }
  return p;
}

// E' ~ F' iff the reorientations of D reversing the same arcs are congruent.
inline Partition restriction_by_embedding(RestrictionMap const& m, SkeletalLattice const& sl,
                                          SkeletalLattice const& sl_sub, Congruence const& c) {
  auto const& ls = sl_sub.lattice();
  std::vector<int> key(ls.size());
  for (int i = 0; i < ls.size(); ++i) {
    ArcSet lifted;
    ls.element(i).for_each([&](int a) { lifted.insert(m.injection(a)); });
    int e = sl.lattice().index_of(lifted);
    if (e < 0) {
      fail(ErrorKind::not_strongly_pathful, "lifted reorientation is cyclic");
    }
    key[i] = c.class_of[e];
  }
  Partition p(ls.size());
  for (int i = 0; i < ls.size(); ++i) {
    p[i] = static_cast<int>(std::find(key.begin(), key.end(), key[i]) - key.begin());
  }
  return p;
}

// ---------------------------------------------------------------------------
// Doubling sequence: add the arcs outside the transitive reduction one at a
// time, each step doubling a convex set of the previous lattice.

struct DoublingStep {
  Dag base;                   // the graph before adding the arc
  Arc added;
  Bitset doubled;             // over the elements of AR(base)
  bool convex = false;
  bool interval = false;
  bool isomorphic = false;    // AR(base + arc) matches the doubling
  int parts = 0;              // blocks after splitting by the arc's tournament
  bool parts_are_intervals = false;
};

inline std::vector<DoublingStep> doubling_sequence(Dag const& d) {
  require_lattice(d);
  ArcSet red = d.reduction();
  std::vector<int> order = (d.all_arcs() - red).to_vector();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return d.transitive_support(a).size() < d.transitive_support(b).size();
  });
  bool skeletal = is_skeletal(d);
  std::vector<DoublingStep> steps;
  ArcSet have = red;
  for (int a : order) {
    Dag base = d.subgraph(have);
    Dag next = d.subgraph(have | ArcSet::single(a));
    auto lb = ReorientationLattice::enumerate(base);
    auto ln = ReorientationLattice::enumerate(next);
    RestrictionMap m(next, base);
    int added = next.arc_index(d.arc(a).tail, d.arc(a).head);
    DoublingStep step{base, d.arc(a), Bitset(lb.size())};
    Bitset keep(lb.size()), flip(lb.size());
    for (int i = 0; i < ln.size(); ++i) {
      int j = lb.index_of(m.restrict(ln.element(i)));
      (ln.element(i).contains(added) ? flip : keep).set(j);
    }
    step.doubled = keep & flip;
    auto const& pb = lb.poset();
    step.convex = pb.is_convex(step.doubled);
    step.interval = pb.is_interval(step.doubled);
    auto dbl = double_subset(pb, step.doubled);
    std::vector<int> map(ln.size());
    bool ok = dbl.poset.size() == ln.size();
    for (int i = 0; ok && i < ln.size(); ++i) {
      int j = lb.index_of(m.restrict(ln.element(i)));
      int copy = step.doubled.test(j) ? (ln.element(i).contains(added) ? 1 : 0) : -1;
      auto it = std::find(dbl.origin.begin(), dbl.origin.end(), std::pair<int, int>{j, copy});
      ok = it != dbl.origin.end();
      if (ok) {
        map[i] = static_cast<int>(it - dbl.origin.begin());
      }
    }
    step.isomorphic = ok && is_isomorphism(ln.poset(), dbl.poset, map);
    if (skeletal) {
      // split by the orientation of the other arcs inside the support of a
      ArcSet tour = base.arcs_within(d.transitive_support(a));
      std::map<ArcSet, Bitset> blocks;
      for (auto i = step.doubled.find_first(); i != Bitset::npos; i = step.doubled.find_next(i)) {
        auto [it, fresh] = blocks.try_emplace(lb.element(static_cast<int>(i)) & tour, Bitset(lb.size()));
        it->second.set(i);
      }
      step.parts = static_cast<int>(blocks.size());
      step.parts_are_intervals = true;
      for (auto const& [key, block] : blocks) {
        step.parts_are_intervals = step.parts_are_intervals && pb.is_interval(block);
      }
    }
    steps.push_back(std::move(step));
    have.insert(a);
  }
  return steps;
}

}  // namespace reorilat
