// Exact rational realizations: graphical zonotope and fan, shards, shard
// polytopes, Minkowski-sum quotientopes and removahedra.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "rational.hpp"

namespace reorilat {

struct VPolytope {
  std::vector<QVector> vertices;  // sorted, no repeats

  int size() const { return static_cast<int>(vertices.size()); }
  bool operator==(VPolytope const&) const = default;
};

inline VPolytope vpolytope_of(std::vector<QVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return {std::move(pts)};
}

// Drops the points lying in the hull of the others.
inline VPolytope hull_vertices(std::vector<QVector> pts) {
  auto p = vpolytope_of(std::move(pts));
  std::vector<QVector> keep;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      if (j != i) {
        others.push_back(p.vertices[j]);
      }
    }
    if (!in_convex_hull(others, p.vertices[i])) {
      keep.push_back(p.vertices[i]);
    }
  }
  return {std::move(keep)};
}

inline bool has_exact_vertices(VPolytope const& p) { return hull_vertices(p.vertices).size() == p.size(); }

inline VPolytope scaled(VPolytope p, Q const& k) {
  for (auto& v : p.vertices) {
    v = k * v;
  }
  return p;
}

inline VPolytope simplex_face(int n, VertexSet s) {
  std::vector<QVector> pts;
  s.for_each([&](int i) { pts.push_back(unit_vector(n, i)); });
  return vpolytope_of(std::move(pts));
}

inline int affine_dimension(VPolytope const& p) { return affine_dimension(p.vertices); }

// ---------------------------------------------------------------------------
// Graphical zonotope and fan

inline QVector zonotope_vertex(Dag const& d, ArcSet rev) {
  if (!is_acyclic_reorientation(d, rev)) {
    fail(ErrorKind::not_acyclic, "reorientation has a directed cycle");
  }
  auto x = zero_vector(d.n());
  for (int i = 0; i < d.num_arcs(); ++i) {
    x[oriented_arc(d, rev, i).head] += 1;
  }
  return x;
}

inline VPolytope graphical_zonotope(Dag const& d, std::size_t cap = default_element_cap()) {
  auto l = ReorientationLattice::enumerate(d, cap);
  std::vector<QVector> pts;
  for (ArcSet e : l.elements()) {
    pts.push_back(zonotope_vertex(d, e));
  }
  return vpolytope_of(std::move(pts));
}

inline int internal_arc_count(Dag const& d, VertexSet u) { return d.arcs_within(u).size(); }

// <1_K, x> = #arcs of K for every component K.
inline std::vector<LinearConstraint> component_equalities(Dag const& d) {
  std::vector<LinearConstraint> eqs;
  for (VertexSet k : components(d)) {
    eqs.push_back({indicator(d.n(), k), internal_arc_count(d, k)});
  }
  return eqs;
}

inline HRep zonotope_facets(Dag const& d) {
  HRep h{d.n(), component_equalities(d), {}};
  for (VertexSet u : biconnected_subsets(d)) {
    h.inequalities.push_back({indicator(d.n(), u), internal_arc_count(d, u)});
  }
  return h;
}

// Closed chamber: x_s <= x_t for every oriented arc (s,t) of E.
inline bool fan_chamber_contains(Dag const& d, ArcSet rev, QVector const& x) {
  for (int i = 0; i < d.num_arcs(); ++i) {
    auto [s, t] = oriented_arc(d, rev, i);
    if (x[s] > x[t]) {
      return false;
    }
  }
  return true;
}

inline ArcSet chamber_of(Dag const& d, QVector const& x) {
  ArcSet rev;
  for (int i = 0; i < d.num_arcs(); ++i) {
    auto [u, v] = d.arc(i);
    if (x[u] == x[v]) {
      fail(ErrorKind::on_wall, "point " + to_string(x) + " lies on x" + std::to_string(u + 1) +
                                   " = x" + std::to_string(v + 1));
    }
    if (x[u] > x[v]) {
      rev.insert(i);
    }
  }
  return rev;
}

// Ranks in the first linear extension of E (smallest vertex first).
inline QVector interior_point(Dag const& d, ArcSet rev) {
  auto r = linear_extension_ranks(d, rev);
  QVector x(d.n());
  for (int v = 0; v < d.n(); ++v) {
    x[v] = r[v];
  }
  return x;
}

// Ranks in the last linear extension of E (largest available vertex first).
inline QVector second_interior_point(Dag const& d, ArcSet rev) {
  auto out = oriented_out(d, rev);
  int n = d.n();
  std::vector<int> indeg(n, 0);
  for (auto s : out) {
    s.for_each([&](int w) { ++indeg[w]; });
  }
  QVector x(n);
  std::set<int> avail;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) {
      avail.insert(v);
    }
  }
  for (int k = 0; !avail.empty(); ++k) {
    int v = *avail.rbegin();
    avail.erase(v);
    x[v] = k;
    out[v].for_each([&](int w) {
      if (--indeg[w] == 0) {
        avail.insert(w);
      }
    });
  }
  return x;
}

inline VertexSet component_of(Dag const& d, VertexSet u) {
  for (VertexSet k : components(d)) {
    if (u.subset_of(k)) {
      return k;
    }
  }
  fail(ErrorKind::usage, "vertex set spans several components");
}

// |U| 1_{K-U} - |K-U| 1_U, with K the component of U.
inline QVector ray_vector(Dag const& d, VertexSet u) {
  VertexSet rest = component_of(d, u) - u;
  return Q(u.size()) * indicator(d.n(), rest) - Q(rest.size()) * indicator(d.n(), u);
}

// The ray of U lies in the closed chamber of E iff no arc of E enters U
// from the rest of its component.
inline bool ray_in_chamber(Dag const& d, ArcSet rev, VertexSet u) {
  for (int i = 0; i < d.num_arcs(); ++i) {
    auto [s, t] = oriented_arc(d, rev, i);
    if (u.contains(t) && !u.contains(s)) {
      return false;
    }
  }
  return true;
}

// Linear functional that increases along every cover of AR: minus the ranks
// of the first linear extension of D. See README for why the sum of arc
// vectors is not used.
inline QVector ascent_direction(Dag const& d) {
  auto x = interior_point(d, ArcSet());
  for (auto& c : x) {
    c = -c;
  }
  return x;
}

inline QVector arc_sum_direction(Dag const& d) {
  auto w = zero_vector(d.n());
  for (auto [u, v] : d.arcs()) {
    w[v] += 1;
    w[u] -= 1;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Shards

inline bool shard_contains(Rope const& r, QVector const& x) {
  if (x[r.u] != x[r.v]) {
    return false;
  }
  bool ok = true;
  r.down.for_each([&](int w) { ok = ok && x[w] <= x[r.u]; });
  r.up.for_each([&](int w) { ok = ok && x[w] >= x[r.u]; });
  return ok;
}

// u, the interior of the rope in the order of D, then v.
inline std::vector<int> rope_path(Dag const& d, Rope const& r) {
  std::vector<int> pos(d.n());
  auto const& topo = d.topological_order();
  for (int i = 0; i < d.n(); ++i) {
    pos[topo[i]] = i;
  }
  std::vector<int> inner = (r.down | r.up).to_vector();
  std::sort(inner.begin(), inner.end(), [&](int a, int b) { return pos[a] < pos[b]; });
  std::vector<int> path{r.u};
  path.insert(path.end(), inner.begin(), inner.end());
  path.push_back(r.v);
  return path;
}

// Points 1_{M_down} - 1_{M_up} over pairs of vertex sets that interleave
// along the path, starting in {u} + down and ending in up + {v}.
inline std::vector<QVector> alternating_matching_points(Dag const& d, Rope const& r) {
  auto path = rope_path(d, r);
  int k = static_cast<int>(path.size());
  auto may_fall = [&](int w) { return w == r.u || r.down.contains(w); };
  auto may_rise = [&](int w) { return w == r.v || r.up.contains(w); };
  std::vector<QVector> pts;
  for (std::uint32_t m = 0; m < (1U << k); ++m) {
    bool ok = true;
    bool expect_fall = true;
    auto x = zero_vector(d.n());
    for (int i = 0; i < k && ok; ++i) {
      if ((m >> i) & 1U) {
        int w = path[i];
        ok = expect_fall ? may_fall(w) : may_rise(w);
        x[w] = expect_fall ? 1 : -1;
        expect_fall = !expect_fall;
      }
    }
    if (ok && expect_fall) {
      pts.push_back(std::move(x));
    }
  }
  return pts;
}

inline HRep shard_hrep(Dag const& d, Rope const& r) {
  int n = d.n();
  HRep h{n, {}, {}};
  VertexSet support = r.down | r.up | ends(r);
  for (int w = 0; w < n; ++w) {
    if (!support.contains(w)) {
      h.equalities.push_back({unit_vector(n, w), 0});
    }
  }
  for (VertexSet k : components(d)) {
    h.equalities.push_back({indicator(n, k), 0});
  }
  r.down.for_each([&](int w) { h.inequalities.push_back({unit_vector(n, w), 0}); });
  r.up.for_each([&](int w) { h.inequalities.push_back({Q(-1) * unit_vector(n, w), 0}); });
  auto path = rope_path(d, r);
  VertexSet prefix;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    int w = path[i], w2 = path[i + 1];
    prefix.insert(w);
    bool w_low = w == r.u || r.down.contains(w);
    bool w_high = w == r.u || r.up.contains(w);
    bool next_high = w2 == r.v || r.up.contains(w2);
    bool next_low = w2 == r.v || r.down.contains(w2);
    if (w_low && next_high) {
      // sum over the prefix <= 1
      h.inequalities.push_back({Q(-1) * indicator(n, prefix), -1});
    }
    if (w_high && next_low) {
      h.inequalities.push_back({indicator(n, prefix), 0});
    }
  }
  return h;
}

struct ShardPolytope {
  Rope rope;
  VPolytope polytope;
  HRep hrep;
};

// Builds both descriptions and checks they agree: every matching point
// satisfies the inequalities, the inequalities cut out a bounded set, and
// its vertices are exactly the matching points.
inline ShardPolytope shard_polytope(Dag const& d, Rope const& r) {
  if (!is_valid_rope(d, r)) {
    fail(ErrorKind::invalid_rope, to_string(r));
  }
  ShardPolytope s{r, vpolytope_of(alternating_matching_points(d, r)), shard_hrep(d, r)};
  for (auto const& p : s.polytope.vertices) {
    if (!s.hrep.contains(p)) {
      fail(ErrorKind::representation_mismatch,
           "shard polytope of " + to_string(r) + ": matching point " + to_string(p) + " violates the inequalities");
    }
  }
  if (!s.hrep.is_bounded()) {
    fail(ErrorKind::representation_mismatch, "shard polytope of " + to_string(r) + ": inequalities unbounded");
  }
  if (hrep_vertices(s.hrep) != s.polytope.vertices) {
    fail(ErrorKind::representation_mismatch,
         "shard polytope of " + to_string(r) + ": vertex sets of the two descriptions differ");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Minkowski sums

inline int maximizer(VPolytope const& p, QVector const& dir, bool* unique = nullptr) {
  int best = -1;
  Q best_val;
  bool tie = false;
  for (int i = 0; i < p.size(); ++i) {
    Q val = dot(dir, p.vertices[i]);
    if (best < 0 || val > best_val) {
      best = i;
      best_val = val;
      tie = false;
    } else if (val == best_val) {
      tie = true;
    }
  }
  if (unique) {
    *unique = !tie;
  }
  return best;
}

inline Q support_value(VPolytope const& p, QVector const& dir) { return dot(dir, p.vertices[maximizer(p, dir)]); }

inline Q support_value(std::vector<VPolytope> const& summands, QVector const& dir) {
  Q s = 0;
  for (auto const& p : summands) {
    s += support_value(p, dir);
  }
  return s;
}

inline QVector minkowski_vertex(std::vector<VPolytope> const& summands, QVector const& dir) {
  auto x = zero_vector(static_cast<int>(dir.size()));
  for (std::size_t k = 0; k < summands.size(); ++k) {
    bool unique = false;
    int i = maximizer(summands[k], dir, &unique);
    if (!unique) {
      fail(ErrorKind::non_generic_direction,
           "direction " + to_string(dir) + " has several maximizers on summand " + std::to_string(k));
    }
    x = x + summands[k].vertices[i];
  }
  return x;
}

// Vertex maximizing the interior of chamber E: starts at the first linear
// extension and walks toward the last one until every summand has a unique
// maximizer.
inline QVector chamber_vertex(Dag const& d, std::vector<VPolytope> const& summands, ArcSet rev) {
  QVector x = interior_point(d, rev);
  QVector y = second_interior_point(d, rev);
  for (int k = 0;; ++k) {
    try {
      return minkowski_vertex(summands, x + Q(k) * y);
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::non_generic_direction || k > 4 * d.n() * d.n() + 8) {
        throw;
      }
    }
  }
}

// Vertex set of a Minkowski sum whose normal fan coarsens the graphical fan,
// read off one interior point per chamber.
inline VPolytope minkowski_vertices_over_fan(Dag const& d, std::vector<VPolytope> const& summands,
                                             std::size_t cap = default_element_cap()) {
  auto l = ReorientationLattice::enumerate(d, cap);
  std::vector<QVector> pts;
  for (ArcSet e : l.elements()) {
    pts.push_back(chamber_vertex(d, summands, e));
  }
  return vpolytope_of(std::move(pts));
}

// Does vertex x maximize every ray of the closed chamber E (and so the
// whole chamber, the lineality being constant on the polytope)?
inline bool maximizes_chamber(Dag const& d, std::vector<VPolytope> const& summands, ArcSet rev, QVector const& x,
                              std::vector<VertexSet> const& bisets) {
  for (VertexSet u : bisets) {
    if (ray_in_chamber(d, rev, u)) {
      auto r = ray_vector(d, u);
      if (dot(r, x) != support_value(summands, r)) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quotientopes

// Weights p/q with p in 1..9 and q in 1..4 drawn from std::minstd_rand.
inline std::vector<Q> random_weights(std::size_t count, std::uint32_t seed) {
  std::minstd_rand g(seed);
  std::vector<Q> w;
  for (std::size_t i = 0; i < count; ++i) {
    unsigned p = 1 + g() % 9;
    unsigned q = 1 + g() % 4;
    Q x(p, q);
    x.canonicalize();
    w.push_back(x);
  }
  return w;
}

struct Quotientope {
  std::vector<int> ropes;              // rope indices of the ideal, ascending
  std::vector<Q> weights;              // one per rope
  std::vector<VPolytope> summands;     // weighted shard polytopes
  std::vector<QVector> class_vertex;   // per congruence class
  VPolytope polytope;
};

// Shard polytopes of all ropes of D, built and cross-checked once.
inline std::vector<ShardPolytope> all_shard_polytopes(RopeSet const& rs) {
  std::vector<ShardPolytope> out;
  for (auto const& r : rs.ropes()) {
    out.push_back(shard_polytope(rs.dag(), r));
  }
  return out;
}

inline Quotientope quotientope(SkeletalLattice const& sl, Congruence const& c, std::vector<ShardPolytope> const& shards,
                               std::vector<Q> weights = {}) {
  Quotientope q;
  for (auto i = c.ideal.find_first(); i != Bitset::npos; i = c.ideal.find_next(i)) {
    q.ropes.push_back(static_cast<int>(i));
  }
  if (weights.empty()) {
    weights.assign(q.ropes.size(), Q(1));
  }
  if (weights.size() != q.ropes.size()) {
    fail(ErrorKind::usage, "expected one weight per rope of the ideal");
  }
  for (auto const& w : weights) {
    if (sgn(w) <= 0) {
      fail(ErrorKind::usage, "weights must be positive");
    }
  }
  q.weights = std::move(weights);
  for (std::size_t k = 0; k < q.ropes.size(); ++k) {
    q.summands.push_back(scaled(shards[q.ropes[k]].polytope, q.weights[k]));
  }
  auto const& d = sl.dag();
  auto const& l = sl.lattice();
  for (int cls = 0; cls < c.size(); ++cls) {
    q.class_vertex.push_back(chamber_vertex(d, q.summands, l.element(c.minimum[cls])));
  }
  q.polytope = vpolytope_of(q.class_vertex);
  return q;
}

inline Quotientope quotientope(SkeletalLattice const& sl, Congruence const& c, std::vector<Q> weights = {}) {
  return quotientope(sl, c, all_shard_polytopes(sl.ropes()), std::move(weights));
}

// Edges of conv(vertices) by the midpoint test.
inline std::vector<std::pair<int, int>> polytope_edges(VPolytope const& p) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (is_hull_edge(p.vertices, i, j)) {
        e.emplace_back(i, j);
      }
    }
  }
  return e;
}

struct QuotientopeCheck {
  int classes = 0;
  int vertices = 0;
  bool class_constant = false;    // chambers of one class share a vertex
  bool classes_distinct = false;  // distinct classes, distinct vertices
  bool chambers_refine = false;   // each class vertex maximizes its whole chambers
  bool graph_matches = false;     // oriented edge graph = quotient Hasse diagram
  bool edges_parallel = false;    // each edge parallel to its flipped arc

  bool ok() const { return class_constant && classes_distinct && chambers_refine && graph_matches && edges_parallel; }
};

inline QuotientopeCheck verify_quotientope(SkeletalLattice const& sl, Congruence const& c, Quotientope const& q) {
  auto const& d = sl.dag();
  auto const& l = sl.lattice();
  QuotientopeCheck chk;
  chk.classes = c.size();
  chk.vertices = q.polytope.size();
  chk.class_constant = true;
  chk.chambers_refine = true;
  auto bisets = biconnected_subsets(d);
  for (int e = 0; e < l.size(); ++e) {
    auto x = chamber_vertex(d, q.summands, l.element(e));
    chk.class_constant = chk.class_constant && x == q.class_vertex[c.class_of[e]];
    chk.chambers_refine = chk.chambers_refine && maximizes_chamber(d, q.summands, l.element(e), x, bisets);
  }
  chk.classes_distinct = q.polytope.size() == c.size();
  if (!chk.classes_distinct) {
    return chk;
  }
  std::vector<int> vertex_class(c.size());
  for (int cls = 0; cls < c.size(); ++cls) {
    auto it = std::lower_bound(q.polytope.vertices.begin(), q.polytope.vertices.end(), q.class_vertex[cls]);
    vertex_class[it - q.polytope.vertices.begin()] = cls;
  }
  // Geometric edges, oriented so the ascent functional increases.
  auto up = ascent_direction(d);
  std::set<std::pair<int, int>> geo;
  bool oriented = true;
  for (auto [i, j] : polytope_edges(q.polytope)) {
    Q delta = dot(up, q.polytope.vertices[j] - q.polytope.vertices[i]);
    oriented = oriented && sgn(delta) != 0;
    int a = vertex_class[i], b = vertex_class[j];
    geo.insert(sgn(delta) > 0 ? std::pair{a, b} : std::pair{b, a});
  }
  std::set<std::pair<int, int>> hasse;
  chk.edges_parallel = true;
  auto qp = quotient(sl, c);
  for (auto [x, y] : qp.cover_pairs()) {
    hasse.insert({x, y});
  }
  // Each quotient cover comes from a lattice cover between the classes.
  for (auto const& cv : sl.covers()) {
    int a = c.class_of[cv.low], b = c.class_of[cv.high];
    if (a == b || !hasse.count({a, b})) {
      continue;
    }
    int arc = cover_arc(d, l.element(cv.low), l.element(cv.high));
    auto [u, v] = d.arc(arc);
    auto diff = q.class_vertex[b] - q.class_vertex[a];
    // diff must be a positive multiple of e_u - e_v
    Q lam = diff[u];
    bool par = sgn(lam) > 0 && diff == lam * (unit_vector(d.n(), u) - unit_vector(d.n(), v));
    chk.edges_parallel = chk.edges_parallel && par;
  }
  chk.graph_matches = oriented && geo == hasse;
  return chk;
}

// ---------------------------------------------------------------------------
// Removahedra

// The zonotope equalities and the facets of the biconnected subsets that are
// connected in the transitive reduction.
inline HRep associahedron_removahedron(Dag const& d) {
  require_skeletal(d);
  Dag red = d.subgraph(d.reduction());
  HRep h{d.n(), component_equalities(d), {}};
  for (VertexSet u : biconnected_subsets(d)) {
    if (is_connected(red, u)) {
      h.inequalities.push_back({indicator(d.n(), u), internal_arc_count(d, u)});
    }
  }
  return h;
}

// Simplex faces over the reduction path of every arc of D.
inline std::vector<VPolytope> associahedron_summands(Dag const& d) {
  std::vector<VPolytope> s;
  for (int a = 0; a < d.num_arcs(); ++a) {
    s.push_back(simplex_face(d.n(), d.transitive_support(a)));
  }
  return s;
}

inline VPolytope associahedron_minkowski(Dag const& d, std::size_t cap = default_element_cap()) {
  require_skeletal(d);
  return minkowski_vertices_over_fan(d, associahedron_summands(d), cap);
}

struct RemovahedronCheck {
  int vertices = 0;
  int facets = 0;
  bool vertices_feasible = false;  // Minkowski vertices satisfy the inequalities
  bool supports_match = false;     // each retained inequality is attained
  bool vertex_sets_equal = false;  // vertex enumeration of the inequalities

  bool ok() const { return vertices_feasible && supports_match && vertex_sets_equal; }
};

inline RemovahedronCheck verify_removahedron(Dag const& d, std::size_t cap = default_element_cap()) {
  auto h = associahedron_removahedron(d);
  auto v = associahedron_minkowski(d, cap);
  RemovahedronCheck chk;
  chk.vertices = v.size();
  chk.facets = static_cast<int>(h.inequalities.size());
  chk.vertices_feasible = std::all_of(v.vertices.begin(), v.vertices.end(), [&](QVector const& x) { return h.contains(x); });
  chk.supports_match = true;
  for (auto const& ineq : h.inequalities) {
    Q lo = -support_value(v, Q(-1) * ineq.normal);
    chk.supports_match = chk.supports_match && lo == ineq.rhs;
  }
  chk.vertex_sets_equal = h.is_bounded() && hrep_vertices(h) == v.vertices;
  return chk;
}

inline VPolytope require_removahedron(Dag const& d) {
  auto chk = verify_removahedron(d);
  if (!chk.ok()) {
    fail(ErrorKind::representation_mismatch, "removahedron inequalities and Minkowski vertices disagree");
  }
  return associahedron_minkowski(d);
}

// Experimental: keep the zonotope facets whose rays stay rays of the
// quotient fan (the quotientope has a facet in that direction), drop the
// rest, and test whether the result realizes the quotient fan.
struct RemovahedronExperiment {
  int kept = 0;
  int removed = 0;
  bool bounded = false;
  bool realizes = false;
  std::vector<VertexSet> kept_sets;
};

inline RemovahedronExperiment removahedron_experiment(SkeletalLattice const& sl, Congruence const& c,
                                                      Quotientope const& q) {
  auto const& d = sl.dag();
  auto const& l = sl.lattice();
  RemovahedronExperiment ex;
  int full = affine_dimension(q.polytope);
  HRep h{d.n(), component_equalities(d), {}};
  auto bisets = biconnected_subsets(d);
  for (VertexSet u : bisets) {
    auto r = ray_vector(d, u);
    Q best = support_value(q.polytope, r);
    std::vector<QVector> face;
    for (auto const& x : q.polytope.vertices) {
      if (dot(r, x) == best) {
        face.push_back(x);
      }
    }
    if (affine_dimension(face) == full - 1) {
      h.inequalities.push_back({indicator(d.n(), u), internal_arc_count(d, u)});
      ex.kept_sets.push_back(u);
      ++ex.kept;
    } else {
      ++ex.removed;
    }
  }
  ex.bounded = h.is_bounded();
  if (!ex.bounded) {
    return ex;
  }
  VPolytope p{hrep_vertices(h)};
  std::vector<VPolytope> as_one{p};
  std::map<QVector, int> seen;
  ex.realizes = true;
  for (int e = 0; e < l.size() && ex.realizes; ++e) {
    ArcSet rev = l.element(e);
    QVector x;
    try {
      x = minkowski_vertex(as_one, interior_point(d, rev));
    } catch (Error const&) {
      ex.realizes = false;
      break;
    }
    ex.realizes = maximizes_chamber(d, as_one, rev, x, bisets);
    auto [it, fresh] = seen.emplace(x, c.class_of[e]);
    ex.realizes = ex.realizes && it->second == c.class_of[e];
  }
  ex.realizes = ex.realizes && static_cast<int>(seen.size()) == c.size() && p.size() == c.size();
  return ex;
}

// ---------------------------------------------------------------------------
// Simpliciality of the graphical fan

// The chamber of E is simplicial iff the transitive reduction of E is a forest.
inline bool is_chamber_simplicial(Dag const& d, ArcSet rev) {
  UnionFind uf(d.n());
  bool forest = true;
  reduction_arcs(d, rev).for_each([&](int i) {
    auto [u, v] = d.arc(i);
    if (uf.find(u) == uf.find(v)) {
      forest = false;
    }
    uf.unite(u, v);
  });
  return forest;
}

// Rays of the closed chamber E among the fan rays.
inline int chamber_ray_count(Dag const& d, ArcSet rev) {
  int k = 0;
  for (VertexSet u : biconnected_subsets(d)) {
    k += ray_in_chamber(d, rev, u);
  }
  return k;
}

inline bool is_fan_simplicial(Dag const& d, std::size_t cap = default_element_cap()) {
  auto l = ReorientationLattice::enumerate(d, cap);
  return std::all_of(l.elements().begin(), l.elements().end(),
                     [&](ArcSet e) { return is_chamber_simplicial(d, e); });
}

}  // namespace reorilat
