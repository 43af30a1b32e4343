// Reorientations of a Dag, given by the set of reversed arcs.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dag.hpp"

namespace reorilat {

inline std::vector<VertexSet> oriented_out(Dag const& d, ArcSet rev) {
  std::vector<VertexSet> out(d.n());
  for (int i = 0; i < d.num_arcs(); ++i) {
    auto [u, v] = d.arc(i);
    if (rev.contains(i)) {
      out[v].insert(u);
    } else {
      out[u].insert(v);
    }
  }
  return out;
}

// Kahn order of the oriented graph, smallest available vertex first.
// Shorter than n when the orientation has a cycle.
inline std::vector<int> lex_topological_order(std::vector<VertexSet> const& out) {
  int n = static_cast<int>(out.size());
  std::vector<int> indeg(n, 0), order;
  for (auto s : out) {
    s.for_each([&](int w) { ++indeg[w]; });
  }
  VertexSet avail;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) {
      avail.insert(v);
    }
  }
  while (!avail.empty()) {
    int v = avail.first();
    avail.erase(v);
    order.push_back(v);
    out[v].for_each([&](int w) {
      if (--indeg[w] == 0) {
        avail.insert(w);
      }
    });
  }
  return order;
}

inline bool is_acyclic_reorientation(Dag const& d, ArcSet rev) {
  return static_cast<int>(lex_topological_order(oriented_out(d, rev)).size()) == d.n();
}

// Strict reachability in an acyclic orientation.
inline std::vector<VertexSet> oriented_reach(std::vector<VertexSet> const& out) {
  auto order = lex_topological_order(out);
  std::vector<VertexSet> r(out.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    out[*it].for_each([&](int w) { r[*it] |= r[w] | VertexSet::single(w); });
  }
  return r;
}

// Arcs whose current direction lies in the transitive reduction of the
// reorientation. These are exactly the arcs that can be flipped.
inline ArcSet reduction_arcs(Dag const& d, ArcSet rev) {
  auto out = oriented_out(d, rev);
  auto r = oriented_reach(out);
  ArcSet red;
  for (int i = 0; i < d.num_arcs(); ++i) {
    auto [u, v] = d.arc(i);
    int s = rev.contains(i) ? v : u;
    int t = rev.contains(i) ? u : v;
    bool implied = false;
    (out[s] - VertexSet::single(t)).for_each([&](int w) { implied = implied || r[w].contains(t); });
    if (!implied) {
      red.insert(i);
    }
  }
  return red;
}

// Vertex ranks in the lexicographically first linear extension.
inline std::vector<int> linear_extension_ranks(Dag const& d, ArcSet rev) {
  auto order = lex_topological_order(oriented_out(d, rev));
  std::vector<int> rank(d.n());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    rank[order[i]] = i;
  }
  return rank;
}

// Orientation of every arc as a directed pair after reversal.
inline Arc oriented_arc(Dag const& d, ArcSet rev, int i) {
  auto a = d.arc(i);
  return rev.contains(i) ? Arc{a.head, a.tail} : a;
}

// Number of acyclic orientations of the underlying graph, by inclusion-exclusion
// over independent sets of sources. Returns an upper bound above 16 vertices.
inline double predicted_reorientation_count(Dag const& d) {
  int n = d.n();
  if (n > 16) {
    return std::ldexp(1.0, d.num_arcs());
  }
  std::vector<VertexSet> nb(n);
  for (int v = 0; v < n; ++v) {
    nb[v] = d.neighbors(v);
  }
  std::size_t lim = std::size_t{1} << n;
  std::vector<double> a(lim, 0.0);
  std::vector<char> indep(lim, 0);
  indep[0] = 1;
  for (std::size_t m = 1; m < lim; ++m) {
    int v = std::countr_zero(m);
    std::size_t rest = m & (m - 1);
    indep[m] = indep[rest] && !nb[v].intersects(VertexSet(rest));
  }
  a[0] = 1.0;
  for (std::size_t u = 1; u < lim; ++u) {
    double sum = 0.0;
    for (std::size_t s = u; s != 0; s = (s - 1) & u) {
      if (indep[s]) {
        sum += (std::popcount(s) % 2 == 1 ? 1.0 : -1.0) * a[u & ~s];
      }
    }
    a[u] = sum;
  }
  return a[lim - 1];
}

}  // namespace reorilat
