// Simple directed acyclic graphs on at most 64 vertices and 64 arcs.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace reorilat {

struct Arc {
  int tail;
  int head;
  bool operator==(Arc const&) const = default;
  auto operator<=>(Arc const&) const = default;
};

class Dag {
 public:
  Dag() = default;

  // Vertices are 0..n-1. Arcs are stored sorted by (tail, head).
  Dag(int n, std::vector<std::pair<int, int>> const& arcs) : n_(n) {
    if (n < 0 || n > kMaxIndex) {
      fail(ErrorKind::invalid_dag, "vertex count " + std::to_string(n) + " outside 0..64");
    }
    for (auto [u, v] : arcs) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        fail(ErrorKind::invalid_dag,
             "arc (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") out of range");
      }
      if (u == v) {
        fail(ErrorKind::invalid_dag, "loop at vertex " + std::to_string(u + 1));
      }
      arcs_.push_back({u, v});
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (static_cast<int>(arcs_.size()) > kMaxIndex) {
      fail(ErrorKind::invalid_dag, "more than 64 arcs");
    }
    index_.assign(static_cast<std::size_t>(n) * n, -1);
    out_.assign(n, VertexSet());
    in_.assign(n, VertexSet());
    for (int i = 0; i < static_cast<int>(arcs_.size()); ++i) {
      auto [u, v] = arcs_[i];
      if (index_[u * n + v] != -1) {
        fail(ErrorKind::invalid_dag,
             "duplicate arc (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
      }
      if (index_[v * n + u] != -1) {
        fail(ErrorKind::invalid_dag, "antiparallel arcs between " + std::to_string(u + 1) +
                                         " and " + std::to_string(v + 1));
      }
      index_[u * n + v] = i;
      out_[u].insert(v);
      in_[v].insert(u);
    }
    compute_reach();
  }

  int n() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  std::vector<Arc> const& arcs() const { return arcs_; }
  Arc arc(int i) const { return arcs_[i]; }
  int arc_index(int u, int v) const { return index_[u * n_ + v]; }
  bool has_arc(int u, int v) const { return index_[u * n_ + v] >= 0; }
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

  VertexSet out(int v) const { return out_[v]; }
  VertexSet in(int v) const { return in_[v]; }
  VertexSet neighbors(int v) const { return out_[v] | in_[v]; }
  // strict descendants / ancestors
  VertexSet reach(int v) const { return reach_[v]; }
  VertexSet coreach(int v) const { return coreach_[v]; }
  bool reaches(int u, int v) const { return reach_[u].contains(v); }

  VertexSet vertices() const { return VertexSet::full(n_); }
  ArcSet all_arcs() const { return ArcSet::full(num_arcs()); }

  ArcSet arcs_within(VertexSet u) const {
    ArcSet s;
    for (int i = 0; i < num_arcs(); ++i) {
      if (u.contains(arcs_[i].tail) && u.contains(arcs_[i].head)) {
        s.insert(i);
      }
    }
    return s;
  }

  // Same vertex set, keeping only the given arcs.
  Dag subgraph(ArcSet keep) const {
    std::vector<std::pair<int, int>> a;
    keep.for_each([&](int i) { a.emplace_back(arcs_[i].tail, arcs_[i].head); });
    return Dag(n_, a);
  }

  // Induced subgraph, relabelled in increasing order of the kept vertices.
  Dag induced(VertexSet u) const {
    std::vector<int> pos(n_, -1);
    int k = 0;
    u.for_each([&](int v) { pos[v] = k++; });
    std::vector<std::pair<int, int>> a;
    for (auto [s, t] : arcs_) {
      if (pos[s] >= 0 && pos[t] >= 0) {
        a.emplace_back(pos[s], pos[t]);
      }
    }
    return Dag(k, a);
  }

  // Arcs in the transitive reduction.
  ArcSet reduction() const {
    ArcSet r;
    for (int i = 0; i < num_arcs(); ++i) {
      auto [u, v] = arcs_[i];
      bool implied = false;
      (out_[u] - VertexSet::single(v)).for_each([&](int w) {
        if (reach_[w].contains(v)) {
          implied = true;
        }
      });
      if (!implied) {
        r.insert(i);
      }
    }
    return r;
  }

  // Pairs (u,v) with a directed path from u to v, as a vertex-set per tail.
  std::vector<VertexSet> closure() const { return reach_; }

  // Vertices lying on some directed path from the tail to the head of arc a.
  VertexSet transitive_support(int a) const {
    auto [u, v] = arcs_[a];
    VertexSet s = VertexSet::single(u) | VertexSet::single(v);
    (reach_[u] & coreach_[v]).for_each([&](int w) { s.insert(w); });
    return s;
  }

  // Vertices strictly between the endpoints of arc a.
  VertexSet interior(int a) const { return reach_[arcs_[a].tail] & coreach_[arcs_[a].head]; }

  bool operator==(Dag const& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

 private:
  void compute_reach() {
    // Kahn order; fails on a directed cycle.
    std::vector<int> indeg(n_), order;
    for (int v = 0; v < n_; ++v) {
      indeg[v] = in_[v].size();
    }
    for (int v = 0; v < n_; ++v) {
      if (indeg[v] == 0) {
        order.push_back(v);
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      out_[order[i]].for_each([&](int w) {
        if (--indeg[w] == 0) {
          order.push_back(w);
        }
      });
    }
    if (static_cast<int>(order.size()) != n_) {
      fail(ErrorKind::not_acyclic, "input contains a directed cycle");
    }
    reach_.assign(n_, VertexSet());
    coreach_.assign(n_, VertexSet());
    for (int i = n_ - 1; i >= 0; --i) {
      int v = order[i];
      out_[v].for_each([&](int w) { reach_[v] |= reach_[w] | VertexSet::single(w); });
    }
    for (int v = 0; v < n_; ++v) {
      reach_[v].for_each([&](int w) { coreach_[w].insert(v); });
    }
    topo_ = order;
  }

 public:
  std::vector<int> const& topological_order() const { return topo_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> index_;
  std::vector<VertexSet> out_, in_, reach_, coreach_;
  std::vector<int> topo_;
};

inline std::string arc_string(Arc a) {
  return "(" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) + ")";
}

// ---------------------------------------------------------------------------
// Undirected structure

// Connected components of the underlying graph restricted to `within`.
inline std::vector<VertexSet> components(Dag const& d, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= d.neighbors(v); });
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

inline std::vector<VertexSet> components(Dag const& d) { return components(d, d.vertices()); }

inline bool is_connected(Dag const& d, VertexSet u) {
  return !u.empty() && components(d, u).size() == 1;
}

// Enumerates the nonempty vertex sets inducing a connected subgraph, each once.
template <class F>
void for_each_connected_subset(Dag const& d, F&& visit) {
  auto rec = [&](auto&& self, VertexSet s, VertexSet frontier, VertexSet banned) -> void {
    visit(s);
    while (!frontier.empty()) {
      int w = frontier.first();
      frontier.erase(w);
      VertexSet grown = s | VertexSet::single(w);
      VertexSet nb = d.neighbors(w) - grown - banned;
      self(self, grown, frontier | nb, banned);
      banned.insert(w);
    }
  };
  for (int v = 0; v < d.n(); ++v) {
    VertexSet lower = VertexSet::full(v);
    rec(rec, VertexSet::single(v), d.neighbors(v) - lower, lower | VertexSet::single(v));
  }
}

// ---------------------------------------------------------------------------
// Transitive reduction of an induced subgraph, and forest tests

inline std::vector<VertexSet> reach_within(Dag const& d, VertexSet u) {
  std::vector<VertexSet> r(d.n());
  auto const& topo = d.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    if (!u.contains(v)) {
      continue;
    }
    (d.out(v) & u).for_each([&](int w) { r[v] |= r[w] | VertexSet::single(w); });
  }
  return r;
}

// Whether the transitive reduction of D[U] has an acyclic underlying graph.
inline bool induced_reduction_is_forest(Dag const& d, VertexSet u) {
  auto r = reach_within(d, u);
  std::vector<int> parent(d.n());
  for (int i = 0; i < d.n(); ++i) {
    parent[i] = i;
  }
  auto find = [&](int x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  bool forest = true;
  u.for_each([&](int a) {
    if (!forest) {
      return;
    }
    VertexSet outs = d.out(a) & u;
    outs.for_each([&](int b) {
      if (!forest) {
        return;
      }
      bool implied = false;
      (outs - VertexSet::single(b)).for_each([&](int w) { implied = implied || r[w].contains(b); });
      if (implied) {
        return;
      }
      int x = find(a), y = find(b);
      if (x == y) {
        forest = false;
      } else {
        parent[x] = y;
      }
    });
  });
  return forest;
}

// The reduction of every induced subgraph is a forest. Only connected vertex
// sets need checking since a cycle lives inside one component.
inline bool is_vertebrate(Dag const& d) {
  bool ok = true;
  for_each_connected_subset(d, [&](VertexSet u) {
    if (ok && u.size() >= 3 && !induced_reduction_is_forest(d, u)) {
      ok = false;
    }
  });
  return ok;
}

// Reference version over all 2^n vertex sets.
inline bool is_vertebrate_naive(Dag const& d) {
  if (d.n() > 24) {
    fail(ErrorKind::too_large, "naive vertebrate check limited to 24 vertices");
  }
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.n()); ++m) {
    if (!induced_reduction_is_forest(d, VertexSet(m))) {
      return false;
    }
  }
  return true;
}

inline bool is_tournament(Dag const& d, VertexSet u) {
  int k = u.size();
  return d.arcs_within(u).size() == k * (k - 1) / 2;
}

// Each arc's transitive support induces a tournament.
inline bool is_filled(Dag const& d) {
  for (int a = 0; a < d.num_arcs(); ++a) {
    if (!is_tournament(d, d.transitive_support(a))) {
      return false;
    }
  }
  return true;
}

inline bool is_skeletal(Dag const& d) { return is_filled(d) && is_vertebrate(d); }

// Maximum cardinality search followed by a perfect elimination check.
inline bool is_chordal(Dag const& d) {
  int n = d.n();
  std::vector<int> weight(n, 0), order;
  VertexSet done;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!done.contains(v) && (best < 0 || weight[v] > weight[best])) {
        best = v;
      }
    }
    done.insert(best);
    order.push_back(best);
    d.neighbors(best).for_each([&](int w) {
      if (!done.contains(w)) {
        ++weight[w];
      }
    });
  }
  // reverse of the visit order is a perfect elimination order iff chordal
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) {
    pos[order[i]] = n - 1 - i;
  }
  for (int v = 0; v < n; ++v) {
    VertexSet later;
    d.neighbors(v).for_each([&](int w) {
      if (pos[w] > pos[v]) {
        later.insert(w);
      }
    });
    if (later.empty()) {
      continue;
    }
    int p = -1;
    later.for_each([&](int w) {
      if (p < 0 || pos[w] < pos[p]) {
        p = w;
      }
    });
    VertexSet rest = later - VertexSet::single(p);
    if (!rest.subset_of(d.neighbors(p))) {
      return false;
    }
  }
  return true;
}

// Every cycle spans a clique: chordal with no induced diamond.
inline bool is_chordful(Dag const& d) {
  if (!is_chordal(d)) {
    return false;
  }
  int n = d.n();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (d.adjacent(a, b)) {
        continue;
      }
      // a, b nonadjacent with two adjacent common neighbours
      VertexSet common = d.neighbors(a) & d.neighbors(b);
      bool diamond = false;
      common.for_each([&](int x) {
        diamond = diamond || d.neighbors(x).intersects(common);
      });
      if (diamond) {
        return false;
      }
    }
  }
  return true;
}

// Vertex sets of size at least two inducing a tournament, by (size, bits).
inline std::vector<VertexSet> cliques(Dag const& d) {
  std::vector<VertexSet> out;
  auto rec = [&](auto&& self, VertexSet c, VertexSet cand) -> void {
    if (c.size() >= 2) {
      out.push_back(c);
    }
    cand.for_each([&](int w) {
      VertexSet higher = VertexSet(cand.bits() & ~((std::uint64_t{2} << w) - 1));
      self(self, c | VertexSet::single(w), higher & d.neighbors(w));
    });
  };
  rec(rec, VertexSet(), d.vertices());
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  return out;
}

// Nonempty U inside a component K, U != K, with D[U] and D[K \ U] connected.
inline std::vector<VertexSet> biconnected_subsets(Dag const& d) {
  std::vector<VertexSet> out;
  for (VertexSet k : components(d)) {
    if (k.size() < 2) {
      continue;
    }
    if (k.size() > 24) {
      fail(ErrorKind::too_large, "component too large for subset enumeration");
    }
    auto members = k.to_vector();
    std::uint64_t lim = std::uint64_t{1} << members.size();
    for (std::uint64_t m = 1; m + 1 < lim; ++m) {
      VertexSet u;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((m >> i) & 1U) {
          u.insert(members[i]);
        }
      }
      if (is_connected(d, u) && is_connected(d, k - u)) {
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reorilat
