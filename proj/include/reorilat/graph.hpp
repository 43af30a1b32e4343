// Undirected graphs as sorted adjacency lists: Hamiltonian search,
// isomorphism and a few shape predicates.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "error.hpp"
#include "poset.hpp"

namespace reorilat {

using Graph = std::vector<std::vector<int>>;

inline std::size_t edge_count(Graph const& g) {
  std::size_t m = 0;
  for (auto const& a : g) {
    m += a.size();
  }
  return m / 2;
}

inline bool is_regular(Graph const& g) {
  return std::all_of(g.begin(), g.end(), [&](auto const& a) { return a.size() == g.front().size(); });
}

inline bool is_connected(Graph const& g) {
  if (g.empty()) {
    return true;
  }
  std::vector<char> seen(g.size(), 0);
  std::vector<int> todo{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int w : g[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        todo.push_back(w);
      }
    }
  }
  return count == g.size();
}

inline bool is_forest(Graph const& g) {
  // components = n - m for a forest
  std::vector<int> comp(g.size(), -1);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) {
      continue;
    }
    ++comps;
    std::vector<int> todo{static_cast<int>(s)};
    comp[s] = static_cast<int>(s);
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      for (int w : g[v]) {
        if (comp[w] < 0) {
          comp[w] = static_cast<int>(s);
          todo.push_back(w);
        }
      }
    }
  }
  return edge_count(g) + comps == g.size();
}

// Side of each vertex in a 2-colouring, or nullopt when not bipartite.
inline std::optional<std::vector<int>> bipartition(Graph const& g) {
  std::vector<int> side(g.size(), -1);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (side[s] >= 0) {
      continue;
    }
    side[s] = 0;
    std::vector<int> todo{static_cast<int>(s)};
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      for (int w : g[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          todo.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

// ---------------------------------------------------------------------------
// Hamiltonian paths and cycles by backtracking. Neighbours with the fewest
// free neighbours are tried first, ties in ascending order, so witnesses
// are deterministic.

namespace detail {

class HamiltonSearch {
 public:
  HamiltonSearch(Graph const& g, bool cycle) : g_(g), n_(static_cast<int>(g.size())), cycle_(cycle) {
    nbr_.assign(n_, Bitset(n_));
    for (int v = 0; v < n_; ++v) {
      for (int w : g[v]) {
        nbr_[v].set(w);
      }
    }
  }

  std::optional<std::vector<int>> run(int start) {
    free_ = Bitset(n_);
    free_.set();
    path_.clear();
    start_ = start;
    visit(start);
    if (extend()) {
      return path_;
    }
    return std::nullopt;
  }

 private:
  void visit(int v) {
    free_.reset(v);
    path_.push_back(v);
  }
  void leave(int v) {
    free_.set(v);
    path_.pop_back();
  }

  // Each free vertex needs two usable neighbours (one if it may end the
  // path), and the free vertices must hang together through the current end.
  bool feasible(int end) const {
    int dead_ends = 0;
    for (auto v = free_.find_first(); v != Bitset::npos; v = free_.find_next(v)) {
      Bitset usable = nbr_[v] & free_;
      int deg = static_cast<int>(usable.count()) + (nbr_[v].test(end) ? 1 : 0);
      if (cycle_ && nbr_[v].test(start_) && static_cast<int>(v) != start_) {
        ++deg;
      }
      if (deg == 0) {
        return false;
      }
      if (deg == 1) {
        if (cycle_ || ++dead_ends > 1) {
          return false;
        }
      }
    }
    // connectivity of free vertices reachable from the end
    Bitset seen(n_), frontier = nbr_[end] & free_;
    while (frontier.any()) {
      seen |= frontier;
      Bitset next(n_);
      for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v)) {
        next |= nbr_[v];
      }
      frontier = next & free_ & ~seen;
    }
    return seen == free_;
  }

  bool extend() {
    int end = path_.back();
    if (free_.none()) {
      return !cycle_ || n_ <= 2 || nbr_[end].test(start_);
    }
    if (!feasible(end)) {
      return false;
    }
    // fewest onward choices first, ties by index
    std::vector<std::pair<std::size_t, int>> next;
    for (int w : g_[end]) {
      if (free_.test(w)) {
        next.emplace_back((nbr_[w] & free_).count(), w);
      }
    }
    std::sort(next.begin(), next.end());
    for (auto [deg, w] : next) {
      visit(w);
      if (extend()) {
        return true;
      }
      leave(w);
    }
    return false;
  }

  Graph const& g_;
  int n_;
  bool cycle_;
  int start_ = 0;
  std::vector<Bitset> nbr_;
  Bitset free_;
  std::vector<int> path_;
};

// Rotation-extension (Posa) with restarts. Finds cycles in the polytope
// graphs met here quickly; a miss says nothing, the exact search decides.
inline std::optional<std::vector<int>> rotation_cycle(Graph const& g, int restarts, std::uint32_t seed) {
  int n = static_cast<int>(g.size());
  std::mt19937 rng(seed);
  std::vector<int> path, pos(n);
  std::vector<char> used(n);
  auto adjacent = [&](int a, int b) { return std::binary_search(g[a].begin(), g[a].end(), b); };
  long budget = 40L * n * n + 1000;
  for (int r = 0; r < restarts; ++r) {
    std::fill(used.begin(), used.end(), 0);
    path.assign(1, static_cast<int>(rng() % n));
    used[path[0]] = 1;
    pos[path[0]] = 0;
    for (long step = 0; step < budget; ++step) {
      int end = path.back();
      std::vector<int> fresh;
      for (int w : g[end]) {
        if (!used[w]) {
          fresh.push_back(w);
        }
      }
      if (!fresh.empty()) {
        int w = fresh[rng() % fresh.size()];
        used[w] = 1;
        pos[w] = static_cast<int>(path.size());
        path.push_back(w);
        continue;
      }
      if (static_cast<int>(path.size()) == n && adjacent(end, path.front())) {
        return path;
      }
      if (rng() % 8 == 0) {
        std::reverse(path.begin(), path.end());
      } else {
        int w = g[end][rng() % g[end].size()];
        int i = pos[w];
        if (i + 1 >= static_cast<int>(path.size()) - 1) {
          continue;
        }
        std::reverse(path.begin() + i + 1, path.end());
      }
      for (int k = 0; k < static_cast<int>(path.size()); ++k) {
        pos[path[k]] = k;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// A cyclic vertex order whose consecutive vertices are adjacent (including
// last to first). Graphs with at most two vertices have no cycle.
inline std::optional<std::vector<int>> hamiltonian_cycle(Graph const& g, std::size_t max_vertices = 4096) {
  if (g.size() > max_vertices) {
    fail(ErrorKind::too_large, "graph too large for Hamiltonian search");
  }
  if (g.size() <= 2 || !is_connected(g)) {
    return std::nullopt;
  }
  if (auto side = bipartition(g)) {
    auto ones = std::count(side->begin(), side->end(), 1);
    if (2 * ones != static_cast<long>(g.size())) {
      return std::nullopt;
    }
  }
  if (auto c = detail::rotation_cycle(g, 20, static_cast<std::uint32_t>(g.size()))) {
    return c;
  }
  return detail::HamiltonSearch(g, true).run(0);
}

inline std::optional<std::vector<int>> hamiltonian_path(Graph const& g, std::size_t max_vertices = 4096) {
  if (g.size() > max_vertices) {
    fail(ErrorKind::too_large, "graph too large for Hamiltonian search");
  }
  if (g.empty()) {
    return std::vector<int>{};
  }
  if (!is_connected(g)) {
    return std::nullopt;
  }
  std::vector<int> starts(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    starts[v] = static_cast<int>(v);
  }
  if (auto side = bipartition(g)) {
    long ones = std::count(side->begin(), side->end(), 1);
    long zeros = static_cast<long>(g.size()) - ones;
    if (ones > zeros + 1 || zeros > ones + 1) {
      return std::nullopt;
    }
    if (ones != zeros) {
      // the path must start on the larger side
      int big = ones > zeros ? 1 : 0;
      std::erase_if(starts, [&](int v) { return (*side)[v] != big; });
    }
  }
  if (auto c = hamiltonian_cycle(g)) {
    return c;
  }
  detail::HamiltonSearch search(g, false);
  // a degree-one vertex must be an end
  for (int v : starts) {
    if (g[v].size() == 1) {
      return search.run(v);
    }
  }
  for (int v : starts) {
    if (auto p = search.run(v)) {
      return p;
    }
  }
  return std::nullopt;
}

inline bool is_hamiltonian_path(Graph const& g, std::vector<int> const& order) {
  if (order.size() != g.size()) {
    return false;
  }
  std::vector<char> seen(g.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (v < 0 || v >= static_cast<int>(g.size()) || seen[v]) {
      return false;
    }
    seen[v] = 1;
    if (i > 0 && !std::binary_search(g[v].begin(), g[v].end(), order[i - 1])) {
      return false;
    }
  }
  return true;
}

inline bool is_hamiltonian_cycle(Graph const& g, std::vector<int> const& order) {
  return g.size() > 2 && is_hamiltonian_path(g, order) &&
         std::binary_search(g[order.back()].begin(), g[order.back()].end(), order.front());
}

enum class Traversal { cycle, path_parity, path_small, none };

inline char const* traversal_name(Traversal t) {
  switch (t) {
    case Traversal::cycle: return "cycle";
    case Traversal::path_parity: return "path (bipartite sides differ)";
    case Traversal::path_small: return "path (at most two vertices)";
    case Traversal::none: return "none";
  }
  return "none";
}

// A cycle when there is one; otherwise a path, but only when a cycle is
// ruled out by size or by a bipartition with unequal sides.
inline Traversal hamiltonian_traversal(Graph const& g) {
  if (hamiltonian_cycle(g)) {
    return Traversal::cycle;
  }
  bool small = g.size() <= 2;
  bool unbalanced = false;
  if (auto side = bipartition(g)) {
    unbalanced = 2 * std::count(side->begin(), side->end(), 1) != static_cast<long>(g.size());
  }
  if ((small || unbalanced) && hamiltonian_path(g)) {
    return small ? Traversal::path_small : Traversal::path_parity;
  }
  return Traversal::none;
}

// ---------------------------------------------------------------------------
// Isomorphism by colour refinement and backtracking.

namespace detail {

inline std::vector<int> refine(Graph const& g, std::vector<int> colour) {
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> sig(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
      std::vector<int> ns;
      for (int w : g[v]) {
        ns.push_back(colour[w]);
      }
      std::sort(ns.begin(), ns.end());
      sig[v] = {colour[v], ns};
      ids.emplace(sig[v], 0);
    }
    int k = 0;
    for (auto& [key, id] : ids) {
      id = k++;
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      colour[v] = ids[sig[v]];
    }
    if (ids.size() == classes) {
      return colour;
    }
    classes = ids.size();
  }
}

}  // namespace detail

// Refines both graphs jointly so colour names agree, then matches vertices.
inline bool are_isomorphic(Graph const& a, Graph const& b) {
  if (a.size() != b.size() || edge_count(a) != edge_count(b)) {
    return false;
  }
  int n = static_cast<int>(a.size());
  Graph both(2 * n);
  for (int v = 0; v < n; ++v) {
    both[v] = a[v];
    for (int w : b[v]) {
      both[n + v].push_back(n + w);
    }
  }
  auto colour = detail::refine(both, std::vector<int>(2 * n, 0));
  std::vector<int> ca(colour.begin(), colour.begin() + n), cb(colour.begin() + n, colour.end());
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return false;
    }
  }
  std::vector<std::vector<char>> adj_b(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) {
    for (int w : b[v]) {
      adj_b[v][w] = 1;
    }
  }
  std::vector<int> map(n, -1), used(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) {
      return true;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t] || cb[t] != ca[v]) {
        continue;
      }
      bool ok = true;
      for (int w : a[v]) {
        if (w < v && !adj_b[map[w]][t]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        int earlier = 0;
        for (int w : a[v]) {
          earlier += w < v;
        }
        int mapped = 0;
        for (int u = 0; u < v; ++u) {
          mapped += adj_b[map[u]][t];
        }
        ok = earlier == mapped;
      }
      if (!ok) {
        continue;
      }
      map[v] = t;
      used[t] = 1;
      if (self(self, v + 1)) {
        return true;
      }
      used[t] = 0;
    }
    map[v] = -1;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace reorilat
