// Named small graphs and all DAGs up to isomorphism on few vertices.
#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <vector>

#include "dag.hpp"

namespace reorilat {

namespace graphs {

// Input is 1-based, as in the text format.
inline Dag from_one_based(int n, std::vector<std::pair<int, int>> arcs) {
  for (auto& [u, v] : arcs) {
    --u;
    --v;
  }
  return Dag(n, arcs);
}

// Transitive tournament 1 -> 2 -> ... -> n.
inline Dag tournament(int n) {
  std::vector<std::pair<int, int>> a;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      a.emplace_back(i, j);
    }
  }
  return Dag(n, a);
}

inline Dag path(int n) {
  std::vector<std::pair<int, int>> a;
  for (int i = 0; i + 1 < n; ++i) {
    a.emplace_back(i, i + 1);
  }
  return Dag(n, a);
}

inline Dag square() { return from_one_based(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
inline Dag diamond() { return from_one_based(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }
inline Dag triangle_with_tail() { return from_one_based(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

}  // namespace graphs

// Canonical form: the relabelling whose sorted arc list is lexicographically
// smallest. For a fixed arc count that is the relabelling maximising the
// adjacency bit string read in (tail, head) order, which is what we compute.
inline std::uint64_t adjacency_code(int n, std::vector<Arc> const& arcs, std::vector<int> const& p) {
  std::uint64_t code = 0;
  for (auto [u, v] : arcs) {
    code |= std::uint64_t{1} << (n * n - 1 - (p[u] * n + p[v]));
  }
  return code;
}

inline Dag dag_from_code(int n, std::uint64_t code) {
  std::vector<std::pair<int, int>> a;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if ((code >> (n * n - 1 - (u * n + v))) & 1U) {
        a.emplace_back(u, v);
      }
    }
  }
  return Dag(n, a);
}

inline std::uint64_t canonical_code(Dag const& d) {
  int n = d.n();
  if (n > 8) {
    fail(ErrorKind::too_large, "canonical form limited to 8 vertices");
  }
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = 0;
  do {
    best = std::max(best, adjacency_code(n, d.arcs(), p));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline Dag canonical_form(Dag const& d) { return dag_from_code(d.n(), canonical_code(d)); }

// All DAGs on exactly n vertices up to isomorphism, in canonical form, sorted
// by arc count then code. Every DAG has a labelling with arcs i -> j for i < j,
// so we sweep subsets of those pairs.
inline std::vector<Dag> dags_on(int n) {
  if (n > 7) {
    fail(ErrorKind::too_large, "corpus limited to 7 vertices");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<std::pair<int, std::uint64_t>, std::greater<>> seen;
  std::vector<Arc> arcs;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    arcs.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((m >> k) & 1U) {
        arcs.push_back({pairs[k].first, pairs[k].second});
      }
    }
    std::uint64_t best = 0;
    for (auto const& q : perms) {
      best = std::max(best, adjacency_code(n, arcs, q));
    }
    seen.emplace(-static_cast<int>(arcs.size()), best);
  }
  std::vector<Dag> out;
  for (auto [negm, code] : seen) {
    out.push_back(dag_from_code(n, code));
  }
  return out;
}

// DAGs on 1..max_n vertices, cached per size.
inline std::vector<Dag> const& corpus_level(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Dag>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, dags_on(n)).first;
  }
  return it->second;
}

inline std::vector<Dag> corpus(int max_n) {
  std::vector<Dag> out;
  for (int n = 1; n <= max_n; ++n) {
    auto const& level = corpus_level(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace reorilat
