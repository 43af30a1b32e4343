// Brute-force reference computations for the unit tests. They only read the
// arc list of a Dag and never call the library's algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <reorilat/dag.hpp>

namespace brute {

using reorilat::Dag;

// Arcs after reversing those in mask, as (tail, head) pairs.
inline std::vector<std::pair<int, int>> oriented(Dag const& d, std::uint64_t mask) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < d.num_arcs(); ++i) {
    auto a = d.arc(i);
    if ((mask >> i) & 1U) {
      out.emplace_back(a.head, a.tail);
    } else {
      out.emplace_back(a.tail, a.head);
    }
  }
  return out;
}

// Repeatedly strip sources; acyclic iff everything goes.
inline bool acyclic(int n, std::vector<std::pair<int, int>> const& arcs) {
  std::vector<int> indeg(n, 0);
  for (auto [u, v] : arcs) {
    ++indeg[v];
  }
  std::vector<bool> gone(n, false);
  for (int round = 0; round < n; ++round) {
    int s = -1;
    for (int v = 0; v < n && s < 0; ++v) {
      if (!gone[v] && indeg[v] == 0) {
        s = v;
      }
    }
    if (s < 0) {
      return false;
    }
    gone[s] = true;
    for (auto [u, v] : arcs) {
      if (u == s) {
        --indeg[v];
      }
    }
  }
  return true;
}

inline std::vector<std::uint64_t> acyclic_masks(Dag const& d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.num_arcs()); ++m) {
    if (acyclic(d.n(), oriented(d, m))) {
      out.push_back(m);
    }
  }
  return out;
}

inline bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

// Is the inclusion order on `elems` a lattice? Checks that every pair has a
// least upper bound and a greatest lower bound among the elements.
inline bool inclusion_lattice(std::vector<std::uint64_t> const& elems) {
  for (auto a : elems) {
    for (auto b : elems) {
      std::vector<std::uint64_t> ups, downs;
      for (auto c : elems) {
        if (subset(a, c) && subset(b, c)) {
          ups.push_back(c);
        }
        if (subset(c, a) && subset(c, b)) {
          downs.push_back(c);
        }
      }
      auto least = std::count_if(ups.begin(), ups.end(), [&](std::uint64_t c) {
        return std::all_of(ups.begin(), ups.end(), [&](std::uint64_t x) { return subset(c, x); });
      });
      auto greatest = std::count_if(downs.begin(), downs.end(), [&](std::uint64_t c) {
        return std::all_of(downs.begin(), downs.end(), [&](std::uint64_t x) { return subset(x, c); });
      });
      if (least != 1 || greatest != 1) {
        return false;
      }
    }
  }
  return true;
}

// Does D contain a directed path u -> v?
inline bool reaches(Dag const& d, int u, int v) {
  std::vector<bool> seen(d.n(), false);
  std::vector<int> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto a : d.arcs()) {
      if (a.tail == x && !seen[a.head]) {
        seen[a.head] = true;
        stack.push_back(a.head);
      }
    }
  }
  return u != v && seen[v];
}

inline std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) {
    c = c * 2 * (2 * k + 1) / (k + 2);
  }
  return c;
}

}  // namespace brute
