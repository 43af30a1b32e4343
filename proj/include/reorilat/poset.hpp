// Finite posets and lattices on elements 0..N-1, with the order-theoretic
// checks used as references for the reorientation-specific code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "error.hpp"

namespace reorilat {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

class FinitePoset {
 public:
  FinitePoset() = default;

  // up[i] is the set of j with i <= j, including i itself.
  explicit FinitePoset(std::vector<Bitset> up) : up_(std::move(up)) {
    int n = size();
    down_.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i) {
      for (auto j = up_[i].find_first(); j != Bitset::npos; j = up_[i].find_next(j)) {
        down_[j].set(i);
      }
    }
    upper_.assign(n, {});
    lower_.assign(n, {});
    for (int i = 0; i < n; ++i) {
      Bitset strict_up = up_[i];
      strict_up.reset(i);
      for (auto j = strict_up.find_first(); j != Bitset::npos; j = strict_up.find_next(j)) {
        Bitset between = strict_up & down_[j];
        between.reset(j);
        if (between.none()) {
          upper_[i].push_back(static_cast<int>(j));
          lower_[j].push_back(i);
        }
      }
    }
  }

  template <class Leq>
  static FinitePoset from_relation(int n, Leq&& leq) {
    std::vector<Bitset> up(n, Bitset(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j || leq(i, j)) {
          up[i].set(j);
        }
      }
    }
    return FinitePoset(std::move(up));
  }

  int size() const { return static_cast<int>(up_.size()); }
  bool leq(int i, int j) const { return up_[i].test(j); }
  bool less(int i, int j) const { return i != j && up_[i].test(j); }
  Bitset const& up(int i) const { return up_[i]; }
  Bitset const& down(int i) const { return down_[i]; }
  std::vector<int> const& upper_covers(int i) const { return upper_[i]; }
  std::vector<int> const& lower_covers(int i) const { return lower_[i]; }
  bool covers(int i, int j) const {
    return std::find(upper_[i].begin(), upper_[i].end(), j) != upper_[i].end();
  }

  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i) {
      for (int j : upper_[i]) {
        out.emplace_back(i, j);
      }
    }
    return out;
  }

  // Least element of an up-closed set, if any.
  std::optional<int> least_of(Bitset const& s) const {
    std::optional<int> best;
    std::size_t best_count = 0;
    for (auto k = s.find_first(); k != Bitset::npos; k = s.find_next(k)) {
      std::size_t c = up_[k].count();
      if (!best || c > best_count) {
        best = static_cast<int>(k);
        best_count = c;
      }
    }
    if (best && (s & up_[*best]) == s) {
      return best;
    }
    return std::nullopt;
  }

  std::optional<int> greatest_of(Bitset const& s) const {
    std::optional<int> best;
    std::size_t best_count = 0;
    for (auto k = s.find_first(); k != Bitset::npos; k = s.find_next(k)) {
      std::size_t c = down_[k].count();
      if (!best || c > best_count) {
        best = static_cast<int>(k);
        best_count = c;
      }
    }
    if (best && (s & down_[*best]) == s) {
      return best;
    }
    return std::nullopt;
  }

  std::optional<int> join(int i, int j) const { return least_of(up_[i] & up_[j]); }
  std::optional<int> meet(int i, int j) const { return greatest_of(down_[i] & down_[j]); }

  // Every pair has a least upper bound and a greatest lower bound.
  bool is_lattice() const {
    int n = size();
    if (n == 0) {
      return false;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!join(i, j) || !meet(i, j)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
      if (lower_[i].empty()) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
      if (upper_[i].empty()) {
        out.push_back(i);
      }
    }
    return out;
  }

  // Number of pairs i <= j.
  std::size_t interval_count() const {
    std::size_t c = 0;
    for (auto const& u : up_) {
      c += u.count();
    }
    return c;
  }

  Bitset interval(int i, int j) const { return up_[i] & down_[j]; }

  bool is_convex(Bitset const& s) const {
    for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) {
      for (auto j = s.find_first(); j != Bitset::npos; j = s.find_next(j)) {
        if (up_[i].test(j) && !(up_[i] & down_[j]).is_subset_of(s)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_interval(Bitset const& s) const {
    auto bottom = least_of_within(s);
    auto top = greatest_of_within(s);
    return bottom && top && interval(*bottom, *top) == s;
  }

  std::optional<int> least_of_within(Bitset const& s) const {
    for (auto k = s.find_first(); k != Bitset::npos; k = s.find_next(k)) {
      if (s.is_subset_of(up_[k])) {
        return static_cast<int>(k);
      }
    }
    return std::nullopt;
  }

  std::optional<int> greatest_of_within(Bitset const& s) const {
    for (auto k = s.find_first(); k != Bitset::npos; k = s.find_next(k)) {
      if (s.is_subset_of(down_[k])) {
        return static_cast<int>(k);
      }
    }
    return std::nullopt;
  }

  bool is_down_closed(Bitset const& s) const {
    for (auto k = s.find_first(); k != Bitset::npos; k = s.find_next(k)) {
      if (!down_[k].is_subset_of(s)) {
        return false;
      }
    }
    return true;
  }

  bool is_up_closed(Bitset const& s) const {
    for (auto k = s.find_first(); k != Bitset::npos; k = s.find_next(k)) {
      if (!up_[k].is_subset_of(s)) {
        return false;
      }
    }
    return true;
  }

  // Elements in an order compatible with <= (by size of down-set).
  std::vector<int> linear_extension() const {
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return down_[a].count() < down_[b].count(); });
    return order;
  }

  // Undirected cover graph as adjacency lists.
  std::vector<std::vector<int>> cover_graph() const {
    std::vector<std::vector<int>> adj(size());
    for (auto [i, j] : cover_pairs()) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
    }
    return adj;
  }

  bool operator==(FinitePoset const& o) const { return up_ == o.up_; }

 private:
  std::vector<Bitset> up_, down_;
  std::vector<std::vector<int>> upper_, lower_;
};

// Restriction of a poset to a subset, in increasing index order.
inline FinitePoset subposet(FinitePoset const& p, std::vector<int> const& elems) {
  int k = static_cast<int>(elems.size());
  return FinitePoset::from_relation(k, [&](int i, int j) { return p.leq(elems[i], elems[j]); });
}

// Whether `map` (indices of p into q) is an order isomorphism.
inline bool is_isomorphism(FinitePoset const& p, FinitePoset const& q, std::vector<int> const& map) {
  if (p.size() != q.size() || static_cast<int>(map.size()) != p.size()) {
    return false;
  }
  std::vector<char> hit(q.size(), 0);
  for (int m : map) {
    if (m < 0 || m >= q.size() || hit[m]) {
      return false;
    }
    hit[m] = 1;
  }
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (p.leq(i, j) != q.leq(map[i], map[j])) {
        return false;
      }
    }
  }
  return true;
}

// Doubling of a subset X: elements outside X stay single, elements of X are
// split into (x,0) < (x,1). Returns the poset and, for each new element, the
// pair (old index, bit) with bit -1 for elements outside X.
struct Doubling {
  FinitePoset poset;
  std::vector<std::pair<int, int>> origin;
};

inline Doubling double_subset(FinitePoset const& p, Bitset const& x) {
  Doubling out;
  for (int i = 0; i < p.size(); ++i) {
    if (x.test(i)) {
      out.origin.emplace_back(i, 0);
      out.origin.emplace_back(i, 1);
    } else {
      out.origin.emplace_back(i, -1);
    }
  }
  int k = static_cast<int>(out.origin.size());
  out.poset = FinitePoset::from_relation(k, [&](int s, int t) {
    auto [a, i] = out.origin[s];
    auto [b, j] = out.origin[t];
    if (!p.leq(a, b)) {
      return false;
    }
    return i < 0 || j < 0 || i <= j;
  });
  return out;
}

// Lower ideals of a poset, as bitsets, passed to a visitor. The visitor
// returns false to stop early.
template <class Visit>
void for_each_lower_ideal(FinitePoset const& p, Visit&& visit) {
  auto order = p.linear_extension();
  int n = p.size();
  Bitset cur(n);
  bool stop = false;
  auto rec = [&](auto&& self, int k) -> void {
    if (stop) {
      return;
    }
    if (k == n) {
      if (!visit(cur)) {
        stop = true;
      }
      return;
    }
    int e = order[k];
    self(self, k + 1);
    bool ok = true;
    for (int l : p.lower_covers(e)) {
      ok = ok && cur.test(l);
    }
    if (ok) {
      cur.set(e);
      self(self, k + 1);
      cur.reset(e);
    }
  };
  rec(rec, 0);
}

// ---------------------------------------------------------------------------
// Lattices with tabulated join and meet.

class Lattice {
 public:
  Lattice() = default;

  explicit Lattice(FinitePoset p) : poset_(std::move(p)) {
    int n = poset_.size();
    join_.assign(static_cast<std::size_t>(n) * n, -1);
    meet_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        auto jn = poset_.join(i, j);
        auto mt = poset_.meet(i, j);
        if (!jn || !mt) {
          fail(ErrorKind::not_a_lattice, "elements " + std::to_string(i) + " and " +
                                             std::to_string(j) + " lack a join or meet");
        }
        join_[i * n + j] = join_[j * n + i] = *jn;
        meet_[i * n + j] = meet_[j * n + i] = *mt;
      }
    }
  }

  FinitePoset const& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  int join(int i, int j) const { return join_[i * size() + j]; }
  int meet(int i, int j) const { return meet_[i * size() + j]; }

  std::vector<int> join_irreducibles() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
      if (poset_.lower_covers(i).size() == 1) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<int> meet_irreducibles() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
      if (poset_.upper_covers(i).size() == 1) {
        out.push_back(i);
      }
    }
    return out;
  }

 private:
  FinitePoset poset_;
  std::vector<int> join_, meet_;
};

// Partition of 0..N-1 given by the smallest member of each block.
using Partition = std::vector<int>;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      x = parent_[x] = parent_[parent_[x]];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (a > b) {
      std::swap(a, b);
    }
    parent_[b] = a;
    return true;
  }
  Partition partition() {
    Partition p(parent_.size());
    std::vector<int> least(parent_.size(), -1);
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      int r = find(i);
      if (least[r] < 0) {
        least[r] = i;
      }
      p[i] = least[r];
    }
    return p;
  }

 private:
  std::vector<int> parent_;
};

inline int block_count(Partition const& p) {
  int c = 0;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    c += p[i] == i;
  }
  return c;
}

// Smallest congruence identifying the given pairs.
inline Partition congruence_generated(Lattice const& l, std::vector<std::pair<int, int>> const& pairs) {
  UnionFind uf(l.size());
  std::queue<std::pair<int, int>> todo;
  for (auto [a, b] : pairs) {
    if (uf.unite(a, b)) {
      todo.emplace(a, b);
    }
  }
  while (!todo.empty()) {
    auto [x, y] = todo.front();
    todo.pop();
    for (int z = 0; z < l.size(); ++z) {
      int p = l.join(x, z), q = l.join(y, z);
      if (uf.unite(p, q)) {
        todo.emplace(p, q);
      }
      p = l.meet(x, z);
      q = l.meet(y, z);
      if (uf.unite(p, q)) {
        todo.emplace(p, q);
      }
    }
  }
  return uf.partition();
}

inline Partition principal_congruence(Lattice const& l, int a, int b) {
  return congruence_generated(l, {{a, b}});
}

inline bool is_congruence(Lattice const& l, Partition const& p) {
  for (int x = 0; x < l.size(); ++x) {
    for (int y = x + 1; y < l.size(); ++y) {
      if (p[x] != p[y]) {
        continue;
      }
      for (int z = 0; z < l.size(); ++z) {
        if (p[l.join(x, z)] != p[l.join(y, z)] || p[l.meet(x, z)] != p[l.meet(y, z)]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline Partition join_partitions(Partition const& a, Partition const& b) {
  UnionFind uf(static_cast<int>(a.size()));
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    uf.unite(i, a[i]);
    uf.unite(i, b[i]);
  }
  return uf.partition();
}

// All congruences, as the closure of the cover-generated congruences under
// joins (the transitive closure of a union of congruences is a congruence).
inline std::vector<Partition> all_congruences(Lattice const& l) {
  std::vector<Partition> gens;
  std::set<Partition> seen_gen;
  for (auto [a, b] : l.poset().cover_pairs()) {
    auto c = principal_congruence(l, a, b);
    if (seen_gen.insert(c).second) {
      gens.push_back(c);
    }
  }
  Partition identity(l.size());
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Partition> seen{identity};
  std::vector<Partition> todo{identity};
  while (!todo.empty()) {
    Partition cur = todo.back();
    todo.pop_back();
    for (auto const& g : gens) {
      auto nxt = join_partitions(cur, g);
      if (seen.insert(nxt).second) {
        todo.push_back(nxt);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool is_distributive(Lattice const& l) {
  int n = l.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_join_semidistributive(Lattice const& l) {
  int n = l.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        int xy = l.join(x, y);
        if (xy == l.join(x, z) && l.join(x, l.meet(y, z)) != xy) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_meet_semidistributive(Lattice const& l) {
  int n = l.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        int xy = l.meet(x, y);
        if (xy == l.meet(x, z) && l.meet(x, l.join(y, z)) != xy) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_semidistributive(Lattice const& l) {
  return is_join_semidistributive(l) && is_meet_semidistributive(l);
}

// con(j_*, j) for each join irreducible j, and con(m, m^*) for each meet
// irreducible m.
struct IrreducibleCongruences {
  std::vector<int> joins, meets;
  std::vector<Partition> of_join, of_meet;
};

inline IrreducibleCongruences irreducible_congruences(Lattice const& l) {
  IrreducibleCongruences r;
  r.joins = l.join_irreducibles();
  r.meets = l.meet_irreducibles();
  for (int j : r.joins) {
    r.of_join.push_back(principal_congruence(l, l.poset().lower_covers(j)[0], j));
  }
  for (int m : r.meets) {
    r.of_meet.push_back(principal_congruence(l, m, l.poset().upper_covers(m)[0]));
  }
  return r;
}

// No join irreducible j below a meet irreducible m with con(j_*, j) = con(m, m^*).
inline bool is_congruence_normal(Lattice const& l, IrreducibleCongruences const& ic) {
  for (std::size_t a = 0; a < ic.joins.size(); ++a) {
    for (std::size_t b = 0; b < ic.meets.size(); ++b) {
      if (l.poset().leq(ic.joins[a], ic.meets[b]) && ic.of_join[a] == ic.of_meet[b]) {
        return false;
      }
    }
  }
  return true;
}

// Both irreducible-to-congruence maps are injective. In a finite lattice they
// always reach every join irreducible congruence, so this is bijectivity.
inline bool is_congruence_uniform(IrreducibleCongruences const& ic) {
  std::set<Partition> a(ic.of_join.begin(), ic.of_join.end());
  std::set<Partition> b(ic.of_meet.begin(), ic.of_meet.end());
  return a.size() == ic.of_join.size() && b.size() == ic.of_meet.size();
}

// Quotient poset of a lattice congruence: blocks ordered by x <= y on
// representatives after projecting down. Returns the block poset and the
// block index of each element.
struct QuotientPoset {
  FinitePoset poset;
  std::vector<int> block_of;
  std::vector<std::vector<int>> blocks;
};

inline QuotientPoset quotient_poset(FinitePoset const& p, Partition const& part) {
  QuotientPoset q;
  std::map<int, int> id;
  q.block_of.resize(part.size());
  for (int i = 0; i < static_cast<int>(part.size()); ++i) {
    auto it = id.find(part[i]);
    if (it == id.end()) {
      it = id.emplace(part[i], static_cast<int>(q.blocks.size())).first;
      q.blocks.emplace_back();
    }
    q.block_of[i] = it->second;
    q.blocks[it->second].push_back(i);
  }
  int k = static_cast<int>(q.blocks.size());
  // X <= Y iff some x in X and y in Y have x <= y, closed transitively.
  std::vector<Bitset> up(k, Bitset(k));
  for (int x = 0; x < p.size(); ++x) {
    auto const& u = p.up(x);
    for (auto y = u.find_first(); y != Bitset::npos; y = u.find_next(y)) {
      up[q.block_of[x]].set(q.block_of[y]);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < k; ++a) {
      Bitset acc = up[a];
      for (auto b = up[a].find_first(); b != Bitset::npos; b = up[a].find_next(b)) {
        acc |= up[b];
      }
      if (acc != up[a]) {
        up[a] = acc;
        changed = true;
      }
    }
  }
  q.poset = FinitePoset(std::move(up));
  return q;
}

}  // namespace reorilat
