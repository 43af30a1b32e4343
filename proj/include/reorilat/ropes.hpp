// Ropes (u, v, down, up) and non-crossing rope diagrams.
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace reorilat {

struct Rope {
  int u = 0;
  int v = 0;
  VertexSet down;
  VertexSet up;
  bool operator==(Rope const&) const = default;
};

// Vertices w with (u,w) and (w,v) both arcs of D. For filled D this is the
// transitive support of (u,v) without its endpoints.
inline VertexSet rope_interior(Dag const& d, int a) {
  auto [u, v] = d.arc(a);
  return d.out(u) & d.in(v);
}

inline bool is_valid_rope(Dag const& d, Rope const& r) {
  if (r.u < 0 || r.v < 0 || r.u >= d.n() || r.v >= d.n() || !d.has_arc(r.u, r.v)) {
    return false;
  }
  VertexSet in = rope_interior(d, d.arc_index(r.u, r.v));
  return !r.down.intersects(r.up) && (r.down | r.up) == in;
}

// Canonical order: by arc index, then by down set.
inline bool rope_less(Dag const& d, Rope const& a, Rope const& b) {
  int ia = d.arc_index(a.u, a.v), ib = d.arc_index(b.u, b.v);
  return ia != ib ? ia < ib : a.down.bits() < b.down.bits();
}

// All ropes, without checking that D is skeletal.
inline std::vector<Rope> build_ropes(Dag const& d) {
  std::vector<Rope> out;
  for (int a = 0; a < d.num_arcs(); ++a) {
    auto [u, v] = d.arc(a);
    VertexSet in = rope_interior(d, a);
    auto members = in.to_vector();
    std::vector<VertexSet> downs;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << members.size()); ++m) {
      VertexSet down;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if ((m >> i) & 1U) {
          down.insert(members[i]);
        }
      }
      downs.push_back(down);
    }
    std::sort(downs.begin(), downs.end());
    for (auto down : downs) {
      out.push_back({u, v, down, in - down});
    }
  }
  return out;
}

inline void require_skeletal(Dag const& d) {
  if (!is_skeletal(d)) {
    fail(ErrorKind::not_skeletal, "graph is not skeletal");
  }
}

inline std::vector<Rope> all_ropes(Dag const& d) {
  require_skeletal(d);
  return build_ropes(d);
}

// The rope read off a reorientation at an arc (u,v) of D.
inline Rope rope_at(Dag const& d, ArcSet rev, int a) {
  auto [u, v] = d.arc(a);
  Rope r{u, v, {}, {}};
  rope_interior(d, a).for_each([&](int w) {
    bool first = rev.contains(d.arc_index(u, w));
    bool second = rev.contains(d.arc_index(w, v));
    if (first && !second) {
      r.down.insert(w);
    } else if (!first && second) {
      r.up.insert(w);
    }
  });
  return r;
}

inline Rope rope_of_join_irreducible(Dag const& d, ArcSet j) {
  ArcSet red = reduction_arcs(d, j) & j;
  if (red.size() != 1) {
    fail(ErrorKind::not_join_irreducible, "reorientation is not join irreducible");
  }
  return rope_at(d, j, red.first());
}

inline Rope rope_of_meet_irreducible(Dag const& d, ArcSet m) {
  ArcSet red = reduction_arcs(d, m) - m;
  if (red.size() != 1) {
    fail(ErrorKind::not_meet_irreducible, "reorientation is not meet irreducible");
  }
  return rope_at(d, m, red.first());
}

// Reverse (w,w') iff w in up + u and w' in down + v.
inline ArcSet join_irreducible_of_rope(Dag const& d, Rope const& r) {
  VertexSet tails = r.up | VertexSet::single(r.u);
  VertexSet heads = r.down | VertexSet::single(r.v);
  ArcSet e;
  for (int i = 0; i < d.num_arcs(); ++i) {
    if (tails.contains(d.arc(i).tail) && heads.contains(d.arc(i).head)) {
      e.insert(i);
    }
  }
  return e;
}

// Keep (w,w') iff w in down + u and w' in up + v; reverse everything else.
inline ArcSet meet_irreducible_of_rope(Dag const& d, Rope const& r) {
  VertexSet tails = r.down | VertexSet::single(r.u);
  VertexSet heads = r.up | VertexSet::single(r.v);
  ArcSet e = d.all_arcs();
  for (int i = 0; i < d.num_arcs(); ++i) {
    if (tails.contains(d.arc(i).tail) && heads.contains(d.arc(i).head)) {
      e.erase(i);
    }
  }
  return e;
}

inline VertexSet ends(Rope const& r) { return VertexSet::single(r.u) | VertexSet::single(r.v); }

// Distinct w, w' with w in (down + ends) & (up' + ends') and
// w' in (up + ends) & (down' + ends').
inline bool crossing(Rope const& a, Rope const& b) {
  VertexSet first = (a.down | ends(a)) & (b.up | ends(b));
  VertexSet second = (a.up | ends(a)) & (b.down | ends(b));
  if (first.empty() || second.empty()) {
    return false;
  }
  return first.size() > 1 || second.size() > 1 || first != second;
}

inline bool is_subrope(Rope const& a, Rope const& b) {
  return ends(a).subset_of(ends(b) | b.down | b.up) && a.down.subset_of(b.down) && a.up.subset_of(b.up);
}

// No arc (w,w') of D with w in (up + u) & (down' + u') and
// w' in (down + v) & (up' + v').
inline bool arrow(Dag const& d, Rope const& j, Rope const& m) {
  VertexSet tails = (j.up | VertexSet::single(j.u)) & (m.down | VertexSet::single(m.u));
  VertexSet heads = (j.down | VertexSet::single(j.v)) & (m.up | VertexSet::single(m.v));
  bool found = false;
  tails.for_each([&](int w) { found = found || d.out(w).intersects(heads); });
  return !found;
}

// Ropes at the arcs reversed (resp. not reversed) in the transitive
// reduction of a reorientation.
inline std::vector<Rope> join_diagram(Dag const& d, ArcSet e) {
  std::vector<Rope> out;
  (reduction_arcs(d, e) & e).for_each([&](int a) { out.push_back(rope_at(d, e, a)); });
  return out;
}

inline std::vector<Rope> meet_diagram(Dag const& d, ArcSet e) {
  std::vector<Rope> out;
  (reduction_arcs(d, e) - e).for_each([&](int a) { out.push_back(rope_at(d, e, a)); });
  return out;
}

inline bool is_noncrossing(std::vector<Rope> const& diag) {
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (crossing(diag[i], diag[j])) {
        return false;
      }
    }
  }
  return true;
}

inline ArcSet reorientation_of_join_diagram(Dag const& d, std::vector<Rope> const& diag) {
  if (!is_noncrossing(diag)) {
    fail(ErrorKind::crossing_ropes, "diagram has crossing ropes");
  }
  ArcSet e;
  for (auto const& r : diag) {
    e = join_by_closure(d, e, join_irreducible_of_rope(d, r));
  }
  return e;
}

inline ArcSet reorientation_of_meet_diagram(Dag const& d, std::vector<Rope> const& diag) {
  if (!is_noncrossing(diag)) {
    fail(ErrorKind::crossing_ropes, "diagram has crossing ropes");
  }
  ArcSet e = d.all_arcs();
  for (auto const& r : diag) {
    e = meet_by_closure(d, e, meet_irreducible_of_rope(d, r));
  }
  return e;
}

struct Bidiagram {
  std::vector<Rope> joins;
  std::vector<Rope> meets;
};

inline bool is_bidiagram(Dag const& d, Bidiagram const& b) {
  if (!is_noncrossing(b.joins) || !is_noncrossing(b.meets)) {
    return false;
  }
  for (auto const& j : b.joins) {
    for (auto const& m : b.meets) {
      if (!arrow(d, j, m)) {
        return false;
      }
    }
  }
  return true;
}

inline Bidiagram interval_to_bidiagram(Dag const& d, ArcSet low, ArcSet high) {
  if (!low.subset_of(high)) {
    fail(ErrorKind::not_an_interval, "lower end is not below upper end");
  }
  return {join_diagram(d, low), meet_diagram(d, high)};
}

inline std::pair<ArcSet, ArcSet> bidiagram_to_interval(Dag const& d, Bidiagram const& b) {
  ArcSet low = reorientation_of_join_diagram(d, b.joins);
  ArcSet high = reorientation_of_meet_diagram(d, b.meets);
  if (!low.subset_of(high)) {
    fail(ErrorKind::not_an_interval, "ropes do not describe an interval");
  }
  return {low, high};
}

// ---------------------------------------------------------------------------
// Interned ropes of one Dag.

class RopeSet {
 public:
  RopeSet() = default;

  explicit RopeSet(Dag const& d) : RopeSet(d, all_ropes(d)) {}

  static RopeSet unchecked(Dag const& d) { return RopeSet(d, build_ropes(d)); }

  Dag const& dag() const { return dag_; }
  int size() const { return static_cast<int>(ropes_.size()); }
  Rope const& rope(int i) const { return ropes_[i]; }
  std::vector<Rope> const& ropes() const { return ropes_; }

  int index_of(Rope const& r) const {
    auto it = index_.find(key(r));
    return it == index_.end() ? -1 : it->second;
  }

  bool crosses(int i, int j) const { return cross_[i].test(j); }
  Bitset const& crossing_row(int i) const { return cross_[i]; }

  FinitePoset const& subrope_poset() const { return subrope_; }

  // Ropes whose arc lies in the transitive reduction and has empty interior.
  Bitset reduction_ropes() const {
    Bitset s(size());
    ArcSet red = dag_.reduction();
    for (int i = 0; i < size(); ++i) {
      if (red.contains(dag_.arc_index(ropes_[i].u, ropes_[i].v))) {
        s.set(i);
      }
    }
    return s;
  }

  Bitset diagram_bits(std::vector<Rope> const& diag) const {
    Bitset s(size());
    for (auto const& r : diag) {
      int i = index_of(r);
      if (i < 0) {
        fail(ErrorKind::invalid_rope, "rope not in this graph");
      }
      s.set(i);
    }
    return s;
  }

  std::vector<Rope> diagram_of_bits(Bitset const& s) const {
    std::vector<Rope> out;
    for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) {
      out.push_back(ropes_[i]);
    }
    return out;
  }

  // Visits every non-crossing set of ropes within `allowed`.
  template <class Visit>
  void for_each_noncrossing(Bitset const& allowed, Visit&& visit) const {
    Bitset cur(size());
    auto rec = [&](auto&& self, Bitset const& cand) -> void {
      visit(cur);
      for (auto i = cand.find_first(); i != Bitset::npos; i = cand.find_next(i)) {
        // later candidates only, so each set is visited once
        Bitset next = cand & ~cross_[i];
        next.reset(i);
        for (auto k = next.find_first(); k != Bitset::npos && k < i; k = next.find_next(k)) {
          next.reset(k);
        }
        cur.set(i);
        self(self, next);
        cur.reset(i);
      }
    };
    rec(rec, allowed);
  }

  template <class Visit>
  void for_each_noncrossing(Visit&& visit) const {
    Bitset all(size());
    all.set();
    for_each_noncrossing(all, visit);
  }

 private:
  RopeSet(Dag const& d, std::vector<Rope> ropes) : dag_(d), ropes_(std::move(ropes)) {
    int n = size();
    for (int i = 0; i < n; ++i) {
      index_[key(ropes_[i])] = i;
    }
    cross_.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && crossing(ropes_[i], ropes_[j])) {
          cross_[i].set(j);
        }
      }
    }
    subrope_ = FinitePoset::from_relation(n, [&](int i, int j) { return is_subrope(ropes_[i], ropes_[j]); });
  }

  static std::tuple<int, int, std::uint64_t, std::uint64_t> key(Rope const& r) {
    return {r.u, r.v, r.down.bits(), r.up.bits()};
  }

  Dag dag_;
  std::vector<Rope> ropes_;
  std::map<std::tuple<int, int, std::uint64_t, std::uint64_t>, int> index_;
  std::vector<Bitset> cross_;
  FinitePoset subrope_;
};

inline std::size_t count_noncrossing_diagrams(RopeSet const& rs) {
  std::size_t c = 0;
  rs.for_each_noncrossing([&](Bitset const&) { ++c; });
  return c;
}

// Pairs of non-crossing diagrams with every join-side rope arrowing every
// meet-side rope.
inline std::size_t count_bidiagrams(RopeSet const& rs) {
  int n = rs.size();
  std::vector<Bitset> arrows(n, Bitset(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (arrow(rs.dag(), rs.rope(i), rs.rope(j))) {
        arrows[i].set(j);
      }
    }
  }
  std::size_t total = 0;
  rs.for_each_noncrossing([&](Bitset const& joins) {
    Bitset allowed(n);
    allowed.set();
    for (auto i = joins.find_first(); i != Bitset::npos; i = joins.find_next(i)) {
      allowed &= arrows[i];
    }
    rs.for_each_noncrossing(allowed, [&](Bitset const&) { ++total; });
  });
  return total;
}

// ---------------------------------------------------------------------------
// Text form: "u v | d1 d2 | n1 n2", 1-based.

inline std::string to_string(Rope const& r) {
  std::string s = std::to_string(r.u + 1) + " " + std::to_string(r.v + 1) + " |";
  r.down.for_each([&](int w) { s += " " + std::to_string(w + 1); });
  s += " |";
  r.up.for_each([&](int w) { s += " " + std::to_string(w + 1); });
  return s;
}

inline Rope parse_rope(std::string const& text, Dag const& d) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) {
    fail(ErrorKind::parse, "rope must look like 'u v | down | up': " + text);
  }
  auto numbers = [&](std::string const& s) {
    std::istringstream in(s);
    std::vector<int> xs;
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        int x = std::stoi(tok, &used);
        if (used != tok.size() || x < 1 || x > d.n()) {
          throw std::invalid_argument(tok);
        }
        xs.push_back(x - 1);
      } catch (std::exception const&) {
        fail(ErrorKind::parse, "bad vertex '" + tok + "' in rope");
      }
    }
    return xs;
  };
  auto head = numbers(parts[0]);
  if (head.size() != 2) {
    fail(ErrorKind::parse, "rope needs exactly two endpoints: " + text);
  }
  Rope r{head[0], head[1], {}, {}};
  for (int w : numbers(parts[1])) {
    r.down.insert(w);
  }
  for (int w : numbers(parts[2])) {
    r.up.insert(w);
  }
  if (!is_valid_rope(d, r)) {
    fail(ErrorKind::invalid_rope, "not a rope of this graph: " + text);
  }
  return r;
}

// Support of the rope with down vertices as triangles pointing down and up
// vertices as triangles pointing up.
inline std::string rope_to_dot(Dag const& d, Rope const& r) {
  std::string s = "digraph rope {\n";
  VertexSet support = r.down | r.up | ends(r);
  support.for_each([&](int w) {
    std::string shape = r.down.contains(w) ? "invtriangle" : r.up.contains(w) ? "triangle" : "circle";
    s += "  " + std::to_string(w + 1) + " [shape=" + shape + "];\n";
  });
  d.arcs_within(support).for_each([&](int i) {
    auto [a, b] = d.arc(i);
    s += "  " + std::to_string(a + 1) + " -> " + std::to_string(b + 1);
    s += (a == r.u && b == r.v) ? " [penwidth=2];\n" : " [style=dotted];\n";
  });
  return s + "}\n";
}

}  // namespace reorilat
