// JSON, DOT and plain-text exports of posets, ropes, congruences and
// polytopes. Vertices are 1-based on the outside, arcs keep their 0-based
// index in the sorted arc list.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "congruence.hpp"
#include "dag_io.hpp"
#include "geometry.hpp"

namespace reorilat {

using nlohmann::json;

inline json arc_indices(ArcSet s) { return s.to_vector(); }

inline json vertex_labels(VertexSet s) {
  json a = json::array();
  s.for_each([&](int v) { a.push_back(v + 1); });
  return a;
}

inline json poset_json(FinitePoset const& p, std::vector<json> const& labels) {
  json covers = json::array();
  for (auto [i, j] : p.cover_pairs()) {
    covers.push_back({i, j});
  }
  return {{"elements", labels}, {"covers", covers}};
}

inline json reorientation_poset_json(ReorientationLattice const& l) {
  std::vector<json> labels;
  for (ArcSet e : l.elements()) {
    labels.push_back(arc_indices(e));
  }
  auto j = poset_json(l.poset(), labels);
  j["graph"] = to_json(l.dag());
  return j;
}

// Arcs kept from D in green, reversed arcs in red.
inline std::string reorientation_label(Dag const& d, ArcSet rev) {
  std::string s = "<";
  for (int i = 0; i < d.num_arcs(); ++i) {
    auto [a, b] = oriented_arc(d, rev, i);
    s += std::string(i ? " " : "") + "<font color=\"" + (rev.contains(i) ? "red" : "darkgreen") + "\">" +
         std::to_string(a + 1) + "&rarr;" + std::to_string(b + 1) + "</font>";
  }
  return s + ">";
}

inline std::string poset_dot(FinitePoset const& p, std::vector<std::string> const& labels,
                             std::string const& name = "P", bool html = false) {
  std::ostringstream s;
  s << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i) {
    s << "  " << i << " [label=" << (html ? labels[i] : "\"" + labels[i] + "\"") << "];\n";
  }
  for (auto [i, j] : p.cover_pairs()) {
    s << "  " << i << " -> " << j << ";\n";
  }
  s << "}\n";
  return s.str();
}

inline std::string reorientation_hasse_dot(ReorientationLattice const& l) {
  std::vector<std::string> labels;
  for (ArcSet e : l.elements()) {
    labels.push_back(reorientation_label(l.dag(), e));
  }
  return poset_dot(l.poset(), labels, "AR", true);
}

// ---------------------------------------------------------------------------
// Ropes and congruences

inline json to_json(Rope const& r) {
  return {{"u", r.u + 1}, {"v", r.v + 1}, {"down", vertex_labels(r.down)}, {"up", vertex_labels(r.up)}};
}

inline std::string diagram_text(std::vector<Rope> const& diag) {
  std::string s;
  for (auto const& r : diag) {
    s += to_string(r) + "\n";
  }
  return s;
}

// One rope per line; blank lines and '#' comments skipped. The result is
// the smallest ideal containing the listed ropes.
inline Bitset parse_ideal(std::string const& text, RopeSet const& rs) {
  Bitset ideal(rs.size());
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) {
      line.erase(h);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    ideal |= principal_ideal(rs, parse_rope(line, rs.dag()));
  }
  return ideal;
}

inline json partial_json(Dag const& d, PartialReorientation const& p) {
  json pairs = json::array();
  auto out = partial_out(d, p);
  for (int x = 0; x < d.n(); ++x) {
    out[x].for_each([&](int y) { pairs.push_back({x + 1, y + 1}); });
  }
  json red = json::array();
  for (auto [x, y] : partial_reduction(d, p)) {
    red.push_back({x + 1, y + 1});
  }
  return {{"forward", arc_indices(p.forward)}, {"backward", arc_indices(p.backward)}, {"pairs", pairs},
          {"reduction", red}};
}

inline json congruence_json(SkeletalLattice const& sl, Congruence const& c) {
  auto const& l = sl.lattice();
  auto const& d = sl.dag();
  json ideal = json::array();
  for (auto i = c.ideal.find_first(); i != Bitset::npos; i = c.ideal.find_next(i)) {
    ideal.push_back(to_string(sl.ropes().rope(static_cast<int>(i))));
  }
  json classes = json::array();
  for (int k = 0; k < c.size(); ++k) {
    json members = json::array();
    for (int e : c.classes[k]) {
      members.push_back(arc_indices(l.element(e)));
    }
    classes.push_back({{"members", members},
                       {"minimum", arc_indices(l.element(c.minimum[k]))},
                       {"maximum", arc_indices(l.element(c.maximum[k]))},
                       {"partial", partial_json(d, partial_reorientation(sl, c, k))}});
  }
  json covers = json::array();
  for (auto [x, y] : quotient(sl, c).cover_pairs()) {
    covers.push_back({x, y});
  }
  return {{"graph", to_json(d)}, {"ideal", ideal}, {"classes", classes}, {"covers", covers}};
}

inline std::string quotient_dot(SkeletalLattice const& sl, Congruence const& c) {
  std::vector<std::string> labels;
  for (int k = 0; k < c.size(); ++k) {
    labels.push_back(reorientation_label(sl.dag(), sl.lattice().element(c.minimum[k])));
  }
  return poset_dot(quotient(sl, c), labels, "quotient", true);
}

// ---------------------------------------------------------------------------
// Polytopes

inline std::string vertex_matrix(VPolytope const& p) {
  std::string s;
  for (auto const& v : p.vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? " " : "") + v[i].get_str();
    }
    s += "\n";
  }
  return s;
}

inline json rational_row(QVector const& v) {
  json a = json::array();
  for (auto const& x : v) {
    a.push_back(x.get_str());
  }
  return a;
}

inline json polytope_json(VPolytope const& p) {
  json vs = json::array();
  for (auto const& v : p.vertices) {
    vs.push_back(rational_row(v));
  }
  return {{"vertices", vs}};
}

// "a1 ... an = b" for equalities, "a1 ... an >= b" for inequalities.
inline std::string hrep_text(HRep const& h) {
  std::string s;
  auto row = [&](LinearConstraint const& c, char const* op) {
    for (std::size_t i = 0; i < c.normal.size(); ++i) {
      s += (i ? " " : "") + c.normal[i].get_str();
    }
    s += std::string(" ") + op + " " + c.rhs.get_str() + "\n";
  };
  for (auto const& e : h.equalities) {
    row(e, "=");
  }
  for (auto const& c : h.inequalities) {
    row(c, ">=");
  }
  return s;
}

inline json hrep_json(HRep const& h) {
  json eq = json::array(), ineq = json::array();
  for (auto const& e : h.equalities) {
    eq.push_back({{"normal", rational_row(e.normal)}, {"rhs", e.rhs.get_str()}});
  }
  for (auto const& c : h.inequalities) {
    ineq.push_back({{"normal", rational_row(c.normal)}, {"rhs", c.rhs.get_str()}});
  }
  return {{"dim", h.dim}, {"equalities", eq}, {"inequalities_geq", ineq}};
}

inline void write_file(std::string const& path, std::string const& content) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorKind::usage, "cannot write " + path);
  }
  out << content;
}

}  // namespace reorilat
