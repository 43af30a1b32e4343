// Command-line front end. Errors go to stderr as one line
// "error: <Kind>: <message>" with exit code 2; `verify` exits 1 on a failed
// criterion.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <reorilat/reorilat.hpp>
#include <reorilat/io.hpp>

using namespace reorilat;
namespace fs = std::filesystem;

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_text(std::string const& path) {
  std::ifstream f(path);
  if (!f) {
    fail(ErrorKind::usage, "cannot read " + path);
  }
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// "DOWN=1,2" or "UP=" against a graph with n vertices.
VertexSet parse_decoration(std::string const& tok, std::string const& key, int n) {
  auto eq = tok.find('=');
  if (eq == std::string::npos || tok.substr(0, eq) != key) {
    fail(ErrorKind::usage, "expected " + key + "=v1,v2,... but got '" + tok + "'");
  }
  VertexSet s;
  std::stringstream in(tok.substr(eq + 1));
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) {
      continue;
    }
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (std::exception const&) {
      fail(ErrorKind::usage, "bad vertex '" + item + "' in " + key);
    }
    if (v < 1 || v > n) {
      fail(ErrorKind::usage, "vertex " + item + " out of range 1.." + std::to_string(n));
    }
    s.insert(v - 1);
  }
  return s;
}

VertexSet find_decoration(std::vector<std::string> const& toks, std::string const& key, int n) {
  for (auto const& t : toks) {
    if (t.rfind(key + "=", 0) == 0) {
      return parse_decoration(t, key, n);
    }
  }
  return {};
}

struct CongruenceSpec {
  bool sylvester = false;
  std::vector<std::string> cambrian;
  std::vector<std::string> coherent;
  std::string principal;
  std::string ideal_file;
  bool full = false;
  // One pair per subcommand the selectors were added to.
  std::vector<CLI::Option*> cambrian_opts, coherent_opts;

  void add_to(CLI::App* app) {
    auto* g = app->add_option_group("congruence", "exactly one congruence selector");
    g->add_flag("--sylvester", sylvester, "sylvester congruence (associahedron)");
    cambrian_opts.push_back(
        g->add_option("--cambrian", cambrian, "Cambrian congruence, DOWN=v1,v2 (other vertices go up)")->expected(0, 1));
    coherent_opts.push_back(
        g->add_option("--coherent,--decoration", coherent, "coherent congruence, DOWN=... UP=...")->expected(0, 2));
    g->add_option("--principal", principal, "principal ideal of the rope 'u v | down | up'");
    g->add_option("--ideal-file", ideal_file, "file with one rope per line; closed downward");
    g->add_flag("--full", full, "trivial congruence (all ropes)");
    g->require_option(1);
  }

  bool named(std::vector<CLI::Option*> const& opts) const {
    return std::any_of(opts.begin(), opts.end(), [](CLI::Option* o) { return o->count() > 0; });
  }

  Bitset ideal(RopeSet const& rs) const {
    int n = rs.dag().n();
    if (named(cambrian_opts)) {
      return cambrian_ideal(rs, find_decoration(cambrian, "DOWN", n));
    }
    if (named(coherent_opts)) {
      for (auto const& t : coherent) {
        if (t.rfind("DOWN=", 0) != 0 && t.rfind("UP=", 0) != 0) {
          fail(ErrorKind::usage, "expected DOWN=... or UP=... but got '" + t + "'");
        }
      }
      return coherent_ideal(rs, find_decoration(coherent, "DOWN", n), find_decoration(coherent, "UP", n));
    }
    if (sylvester) {
      return sylvester_ideal(rs);
    }
    if (full) {
      return full_ideal(rs);
    }
    if (!principal.empty()) {
      return principal_ideal(rs, parse_rope(principal, rs.dag()));
    }
    return parse_ideal(read_text(ideal_file), rs);
  }
};

std::string reversed_arcs(Dag const& d, ArcSet e) {
  std::string s = "{";
  bool first = true;
  e.for_each([&](int i) {
    auto a = d.arc(i);
    s += std::string(first ? "" : ", ") + std::to_string(a.tail + 1) + std::to_string(a.head + 1);
    first = false;
  });
  return s + "}";
}

void prepare_dir(std::string const& dir) {
  if (!dir.empty()) {
    fs::create_directories(dir);
  }
}

// ---------------------------------------------------------------------------

int cmd_analyze(std::string const& path, std::string const& format) {
  Dag d = read_dag_file(path);
  auto props = structural_properties(d);
  json j = {{"graph", to_json(d)},
            {"vertices", d.n()},
            {"arcs", d.num_arcs()},
            {"vertebrate", is_vertebrate(d)},
            {"filled", is_filled(d)},
            {"skeletal", is_skeletal(d)},
            {"chordal", is_chordal(d)},
            {"chordful", is_chordful(d)},
            {"lattice", props.lattice}};
  auto l = ReorientationLattice::enumerate(d);
  j["reorientations"] = l.size();
  if (is_skeletal(d)) {
    j["ropes"] = all_ropes(d).size();
  }
  if (props.lattice) {
    j["distributive"] = props.distributive;
    j["semidistributive"] = props.semidistributive;
    j["congruence_uniform"] = props.congruence_uniform;
    j["join_irreducibles"] = join_irreducibles(l).size();
    j["meet_irreducibles"] = meet_irreducibles(l).size();
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (format == "dot") {
    std::cout << reorientation_hasse_dot(l);
    return 0;
  }
  std::cout << "graph: " << d.n() << " vertices, " << d.num_arcs() << " arcs\n";
  for (char const* k : {"vertebrate", "filled", "skeletal", "chordal", "chordful"}) {
    std::cout << k << ": " << yes_no(j[k].get<bool>()) << "\n";
  }
  std::cout << "lattice: " << (props.lattice ? "yes (vertebrate)" : "no (not vertebrate)") << "\n";
  if (props.lattice) {
    std::cout << "distributive: " << yes_no(props.distributive) << "\n";
    std::cout << "semidistributive: " << yes_no(props.semidistributive) << "\n";
    std::cout << "congruence-uniform: " << yes_no(props.congruence_uniform) << "\n";
  }
  std::cout << "|AR|=" << l.size() << "\n";
  if (props.lattice) {
    std::cout << "join-irreducibles=" << j["join_irreducibles"] << "\n";
    std::cout << "meet-irreducibles=" << j["meet_irreducibles"] << "\n";
  }
  if (j.contains("ropes")) {
    std::cout << "ropes=" << j["ropes"] << "\n";
  }
  return 0;
}

int cmd_quotient(std::string const& path, CongruenceSpec const& spec, std::string const& format,
                 std::string const& out) {
  Dag d = read_dag_file(path);
  SkeletalLattice sl(d);
  auto c = congruence_from_ideal(sl, spec.ideal(sl.ropes()));
  if (!out.empty()) {
    prepare_dir(out);
    write_file(out + "/quotient.json", congruence_json(sl, c).dump(2) + "\n");
    write_file(out + "/quotient.dot", quotient_dot(sl, c));
  }
  if (format == "json") {
    std::cout << congruence_json(sl, c).dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << quotient_dot(sl, c);
  } else {
    std::cout << "classes: " << c.size() << " of " << sl.lattice().size() << "\n";
    std::cout << "ideal: " << c.ideal.count() << " of " << sl.ropes().size() << " ropes\n";
    for (int k = 0; k < c.size(); ++k) {
      auto p = partial_reorientation(sl, c, k);
      std::cout << "class " << k << ": size " << c.classes[k].size() << ", min "
                << reversed_arcs(d, sl.lattice().element(c.minimum[k])) << ", max "
                << reversed_arcs(d, sl.lattice().element(c.maximum[k])) << ", reduction";
      for (auto [x, y] : partial_reduction(d, p)) {
        std::cout << " " << x + 1 << "->" << y + 1;
      }
      std::cout << "\n";
    }
    for (auto [x, y] : quotient(sl, c).cover_pairs()) {
      std::cout << "cover " << x << " < " << y << "\n";
    }
  }
  return 0;
}

int cmd_polytope(std::string const& path, CongruenceSpec const& spec, std::uint32_t seed,
                 std::string const& out) {
  Dag d = read_dag_file(path);
  SkeletalLattice sl(d);
  auto c = congruence_from_ideal(sl, spec.ideal(sl.ropes()));
  auto shards = all_shard_polytopes(sl.ropes());
  auto weights = seed == 0 ? std::vector<Q>(c.ideal.count(), Q(1)) : random_weights(c.ideal.count(), seed);
  auto q = quotientope(sl, c, shards, weights);
  auto check = verify_quotientope(sl, c, q);

  json report = {{"graph", to_json(d)},
                 {"classes", check.classes},
                 {"vertices", check.vertices},
                 {"weights_seed", seed},
                 {"weights", rational_row(q.weights)},
                 {"class_constant", check.class_constant},
                 {"classes_distinct", check.classes_distinct},
                 {"chambers_refine", check.chambers_refine},
                 {"graph_matches", check.graph_matches},
                 {"edges_parallel", check.edges_parallel}};
  json ropes = json::array();
  for (int r : q.ropes) {
    ropes.push_back(to_string(sl.ropes().rope(r)));
  }
  report["ropes"] = ropes;

  // Closed-form facets exist for two reference polytopes with the same
  // normal fan: the graphical zonotope (trivial congruence) and the
  // removahedron (sylvester congruence). They are exported with their own
  // vertices.
  bool ok = check.ok();
  std::optional<HRep> hrep;
  std::optional<VPolytope> reference;
  std::string reference_name;
  if (c.ideal.count() == c.ideal.size()) {
    reference_name = "zonotope";
    hrep = zonotope_facets(d);
    reference = graphical_zonotope(d);
  } else if (c.ideal == sylvester_ideal(sl.ropes())) {
    reference_name = "removahedron";
    hrep = associahedron_removahedron(d);
    reference = associahedron_minkowski(d);
  }
  if (hrep) {
    bool same = vpolytope_of(hrep_vertices(*hrep)).vertices == reference->vertices;
    report[reference_name] = {{"vertices", reference->size()}, {"hrep_matches_vertices", same}};
    ok = ok && same;
  }
  report["verified"] = ok;

  if (!out.empty()) {
    prepare_dir(out);
    write_file(out + "/vertices.txt", vertex_matrix(q.polytope));
    write_file(out + "/vertices.json", polytope_json(q.polytope).dump(2) + "\n");
    if (hrep) {
      write_file(out + "/" + reference_name + ".vertices.txt", vertex_matrix(*reference));
      write_file(out + "/" + reference_name + ".hrep.txt", hrep_text(*hrep));
      write_file(out + "/" + reference_name + ".hrep.json", hrep_json(*hrep).dump(2) + "\n");
    }
    json sh = json::array();
    for (int r : q.ropes) {
      sh.push_back({{"rope", to_string(sl.ropes().rope(r))},
                    {"vertices", polytope_json(shards[r].polytope)["vertices"]},
                    {"hrep", hrep_json(shards[r].hrep)}});
    }
    write_file(out + "/shards.json", sh.dump(2) + "\n");
    write_file(out + "/report.json", report.dump(2) + "\n");
  }
  std::cout << "classes: " << check.classes << "\n";
  std::cout << "vertices: " << check.vertices << "\n";
  if (hrep) {
    std::cout << reference_name << " hrep matches vertices: "
              << yes_no(report[reference_name]["hrep_matches_vertices"].get<bool>()) << "\n";
  }
  std::cout << "verified: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_classify(std::string const& graph, std::string const& subgraph, bool json_out) {
  Dag d = read_dag_file(graph);
  Dag sub = read_dag_file(subgraph);
  RestrictionMap m(d, sub);
  auto k = classify_lattice_map(m);
  std::string verdict = k.is_interval_isomorphism  ? "interval-isomorphism"
                        : k.is_lattice_quotient_map ? "lattice-quotient"
                        : k.fibers_are_intervals    ? "interval-fibers"
                                                    : "none";
  auto w = pathful_violation(m);
  json j = {{"weakly_pathful", is_weakly_pathful(m)},
            {"fibers_are_intervals", k.fibers_are_intervals},
            {"lattice_quotient", k.is_lattice_quotient_map},
            {"interval_isomorphism", k.is_interval_isomorphism},
            {"verdict", verdict}};
  if (w) {
    json path = json::array();
    for (int v : w->path) {
      path.push_back(v + 1);
    }
    static char const* names[] = {"", "weakly pathful", "pathful", "strongly pathful"};
    j["witness"] = {{"fails", names[w->level]}, {"path", path}};
  }
  if (json_out) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "weakly pathful: " << yes_no(j["weakly_pathful"].get<bool>()) << "\n";
  std::cout << "fibers are intervals: " << yes_no(k.fibers_are_intervals) << "\n";
  std::cout << "lattice quotient map: " << yes_no(k.is_lattice_quotient_map) << "\n";
  std::cout << "interval isomorphism: " << yes_no(k.is_interval_isomorphism) << "\n";
  std::cout << "verdict: " << verdict << "\n";
  if (w) {
    std::cout << "witness: not " << j["witness"]["fails"].get<std::string>() << ", path";
    for (int v : w->path) {
      std::cout << " " << v + 1;
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(int max_vertices, bool skeletal_only, unsigned jobs, std::vector<int> const& only, bool json_out) {
  if (max_vertices < 1) {
    fail(ErrorKind::usage, "--max-vertices must be positive");
  }
  AcceptanceRun run{Scales::capped(max_vertices), jobs, skeletal_only, only};
  auto results = run_acceptance(run, [&](CriterionResult const& r) {
    if (!json_out) {
      std::cout << format_result(r) << std::endl;
    }
  });
  bool ok = std::all_of(results.begin(), results.end(), [](auto const& r) { return r.pass; });
  if (json_out) {
    json a = json::array();
    for (auto const& r : results) {
      a.push_back(to_json(r));
    }
    std::cout << json{{"max_vertices", max_vertices}, {"skeletal_only", skeletal_only}, {"pass", ok}, {"criteria", a}}
                     .dump(2)
              << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_corpus(int vertices, bool upto, bool skeletal_only, std::string const& format) {
  std::vector<Dag> gs = upto ? acceptance::graphs_upto(vertices, skeletal_only) : std::vector<Dag>{};
  if (!upto) {
    for (auto const& d : corpus_level(vertices)) {
      if (!skeletal_only || is_skeletal(d)) {
        gs.push_back(d);
      }
    }
  }
  if (format == "json") {
    json a = json::array();
    for (auto const& d : gs) {
      a.push_back(to_json(d));
    }
    std::cout << a.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < gs.size(); ++i) {
      std::cout << (i ? "\n" : "") << to_text(gs[i]);
    }
  }
  std::cerr << gs.size() << " graphs\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acyclic reorientation lattices, their quotients and quotientopes"};
  app.require_subcommand(1);

  std::string graph, subgraph, format = "text", out;
  CongruenceSpec spec;
  std::uint32_t seed = 0;
  int max_vertices = 4, vertices = 4;
  bool skeletal_only = false, json_out = false, upto = false;
  unsigned jobs = default_jobs();
  std::vector<int> only;
  auto formats = CLI::IsMember({"text", "json", "dot"});

  auto* analyze = app.add_subcommand("analyze", "graph classes, lattice verdict and counts");
  analyze->add_option("--graph", graph, "graph file (text or JSON)")->required();
  analyze->add_option("--format", format, "text|json|dot")->check(formats);

  auto* quot = app.add_subcommand("quotient", "congruence classes and quotient Hasse diagram");
  quot->add_option("--graph", graph, "skeletal graph file")->required();
  spec.add_to(quot);
  quot->add_option("--format", format, "text|json|dot")->check(formats);
  quot->add_option("--out", out, "also write quotient.json and quotient.dot here");

  auto* poly = app.add_subcommand("polytope", "quotientope as a Minkowski sum of shard polytopes");
  poly->add_option("--graph", graph, "skeletal graph file")->required();
  spec.add_to(poly);
  poly->add_option("--weights-seed", seed, "0 for unit weights, otherwise seeded random positive rationals");
  poly->add_option("--out", out, "directory for vertex, HRep and report files");

  auto* classify = app.add_subcommand("classify-restriction", "how the lattice restricts to a subgraph");
  classify->add_option("--graph", graph, "graph file")->required();
  classify->add_option("--subgraph", subgraph, "subgraph on the same vertices")->required();
  classify->add_flag("--json", json_out);

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria on the DAG corpus");
  verify->add_option("--max-vertices", max_vertices, "cap on graph size")->required();
  verify->add_flag("--skeletal-only", skeletal_only, "only the criteria that sweep skeletal graphs");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, 14));
  verify->add_flag("--json", json_out, "machine-readable report on stdout");

  auto* corp = app.add_subcommand("corpus", "DAGs up to isomorphism");
  corp->add_option("--vertices", vertices, "vertex count")->required()->check(CLI::Range(1, 7));
  corp->add_flag("--upto", upto, "all sizes from 1");
  corp->add_flag("--skeletal-only", skeletal_only);
  corp->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "error: UsageError: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*analyze) {
      return cmd_analyze(graph, format);
    }
    if (*quot) {
      return cmd_quotient(graph, spec, format, out);
    }
    if (*poly) {
      return cmd_polytope(graph, spec, seed, out);
    }
    if (*classify) {
      return cmd_classify(graph, subgraph, json_out);
    }
    if (*verify) {
      return cmd_verify(max_vertices, skeletal_only, jobs, only, json_out);
    }
    if (*corp) {
      return cmd_corpus(vertices, upto, skeletal_only, format);
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
