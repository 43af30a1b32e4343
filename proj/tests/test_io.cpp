#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include <reorilat/corpus.hpp>
#include <reorilat/io.hpp>

using namespace reorilat;
using namespace reorilat::graphs;

namespace {

std::size_t count_of(std::string const& s, std::string const& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) {
    ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("reorientation posets as JSON and DOT", "[io]") {
  auto l = ReorientationLattice::enumerate(tournament(3));
  auto j = reorientation_poset_json(l);
  CHECK(j["elements"].size() == 6);
  CHECK(j["covers"].size() == 6);
  CHECK(j["elements"][0] == json::array());
  CHECK(j["graph"]["n"] == 3);

  auto dot = reorientation_hasse_dot(l);
  CHECK(dot.rfind("digraph AR {", 0) == 0);
  CHECK(count_of(dot, " -> ") == 6);
  CHECK(count_of(dot, "color=\"red\"") == 9);  // each arc reversed in half the elements
  CHECK(reorientation_label(tournament(2), ArcSet::single(0)).find("2&rarr;1") != std::string::npos);
}

TEST_CASE("ropes and ideal files", "[io]") {
  Dag k4 = tournament(4);
  RopeSet rs(k4);
  auto r = parse_rope("1 4 | 2 | 3", k4);
  auto j = to_json(r);
  CHECK(j["u"] == 1);
  CHECK(j["v"] == 4);
  CHECK(j["down"] == json::array({2}));
  CHECK(j["up"] == json::array({3}));

  auto ideal = parse_ideal("# ropes to keep\n1 4 | 2 3 |\n\n2 3 | |  # short\n", rs);
  CHECK(is_rope_ideal(rs, ideal));
  CHECK(ideal == principal_ideal(rs, parse_rope("1 4 | 2 3 |", k4)));
  CHECK(parse_ideal("", rs).none());
  CHECK_THROWS_AS(parse_ideal("1 4 | 2 | 2\n", rs), Error);

  CHECK(diagram_text(join_diagram(k4, ArcSet())) == "");
  SkeletalLattice sl(k4);
  auto c = congruence_from_ideal(sl, ideal);
  CHECK(c.size() == 14);
}

TEST_CASE("congruences as JSON and DOT", "[io]") {
  SkeletalLattice sl(tournament(3));
  auto c = congruence_from_ideal(sl, sylvester_ideal(sl.ropes()));
  auto j = congruence_json(sl, c);
  CHECK(j["classes"].size() == 5);
  CHECK(j["covers"].size() == 5);
  CHECK(j["ideal"].size() == 3);
  std::size_t members = 0;
  for (auto const& cls : j["classes"]) {
    members += cls["members"].size();
    CHECK(cls.contains("partial"));
    CHECK(cls["partial"]["forward"].is_array());
  }
  CHECK(members == 6);
  // the bottom class is the identity orientation
  CHECK(j["classes"][0]["partial"]["pairs"] == json::array({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(j["classes"][0]["partial"]["reduction"] == json::array({{1, 2}, {2, 3}}));

  auto dot = quotient_dot(sl, c);
  CHECK(dot.rfind("digraph quotient {", 0) == 0);
  CHECK(count_of(dot, " -> ") == 5);
}

TEST_CASE("polytopes and inequality systems as text", "[io]") {
  VPolytope p = vpolytope_of({{Q(1, 2), Q(0)}, {Q(0), Q(3)}});
  CHECK(vertex_matrix(p) == "0 3\n1/2 0\n");
  CHECK(polytope_json(p)["vertices"][1] == json::array({"1/2", "0"}));

  HRep h = zonotope_facets(path(2));
  CHECK(hrep_text(h) == "1 1 = 1\n1 0 >= 0\n0 1 >= 0\n");
  auto j = hrep_json(h);
  CHECK(j["dim"] == 2);
  CHECK(j["equalities"].size() == 1);
  CHECK(j["inequalities_geq"].size() == 2);
  CHECK(j["equalities"][0]["rhs"] == "1");
}

TEST_CASE("files are written or refused", "[io]") {
  auto dir = std::filesystem::temp_directory_path() / "reorilat_io_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "out.txt").string();
  write_file(path, "hello\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "hello");
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/out.txt", "x"), Error);
}
