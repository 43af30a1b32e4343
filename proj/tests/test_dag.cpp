#include <catch_amalgamated.hpp>

#include <reorilat/corpus.hpp>
#include <reorilat/dag_io.hpp>
#include <reorilat/orientation.hpp>

#include "brute.hpp"

using namespace reorilat;
using namespace reorilat::graphs;

namespace {

VertexSet vs(std::initializer_list<int> one_based) {
  VertexSet s;
  for (int v : one_based) {
    s.insert(v - 1);
  }
  return s;
}

}  // namespace

TEST_CASE("arcs are sorted and indexed", "[dag]") {
  Dag d(3, {{1, 2}, {0, 2}, {0, 1}});
  REQUIRE(d.num_arcs() == 3);
  CHECK(d.arc(0) == Arc{0, 1});
  CHECK(d.arc(2) == Arc{1, 2});
  CHECK(d.arc_index(0, 2) == 1);
  CHECK(d.arc_index(2, 0) == -1);
  CHECK(d.reaches(0, 2));
  CHECK_FALSE(d.reaches(2, 0));
}

TEST_CASE("cyclic and malformed input is rejected", "[dag]") {
  CHECK_THROWS_AS(Dag(3, {{0, 1}, {1, 2}, {2, 0}}), Error);
  CHECK_THROWS_AS(Dag(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Dag(2, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(Dag(2, {{0, 3}}), Error);
}

TEST_CASE("transitive reduction and supports", "[dag]") {
  Dag k4 = tournament(4);
  ArcSet red = k4.reduction();
  CHECK(red.size() == 3);
  for (int i = 0; i < k4.num_arcs(); ++i) {
    auto a = k4.arc(i);
    CHECK(red.contains(i) == (a.head == a.tail + 1));
  }
  CHECK(k4.transitive_support(k4.arc_index(0, 3)) == k4.vertices());
  CHECK(k4.transitive_support(k4.arc_index(1, 2)) == vs({2, 3}));
}

TEST_CASE("graph classes of the named graphs", "[dag]") {
  Dag c4 = square(), dia = diamond(), k3 = tournament(3), t = triangle_with_tail();
  CHECK(is_vertebrate(c4));
  CHECK_FALSE(is_filled(c4));
  CHECK_FALSE(is_vertebrate(dia));
  CHECK(is_filled(dia));
  CHECK(is_skeletal(k3));
  CHECK(is_skeletal(t));
  CHECK(is_skeletal(path(5)));
  CHECK_FALSE(is_chordal(c4));
  CHECK(is_chordful(tournament(5)));
}

TEST_CASE("both vertebrate tests agree on every DAG up to 5 vertices", "[dag][property]") {
  for (auto const& d : corpus(5)) {
    INFO(to_text(d));
    CHECK(is_vertebrate(d) == is_vertebrate_naive(d));
  }
}

TEST_CASE("skeletal graphs are filled and vertebrate", "[dag][property]") {
  for (auto const& d : corpus(5)) {
    CHECK(is_skeletal(d) == (is_filled(d) && is_vertebrate(d)));
    if (is_chordful(d)) {
      CHECK(is_chordal(d));
    }
  }
}

TEST_CASE("corpus sizes match the count of unlabeled DAGs", "[dag][corpus]") {
  // Unlabeled DAGs on 1..5 vertices.
  std::vector<std::size_t> expected{1, 2, 6, 31, 302};
  for (int n = 1; n <= 5; ++n) {
    CHECK(dags_on(n).size() == expected[n - 1]);
  }
}

TEST_CASE("corpus entries are pairwise non-isomorphic", "[dag][corpus]") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::uint64_t> codes;
    for (auto const& d : dags_on(n)) {
      codes.insert(canonical_code(d));
    }
    CHECK(codes.size() == dags_on(n).size());
  }
}

TEST_CASE("biconnected subsets of the path", "[dag]") {
  auto b = biconnected_subsets(path(3));
  std::set<std::uint64_t> got;
  for (auto s : b) {
    got.insert(s.bits());
  }
  std::set<std::uint64_t> want{vs({1}).bits(), vs({3}).bits(), vs({1, 2}).bits(), vs({2, 3}).bits()};
  CHECK(got == want);
}

TEST_CASE("predicted reorientation counts equal brute force", "[dag][property]") {
  for (auto const& d : corpus(5)) {
    if (d.num_arcs() > 12) {
      continue;
    }
    CHECK(static_cast<std::size_t>(predicted_reorientation_count(d)) == brute::acyclic_masks(d).size());
  }
}

TEST_CASE("acyclicity test matches brute force", "[dag][property]") {
  for (auto const& d : corpus(4)) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.num_arcs()); ++m) {
      CHECK(is_acyclic_reorientation(d, ArcSet(m)) == brute::acyclic(d.n(), brute::oriented(d, m)));
    }
  }
}

TEST_CASE("text and JSON round trips", "[dag][io]") {
  Dag t = triangle_with_tail();
  CHECK(parse_dag(to_text(t)) == t);
  CHECK(parse_dag(to_json(t).dump()) == t);
  CHECK(parse_dag("# comment\n3\n1 2 # arc\n\n2 3\n") == path(3));
}

TEST_CASE("parse errors carry line numbers", "[dag][io]") {
  try {
    parse_dag("3\n1 2\n2 x\n");
    FAIL("expected a parse error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_dag("2\n1 3\n"), Error);
  CHECK_THROWS_AS(parse_dag(""), Error);
  CHECK(parse_dag("{\"n\": 2}").num_arcs() == 0);
  CHECK_THROWS_AS(parse_dag("{\"n\": 2, \"arcs\": [[1]]}"), Error);
  CHECK_THROWS_AS(parse_dag("{\"arcs\": []}"), Error);
}
