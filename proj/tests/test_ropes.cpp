#include <catch_amalgamated.hpp>

#include <reorilat/corpus.hpp>
#include <reorilat/dag_io.hpp>
#include <reorilat/ropes.hpp>

#include "brute.hpp"

using namespace reorilat;
using namespace reorilat::graphs;

namespace {

std::vector<Dag> skeletal_upto(int n) {
  std::vector<Dag> out;
  for (auto const& d : corpus(n)) {
    if (is_skeletal(d)) {
      out.push_back(d);
    }
  }
  return out;
}

std::size_t brute_interval_count(Dag const& d) {
  auto ms = brute::acyclic_masks(d);
  std::size_t c = 0;
  for (auto a : ms) {
    for (auto b : ms) {
      c += brute::subset(a, b);
    }
  }
  return c;
}

}  // namespace

TEST_CASE("rope counts", "[ropes]") {
  CHECK(all_ropes(tournament(3)).size() == 4);
  for (int n = 1; n <= 6; ++n) {
    // join irreducibles of the weak order
    CHECK(all_ropes(tournament(n)).size() == (std::size_t{1} << n) - n - 1);
  }
  CHECK(all_ropes(path(5)).size() == 4);
  CHECK_THROWS_AS(all_ropes(square()), Error);
  CHECK_THROWS_AS(all_ropes(diamond()), Error);
}

TEST_CASE("ropes label the join irreducibles", "[ropes][property]") {
  for (auto const& d : skeletal_upto(5)) {
    auto l = ReorientationLattice::enumerate(d);
    auto js = join_irreducibles(l);
    auto ms = meet_irreducibles(l);
    RopeSet rs(d);
    REQUIRE(js.size() == static_cast<std::size_t>(rs.size()));
    std::set<int> seen;
    for (ArcSet j : js) {
      Rope r = rope_of_join_irreducible(d, j);
      CHECK(is_valid_rope(d, r));
      CHECK(join_irreducible_of_rope(d, r) == j);
      seen.insert(rs.index_of(r));
    }
    CHECK(seen.size() == js.size());
    for (ArcSet m : ms) {
      CHECK(meet_irreducible_of_rope(d, rope_of_meet_irreducible(d, m)) == m);
    }
  }
}

TEST_CASE("join and meet diagrams round trip", "[ropes][property]") {
  for (auto const& d : skeletal_upto(4)) {
    auto l = ReorientationLattice::enumerate(d);
    for (ArcSet e : l.elements()) {
      auto jd = join_diagram(d, e);
      auto md = meet_diagram(d, e);
      CHECK(is_noncrossing(jd));
      CHECK(is_noncrossing(md));
      CHECK(reorientation_of_join_diagram(d, jd) == e);
      CHECK(reorientation_of_meet_diagram(d, md) == e);
    }
  }
}

TEST_CASE("noncrossing diagrams and bidiagrams are counted by brute force", "[ropes][property]") {
  for (auto const& d : skeletal_upto(5)) {
    if (d.num_arcs() > 8) {
      continue;
    }
    RopeSet rs(d);
    INFO(to_text(d));
    CHECK(count_noncrossing_diagrams(rs) == brute::acyclic_masks(d).size());
    CHECK(count_bidiagrams(rs) == brute_interval_count(d));
  }
  RopeSet k3(tournament(3));
  CHECK(count_noncrossing_diagrams(k3) == 6);
  // hexagon: 6 singletons and 11 strict comparabilities
  CHECK(count_bidiagrams(k3) == 17);
}

TEST_CASE("intervals and bidiagrams correspond", "[ropes][property]") {
  for (auto const& d : skeletal_upto(4)) {
    auto l = ReorientationLattice::enumerate(d);
    for (ArcSet lo : l.elements()) {
      for (ArcSet hi : l.elements()) {
        if (!lo.subset_of(hi)) {
          continue;
        }
        auto b = interval_to_bidiagram(d, lo, hi);
        CHECK(is_bidiagram(d, b));
        CHECK(bidiagram_to_interval(d, b) == std::pair{lo, hi});
      }
    }
  }
}

TEST_CASE("crossing is symmetric and subropes form an order", "[ropes][property]") {
  for (auto const& d : skeletal_upto(4)) {
    RopeSet rs(d);
    for (int i = 0; i < rs.size(); ++i) {
      CHECK_FALSE(rs.crosses(i, i));
      CHECK(is_subrope(rs.rope(i), rs.rope(i)));
      for (int j = 0; j < rs.size(); ++j) {
        CHECK(rs.crosses(i, j) == rs.crosses(j, i));
        if (i != j && is_subrope(rs.rope(i), rs.rope(j))) {
          CHECK_FALSE(is_subrope(rs.rope(j), rs.rope(i)));
        }
      }
    }
  }
}

TEST_CASE("K3 ropes", "[ropes]") {
  Dag k3 = tournament(3);
  RopeSet rs(k3);
  std::vector<std::string> names;
  for (auto const& r : rs.ropes()) {
    names.push_back(to_string(r));
  }
  CHECK(names == std::vector<std::string>{"1 2 | |", "1 3 | | 2", "1 3 | 2 |", "2 3 | |"});
  // only the two short ropes are compatible
  int up = rs.index_of(parse_rope("1 3 | | 2", k3));
  int down = rs.index_of(parse_rope("1 3 | 2 |", k3));
  int left = rs.index_of(parse_rope("1 2 | |", k3));
  int right = rs.index_of(parse_rope("2 3 | |", k3));
  CHECK(rs.crosses(up, down));
  CHECK(rs.crosses(up, left));
  CHECK(rs.crosses(down, right));
  CHECK_FALSE(rs.crosses(left, right));
  CHECK(rs.subrope_poset().less(rs.index_of(parse_rope("1 2 | |", k3)), down));
}

TEST_CASE("rope text form", "[ropes][io]") {
  Dag k4 = tournament(4);
  for (auto const& r : all_ropes(k4)) {
    CHECK(parse_rope(to_string(r), k4) == r);
  }
  CHECK_THROWS_AS(parse_rope("1 3", k4), Error);
  CHECK_THROWS_AS(parse_rope("1 5 | |", k4), Error);
  CHECK_THROWS_AS(parse_rope("1 | |", k4), Error);
  CHECK_THROWS_AS(parse_rope("1 3 | x |", k4), Error);
}
