#include <catch_amalgamated.hpp>

#include <reorilat/corpus.hpp>
#include <reorilat/dag_io.hpp>
#include <reorilat/restriction.hpp>

#include "brute.hpp"

using namespace reorilat;
using namespace reorilat::graphs;

namespace {

// All spanning subgraphs of every vertebrate DAG up to n vertices.
template <class F>
void for_each_pair(int n, F&& f) {
  for (auto const& d : corpus(n)) {
    if (!is_vertebrate(d)) {
      continue;
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.num_arcs()); ++m) {
      Dag sub = d.subgraph(ArcSet(m));
      if (is_vertebrate(sub)) {
        f(d, sub);
      }
    }
  }
}

// Fibers of the restriction as sets of reversal masks of D.
std::map<std::uint64_t, std::vector<std::uint64_t>> fibers(Dag const& d, Dag const& sub) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> out;
  for (auto m : brute::acyclic_masks(d)) {
    std::uint64_t image = 0;
    for (int i = 0; i < d.num_arcs(); ++i) {
      auto a = d.arc(i);
      int j = sub.arc_index(a.tail, a.head);
      if (j >= 0 && ((m >> i) & 1U)) {
        image |= std::uint64_t{1} << j;
      }
    }
    out[image].push_back(m);
  }
  return out;
}

// A fiber is an interval iff it has a least and a greatest element and
// contains everything between them.
bool interval_fiber(Dag const& d, std::vector<std::uint64_t> const& f) {
  auto lo = std::find_if(f.begin(), f.end(), [&](auto x) {
    return std::all_of(f.begin(), f.end(), [&](auto y) { return brute::subset(x, y); });
  });
  auto hi = std::find_if(f.begin(), f.end(), [&](auto x) {
    return std::all_of(f.begin(), f.end(), [&](auto y) { return brute::subset(y, x); });
  });
  if (lo == f.end() || hi == f.end()) {
    return false;
  }
  for (auto m : brute::acyclic_masks(d)) {
    if (brute::subset(*lo, m) && brute::subset(m, *hi) && std::find(f.begin(), f.end(), m) == f.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("the path conditions match the fiber definitions", "[restriction][property]") {
  int pairs = 0;
  for_each_pair(4, [&](Dag const& d, Dag const& sub) {
    RestrictionMap m(d, sub);
    auto l = ReorientationLattice::enumerate(d);
    auto ls = ReorientationLattice::enumerate(sub);
    INFO(to_text(d) << "--\n" << to_text(sub));
    CHECK(classify_lattice_map(m) == classify_lattice_map_by_fibers(m, l, ls));
    ++pairs;
  });
  CHECK(pairs > 300);
}

TEST_CASE("interval fibers match brute force", "[restriction][property]") {
  for_each_pair(4, [&](Dag const& d, Dag const& sub) {
    bool all = true;
    for (auto const& [img, f] : fibers(d, sub)) {
      all = all && interval_fiber(d, f);
    }
    RestrictionMap m(d, sub);
    CHECK(fibers_are_intervals(m) == all);
    if (is_weakly_pathful(m)) {
      CHECK(all);
    }
  });
}

TEST_CASE("interval fibers without the path condition", "[restriction]") {
  // The converse of "weakly pathful implies interval fibers" fails.
  RestrictionMap star(tournament(4), Dag(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(fibers_are_intervals(star));
  CHECK_FALSE(is_weakly_pathful(star));
  auto w = pathful_violation(star);
  REQUIRE(w);
  CHECK(w->level == 1);
  CHECK(w->path == std::vector<int>{0, 1, 2, 3});

  int gaps = 0;
  for_each_pair(4, [&](Dag const& d, Dag const& sub) {
    RestrictionMap m(d, sub);
    gaps += fibers_are_intervals(m) && !is_weakly_pathful(m);
  });
  CHECK(gaps == 6);
}

TEST_CASE("the three levels are nested", "[restriction][property]") {
  for_each_pair(4, [&](Dag const& d, Dag const& sub) {
    RestrictionMap m(d, sub);
    if (is_strongly_pathful(m)) {
      CHECK(is_pathful(m));
    }
    if (is_pathful(m)) {
      CHECK(is_weakly_pathful(m));
    }
    CHECK(pathful_violation(m).has_value() == !is_strongly_pathful(m));
  });
}

TEST_CASE("fiber extrema match brute force", "[restriction][property]") {
  for_each_pair(4, [&](Dag const& d, Dag const& sub) {
    RestrictionMap m(d, sub);
    for (auto const& [img, f] : fibers(d, sub)) {
      auto lo = m.fiber_min(ArcSet(img));
      auto hi = m.fiber_max(ArcSet(img));
      if (!lo || !hi) {
        continue;
      }
      for (auto x : f) {
        CHECK(lo->subset_of(ArcSet(x)));
        CHECK(ArcSet(x).subset_of(*hi));
      }
    }
  });
}

TEST_CASE("restriction verdicts on small examples", "[restriction]") {
  Dag k3 = tournament(3);
  auto k = classify_lattice_map(RestrictionMap(k3, Dag(3, {{0, 2}})));
  CHECK_FALSE(k.fibers_are_intervals);

  auto w = pathful_violation(RestrictionMap(k3, Dag(3, {{0, 2}})));
  REQUIRE(w);
  CHECK(w->level == 1);
  CHECK(w->path == std::vector<int>{0, 1, 2});

  auto red = classify_lattice_map(RestrictionMap(tournament(4), path(4)));
  CHECK(red.fibers_are_intervals);
  CHECK(red.is_lattice_quotient_map);
  CHECK_FALSE(red.is_interval_isomorphism);

  auto empty = classify_lattice_map(RestrictionMap(k3, Dag(3, {})));
  CHECK(empty.is_interval_isomorphism);

  CHECK_THROWS_AS(RestrictionMap(k3, Dag(3, {{2, 0}})), Error);
  CHECK_THROWS_AS(RestrictionMap(k3, Dag(2, {})), Error);
  CHECK_THROWS_AS(classify_lattice_map(RestrictionMap(diamond(), Dag(4, {}))), Error);
}

TEST_CASE("nonnesting subgraphs of the tournament are Catalan many", "[restriction]") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(nonnesting_quotient_subgraphs(n).size() == brute::catalan(n));
  }
  for (auto const& sub : nonnesting_quotient_subgraphs(4)) {
    CHECK(is_pathful(RestrictionMap(tournament(4), sub)));
  }
}
