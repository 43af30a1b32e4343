#include <catch_amalgamated.hpp>

#include <reorilat/corpus.hpp>
#include <reorilat/dag_io.hpp>
#include <reorilat/lattice.hpp>

#include "brute.hpp"

using namespace reorilat;
using namespace reorilat::graphs;

TEST_CASE("elements are exactly the acyclic reorientations", "[lattice][property]") {
  for (auto const& d : corpus(4)) {
    auto l = ReorientationLattice::enumerate(d);
    std::vector<std::uint64_t> got;
    for (ArcSet e : l.elements()) {
      got.push_back(e.bits());
    }
    std::sort(got.begin(), got.end());
    CHECK(got == brute::acyclic_masks(d));
  }
}

TEST_CASE("the order is inclusion and covers flip one arc", "[lattice][property]") {
  for (auto const& d : corpus(4)) {
    auto l = ReorientationLattice::enumerate(d);
    auto const& p = l.poset();
    for (int i = 0; i < l.size(); ++i) {
      for (int j = 0; j < l.size(); ++j) {
        CHECK(p.leq(i, j) == l.element(i).subset_of(l.element(j)));
      }
    }
    for (auto [x, y] : p.cover_pairs()) {
      CHECK((l.element(y) - l.element(x)).size() == 1);
      CHECK(cover_arc(d, l.element(x), l.element(y)) == (l.element(y) - l.element(x)).first());
    }
  }
}

TEST_CASE("golden sizes", "[lattice]") {
  CHECK(ReorientationLattice::enumerate(square()).size() == 14);
  CHECK(ReorientationLattice::enumerate(diamond()).size() == 14);
  for (int n = 1; n <= 5; ++n) {
    CHECK(static_cast<std::uint64_t>(ReorientationLattice::enumerate(tournament(n)).size()) ==
          brute::factorial(n));
  }
  CHECK(ReorientationLattice::enumerate(path(4)).size() == 8);
}

TEST_CASE("lattice exactly for vertebrate graphs", "[lattice][property]") {
  for (auto const& d : corpus(4)) {
    auto l = ReorientationLattice::enumerate(d);
    bool by_brute = brute::inclusion_lattice(brute::acyclic_masks(d));
    INFO(to_text(d));
    CHECK(l.poset().is_lattice() == by_brute);
    CHECK(by_brute == is_vertebrate(d));
  }
  CHECK(ReorientationLattice::enumerate(square()).poset().is_lattice());
  CHECK_FALSE(ReorientationLattice::enumerate(diamond()).poset().is_lattice());
}

TEST_CASE("biclosed arc sets are the acyclic reorientations", "[lattice][property]") {
  for (auto const& d : corpus(4)) {
    if (!is_vertebrate(d)) {
      continue;
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.num_arcs()); ++m) {
      CHECK(is_biclosed(d, ArcSet(m)) == brute::acyclic(d.n(), brute::oriented(d, m)));
    }
  }
}

TEST_CASE("closure joins agree with the order", "[lattice][property]") {
  for (auto const& d : corpus(4)) {
    if (!is_vertebrate(d)) {
      continue;
    }
    auto l = ReorientationLattice::enumerate(d);
    for (int i = 0; i < l.size(); ++i) {
      for (int j = 0; j < l.size(); ++j) {
        CHECK(l.join(i, j) == *l.poset().join(i, j));
        CHECK(l.meet(i, j) == *l.poset().meet(i, j));
      }
    }
  }
}

TEST_CASE("structural properties match their definitions", "[lattice][property]") {
  for (auto const& d : corpus(4)) {
    if (!is_vertebrate(d)) {
      continue;
    }
    auto a = structural_properties(d);
    auto b = definitional_properties(ReorientationLattice::enumerate(d));
    INFO(to_text(d));
    CHECK(a.lattice == b.lattice);
    CHECK(a.distributive == b.distributive);
    CHECK(a.semidistributive == b.semidistributive);
    CHECK(a.congruence_normal == b.congruence_normal);
    CHECK(a.congruence_uniform == b.congruence_uniform);
  }
}

TEST_CASE("the square is a lattice but not semidistributive", "[lattice]") {
  auto p = definitional_properties(ReorientationLattice::enumerate(square()));
  CHECK(p.lattice);
  CHECK_FALSE(p.semidistributive);
  CHECK(p.congruence_normal);
}

TEST_CASE("irreducibles and canonical representations", "[lattice]") {
  for (auto const& d : corpus(4)) {
    if (!is_skeletal(d)) {
      continue;
    }
    auto l = ReorientationLattice::enumerate(d);
    Lattice lat(l.poset());
    CHECK(join_irreducibles(l).size() == lat.join_irreducibles().size());
    CHECK(meet_irreducibles(l).size() == lat.meet_irreducibles().size());
    for (ArcSet e : l.elements()) {
      ArcSet acc;
      for (ArcSet j : canonical_join_representation(d, e)) {
        CHECK(is_join_irreducible(d, j));
        acc = join_by_closure(d, acc, j);
      }
      CHECK(acc == e);
    }
  }
  CHECK(join_irreducibles(ReorientationLattice::enumerate(tournament(3))).size() == 4);
}

TEST_CASE("the size cap refuses with the predicted count", "[lattice]") {
  try {
    ReorientationLattice::enumerate(tournament(6), 100);
    FAIL("expected a size refusal");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::too_large);
    CHECK(std::string(e.what()).find("720") != std::string::npos);
  }
}
