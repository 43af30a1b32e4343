#include <catch_amalgamated.hpp>

#include <reorilat/acceptance.hpp>
#include <reorilat/corpus.hpp>
#include <reorilat/dag_io.hpp>
#include <reorilat/regions.hpp>

using namespace reorilat;
using namespace reorilat::graphs;

namespace {

QVector qv(std::initializer_list<int> xs) {
  QVector v;
  for (int x : xs) {
    v.emplace_back(x);
  }
  return v;
}

}  // namespace

TEST_CASE("regions of incidence configurations are the acyclic reorientations", "[regions][property]") {
  for (auto const& d : corpus(4)) {
    auto cfg = VectorConfiguration::incidence(d);
    auto r = poset_of_regions(cfg);
    auto l = ReorientationLattice::enumerate(d);
    std::vector<std::uint64_t> es;
    for (ArcSet e : l.elements()) {
      es.push_back(e.bits());
    }
    INFO(to_text(d));
    CHECK(r.positive_sets == es);
    CHECK(r.poset.is_lattice() == is_vertebrate(d));
    CHECK(check_simplicial_slices(cfg) == is_vertebrate(d));
  }
}

TEST_CASE("small configurations", "[regions]") {
  // four lines through the origin of the plane cut it into eight sectors
  VectorConfiguration plane(2, {qv({1, 0}), qv({0, 1}), qv({1, 1}), qv({1, 2})});
  auto r = poset_of_regions(plane);
  CHECK(r.positive_sets.size() == 8);
  CHECK(r.poset.is_lattice());
  CHECK(r.positive_sets.front() == 0);

  VectorConfiguration coords(3, {qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
  CHECK(region_positive_sets(coords).size() == 8);
  CHECK(regions_lattice(coords));
  CHECK(check_simplicial_slices(coords));

  CHECK(is_simplicial_cone({qv({1, 0, 0}), qv({0, 1, 0}), qv({2, 0, 0})}));
  CHECK_FALSE(is_simplicial_cone({qv({1, 0, 1}), qv({0, 1, 1}), qv({-1, 0, 1}), qv({0, -1, 1})}));
}

TEST_CASE("invalid configurations are refused", "[regions][errors]") {
  auto kind_of = [](auto&& make) {
    try {
      make();
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::usage;
  };
  CHECK(kind_of([] { VectorConfiguration(2, {qv({0, 0})}); }) == ErrorKind::invalid_configuration);
  CHECK(kind_of([] { VectorConfiguration(2, {qv({1, 0, 0})}); }) == ErrorKind::invalid_configuration);
  CHECK(kind_of([] { VectorConfiguration(1, {qv({1}), qv({-1})}); }) == ErrorKind::invalid_configuration);
  std::vector<QVector> many(21, qv({1}));
  CHECK(kind_of([&] { VectorConfiguration(1, many); }) == ErrorKind::too_large);
}

TEST_CASE("simplicial slices do not force a lattice", "[regions]") {
  for (auto const& cfg : {acceptance::slice_counterexample(), acceptance::type_b4_counterexample()}) {
    CHECK(check_simplicial_slices(cfg));
    CHECK_FALSE(regions_lattice(cfg));
  }
}
