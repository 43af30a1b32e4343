#include <catch_amalgamated.hpp>

#include <reorilat/corpus.hpp>
#include <reorilat/dag_io.hpp>
#include <reorilat/geometry.hpp>

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

QVector qv(std::initializer_list<int> xs) {
  QVector v;
  for (int x : xs) {
    v.emplace_back(x);
  }
  return v;
}

HRep unit_square() {
  HRep h{2, {}, {}};
  h.inequalities.push_back({qv({1, 0}), 0});
  h.inequalities.push_back({qv({0, 1}), 0});
  h.inequalities.push_back({qv({-1, 0}), -1});
  h.inequalities.push_back({qv({0, -1}), -1});
  return h;
}

}  // namespace

TEST_CASE("exact linear programs", "[geometry][lp]") {
  LinearProgram lp(2);
  lp.objective = qv({1, 1});
  lp.add_le(qv({1, 0}), 1);
  lp.add_le(qv({0, 1}), 2);
  lp.add_ge(qv({1, 1}), Q(-5));
  auto r = solve(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 3);
  CHECK(r.x == qv({1, 2}));

  LinearProgram bad(1);
  bad.add_ge(qv({1}), 2);
  bad.add_le(qv({1}), 1);
  CHECK(solve(bad).status == LpStatus::infeasible);
  CHECK_FALSE(feasible(bad));

  LinearProgram open(1);
  open.objective = qv({1});
  open.add_ge(qv({1}), 0);
  CHECK(solve(open).status == LpStatus::unbounded);

  LinearProgram third(2);
  third.objective = qv({0, 1});
  third.add_eq(qv({1, 1}), Q(1));
  third.nonnegative = {true, true};
  auto t = solve(third);
  REQUIRE(t.status == LpStatus::optimal);
  CHECK(t.value == 1);
}

TEST_CASE("inequality systems and hulls", "[geometry][lp]") {
  auto h = unit_square();
  CHECK(h.is_bounded());
  CHECK(hrep_vertices(h) == std::vector<QVector>{qv({0, 0}), qv({0, 1}), qv({1, 0}), qv({1, 1})});
  HRep half{2, {}, {{qv({1, 0}), 0}}};
  CHECK_FALSE(half.is_bounded());

  std::vector<QVector> pts{qv({0, 0}), qv({2, 0}), qv({0, 2}), qv({2, 2}), qv({1, 1})};
  CHECK(in_convex_hull(pts, qv({1, 2})));
  CHECK_FALSE(in_convex_hull(pts, qv({3, 0})));
  CHECK(hull_vertices(pts).size() == 4);
  CHECK(is_hull_edge(pts, 0, 1));
  CHECK_FALSE(is_hull_edge(pts, 0, 3));
  CHECK(rank({qv({1, 2}), qv({2, 4}), qv({0, 1})}) == 2);
  CHECK(affine_dimension(pts) == 2);
}

TEST_CASE("the triangle zonotope is a hexagon", "[geometry][zonotope]") {
  Dag k3 = tournament(3);
  auto z = graphical_zonotope(k3);
  CHECK(z.size() == 6);
  CHECK(affine_dimension(z) == 2);
  CHECK(polytope_edges(z).size() == 6);
  CHECK(has_exact_vertices(z));
}

TEST_CASE("zonotope vertices, facets and chambers", "[geometry][zonotope][property]") {
  for (auto const& d : corpus(4)) {
    auto l = ReorientationLattice::enumerate(d);
    auto z = graphical_zonotope(d);
    INFO(to_text(d));
    CHECK(z.size() == l.size());
    CHECK(hrep_vertices(zonotope_facets(d)) == z.vertices);
    for (ArcSet e : l.elements()) {
      auto x = interior_point(d, e);
      CHECK(chamber_of(d, x) == e);
      CHECK(fan_chamber_contains(d, e, x));
      CHECK(chamber_of(d, second_interior_point(d, e)) == e);
      bool unique = false;
      int best = maximizer(z, x, &unique);
      CHECK(unique);
      CHECK(z.vertices[best] == zonotope_vertex(d, e));
    }
  }
}

TEST_CASE("walls and cycles are refused", "[geometry][errors]") {
  Dag k3 = tournament(3);
  try {
    chamber_of(k3, qv({1, 1, 2}));
    FAIL("expected a wall error");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::on_wall);
  }
  ArcSet cyclic;
  cyclic.insert(k3.arc_index(0, 2));
  CHECK_THROWS_AS(zonotope_vertex(k3, cyclic), Error);
  try {
    associahedron_minkowski(square());
    FAIL("expected a skeletal refusal");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::not_skeletal);
  }
}

TEST_CASE("shard polytopes", "[geometry][shards][property]") {
  for (auto const& d : skeletal_upto(4)) {
    RopeSet rs(d);
    auto shards = all_shard_polytopes(rs);
    REQUIRE(static_cast<int>(shards.size()) == rs.size());
    for (int i = 0; i < rs.size(); ++i) {
      auto const& r = rs.rope(i);
      CHECK(has_exact_vertices(shards[i].polytope));
      // both descriptions of the shard polytope agree
      for (auto const& x : shards[i].polytope.vertices) {
        CHECK(shards[i].hrep.contains(x));
      }
      auto path = rope_path(d, r);
      CHECK(path.front() == r.u);
      CHECK(path.back() == r.v);
    }
  }
}

TEST_CASE("the sylvester quotient of the triangle is a pentagon", "[geometry][quotientope]") {
  SkeletalLattice sl(tournament(3));
  auto c = congruence_from_ideal(sl, sylvester_ideal(sl.ropes()));
  auto q = quotientope(sl, c);
  CHECK(q.polytope.size() == 5);
  CHECK(polytope_edges(q.polytope).size() == 5);
  auto chk = verify_quotientope(sl, c, q);
  CHECK(chk.ok());
  CHECK(chk.vertices == 5);
}

TEST_CASE("every quotient is realized by its shard sum", "[geometry][quotientope][property]") {
  for (auto const& d : skeletal_upto(3)) {
    SkeletalLattice sl(d);
    auto shards = all_shard_polytopes(sl.ropes());
    for_each_rope_ideal(sl.ropes(), [&](Bitset const& ideal) {
      auto c = congruence_from_ideal(sl, ideal);
      for (std::uint32_t seed : {0U, 1U, 7U}) {
        auto w = seed == 0 ? std::vector<Q>{} : random_weights(ideal.count(), seed);
        auto q = quotientope(sl, c, shards, w);
        INFO(to_text(d) << "seed " << seed);
        CHECK(verify_quotientope(sl, c, q).ok());
      }
    });
  }
  SkeletalLattice k4(tournament(4));
  auto c = congruence_from_ideal(k4, sylvester_ideal(k4.ropes()));
  auto q = quotientope(k4, c, random_weights(c.ideal.count(), 5));
  CHECK(q.polytope.size() == 14);
  CHECK(verify_quotientope(k4, c, q).ok());
}

TEST_CASE("weights are seeded and validated", "[geometry][quotientope]") {
  CHECK(random_weights(8, 42) == random_weights(8, 42));
  CHECK(random_weights(8, 42) != random_weights(8, 43));
  for (auto const& w : random_weights(50, 9)) {
    CHECK(w > 0);
    CHECK(w <= 9);
  }
  SkeletalLattice sl(tournament(3));
  auto c = congruence_from_ideal(sl, full_ideal(sl.ropes()));
  CHECK_THROWS_AS(quotientope(sl, c, {Q(1)}), Error);
  CHECK_THROWS_AS(quotientope(sl, c, {Q(1), Q(1), Q(0), Q(1)}), Error);
}

TEST_CASE("removahedra of skeletal graphs", "[geometry][removahedron][property]") {
  for (auto const& d : skeletal_upto(4)) {
    auto chk = verify_removahedron(d);
    INFO(to_text(d));
    CHECK(chk.ok());
  }
  CHECK(verify_removahedron(tournament(4)).vertices == 14);
  CHECK(require_removahedron(tournament(3)).size() == 5);
}

TEST_CASE("simplicial chambers", "[geometry][fan][property]") {
  for (auto const& d : corpus(4)) {
    if (!is_vertebrate(d)) {
      continue;
    }
    INFO(to_text(d));
    CHECK(is_fan_simplicial(d) == is_chordful(d));
    auto l = ReorientationLattice::enumerate(d);
    int dim = d.n() - static_cast<int>(components(d).size());
    for (ArcSet e : l.elements()) {
      if (is_chamber_simplicial(d, e)) {
        CHECK(chamber_ray_count(d, e) == dim);
      } else {
        CHECK(chamber_ray_count(d, e) > dim);
      }
    }
  }
}
