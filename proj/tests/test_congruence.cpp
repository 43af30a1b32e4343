#include <catch_amalgamated.hpp>

#include <reorilat/conjectures.hpp>
#include <reorilat/corpus.hpp>
#include <reorilat/dag_io.hpp>

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

bool same_blocks(Partition const& a, Partition const& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) {
        return false;
      }
    }
  }
  return true;
}

VertexSet vs(std::initializer_list<int> one_based) {
  VertexSet s;
  for (int v : one_based) {
    s.insert(v - 1);
  }
  return s;
}

}  // namespace

TEST_CASE("rope ideals count the congruences", "[congruence][property]") {
  for (auto const& d : skeletal_upto(4)) {
    SkeletalLattice sl(d);
    Lattice lat(sl.lattice().poset());
    auto brute_all = all_congruences(lat);
    INFO(to_text(d));
    CHECK(count_rope_ideals(sl.ropes()) == brute_all.size());
  }
  CHECK(count_rope_ideals(RopeSet(tournament(3))) == 7);
}

TEST_CASE("every ideal gives a lattice congruence with interval classes", "[congruence][property]") {
  for (auto const& d : skeletal_upto(4)) {
    SkeletalLattice sl(d);
    Lattice lat(sl.lattice().poset());
    auto brute_all = all_congruences(lat);
    std::size_t matched = 0;
    for_each_rope_ideal(sl.ropes(), [&](Bitset const& ideal) {
      auto c = congruence_from_ideal(sl, ideal);
      auto part = as_partition(c);
      CHECK(is_congruence(lat, part));
      CHECK(quotient(sl, c).is_lattice());
      for (int k = 0; k < c.size(); ++k) {
        CHECK(sl.lattice().poset().is_interval(
            [&] {
              Bitset b(sl.lattice().size());
              for (int e : c.classes[k]) {
                b.set(e);
              }
              return b;
            }()));
      }
      matched += std::any_of(brute_all.begin(), brute_all.end(),
                             [&](Partition const& p) { return same_blocks(p, part); });
    });
    CHECK(matched == brute_all.size());
  }
}

TEST_CASE("sylvester and cambrian quotients of the tournament", "[congruence]") {
  for (int n = 1; n <= 5; ++n) {
    SkeletalLattice sl(tournament(n));
    auto c = congruence_from_ideal(sl, sylvester_ideal(sl.ropes()));
    CHECK(static_cast<std::uint64_t>(c.size()) == brute::catalan(n));
  }
  SkeletalLattice k4(tournament(4));
  auto ideals = cambrian_ideals(k4.ropes());
  CHECK(ideals.size() == 4);
  for (auto const& ideal : ideals) {
    CHECK(congruence_from_ideal(k4, ideal).size() == 14);
  }
}

TEST_CASE("the undecorated coherent quotient is boolean", "[congruence]") {
  for (int n = 2; n <= 5; ++n) {
    SkeletalLattice sl(tournament(n));
    auto c = congruence_from_ideal(sl, coherent_ideal(sl.ropes(), {}, {}));
    CHECK(c.size() == (1 << (n - 1)));
  }
  SkeletalLattice full(tournament(4));
  CHECK(congruence_from_ideal(full, full_ideal(full.ropes())).size() == 24);
  CHECK(congruence_from_ideal(full, Bitset(full.ropes().size())).size() == 1);
}

TEST_CASE("decorations predict the class extrema", "[congruence][property]") {
  Dag k4 = tournament(4);
  SkeletalLattice sl(k4);
  auto interior = vs({2, 3});
  for (std::uint64_t dm = 0; dm < 4; ++dm) {
    for (std::uint64_t um = 0; um < 4; ++um) {
      VertexSet down = VertexSet(dm << 1) & interior;
      VertexSet up = VertexSet(um << 1) & interior;
      auto c = congruence_from_ideal(sl, coherent_ideal(sl.ropes(), down, up));
      for (int e = 0; e < sl.lattice().size(); ++e) {
        auto x = min_max_by_decoration(k4, sl.lattice().element(e), down, up);
        int k = c.class_of[e];
        CHECK(x.is_min == (c.minimum[k] == e));
        CHECK(x.is_max == (c.maximum[k] == e));
      }
      for (int k = 0; k < c.size(); ++k) {
        CHECK(coherent_interval_check(k4, partial_reorientation(sl, c, k), down, up));
      }
    }
  }
}

TEST_CASE("partial reorientations of classes", "[congruence][property]") {
  for (auto const& d : skeletal_upto(4)) {
    SkeletalLattice sl(d);
    auto all = all_partial_reorientations(d);
    for_each_rope_ideal(sl.ropes(), [&](Bitset const& ideal) {
      auto c = congruence_from_ideal(sl, ideal);
      for (int k = 0; k < c.size(); ++k) {
        std::vector<ArcSet> members;
        for (int e : c.classes[k]) {
          members.push_back(sl.lattice().element(e));
        }
        auto p = partial_reorientation(sl, c, k);
        CHECK(p == partial_reorientation_of_members(d, members));
        CHECK(is_acyclic_partial(d, p));
        CHECK(is_transitive_partial(d, p));
        CHECK(std::find(all.begin(), all.end(), p) != all.end());
      }
    });
  }
  // K3: 6 total orders, 6 two-arc shapes without a directed path, 6 single
  // arcs and the empty one
  CHECK(all_partial_reorientations(tournament(3)).size() == 19);
}

TEST_CASE("principal ideals and ideal validation", "[congruence]") {
  Dag k3 = tournament(3);
  RopeSet rs(k3);
  auto down = principal_ideal(rs, parse_rope("1 3 | 2 |", k3));
  // both short ropes have their ends among 1, 2, 3
  CHECK(down.count() == 3);
  CHECK(down.test(rs.index_of(parse_rope("1 2 | |", k3))));
  CHECK(down.test(rs.index_of(parse_rope("2 3 | |", k3))));
  CHECK_FALSE(down.test(rs.index_of(parse_rope("1 3 | | 2", k3))));
  CHECK(is_rope_ideal(rs, down));

  Bitset bad(rs.size());
  bad.set(rs.index_of(parse_rope("1 3 | 2 |", k3)));
  CHECK_FALSE(is_rope_ideal(rs, bad));
  CHECK_THROWS_AS(require_ideal(rs, bad), Error);
  CHECK_THROWS_AS(require_ideal(rs, Bitset(rs.size() + 1)), Error);
  CHECK_THROWS_AS(SkeletalLattice(square()), Error);
}

TEST_CASE("extension and restriction of congruences", "[congruence][property]") {
  int extended = 0, restricted = 0;
  for (auto const& d : skeletal_upto(4)) {
    SkeletalLattice sl(d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.num_arcs()); ++mask) {
      Dag sub = d.subgraph(ArcSet(mask));
      if (!is_skeletal(sub)) {
        continue;
      }
      RestrictionMap m(d, sub);
      SkeletalLattice ss(sub);
      if (is_pathful(m)) {
        for_each_rope_ideal(ss.ropes(), [&](Bitset const& ideal) {
          auto c_sub = congruence_from_ideal(ss, ideal);
          auto c = extend_congruence(m, sl, ss, c_sub);
          CHECK(same_blocks(as_partition(c), extension_by_fibers(m, sl, ss, c_sub)));
          ++extended;
        });
      }
      if (is_strongly_pathful(m)) {
        for_each_rope_ideal(sl.ropes(), [&](Bitset const& ideal) {
          auto c = congruence_from_ideal(sl, ideal);
          auto c_sub = restrict_congruence(m, sl, ss, c);
          CHECK(same_blocks(as_partition(c_sub), restriction_by_embedding(m, sl, ss, c)));
          ++restricted;
        });
      } else {
        CHECK_THROWS_AS(restrict_ideal(m, sl.ropes(), ss.ropes(), full_ideal(sl.ropes())), Error);
      }
    }
  }
  CHECK(extended > 0);
  CHECK(restricted > 0);
}

TEST_CASE("doubling sequence", "[congruence][property]") {
  for (auto const& d : corpus(4)) {
    if (!is_vertebrate(d)) {
      continue;
    }
    for (auto const& step : doubling_sequence(d)) {
      INFO(to_text(d));
      CHECK(step.convex);
      CHECK(step.isomorphic);
      if (is_skeletal(d)) {
        CHECK(step.parts_are_intervals);
      }
    }
  }
}

TEST_CASE("hamiltonian traversals of quotients", "[congruence][hamilton]") {
  // Covers flip one arc, so the cover graph is bipartite by parity. The
  // square has 6 even and 8 odd acyclic reorientations: no path.
  auto sq = ReorientationLattice::enumerate(square());
  CHECK_FALSE(hamiltonian_path(sq.poset().cover_graph()).has_value());
  auto k4 = ReorientationLattice::enumerate(tournament(4));
  auto cycle = hamiltonian_cycle(k4.poset().cover_graph());
  REQUIRE(cycle);
  CHECK(is_hamiltonian_cycle(k4.poset().cover_graph(), *cycle));

  auto rep = hamiltonian_sweep(corpus(4));
  CHECK(rep.quotients > 0);
  CHECK(rep.failures.empty());
  CHECK(rep.cycles + rep.parity_paths + rep.small_paths == rep.quotients);
}

TEST_CASE("conjecture harness on small graphs", "[congruence][conjectures]") {
  auto rep = conjecture_harness(corpus(4));
  CHECK(!rep.rows.empty());
  CHECK(rep.violations() == 0);
  SkeletalLattice k4(tournament(4));
  auto t = tamari_shape(k4);
  CHECK(t.size == 14);
  CHECK(t.regular);
  CHECK(t.forests);
}
