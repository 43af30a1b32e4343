// Posets of regions of central arrangements given by vector configurations.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "dag.hpp"
#include "poset.hpp"
#include "rational.hpp"

namespace reorilat {

class VectorConfiguration {
 public:
  // Rejects zero vectors and configurations not inside an open halfspace.
  VectorConfiguration(int dim, std::vector<QVector> vectors) : dim_(dim), vectors_(std::move(vectors)) {
    if (vectors_.size() > 20) {
      fail(ErrorKind::too_large, "at most 20 vectors");
    }
    for (auto const& v : vectors_) {
      if (static_cast<int>(v.size()) != dim_) {
        fail(ErrorKind::invalid_configuration, "vector " + to_string(v) + " has the wrong dimension");
      }
      if (is_zero(v)) {
        fail(ErrorKind::invalid_configuration, "zero vector");
      }
    }
    if (!sign_feasible((std::uint64_t{1} << size()) - 1, size())) {
      fail(ErrorKind::invalid_configuration, "vectors do not lie in an open halfspace");
    }
  }

  // The vectors e_u - e_v for the arcs (u,v) of D.
  static VectorConfiguration incidence(Dag const& d) {
    std::vector<QVector> vs;
    for (auto [u, v] : d.arcs()) {
      vs.push_back(unit_vector(d.n(), u) - unit_vector(d.n(), v));
    }
    return {d.n(), std::move(vs)};
  }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  QVector const& vector(int i) const { return vectors_[i]; }
  std::vector<QVector> const& vectors() const { return vectors_; }

  // Is there x with <a_i, x> > 0 for i in `positive` and < 0 for the other
  // of the first k vectors? Scaled to >= 1 by homogeneity.
  bool sign_feasible(std::uint64_t positive, int k) const {
    LinearProgram lp(dim_);
    for (int i = 0; i < k; ++i) {
      if ((positive >> i) & 1U) {
        lp.add_ge(vectors_[i], 1);
      } else {
        lp.add_le(vectors_[i], -1);
      }
    }
    return feasible(lp);
  }

 private:
  int dim_;
  std::vector<QVector> vectors_;
};

// Positive sets of all regions, found by extending feasible sign prefixes.
inline std::vector<std::uint64_t> region_positive_sets(VectorConfiguration const& cfg) {
  std::vector<std::uint64_t> cur{0};
  for (int k = 1; k <= cfg.size(); ++k) {
    std::vector<std::uint64_t> next;
    for (auto s : cur) {
      for (std::uint64_t bit : {std::uint64_t{0}, std::uint64_t{1} << (k - 1)}) {
        if (cfg.sign_feasible(s | bit, k)) {
          next.push_back(s | bit);
        }
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

struct RegionPoset {
  std::vector<std::uint64_t> positive_sets;
  FinitePoset poset;
};

// Regions ordered by inclusion of positive sets; the all-negative base
// region is the bottom.
inline RegionPoset poset_of_regions(VectorConfiguration const& cfg) {
  RegionPoset r;
  r.positive_sets = region_positive_sets(cfg);
  auto const& s = r.positive_sets;
  r.poset = FinitePoset::from_relation(static_cast<int>(s.size()),
                                       [&](int i, int j) { return (s[i] & ~s[j]) == 0; });
  return r;
}

inline bool regions_lattice(VectorConfiguration const& cfg) { return poset_of_regions(cfg).poset.is_lattice(); }

// Subsets A n F for the proper linear subspaces F spanned by vectors of A,
// as bitmasks. These are exactly the sets A n H for linear hyperplanes H.
inline std::vector<std::uint64_t> proper_flats(VectorConfiguration const& cfg) {
  int m = cfg.size();
  std::set<std::uint64_t> flats;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    EchelonBasis b(cfg.dim());
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1U) {
        b.add(cfg.vector(i));
      }
    }
    if (b.rank() >= cfg.dim()) {
      continue;
    }
    std::uint64_t closure = 0;
    for (int i = 0; i < m; ++i) {
      if (b.in_span(cfg.vector(i))) {
        closure |= std::uint64_t{1} << i;
      }
    }
    flats.insert(closure);
  }
  return {flats.begin(), flats.end()};
}

// A pointed cone is simplicial iff its extreme rays are independent, that
// is, their number equals the rank of the generators.
inline bool is_simplicial_cone(std::vector<QVector> const& gens) {
  if (gens.empty()) {
    return true;
  }
  int n = static_cast<int>(gens[0].size());
  // One generator per ray.
  std::vector<QVector> rays;
  for (auto const& g : gens) {
    bool dup = std::any_of(rays.begin(), rays.end(), [&](QVector const& r) {
      EchelonBasis b(n);
      b.add(r);
      if (!b.in_span(g)) {
        return false;
      }
      for (int i = 0; i < n; ++i) {
        if (sgn(r[i]) != 0) {
          return sgn(g[i]) == sgn(r[i]);
        }
      }
      return false;
    });
    if (!dup) {
      rays.push_back(g);
    }
  }
  int extreme = 0;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (j != i) {
        others.push_back(rays[j]);
      }
    }
    extreme += others.empty() || !in_cone(others, rays[i]);
  }
  return extreme == rank(rays, n);
}

inline bool check_simplicial_slices(VectorConfiguration const& cfg) {
  for (auto f : proper_flats(cfg)) {
    std::vector<QVector> gens;
    for (int i = 0; i < cfg.size(); ++i) {
      if ((f >> i) & 1U) {
        gens.push_back(cfg.vector(i));
      }
    }
    if (!is_simplicial_cone(gens)) {
      return false;
    }
  }
  return true;
}

}  // namespace reorilat
