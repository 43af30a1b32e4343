// Exact rational linear algebra: vectors, Gaussian elimination, a Bland-rule
// simplex and vertex enumeration of small inequality systems.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bits.hpp"

namespace reorilat {

using Q = mpq_class;
using QVector = std::vector<Q>;

inline QVector zero_vector(int n) { return QVector(n, Q(0)); }

inline QVector unit_vector(int n, int i) {
  auto v = zero_vector(n);
  v[i] = 1;
  return v;
}

inline QVector indicator(int n, VertexSet s) {
  auto v = zero_vector(n);
  s.for_each([&](int i) { v[i] = 1; });
  return v;
}

inline Q dot(QVector const& a, QVector const& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

inline QVector operator+(QVector a, QVector const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += b[i];
  }
  return a;
}

inline QVector operator-(QVector a, QVector const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] -= b[i];
  }
  return a;
}

inline QVector operator*(Q const& k, QVector a) {
  for (auto& x : a) {
    x *= k;
  }
  return a;
}

inline bool is_zero(QVector const& v) {
  return std::all_of(v.begin(), v.end(), [](Q const& x) { return sgn(x) == 0; });
}

inline std::string to_string(Q const& q) { return q.get_str(); }

inline std::string to_string(QVector const& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + v[i].get_str();
  }
  return s + ")";
}

// Parses "p", "-p" or "p/q".
inline Q parse_rational(std::string const& text) {
  Q q(text);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Gaussian elimination

// Row echelon basis that grows one row at a time.
class EchelonBasis {
 public:
  explicit EchelonBasis(int n) : n_(n) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the basis; returns the remainder.
  QVector reduce(QVector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      int p = pivots_[k];
      if (sgn(v[p]) != 0) {
        Q f = v[p] / rows_[k][p];
        for (int i = 0; i < n_; ++i) {
          v[i] -= f * rows_[k][i];
        }
      }
    }
    return v;
  }

  bool in_span(QVector const& v) const { return is_zero(reduce(v)); }

  // Adds v if it is independent of the rows so far.
  bool add(QVector const& v) {
    auto r = reduce(v);
    for (int i = 0; i < n_; ++i) {
      if (sgn(r[i]) != 0) {
        rows_.push_back(std::move(r));
        pivots_.push_back(i);
        return true;
      }
    }
    return false;
  }

 private:
  int n_;
  std::vector<QVector> rows_;
  std::vector<int> pivots_;
};

inline int rank(std::vector<QVector> const& rows, int n) {
  EchelonBasis b(n);
  for (auto const& r : rows) {
    b.add(r);
  }
  return b.rank();
}

inline int rank(std::vector<QVector> const& rows) { return rows.empty() ? 0 : rank(rows, rows[0].size()); }

// Dimension of the affine hull of a point set (-1 when empty).
inline int affine_dimension(std::vector<QVector> const& pts) {
  if (pts.empty()) {
    return -1;
  }
  std::vector<QVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    diffs.push_back(pts[i] - pts[0]);
  }
  return rank(diffs, pts[0].size());
}

// Solves the square system m x = rhs; nullopt when singular.
inline std::optional<QVector> solve_square(std::vector<QVector> m, QVector rhs) {
  int n = static_cast<int>(m.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(m[p][c]) == 0) {
      ++p;
    }
    if (p == n) {
      return std::nullopt;
    }
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (int r = 0; r < n; ++r) {
      if (r != c && sgn(m[r][c]) != 0) {
        Q f = m[r][c] / m[c][c];
        for (int k = c; k < n; ++k) {
          m[r][k] -= f * m[c][k];
        }
        rhs[r] -= f * rhs[c];
      }
    }
  }
  QVector x(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rhs[i] / m[i][i];
  }
  return x;
}

// Solves an overdetermined system of full column rank (n independent rows
// among m rows, m >= n); nullopt when the rows are inconsistent or rank < n.
inline std::optional<QVector> solve_full_rank(std::vector<QVector> const& m, QVector const& rhs, int n) {
  EchelonBasis b(n);
  std::vector<QVector> sq;
  QVector sr;
  for (std::size_t i = 0; i < m.size() && b.rank() < n; ++i) {
    if (b.add(m[i])) {
      sq.push_back(m[i]);
      sr.push_back(rhs[i]);
    }
  }
  if (b.rank() < n) {
    return std::nullopt;
  }
  auto x = solve_square(sq, sr);
  for (std::size_t i = 0; x && i < m.size(); ++i) {
    if (dot(m[i], *x) != rhs[i]) {
      return std::nullopt;
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Linear programming

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Q value;
  QVector x;
};

// maximize objective . x subject to rows; variables free unless listed
// in `nonnegative`.
struct LinearProgram {
  int n = 0;
  QVector objective;
  std::vector<QVector> le_rows;  // row . x <= rhs
  QVector le_rhs;
  std::vector<QVector> eq_rows;
  QVector eq_rhs;
  std::vector<bool> nonnegative;

  explicit LinearProgram(int dim) : n(dim), objective(zero_vector(dim)), nonnegative(dim, false) {}

  void add_le(QVector row, Q rhs) {
    le_rows.push_back(std::move(row));
    le_rhs.push_back(std::move(rhs));
  }
  void add_ge(QVector row, Q rhs) {
    for (auto& x : row) {
      x = -x;
    }
    add_le(std::move(row), -rhs);
  }
  void add_eq(QVector row, Q rhs) {
    eq_rows.push_back(std::move(row));
    eq_rhs.push_back(std::move(rhs));
  }
};

namespace detail {

// Dense tableau simplex on max c.y, A y = b, y >= 0, with b >= 0.
// Bland's rule for both entering and leaving choices.
class Tableau {
 public:
  Tableau(std::vector<QVector> a, QVector b, QVector c) : m_(a.size()), n_(c.size()) {
    int width = n_ + m_ + 1;
    t_.assign(m_ + 1, zero_vector(width));
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) {
        t_[i][j] = a[i][j];
      }
      t_[i][n_ + i] = 1;
      t_[i][width - 1] = b[i];
      basis_.push_back(n_ + i);
    }
    c_ = std::move(c);
  }

  LpResult solve() {
    // Phase one: maximize minus the artificial sum.
    QVector phase1 = zero_vector(n_ + m_);
    for (int i = 0; i < m_; ++i) {
      phase1[n_ + i] = -1;
    }
    set_objective(phase1);
    run(n_ + m_);
    if (sgn(t_[m_].back()) != 0) {
      return {LpStatus::infeasible, 0, {}};
    }
    drive_out_artificials();
    QVector full = zero_vector(n_ + m_);
    std::copy(c_.begin(), c_.end(), full.begin());
    set_objective(full);
    if (!run(n_)) {
      return {LpStatus::unbounded, 0, {}};
    }
    LpResult r{LpStatus::optimal, t_[m_].back(), zero_vector(n_)};
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < n_) {
        r.x[basis_[i]] = t_[i].back();
      }
    }
    return r;
  }

 private:
  // Objective row stores reduced costs negated: row = -(c - c_B B^-1 A).
  void set_objective(QVector const& c) {
    auto& obj = t_[m_];
    std::fill(obj.begin(), obj.end(), Q(0));
    for (int j = 0; j < n_ + m_; ++j) {
      obj[j] = -c[j];
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Q cb = c[basis_[i]];
      if (sgn(cb) != 0) {
        for (std::size_t j = 0; j < obj.size(); ++j) {
          obj[j] += cb * t_[i][j];
        }
      }
    }
  }

  void pivot(int row, int col) {
    Q p = t_[row][col];
    for (auto& x : t_[row]) {
      x /= p;
    }
    for (int i = 0; i <= static_cast<int>(basis_.size()); ++i) {
      int ii = i == static_cast<int>(basis_.size()) ? m_ : i;
      if (ii != row && sgn(t_[ii][col]) != 0) {
        Q f = t_[ii][col];
        for (std::size_t j = 0; j < t_[ii].size(); ++j) {
          t_[ii][j] -= f * t_[row][j];
        }
      }
    }
    basis_[row] = col;
  }

  // Columns >= limit never enter. Returns false when unbounded.
  bool run(int limit) {
    for (;;) {
      int col = -1;
      for (int j = 0; j < limit; ++j) {
        if (sgn(t_[m_][j]) < 0) {
          col = j;
          break;
        }
      }
      if (col < 0) {
        return true;
      }
      int row = -1;
      Q best;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (sgn(t_[i][col]) > 0) {
          Q ratio = t_[i].back() / t_[i][col];
          if (row < 0 || ratio < best || (ratio == best && basis_[i] < basis_[row])) {
            row = static_cast<int>(i);
            best = ratio;
          }
        }
      }
      if (row < 0) {
        return false;
      }
      pivot(row, col);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < basis_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < n_ && col < 0; ++j) {
        if (sgn(t_[i][j]) != 0) {
          col = j;
        }
      }
      if (col >= 0) {
        pivot(static_cast<int>(i), col);
        ++i;
      } else {
        // Redundant row: drop it, keeping the objective row last.
        t_.erase(t_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
        --m_;
      }
    }
  }

  int m_, n_;
  std::vector<QVector> t_;
  std::vector<int> basis_;
  QVector c_;
};

}  // namespace detail

inline LpResult solve(LinearProgram const& lp) {
  // Split free variables as y+ - y-, add slacks to <= rows.
  std::vector<int> pos(lp.n), neg(lp.n, -1);
  int cols = 0;
  for (int j = 0; j < lp.n; ++j) {
    pos[j] = cols++;
    if (!lp.nonnegative[j]) {
      neg[j] = cols++;
    }
  }
  int slack0 = cols;
  cols += static_cast<int>(lp.le_rows.size());
  std::vector<QVector> a;
  QVector b;
  auto emit = [&](QVector const& row, Q rhs, int slack) {
    QVector r = zero_vector(cols);
    for (int j = 0; j < lp.n; ++j) {
      r[pos[j]] = row[j];
      if (neg[j] >= 0) {
        r[neg[j]] = -row[j];
      }
    }
    if (slack >= 0) {
      r[slack] = 1;
    }
    if (sgn(rhs) < 0) {
      for (auto& x : r) {
        x = -x;
      }
      rhs = -rhs;
    }
    a.push_back(std::move(r));
    b.push_back(std::move(rhs));
  };
  for (std::size_t i = 0; i < lp.le_rows.size(); ++i) {
    emit(lp.le_rows[i], lp.le_rhs[i], slack0 + static_cast<int>(i));
  }
  for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) {
    emit(lp.eq_rows[i], lp.eq_rhs[i], -1);
  }
  QVector c = zero_vector(cols);
  for (int j = 0; j < lp.n; ++j) {
    c[pos[j]] = lp.objective[j];
    if (neg[j] >= 0) {
      c[neg[j]] = -lp.objective[j];
    }
  }
  auto r = detail::Tableau(std::move(a), std::move(b), std::move(c)).solve();
  if (r.status == LpStatus::optimal) {
    QVector x = zero_vector(lp.n);
    for (int j = 0; j < lp.n; ++j) {
      x[j] = r.x[pos[j]] - (neg[j] >= 0 ? r.x[neg[j]] : Q(0));
    }
    r.x = std::move(x);
  }
  return r;
}

inline bool feasible(LinearProgram lp) {
  lp.objective = zero_vector(lp.n);
  return solve(lp).status != LpStatus::infeasible;
}

// Is p a nonnegative combination of gens?
inline bool in_cone(std::vector<QVector> const& gens, QVector const& p) {
  LinearProgram lp(static_cast<int>(gens.size()));
  lp.nonnegative.assign(gens.size(), true);
  for (std::size_t i = 0; i < p.size(); ++i) {
    QVector row(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      row[g] = gens[g][i];
    }
    lp.add_eq(std::move(row), p[i]);
  }
  return feasible(lp);
}

// Is p a convex combination of pts?
inline bool in_convex_hull(std::vector<QVector> const& pts, QVector const& p) {
  if (pts.empty()) {
    return false;
  }
  LinearProgram lp(static_cast<int>(pts.size()));
  lp.nonnegative.assign(pts.size(), true);
  for (std::size_t i = 0; i < p.size(); ++i) {
    QVector row(pts.size());
    for (std::size_t g = 0; g < pts.size(); ++g) {
      row[g] = pts[g][i];
    }
    lp.add_eq(std::move(row), p[i]);
  }
  lp.add_eq(QVector(pts.size(), Q(1)), 1);
  return feasible(lp);
}

// Vertices i and j of conv(pts) span an edge iff their midpoint has no
// convex representation putting weight on another point.
inline bool is_hull_edge(std::vector<QVector> const& pts, std::size_t i, std::size_t j) {
  int k = static_cast<int>(pts.size());
  LinearProgram lp(k);
  lp.nonnegative.assign(k, true);
  QVector mid = Q(1, 2) * (pts[i] + pts[j]);
  for (std::size_t c = 0; c < mid.size(); ++c) {
    QVector row(k);
    for (int g = 0; g < k; ++g) {
      row[g] = pts[g][c];
    }
    lp.add_eq(std::move(row), mid[c]);
  }
  lp.add_eq(QVector(k, Q(1)), 1);
  for (int g = 0; g < k; ++g) {
    lp.objective[g] = (g == static_cast<int>(i) || g == static_cast<int>(j)) ? 0 : 1;
  }
  auto r = solve(lp);
  return r.status == LpStatus::optimal && sgn(r.value) == 0;
}

// ---------------------------------------------------------------------------
// Inequality systems

struct LinearConstraint {
  QVector normal;
  Q rhs;
};

// Equalities normal . x = rhs and inequalities normal . x >= rhs.
struct HRep {
  int dim = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;

  bool contains(QVector const& x) const {
    for (auto const& e : equalities) {
      if (dot(e.normal, x) != e.rhs) {
        return false;
      }
    }
    for (auto const& h : inequalities) {
      if (dot(h.normal, x) < h.rhs) {
        return false;
      }
    }
    return true;
  }

  LinearProgram program() const {
    LinearProgram lp(dim);
    for (auto const& e : equalities) {
      lp.add_eq(e.normal, e.rhs);
    }
    for (auto const& h : inequalities) {
      lp.add_ge(h.normal, h.rhs);
    }
    return lp;
  }

  bool is_bounded() const {
    for (int i = 0; i < dim; ++i) {
      for (int s : {1, -1}) {
        auto lp = program();
        lp.objective[i] = s;
        if (solve(lp).status == LpStatus::unbounded) {
          return false;
        }
      }
    }
    return true;
  }
};

// Basic feasible points: feasible x where the equalities and the tight
// inequalities have full rank. For a bounded system these are the vertices.
inline std::vector<QVector> hrep_vertices(HRep const& h) {
  int n = h.dim;
  EchelonBasis eq(n);
  std::vector<QVector> rows;
  QVector rhs;
  for (auto const& e : h.equalities) {
    rows.push_back(e.normal);
    rhs.push_back(e.rhs);
    eq.add(e.normal);
  }
  std::set<QVector> found;
  int need = n - eq.rank();
  int m = static_cast<int>(h.inequalities.size());
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start, EchelonBasis const& basis) -> void {
    if (static_cast<int>(chosen.size()) == need) {
      auto r = rows;
      auto b = rhs;
      for (int i : chosen) {
        r.push_back(h.inequalities[i].normal);
        b.push_back(h.inequalities[i].rhs);
      }
      auto x = solve_full_rank(r, b, n);
      if (x && h.contains(*x)) {
        found.insert(*x);
      }
      return;
    }
    for (int i = start; i + (need - static_cast<int>(chosen.size())) <= m; ++i) {
      EchelonBasis next = basis;
      if (next.add(h.inequalities[i].normal)) {
        chosen.push_back(i);
        self(self, i + 1, next);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0, eq);
  return {found.begin(), found.end()};
}

}  // namespace reorilat
