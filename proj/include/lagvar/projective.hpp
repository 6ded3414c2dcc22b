#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lagvar/matrix.hpp"
#include "lagvar/scalar.hpp"

namespace lagvar {

/// Point of projective space, stored with its first nonzero coordinate equal to 1.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(Vector coords) : coords_(std::move(coords)) {
    auto it = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& x) { return x != 0; });
    if (it == coords_.end()) throw std::invalid_argument("ProjectivePoint: all coordinates are zero");
    const Scalar lead = *it;
    for (auto& x : coords_) x /= lead;
  }

  const Vector& coordinates() const { return coords_; }
  std::size_t ambient_dim() const { return coords_.size() - 1; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }

 private:
  Vector coords_;
};

inline Vector flatten(const Matrix& a) {
  Vector v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  return v;
}

/// [a] in P(End V) for invertible a.
inline ProjectivePoint psi_point(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("psi_point: matrix must be square");
  if (determinant(a) == 0) throw std::domain_error("psi_point: singular matrix; use boundary_point");
  return ProjectivePoint(flatten(a));
}

/// [a] for a nonzero matrix with det a = 0.
inline ProjectivePoint boundary_point(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("boundary_point: matrix must be square");
  if (determinant(a) != 0) throw std::domain_error("boundary_point: matrix is invertible");
  return ProjectivePoint(flatten(a));
}

/// ([p], [q]) -> [p q^T].
inline ProjectivePoint segre(const Vector& p, const Vector& q) {
  if (lagvar::is_zero(p) || lagvar::is_zero(q)) throw std::invalid_argument("segre: zero input");
  Vector out;
  for (const auto& x : p)
    for (const auto& y : q) out.push_back(x * y);
  return ProjectivePoint(std::move(out));
}

/// Gradient of det at A: the cofactor matrix, entry (i,j) = (-1)^(i+j) det A_ij.
inline Matrix det_gradient(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("det_gradient: matrix must be square");
  const std::size_t n = a.rows();
  Matrix g(n, n);
  if (n == 1) {
    g(0, 0) = 1;
    return g;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      Scalar d = determinant(std::move(minor));
      g(i, j) = (i + j) % 2 == 0 ? d : Scalar(-d);
    }
  return g;
}

/// Sparse multivariate polynomial over Q; a monomial is its exponent vector.
class Polynomial {
 public:
  using Monomial = std::vector<unsigned>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Scalar& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::invalid_argument("Polynomial::variable: index out of range");
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest exponent of variable i.
  unsigned degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a.check(b);
    for (const auto& [m, c] : b.terms_) a.accumulate(m, c);
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a.check(b);
    for (const auto& [m, c] : b.terms_) a.accumulate(m, -c);
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial p(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        p.accumulate(m, ca * cb);
      }
    return p;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  }
  void accumulate(const Monomial& m, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  std::size_t nvars_;
  std::map<Monomial, Scalar> terms_;
};

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;

/// Leibniz expansion.
inline Polynomial symbolic_determinant(const PolynomialMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw std::invalid_argument("symbolic_determinant: empty matrix");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("symbolic_determinant: matrix must be square");
  const std::size_t nv = a[0][0].nvars();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Polynomial det(nv);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term = Polynomial::constant(nv, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// The n x n matrix of variables x_ij, indexed i * n + j.
inline PolynomialMatrix generic_matrix(std::size_t n) {
  PolynomialMatrix m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Polynomial::variable(n * n, i * n + j);
  return m;
}

/// det [[p1 q1, p1 q2], [p2 q1, p2 q2]] in the variables p1, p2, q1, q2.
inline Polynomial segre_determinant() {
  const auto p1 = Polynomial::variable(4, 0), p2 = Polynomial::variable(4, 1);
  const auto q1 = Polynomial::variable(4, 2), q2 = Polynomial::variable(4, 3);
  return symbolic_determinant({{p1 * q1, p1 * q2}, {p2 * q1, p2 * q2}});
}

/// Irreducibility over Q of a polynomial of degree <= 1 in every variable.
/// A factorization f = g h puts each variable into exactly one factor, so it
/// exists iff for some split of the occurring variables into two nonempty
/// parts the coefficient matrix (monomials on one side against the other) has
/// rank 1. Throws std::invalid_argument if some variable has degree > 1 or
/// more than 20 variables occur.
inline bool is_irreducible_multiaffine(const Polynomial& f) {
  if (f.is_zero()) return false;
  std::vector<std::size_t> occurring;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    const unsigned d = f.degree_in(i);
    if (d > 1) throw std::invalid_argument("is_irreducible_multiaffine: degree > 1 in a variable");
    if (d == 1) occurring.push_back(i);
  }
  if (occurring.empty()) return false;  // a unit
  if (occurring.size() > 20) throw std::invalid_argument("is_irreducible_multiaffine: too many variables");
  const std::size_t k = occurring.size();
  // occurring[0] stays on side A so each split is visited once; mask != 0 keeps B nonempty.
  for (std::size_t mask = 1; mask < (std::size_t{1} << (k - 1)); ++mask) {
    std::vector<bool> side_b(f.nvars(), false);
    for (std::size_t b = 0; b + 1 < k; ++b)
      if (mask & (std::size_t{1} << b)) side_b[occurring[b + 1]] = true;
    std::map<Polynomial::Monomial, std::size_t> rows, cols;
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
    for (const auto& [m, c] : f.terms()) {
      Polynomial::Monomial ma(m.size(), 0), mb(m.size(), 0);
      for (std::size_t i = 0; i < m.size(); ++i) (side_b[i] ? mb : ma)[i] = m[i];
      auto r = rows.try_emplace(ma, rows.size()).first->second;
      auto c2 = cols.try_emplace(mb, cols.size()).first->second;
      entries.emplace_back(r, c2, c);
    }
    Matrix coeff(rows.size(), cols.size());
    for (const auto& [r, c2, c] : entries) coeff(r, c2) = c;
    if (rank(coeff) == 1) return false;
  }
  return true;
}

/// diag(1, ..., 1, 0, ..., 0) with r ones.
inline Matrix rank_representative(std::size_t n, std::size_t r) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < std::min(r, n); ++i) a(i, i) = 1;
  return a;
}

struct RankStratum {
  std::size_t rank = 0;
  Matrix representative;
  bool gradient_vanishes = false;
};

/// Boundary {det = 0} of the compactification PGL_n in P(M_n).
struct CompactificationReport {
  std::size_t n = 0;
  std::size_t group_rank = 0;           // n - 1
  std::size_t boundary_divisors = 1;    // the single hypersurface det = 0
  std::optional<bool> boundary_irreducible;  // decided for n <= 3 only
  std::vector<RankStratum> strata;      // boundary ranks 1 .. n-1
  bool boundary_smooth = false;
  std::optional<Matrix> singular_witness;
  bool wonderful = false;
};

inline CompactificationReport naive_compactification_report(std::size_t n) {
  if (n < 2 || n > 4) throw std::invalid_argument("naive_compactification_report: n must be in 2..4");
  CompactificationReport rep;
  rep.n = n;
  rep.group_rank = n - 1;
  if (n <= 3) rep.boundary_irreducible = is_irreducible_multiaffine(symbolic_determinant(generic_matrix(n)));
  rep.boundary_smooth = true;
  for (std::size_t r = 1; r < n; ++r) {
    RankStratum s;
    s.rank = r;
    s.representative = rank_representative(n, r);
    s.gradient_vanishes = det_gradient(s.representative).is_zero();
    if (s.gradient_vanishes && rep.boundary_smooth) {
      rep.boundary_smooth = false;
      rep.singular_witness = s.representative;
    }
    rep.strata.push_back(std::move(s));
  }
  // Wonderful needs a smooth boundary made of exactly rank-many divisors.
  rep.wonderful = rep.boundary_smooth && rep.boundary_divisors == rep.group_rank &&
                  rep.boundary_irreducible.value_or(true);
  return rep;
}

}  // namespace lagvar
