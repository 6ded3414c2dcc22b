#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagvar/multivector.hpp"
#include "lagvar/parallel.hpp"
#include "lagvar/quadratic_double.hpp"
#include "lagvar/subspace.hpp"

namespace lagvar {

/// Normalization of the r-matrix R = c * sum_i e_i ^ eps^i. With the bracket
/// normalization of schouten_square, c = 1 makes
/// [R, R](d1, d2, d3) = <#d1, [#d2, #d3]> hold exactly.
inline const Scalar& r_matrix_scale() {
  static const Scalar c(1);
  return c;
}

/// R = c * sum_i e_i ^ eps^i over the coordinates of the double.
inline Multivector r_matrix(const ManinTriple& t, const Scalar& scale = r_matrix_scale()) {
  const std::size_t dd = t.d().dim();
  Multivector r(dd, 2);
  for (std::size_t i = 0; i < t.n(); ++i) r += scale * wedge({t.e.row(i), t.eps.row(i)});
  return r;
}

/// Schouten square of a bivector, normalized as
///   [R, R] = -(1/2) sum over terms of  sum_{i,j} (-1)^{i+j} [x_i, y_j] ^ x_î ^ y_ĵ
/// for R = sum x1^x2. Equivalently [R, R] = -([R12,R13] + [R12,R23] + [R13,R23]).
inline Multivector schouten_square(const QuadraticDouble& D, const Multivector& r) {
  const auto& alg = D.algebra();
  if (r.degree() != 2 || r.dim() != D.dim()) throw std::invalid_argument("schouten_square: R must be a bivector on d");
  Multivector out(D.dim(), 3);
  auto term = [&](std::size_t a, std::size_t b, std::size_t x, std::size_t y, const Scalar& coeff) {
    for (const auto& [m, c] : alg.structure_sparse(a, b)) out.add({m, x, y}, coeff * c);
  };
  for (const auto& [pq, rpq] : r.terms())
    for (const auto& [st, rst] : r.terms()) {
      const Scalar w = Scalar(-1, 2) * rpq * rst;
      const std::size_t x1 = pq[0], x2 = pq[1], y1 = st[0], y2 = st[1];
      term(x1, y1, x2, y2, w);
      term(x1, y2, x2, y1, -w);
      term(x2, y1, x1, y2, -w);
      term(x2, y2, x1, y1, w);
    }
  return out;
}

/// The identification # : d* -> d, (xi, x) -> (x, xi); in coordinates the
/// inverse Gram matrix of the form.
inline Matrix sharp_map(const QuadraticDouble& D) { return inverse(D.form().gram()); }

/// A basis triple (a, b, c) of d* on which the identity fails, with both sides.
struct SchoutenMismatch {
  std::size_t a = 0, b = 0, c = 0;
  Scalar lhs, rhs;
};

/// Checks [R,R](d1,d2,d3) = <#d1, [#d2, #d3]> on all ordered triples of basis
/// covectors; returns the first failing triple in lexicographic order.
inline std::optional<SchoutenMismatch> schouten_mismatch(const ManinTriple& t, const Scalar& scale = r_matrix_scale()) {
  const auto& D = t.d();
  const std::size_t dd = D.dim();
  const Multivector rr = schouten_square(D, r_matrix(t, scale));
  const Matrix sharp = sharp_map(D);
  std::vector<Vector> s(dd);
  for (std::size_t a = 0; a < dd; ++a) s[a] = sharp.column(a);
  std::vector<std::optional<SchoutenMismatch>> first(dd);
  parallel_for(dd, [&](std::size_t a) {
    for (std::size_t b = 0; b < dd; ++b)
      for (std::size_t c = 0; c < dd; ++c) {
        Scalar rhs = D.pair(s[a], D.algebra().bracket(s[b], s[c]));
        Scalar lhs = rr.coefficient({a, b, c});
        if (lhs != rhs) {
          first[a] = SchoutenMismatch{a, b, c, std::move(lhs), std::move(rhs)};
          return;
        }
      }
  });
  for (auto& m : first)
    if (m) return m;
  return std::nullopt;
}

inline bool verify_schouten_identity(const ManinTriple& t, const Scalar& scale = r_matrix_scale()) {
  return !schouten_mismatch(t, scale).has_value();
}

/// Coordinates on the tangent space Hom(l, d/l) of the Grassmannian at [l]:
/// l is taken with its canonical basis v_i, d/l with quotient_basis
/// representatives q_j, and a tangent vector T is flattened as T(i, j) at
/// index i * codim + j.
struct TangentFrame {
  Subspace l;
  std::vector<Vector> quotient_reps;
  Matrix rho;  // (dim l * codim l) x dim d; column c is the action of e_c

  std::size_t tangent_dim() const { return rho.rows(); }
};

/// Infinitesimal action x -> (v -> [x, v] mod l).
inline TangentFrame tangent_action(const QuadraticDouble& D, const Subspace& l) {
  const std::size_t dd = D.dim();
  if (l.ambient_dim() != dd) throw std::invalid_argument("tangent_action: ambient mismatch");
  TangentFrame f;
  f.l = l;
  f.quotient_reps = quotient_basis(l, Subspace::full(dd));
  const std::size_t k = l.dim(), m = f.quotient_reps.size();
  std::vector<Vector> frame = l.rows();
  for (const auto& q : f.quotient_reps) frame.push_back(q);
  const Matrix to_frame = inverse(Matrix::from_rows(frame, dd).transpose());
  f.rho = Matrix(k * m, dd);
  const auto& alg = D.algebra();
  const auto lrows = l.rows();
  for (std::size_t c = 0; c < dd; ++c) {
    const Vector x = alg.basis_vector(c);
    for (std::size_t i = 0; i < k; ++i) {
      const Vector coords = to_frame * alg.bracket(x, lrows[i]);
      for (std::size_t j = 0; j < m; ++j) f.rho(i * m + j, c) = coords[k + j];
    }
  }
  return f;
}

inline void require_half_dim(const ManinTriple& t, const Subspace& l, const char* where) {
  if (l.ambient_dim() != t.d().dim()) throw std::invalid_argument(std::string(where) + ": ambient mismatch");
  if (l.dim() != t.d().half_dim()) throw std::invalid_argument(std::string(where) + ": l must be half-dimensional");
}

/// Pi_[l] = Lambda^2 rho (R), a bivector on Hom(l, d/l).
inline Multivector bivector_at(const ManinTriple& t, const Subspace& l) {
  require_half_dim(t, l, "bivector_at");
  return wedge_image(tangent_action(t.d(), l).rho, 2, r_matrix(t));
}

inline std::size_t bivector_rank(const ManinTriple& t, const Subspace& l) {
  return rank(bivector_at(t, l).skew_matrix());
}

/// Lambda^3 rho ([R, R]) at [l].
inline Multivector jacobiator_at(const ManinTriple& t, const Subspace& l) {
  require_half_dim(t, l, "jacobiator_at");
  return wedge_image(tangent_action(t.d(), l).rho, 3, schouten_square(t.d(), r_matrix(t)));
}

/// First half-dimensional subspace with a nonzero jacobiator that is not a
/// Lagrangian subalgebra, searching coordinate subspaces span{b_i : i in I}
/// in lexicographic order of I, then the same with b_{i_0} replaced by
/// b_{i_0} + b_j for j outside I.
inline std::optional<Subspace> find_jacobiator_witness(const ManinTriple& t) {
  const std::size_t dd = t.d().dim(), k = t.d().half_dim();
  std::vector<std::size_t> idx(k);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<std::size_t> extra{dd};  // dd: no perturbation
      if (pass == 1) {
        extra.clear();
        for (std::size_t j = 0; j < dd; ++j)
          if (std::find(idx.begin(), idx.end(), j) == idx.end()) extra.push_back(j);
      }
      for (auto j : extra) {
        std::vector<Vector> rows;
        for (auto i : idx) rows.push_back(unit_vector(dd, i));
        if (j < dd) rows[0] = rows[0] + unit_vector(dd, j);
        Subspace s = Subspace::span(rows, dd);
        if (is_lagrangian(t.d(), s)) continue;
        if (!jacobiator_at(t, s).is_zero()) return s;
      }
      // next k-combination of 0..dd-1
      std::size_t p = k;
      while (p > 0 && idx[p - 1] == dd - k + p - 1) --p;
      if (p == 0) break;
      ++idx[p - 1];
      for (std::size_t i = p; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace lagvar
