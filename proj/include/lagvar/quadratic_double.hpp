#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lagvar/lie_algebra.hpp"
#include "lagvar/multivector.hpp"
#include "lagvar/parabolic.hpp"
#include "lagvar/subspace.hpp"

namespace lagvar {

enum class DoubleKind { direct_sum, semidirect, custom };

inline const char* to_string(DoubleKind k) {
  switch (k) {
    case DoubleKind::direct_sum: return "direct_sum";
    case DoubleKind::semidirect: return "semidirect";
    default: return "custom";
  }
}

/// Even-dimensional Lie algebra d with a nondegenerate symmetric invariant
/// form. For the two standard doubles `base()` is the algebra g they are
/// built from, with g occupying the first dim(g) coordinates.
class QuadraticDouble {
 public:
  QuadraticDouble(LieAlgebra algebra, BilinearForm form, DoubleKind kind, std::optional<LieAlgebra> base = {})
      : algebra_(std::move(algebra)), form_(std::move(form)), kind_(kind), base_(std::move(base)) {
    const std::size_t d = algebra_.dim();
    if (form_.dim() != d) throw std::invalid_argument("QuadraticDouble: form and algebra dimensions differ");
    if (d % 2 != 0) throw std::invalid_argument("QuadraticDouble: dimension must be even");
    if (!form_.nondegenerate()) throw std::invalid_argument("QuadraticDouble: form is degenerate");
    const Matrix& gram = form_.gram();
    // <[e_i, e_j], e_k> = <e_i, [e_j, e_k]> on all basis triples.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          Scalar lhs = 0, rhs = 0;
          for (const auto& [m, c] : algebra_.structure_sparse(i, j)) lhs += c * gram(m, k);
          for (const auto& [m, c] : algebra_.structure_sparse(j, k)) rhs += gram(i, m) * c;
          if (lhs != rhs) throw std::invalid_argument("QuadraticDouble: form is not invariant");
        }
  }

  const LieAlgebra& algebra() const { return algebra_; }
  const BilinearForm& form() const { return form_; }
  std::size_t dim() const { return algebra_.dim(); }
  std::size_t half_dim() const { return algebra_.dim() / 2; }
  DoubleKind kind() const { return kind_; }
  const std::optional<LieAlgebra>& base() const { return base_; }

  Scalar pair(const Vector& x, const Vector& y) const { return form_(x, y); }

 private:
  LieAlgebra algebra_;
  BilinearForm form_;
  DoubleKind kind_;
  std::optional<LieAlgebra> base_;
};

/// g + g with <(x1,x2),(y1,y2)> = kappa(x1,y1) - kappa(x2,y2).
inline QuadraticDouble direct_sum_double(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const BilinearForm kappa = g.killing_form();
  if (!kappa.nondegenerate()) throw std::invalid_argument("direct_sum_double: Killing form of " + g.name() + " is degenerate");
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : g.labels()) labels.push_back("(0," + l + ")");
  std::vector<Vector> br(4 * n * n, zero_vector(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      br[i * 2 * n + j] = embed_first(g.structure(i, j));
      br[(n + i) * 2 * n + (n + j)] = embed_second(g.structure(i, j));
    }
  Matrix gram(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gram(i, j) = kappa.gram()(i, j);
      gram(n + i, n + j) = -kappa.gram()(i, j);
    }
  LieAlgebra d(g.name() + "+" + g.name(), std::move(labels), std::move(br));
  return QuadraticDouble(std::move(d), BilinearForm(std::move(gram)), DoubleKind::direct_sum, g);
}

/// g x| g* with the coadjoint action and the evaluation pairing. Basis: e_i,
/// then the dual basis eps^i of g*.
inline QuadraticDouble semidirect_double(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : g.labels()) labels.push_back("(0," + l + "*)");
  std::vector<Vector> br(4 * n * n, zero_vector(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      br[i * 2 * n + j] = embed_first(g.structure(i, j));
      // [e_i, eps^j] = ad*_{e_i} eps^j = -sum_k c_ik^j eps^k
      Vector v = zero_vector(2 * n);
      for (std::size_t k = 0; k < n; ++k) v[n + k] = -g.structure(i, k)[j];
      br[i * 2 * n + (n + j)] = v;
      br[(n + j) * 2 * n + i] = Scalar(-1) * v;
    }
  Matrix gram(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    gram(i, n + i) = 1;
    gram(n + i, i) = 1;
  }
  LieAlgebra d(g.name() + "|x" + g.name() + "*", std::move(labels), std::move(br));
  return QuadraticDouble(std::move(d), BilinearForm(std::move(gram)), DoubleKind::semidirect, g);
}

/// The 2-dimensional abelian double span{e, eps} with <e, eps> = 1.
inline QuadraticDouble abelian_double() { return semidirect_double(make_abelian(1)); }

/// A Lagrangian subalgebra is a subalgebra equal to its own orthogonal.
inline bool is_lagrangian(const QuadraticDouble& D, const Subspace& s) {
  if (s.ambient_dim() != D.dim()) throw std::invalid_argument("is_lagrangian: ambient mismatch");
  if (s.dim() != D.half_dim()) return false;
  return D.algebra().is_subalgebra(s) && orth_complement(s, D.form()) == s;
}

/// Why a subspace fails to be a Lagrangian subalgebra: a basis pair (x, y)
/// with <x, y> != 0 or [x, y] outside the subspace.
struct LagrangianDefect {
  enum class Kind { wrong_dimension, not_isotropic, not_closed } kind;
  Vector x, y;
  Scalar pairing;
  Vector bracket;
};

inline const char* to_string(LagrangianDefect::Kind k) {
  switch (k) {
    case LagrangianDefect::Kind::wrong_dimension: return "wrong_dimension";
    case LagrangianDefect::Kind::not_isotropic: return "not_isotropic";
    default: return "not_closed";
  }
}

/// std::nullopt exactly when is_lagrangian(D, s).
inline std::optional<LagrangianDefect> lagrangian_defect(const QuadraticDouble& D, const Subspace& s) {
  if (s.ambient_dim() != D.dim()) throw std::invalid_argument("lagrangian_defect: ambient mismatch");
  if (s.dim() != D.half_dim()) return LagrangianDefect{LagrangianDefect::Kind::wrong_dimension, {}, {}, 0, {}};
  const auto rows = s.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      Scalar p = D.pair(rows[i], rows[j]);
      if (p != 0) return LagrangianDefect{LagrangianDefect::Kind::not_isotropic, rows[i], rows[j], p, {}};
    }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      Vector b = D.algebra().bracket(rows[i], rows[j]);
      if (!s.contains(b)) return LagrangianDefect{LagrangianDefect::Kind::not_closed, rows[i], rows[j], 0, b};
    }
  return std::nullopt;
}

/// g_Delta = {(x, x)} inside g + g.
inline Subspace diagonal_lagrangian(const LieAlgebra& g) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < g.dim(); ++i) rows.push_back(embed_diagonal(g.basis_vector(i)));
  return Subspace::span(rows, 2 * g.dim());
}

/// Manin triple (d, u, u*) with dual bases <e_i, eps^j> = delta_ij; the e_i
/// are the canonical basis rows of u.
struct ManinTriple {
  QuadraticDouble quadratic;
  Subspace u;
  Subspace u_star;
  Matrix e;    // rows e_i
  Matrix eps;  // rows eps^i

  std::size_t n() const { return u.dim(); }
  const QuadraticDouble& d() const { return quadratic; }
};

inline ManinTriple make_manin_triple(QuadraticDouble D, const Subspace& u, const Subspace& w) {
  if (!is_lagrangian(D, u)) throw std::invalid_argument("make_manin_triple: u is not a Lagrangian subalgebra");
  if (!is_lagrangian(D, w)) throw std::invalid_argument("make_manin_triple: u* is not a Lagrangian subalgebra");
  if (intersect(u, w).dim() != 0) throw std::invalid_argument("make_manin_triple: u and u* are not transversal");
  const Matrix& e = u.basis();
  const Matrix& wb = w.basis();
  // P(i,k) = <e_i, w_k>; eps = (P^T)^{-1} w.
  Matrix p = e * D.form().gram() * wb.transpose();
  Matrix eps = inverse(p.transpose()) * wb;
  return ManinTriple{std::move(D), u, w, e, std::move(eps)};
}

/// Complement of g_Delta in the standard splitting: {(x, y) in b x b^- : x_t = -y_t}.
/// (The fiber product with equal torus components contains t_Delta and is not
/// transversal to g_Delta.)
inline Subspace standard_complement(const LieAlgebra& g) {
  const auto pd = parabolic_data(g, IndexSet{});
  std::vector<Vector> rows;
  for (const auto& x : pd.u.rows()) rows.push_back(embed_first(x));
  for (const auto& y : pd.u_minus.rows()) rows.push_back(embed_second(y));
  for (const auto& h : pd.levi.rows()) rows.push_back(concat(h, Scalar(-1) * h));
  return Subspace::span(rows, 2 * g.dim());
}

/// (g + g, g_Delta, b x_t b^-) with the complement taken from standard_complement.
inline ManinTriple standard_triple(const LieAlgebra& g) {
  require_root_datum(g);
  auto D = direct_sum_double(g);
  return make_manin_triple(std::move(D), diagonal_lagrangian(g), standard_complement(g));
}

/// (g x| g*, g, g*).
inline ManinTriple semidirect_triple(const LieAlgebra& g) {
  auto D = semidirect_double(g);
  const std::size_t n = g.dim();
  std::vector<Vector> first, second;
  for (std::size_t i = 0; i < n; ++i) {
    first.push_back(unit_vector(2 * n, i));
    second.push_back(unit_vector(2 * n, n + i));
  }
  return make_manin_triple(std::move(D), Subspace::span(first, 2 * n), Subspace::span(second, 2 * n));
}

inline ManinTriple abelian_triple() { return semidirect_triple(make_abelian(1)); }

/// The triple with the roles of u and u* exchanged.
inline ManinTriple swapped(const ManinTriple& t) { return make_manin_triple(t.quadratic, t.u_star, t.u); }

/// delta(e_k) in Lambda^2 u, coordinates over the e-basis.
struct Cobracket {
  std::vector<Multivector> images;
};

/// <delta(e_k), eps^i (x) eps^j> = <e_k, [eps^i, eps^j]>.
inline Cobracket cobracket(const ManinTriple& t) {
  const std::size_t n = t.n();
  const auto& alg = t.d().algebra();
  Cobracket cb;
  cb.images.assign(n, Multivector(n, 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector br = alg.bracket(t.eps.row(i), t.eps.row(j));
      if (lagvar::is_zero(br)) continue;
      for (std::size_t k = 0; k < n; ++k) cb.images[k].add({i, j}, t.d().pair(t.e.row(k), br));
    }
  return cb;
}

/// u as an abstract Lie algebra in the e-basis.
inline LieAlgebra u_algebra(const ManinTriple& t) { return t.d().algebra().restrict_to(t.e, "u"); }

/// ad_x acting on Lambda^2 as a derivation; x = e_a in the algebra `u`.
inline Multivector ad_on_bivector(const LieAlgebra& u, std::size_t a, const Multivector& w) {
  const std::size_t n = u.dim();
  Multivector out(n, 2);
  for (const auto& [idx, c] : w.terms()) {
    for (const auto& [m, s] : u.structure_sparse(a, idx[0])) out.add({m, idx[1]}, c * s);
    for (const auto& [m, s] : u.structure_sparse(a, idx[1])) out.add({idx[0], m}, c * s);
  }
  return out;
}

/// delta([x, y]) = ad_x delta(y) - ad_y delta(x) on all basis pairs of u.
inline bool verify_cocycle(const ManinTriple& t) {
  const Cobracket cb = cobracket(t);
  const LieAlgebra u = u_algebra(t);
  const std::size_t n = t.n();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Multivector lhs(n, 2);
      for (const auto& [c, s] : u.structure_sparse(a, b)) lhs += s * cb.images[c];
      Multivector rhs = ad_on_bivector(u, a, cb.images[b]);
      rhs -= ad_on_bivector(u, b, cb.images[a]);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

}  // namespace lagvar
