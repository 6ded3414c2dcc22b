#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagvar/lie_algebra.hpp"
#include "lagvar/multivector.hpp"
#include "lagvar/parabolic.hpp"
#include "lagvar/quadratic_double.hpp"
#include "lagvar/subspace.hpp"

namespace lagvar {

inline const MatrixModel& require_matrix_model(const LieAlgebra& g) {
  if (!g.matrix_model()) throw std::invalid_argument(g.name() + " has no matrix model");
  return *g.matrix_model();
}

/// sigma(x) = -x^T on a matrix model closed under transposition.
inline InvolutionSpec neg_transpose_involution(const LieAlgebra& g) {
  const auto& model = require_matrix_model(g);
  std::vector<Vector> cols;
  for (const auto& x : model.basis) cols.push_back(model.coordinates(Scalar(-1) * x.transpose()));
  return InvolutionSpec{Matrix::from_columns(cols, g.dim())};
}

struct InvolutionGraph {
  Subspace graph;          // l_sigma inside g + g
  Subspace fixed;          // g^sigma inside g
  Subspace diagonal_meet;  // l_sigma intersected with g_Delta
  bool identity = false;   // sigma = id, so l_sigma = g_Delta
};

/// l_sigma = {(x, sigma x)}. The identity involution is accepted and flagged.
inline InvolutionGraph graph_of_involution(const LieAlgebra& g, const InvolutionSpec& sigma) {
  sigma.validate(g);
  const std::size_t n = g.dim();
  InvolutionGraph out;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(concat(g.basis_vector(i), sigma.matrix.column(i)));
  out.graph = Subspace::span(rows, 2 * n);
  out.fixed = Subspace::span(nullspace(sigma.matrix - Matrix::identity(n)), n);
  out.diagonal_meet = intersect(out.graph, diagonal_lagrangian(g));
  out.identity = sigma.is_identity();
  return out;
}

/// Matrix of Ad_a = (x -> a x a^{-1}) on g. Throws std::domain_error for singular a.
inline Matrix adjoint_matrix(const LieAlgebra& g, const Matrix& a) {
  const auto& model = require_matrix_model(g);
  if (a.rows() != model.n || a.cols() != model.n) throw std::invalid_argument("adjoint_matrix: shape mismatch");
  if (determinant(a) == 0) throw std::domain_error("adjoint_matrix: singular group element");
  const Matrix a_inv = inverse(a);
  std::vector<Vector> cols;
  for (const auto& x : model.basis) cols.push_back(model.coordinates(a * x * a_inv));
  return Matrix::from_columns(cols, g.dim());
}

/// exp(x) for a nilpotent matrix x. Throws std::invalid_argument if x^n != 0.
inline Matrix exp_nilpotent(const Matrix& x) {
  if (!x.square()) throw std::invalid_argument("exp_nilpotent: matrix must be square");
  const std::size_t n = x.rows();
  Matrix result = Matrix::identity(n), power = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = Scalar(1, k) * (power * x);
    if (power.is_zero()) return result;
    result = result + power;
  }
  throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

/// exp(c_1 x_1) ... exp(c_k x_k) in the matrix group, where the index +i
/// selects the simple root vector e_i and -i selects f_i (1-based).
inline Matrix root_group_element(const LieAlgebra& g, const std::vector<std::pair<long, Scalar>>& factors) {
  const auto& rd = require_root_datum(g);
  const auto& model = require_matrix_model(g);
  Matrix a = Matrix::identity(model.n);
  for (const auto& [idx, c] : factors) {
    const std::size_t k = static_cast<std::size_t>(idx < 0 ? -idx : idx);
    const auto& pool = idx < 0 ? rd.negative_root_vectors : rd.positive_root_vectors;
    if (k == 0 || k > pool.size()) throw std::invalid_argument("root_group_element: root index out of range");
    a = a * exp_nilpotent(c * model.to_matrix(pool[k - 1]));
  }
  return a;
}

enum class Side { left, right };

/// Applies (Ad_a, id) or (id, Ad_a) to a subspace of g + g.
inline Subspace adjoint_translate(const LieAlgebra& g, const Matrix& a, Side side, const Subspace& s) {
  const std::size_t n = g.dim();
  if (s.ambient_dim() != 2 * n) throw std::invalid_argument("adjoint_translate: subspace is not in g + g");
  const Matrix ad = adjoint_matrix(g, a);
  std::vector<Vector> rows;
  for (const auto& r : s.rows()) {
    Vector x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    Vector y(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
    if (side == Side::left)
      x = ad * x;
    else
      y = ad * y;
    rows.push_back(concat(x, y));
  }
  return Subspace::span(rows, 2 * n);
}

/// One-parameter subgroup t -> chi(t) acting diagonally on the basis of a
/// double, by t^{weights[i]} on the i-th basis vector.
struct Cocharacter {
  std::vector<long> weights;

  /// Reads the weights off ad_x, which must be diagonal with integer entries.
  static Cocharacter from_element(const QuadraticDouble& D, const Vector& x) {
    const Matrix ad = D.algebra().ad_matrix(x);
    Cocharacter chi;
    for (std::size_t i = 0; i < ad.rows(); ++i)
      for (std::size_t j = 0; j < ad.cols(); ++j) {
        if (i == j) continue;
        if (ad(i, j) != 0) throw std::invalid_argument("Cocharacter: ad_x is not diagonal in the basis");
      }
    for (std::size_t i = 0; i < ad.rows(); ++i) {
      if (ad(i, i).get_den() != 1) throw std::invalid_argument("Cocharacter: non-integral eigenvalue");
      chi.weights.push_back(ad(i, i).get_num().get_si());
    }
    return chi;
  }

  bool is_trivial() const {
    return std::all_of(weights.begin(), weights.end(), [](long w) { return w == 0; });
  }

  /// [d_a, d_b] inside d_{a+b} for the grading by weights.
  bool compatible_with(const LieAlgebra& d) const {
    if (weights.size() != d.dim()) return false;
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = i + 1; j < d.dim(); ++j)
        for (const auto& [k, c] : d.structure_sparse(i, j))
          if (weights[k] != weights[i] + weights[j]) return false;
    return true;
  }
};

/// Element h of the Cartan with alpha_i(h) = 1 for i in `support` and 0 for
/// the other simple roots: the sum of the corresponding fundamental coweights.
inline Vector coweight_sum(const LieAlgebra& g, const IndexSet& support) {
  const auto& rd = require_root_datum(g);
  check_index_set(support, rd.rank);
  const auto cartan = rd.cartan_subalgebra.rows();
  // alpha_i(h_k): the eigenvalue of ad(h_k) on e_i.
  Matrix sys(rd.rank, cartan.size() + 1);
  for (std::size_t i = 0; i < rd.rank; ++i) {
    const Vector& e = rd.positive_root_vectors[i];
    const std::size_t pos = static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](const Scalar& v) { return v != 0; }) - e.begin());
    for (std::size_t k = 0; k < cartan.size(); ++k) sys(i, k) = g.bracket(cartan[k], e)[pos] / e[pos];
    sys(i, cartan.size()) = std::binary_search(support.begin(), support.end(), i + 1) ? 1 : 0;
  }
  auto red = rref(sys);
  if (!red.pivots.empty() && red.pivots.back() == cartan.size()) throw std::logic_error("coweight_sum: inconsistent system");
  Vector coeffs = zero_vector(cartan.size());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) coeffs[red.pivots[r]] = red.reduced(r, cartan.size());
  Vector h = zero_vector(g.dim());
  for (std::size_t k = 0; k < cartan.size(); ++k) h = h + coeffs[k] * cartan[k];
  return h;
}

/// Cocharacter of g + g acting through the coweight sum over the simple roots
/// outside J on the first factor, trivially on the second. Its limit of g_Delta
/// is the fiber product attached to J.
inline Cocharacter parabolic_cocharacter(const QuadraticDouble& D, const IndexSet& J) {
  if (!D.base() || D.kind() != DoubleKind::direct_sum)
    throw std::invalid_argument("parabolic_cocharacter: needs a direct-sum double");
  const auto& g = *D.base();
  const auto& rd = require_root_datum(g);
  check_index_set(J, rd.rank);
  IndexSet complement;
  for (std::size_t i = 1; i <= rd.rank; ++i)
    if (!std::binary_search(J.begin(), J.end(), i)) complement.push_back(i);
  return Cocharacter::from_element(D, embed_first(coweight_sum(g, complement)));
}

/// Limit of chi(t) S as t -> infinity, i.e. the associated graded of S for
/// the increasing weight filtration F_k = sum of weight spaces of weight <= k:
///   lim = sum_k proj_k(S meet F_k).
/// Each vector is replaced by its highest-weight component. For g + g with chi
/// the positive coroot on the first factor, g_Delta goes to b x_t b^-.
inline Subspace cocharacter_limit(const QuadraticDouble& D, const Cocharacter& chi, const Subspace& s) {
  if (!chi.compatible_with(D.algebra())) throw std::invalid_argument("cocharacter_limit: incompatible grading");
  if (s.ambient_dim() != D.dim()) throw std::invalid_argument("cocharacter_limit: ambient mismatch");
  std::map<long, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < chi.weights.size(); ++i) by_weight[chi.weights[i]].push_back(i);
  const std::size_t n = D.dim();
  std::vector<Vector> rows;
  std::vector<std::size_t> below;  // coordinates of weight <= k
  for (const auto& [w, idx] : by_weight) {
    below.insert(below.end(), idx.begin(), idx.end());
    std::vector<Vector> eqs;  // coordinates of weight > k vanish
    std::vector<bool> allowed(n, false);
    for (auto i : below) allowed[i] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!allowed[i]) eqs.push_back(unit_vector(n, i));
    Subspace filt = eqs.empty() ? Subspace::full(n) : Subspace::span(nullspace(Matrix::from_rows(eqs, n)), n);
    for (const auto& v : intersect(s, filt).rows()) {
      Vector top = zero_vector(n);
      for (auto i : idx) top[i] = v[i];
      if (!lagvar::is_zero(top)) rows.push_back(std::move(top));
    }
  }
  Subspace lim = Subspace::span(rows, n);
  if (lim.dim() != s.dim()) throw std::logic_error("cocharacter_limit: dimension not preserved");
  return lim;
}

/// Infinitesimal data of a Poisson homogeneous space at a point: the
/// stabilizer subalgebra u_m of u and the bivector pi_m on u/u_m, written over
/// quotient_basis(stab, u).
struct PoissonHomogeneousDatum {
  ManinTriple triple;
  Subspace stab;
  Multivector pi;

  std::vector<Vector> quotient_representatives() const { return quotient_basis(stab, triple.u); }
};

/// l_m = {(x, xi) in u + u* : xi|stab = 0, pi#(xi) = x mod stab}, with
/// pi#(xi) = sum_{s,t} pi_st xi(q_s) q_t. Throws std::invalid_argument when the
/// datum is malformed or does not come from a Poisson homogeneous space
/// (the subspace is then not closed under the bracket).
inline Subspace drinfeld_subalgebra(const PoissonHomogeneousDatum& datum) {
  const ManinTriple& t = datum.triple;
  const std::size_t n = t.n(), dd = t.d().dim();
  if (datum.stab.ambient_dim() != dd) throw std::invalid_argument("drinfeld_subalgebra: stab ambient mismatch");
  if (!t.u.contains(datum.stab)) throw std::invalid_argument("drinfeld_subalgebra: stab is not inside u");
  if (!t.d().algebra().is_subalgebra(datum.stab)) throw std::invalid_argument("drinfeld_subalgebra: stab is not a subalgebra");
  const auto reps = datum.quotient_representatives();
  if (datum.pi.degree() != 2 || datum.pi.dim() != reps.size())
    throw std::invalid_argument("drinfeld_subalgebra: pi must be a bivector on u/stab");

  auto e_coords = [&](const Vector& v) { return coordinates_in_rows(t.e, v); };
  std::vector<Vector> stab_e, reps_e;
  for (const auto& s : datum.stab.rows()) stab_e.push_back(e_coords(s));
  for (const auto& q : reps) reps_e.push_back(e_coords(q));
  const Matrix pi = datum.pi.skew_matrix();

  // Unknowns (a, b): x = sum a_i e_i, xi = sum b_j eps^j, so xi(v) = v_e . b.
  std::vector<Vector> eqs;
  for (const auto& s : stab_e) eqs.push_back(concat(zero_vector(n), s));
  // pi#(xi) in e-coordinates is M b with M = sum_{s,t} pi_st q_t q_s^T.
  Matrix m(n, n);
  for (std::size_t s = 0; s < reps_e.size(); ++s)
    for (std::size_t u = 0; u < reps_e.size(); ++u) {
      if (pi(s, u) == 0) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += pi(s, u) * reps_e[u][i] * reps_e[s][j];
    }
  const Subspace stab_span = Subspace::span(stab_e, n);
  for (const auto& y : annihilator(stab_span).rows()) {
    Vector yb = Scalar(-1) * (m.transpose() * y);
    eqs.push_back(concat(y, yb));
  }
  auto sol = nullspace(Matrix::from_rows(eqs, 2 * n));
  std::vector<Vector> rows;
  for (const auto& s : sol) {
    Vector a(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n));
    Vector b(s.begin() + static_cast<std::ptrdiff_t>(n), s.end());
    rows.push_back(t.e.transpose() * a + t.eps.transpose() * b);
  }
  Subspace l = Subspace::span(rows, dd);
  if (!is_lagrangian(t.d(), l))
    throw std::invalid_argument("drinfeld_subalgebra: datum does not define a Poisson homogeneous space");
  return l;
}

/// u_[l]: the normalizer of l inside u.
inline Subspace normalizer_in_u(const ManinTriple& t, const Subspace& l) {
  return intersect(t.d().algebra().normalizer(l), t.u);
}

/// Psi([l]) = [u_[l] + (u + u_[l]^o) meet l], where u_[l]^o is the annihilator
/// of u_[l] in u*.
inline Subspace drinfeld_image_of_point(const ManinTriple& t, const Subspace& l) {
  if (!is_lagrangian(t.d(), l)) throw std::invalid_argument("drinfeld_image_of_point: l is not Lagrangian");
  const Subspace nu = normalizer_in_u(t, l);
  const Subspace ann = intersect(t.u_star, orth_complement(nu, t.d().form()));
  Subspace image = sum(nu, intersect(sum(t.u, ann), l));
  if (!is_lagrangian(t.d(), image)) throw std::logic_error("drinfeld_image_of_point: image is not Lagrangian");
  return image;
}

/// Model points: l meet u equals the normalizer of l in u.
inline bool is_model_point(const ManinTriple& t, const Subspace& l) {
  if (!is_lagrangian(t.d(), l)) throw std::invalid_argument("is_model_point: l is not Lagrangian");
  return intersect(l, t.u) == normalizer_in_u(t, l);
}

}  // namespace lagvar
