#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lagvar/matrix.hpp"
#include "lagvar/scalar.hpp"
#include "lagvar/subspace.hpp"

namespace lagvar {

/// Simple-root data of a classical algebra relative to its diagonal Cartan.
/// Weights are written in the coordinates eps_1..eps_m of the diagonal torus
/// and paired with the standard Euclidean inner product.
struct RootDatum {
  char series = 'A';
  std::size_t rank = 0;
  std::vector<std::vector<int>> cartan_matrix;  // a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
  std::vector<Vector> simple_roots;             // eps-coordinates
  std::vector<Vector> positive_root_vectors;    // e_i, algebra coordinates
  std::vector<Vector> negative_root_vectors;    // f_i, algebra coordinates
  std::vector<Subspace> positive_simple_spaces;
  std::vector<Subspace> negative_simple_spaces;
  Subspace cartan_subalgebra;
  std::vector<Vector> basis_weights;  // weight of each basis vector, eps-coordinates

  Scalar inner(const Vector& a, const Vector& b) const { return dot(a, b); }
};

/// Basis matrices of a matrix Lie algebra plus a precomputed solver taking a
/// matrix back to basis coordinates.
struct MatrixModel {
  std::size_t n = 0;
  std::vector<Matrix> basis;
  std::vector<std::size_t> pivot_entries;  // flattened entries determining coordinates
  Matrix pivot_inverse;
  Matrix flat;  // dim x n^2, row i = basis[i] flattened

  static MatrixModel build(std::vector<Matrix> basis) {
    if (basis.empty()) throw std::invalid_argument("MatrixModel: empty basis");
    MatrixModel m;
    m.n = basis.front().rows();
    m.flat = Matrix(basis.size(), m.n * m.n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].rows() != m.n || basis[i].cols() != m.n)
        throw std::invalid_argument("MatrixModel: basis matrices must share one square shape");
      for (std::size_t r = 0; r < m.n; ++r)
        for (std::size_t c = 0; c < m.n; ++c) m.flat(i, r * m.n + c) = basis[i](r, c);
    }
    auto e = rref(m.flat);
    if (e.pivots.size() != basis.size()) throw std::invalid_argument("MatrixModel: basis matrices are dependent");
    m.pivot_entries = e.pivots;
    Matrix sub(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) sub(i, j) = m.flat(i, m.pivot_entries[j]);
    m.pivot_inverse = inverse(sub);
    m.basis = std::move(basis);
    return m;
  }

  /// Coordinates of a matrix in the basis; throws std::domain_error if the
  /// matrix is outside the algebra.
  Vector coordinates(const Matrix& x) const {
    if (x.rows() != n || x.cols() != n) throw std::invalid_argument("MatrixModel::coordinates: shape mismatch");
    const std::size_t d = basis.size();
    Vector rhs(d);
    for (std::size_t j = 0; j < d; ++j) rhs[j] = x(pivot_entries[j] / n, pivot_entries[j] % n);
    // coords * sub = rhs  =>  coords = rhs * sub^{-1}
    Vector coords = pivot_inverse.transpose() * rhs;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Scalar s = 0;
        for (std::size_t i = 0; i < d; ++i)
          if (coords[i] != 0 && flat(i, r * n + c) != 0) s += coords[i] * flat(i, r * n + c);
        if (s != x(r, c)) throw std::domain_error("matrix does not lie in the algebra");
      }
    return coords;
  }

  Matrix to_matrix(const Vector& coords) const {
    Matrix m(n, n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coords.at(i) != 0) m = m + coords[i] * basis[i];
    return m;
  }
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k. Antisymmetry and the Jacobi identity are
/// verified on construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// `brackets[i * dim + j]` is the coordinate vector of [e_i, e_j].
  LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<Vector> brackets)
      : name_(std::move(name)), labels_(std::move(labels)), dim_(labels_.size()), dense_(std::move(brackets)) {
    if (dim_ == 0) throw std::invalid_argument("LieAlgebra: dimension must be positive");
    if (dense_.size() != dim_ * dim_) throw std::invalid_argument("LieAlgebra: bracket table has wrong size");
    sparse_.resize(dense_.size());
    for (std::size_t p = 0; p < dense_.size(); ++p) {
      if (dense_[p].size() != dim_) throw std::invalid_argument("LieAlgebra: bracket vector has wrong length");
      for (std::size_t k = 0; k < dim_; ++k)
        if (dense_[p][k] != 0) sparse_[p].emplace_back(k, dense_[p][k]);
    }
    validate();
  }

  /// Structure constants of the span of `basis` under the matrix commutator.
  static LieAlgebra from_matrix_basis(std::string name, std::vector<std::string> labels, std::vector<Matrix> basis) {
    if (labels.size() != basis.size()) throw std::invalid_argument("from_matrix_basis: label count mismatch");
    auto model = MatrixModel::build(std::move(basis));
    const std::size_t d = model.basis.size();
    std::vector<Vector> brackets(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (j < i) {
          brackets[i * d + j] = Scalar(-1) * brackets[j * d + i];
          continue;
        }
        try {
          brackets[i * d + j] = model.coordinates(commutator(model.basis[i], model.basis[j]));
        } catch (const std::domain_error&) {
          throw std::invalid_argument("from_matrix_basis: span of basis is not closed under commutator");
        }
      }
    LieAlgebra g(std::move(name), std::move(labels), std::move(brackets));
    g.model_ = std::move(model);
    return g;
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& structure(std::size_t i, std::size_t j) const { return dense_[i * dim_ + j]; }
  const std::vector<std::pair<std::size_t, Scalar>>& structure_sparse(std::size_t i, std::size_t j) const {
    return sparse_[i * dim_ + j];
  }

  const std::optional<RootDatum>& root_datum() const { return root_datum_; }
  void set_root_datum(RootDatum rd) { root_datum_ = std::move(rd); }
  const std::optional<MatrixModel>& matrix_model() const { return model_; }

  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }

  Vector bracket(const Vector& x, const Vector& y) const {
    check_vec(x, "bracket");
    check_vec(y, "bracket");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0 || i == j) continue;
        Scalar f = x[i] * y[j];
        for (const auto& [k, c] : sparse_[i * dim_ + j]) out[k] += f * c;
      }
    }
    return out;
  }

  /// Matrix of ad_x: column j is [x, e_j].
  Matrix ad_matrix(const Vector& x) const {
    check_vec(x, "ad_matrix");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, c] : sparse_[i * dim_ + j]) m(k, j) += x[i] * c;
    }
    return m;
  }

  /// kappa(x, y) = tr(ad_x ad_y).
  BilinearForm killing_form() const {
    std::vector<Matrix> ads;
    ads.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad_matrix(basis_vector(i)));
    Matrix gram(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        Scalar t = 0;
        for (std::size_t k = 0; k < dim_; ++k)
          for (std::size_t m = 0; m < dim_; ++m)
            if (ads[i](k, m) != 0 && ads[j](m, k) != 0) t += ads[i](k, m) * ads[j](m, k);
        gram(i, j) = t;
        gram(j, i) = t;
      }
    return BilinearForm(std::move(gram));
  }

  bool is_semisimple() const { return killing_form().nondegenerate(); }

  bool is_subalgebra(const Subspace& s) const {
    check_space(s, "is_subalgebra");
    const auto rows = s.rows();
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b)
        if (!s.contains(bracket(rows[a], rows[b]))) return false;
    return true;
  }

  /// {x : [x, S] inside S}.
  Subspace normalizer(const Subspace& s) const {
    check_space(s, "normalizer");
    const Matrix ann = annihilator(s).basis();
    if (ann.rows() == 0) return Subspace::full(dim_);
    std::vector<Vector> eqs;
    for (const auto& row : s.rows()) {
      Matrix block = ann * ad_matrix(row);  // ad_s x = [s, x] = -[x, s]
      for (std::size_t r = 0; r < block.rows(); ++r) eqs.push_back(block.row(r));
    }
    if (eqs.empty()) return Subspace::full(dim_);
    return Subspace::span(nullspace(Matrix::from_rows(eqs, dim_)), dim_);
  }

  /// {x : [x, s] = 0 for all s in S}.
  Subspace centralizer(const Subspace& s) const {
    check_space(s, "centralizer");
    std::vector<Vector> eqs;
    for (const auto& row : s.rows()) {
      Matrix block = ad_matrix(row);
      for (std::size_t r = 0; r < block.rows(); ++r) eqs.push_back(block.row(r));
    }
    if (eqs.empty()) return Subspace::full(dim_);
    return Subspace::span(nullspace(Matrix::from_rows(eqs, dim_)), dim_);
  }

  Subspace center() const { return centralizer(Subspace::full(dim_)); }

  /// Center of a subalgebra S computed inside S.
  Subspace center_of(const Subspace& s) const { return intersect(s, centralizer(s)); }

  /// Smallest subalgebra containing the given vectors.
  Subspace generated_subalgebra(const std::vector<Vector>& generators) const {
    Subspace s = Subspace::span(generators, dim_);
    for (;;) {
      auto rows = s.rows();
      std::vector<Vector> extra;
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
          Vector br = bracket(rows[a], rows[b]);
          if (!s.contains(br)) extra.push_back(std::move(br));
        }
      if (extra.empty()) return s;
      for (auto& r : extra) rows.push_back(std::move(r));
      s = Subspace::span(rows, dim_);
    }
  }

  /// The subalgebra S as an abstract Lie algebra in the basis `basis_rows`
  /// (defaults to the RREF basis of S).
  LieAlgebra restrict_to(const Matrix& basis_rows, std::string name) const {
    const std::size_t k = basis_rows.rows();
    if (basis_rows.cols() != dim_) throw std::invalid_argument("restrict_to: ambient mismatch");
    std::vector<Vector> br(k * k);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) labels.push_back("b" + std::to_string(i + 1));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        try {
          br[i * k + j] = coordinates_in_rows(basis_rows, bracket(basis_rows.row(i), basis_rows.row(j)));
        } catch (const std::domain_error&) {
          throw std::invalid_argument("restrict_to: span is not a subalgebra");
        }
      }
    return LieAlgebra(std::move(name), std::move(labels), std::move(br));
  }

 private:
  void check_vec(const Vector& v, const char* where) const {
    if (v.size() != dim_)
      throw std::invalid_argument(std::string(where) + ": vector of length " + std::to_string(v.size()) +
                                  " in algebra of dimension " + std::to_string(dim_));
  }
  void check_space(const Subspace& s, const char* where) const {
    if (s.ambient_dim() != dim_) throw std::invalid_argument(std::string(where) + ": ambient mismatch");
  }

  void validate() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!lagvar::is_zero(structure(i, i))) throw std::invalid_argument("LieAlgebra: [e_i, e_i] != 0");
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (structure(i, j) != Scalar(-1) * structure(j, i))
          throw std::invalid_argument("LieAlgebra: structure constants are not antisymmetric");
    }
    // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0 on i<j<k.
    auto bracket_basis = [&](std::size_t i, const std::vector<std::pair<std::size_t, Scalar>>& y, Vector& acc) {
      for (const auto& [m, c] : y)
        for (const auto& [k, d] : sparse_[i * dim_ + m]) acc[k] += c * d;
    };
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k) {
          Vector acc(dim_);
          bracket_basis(i, sparse_[j * dim_ + k], acc);
          bracket_basis(j, sparse_[k * dim_ + i], acc);
          bracket_basis(k, sparse_[i * dim_ + j], acc);
          if (!lagvar::is_zero(acc))
            throw std::invalid_argument("LieAlgebra: Jacobi identity fails on basis triple (" + labels_[i] + ", " +
                                        labels_[j] + ", " + labels_[k] + ")");
        }
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::size_t dim_ = 0;
  std::vector<Vector> dense_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> sparse_;
  std::optional<RootDatum> root_datum_;
  std::optional<MatrixModel> model_;
};

/// Linear map sigma of g, given by its matrix on the basis (column j = sigma(e_j)).
struct InvolutionSpec {
  Matrix matrix;

  /// Throws std::invalid_argument unless sigma^2 = id and sigma is a Lie automorphism.
  void validate(const LieAlgebra& g) const {
    const std::size_t d = g.dim();
    if (matrix.rows() != d || matrix.cols() != d) throw std::invalid_argument("involution: shape mismatch");
    if (!(matrix * matrix == Matrix::identity(d))) throw std::invalid_argument("involution: sigma^2 != id");
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        Vector lhs = matrix * g.structure(i, j);
        Vector rhs = g.bracket(matrix.column(i), matrix.column(j));
        if (lhs != rhs) throw std::invalid_argument("involution: sigma is not a Lie algebra automorphism");
      }
  }

  bool is_identity() const { return matrix == Matrix::identity(matrix.rows()); }
};

/// The d-dimensional abelian Lie algebra.
inline LieAlgebra make_abelian(std::size_t d) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("a" + std::to_string(i + 1));
  return LieAlgebra("abelian" + std::to_string(d), std::move(labels), std::vector<Vector>(d * d, zero_vector(d)));
}

}  // namespace lagvar
