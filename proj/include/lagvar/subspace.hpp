#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagvar/matrix.hpp"
#include "lagvar/scalar.hpp"

namespace lagvar {

/// Linear subspace of Q^n stored by its reduced row echelon basis. The RREF
/// is unique, so two subspaces are equal exactly when their bases are equal.
class Subspace {
 public:
  Subspace() = default;

  /// Span of `rows` inside Q^ambient_dim.
  static Subspace span(const std::vector<Vector>& rows, std::size_t ambient_dim) {
    return Subspace(Matrix::from_rows(rows, ambient_dim));
  }
  static Subspace span(const Matrix& rows) { return Subspace(rows); }
  static Subspace zero(std::size_t ambient_dim) { return Subspace(Matrix(0, ambient_dim)); }
  static Subspace full(std::size_t ambient_dim) { return Subspace(Matrix::identity(ambient_dim)); }

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> rows() const { return basis_.row_list(); }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    // Reduce v against the RREF rows using the pivot columns.
    Vector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      Scalar f = r[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j)
        if (basis_(i, j) != 0) r[j] -= f * basis_(i, j);
    }
    return lagvar::is_zero(r);
  }

  bool contains(const Subspace& other) const {
    check_ambient(other, "Subspace::contains");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Coordinates of v with respect to the RREF basis rows (read off the pivots).
  Vector coordinates(const Vector& v) const {
    if (!contains(v)) throw std::domain_error("Subspace::coordinates: vector not in subspace");
    Vector c(dim());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  void check_ambient(const Subspace& other, const char* where) const {
    if (other.ambient_dim() != ambient_dim())
      throw std::invalid_argument(std::string(where) + ": ambient dimension mismatch (" +
                                  std::to_string(ambient_dim()) + " vs " +
                                  std::to_string(other.ambient_dim()) + ")");
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(const Matrix& rows) {
    auto e = rref(rows);
    basis_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
  }

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace canonicalize(const std::vector<Vector>& rows, std::size_t ambient_dim) {
  return Subspace::span(rows, ambient_dim);
}

/// {y : <s, y> = 0 for all s in S} under the standard dot product.
inline Subspace annihilator(const Subspace& s) {
  return Subspace::span(nullspace(s.basis()), s.ambient_dim());
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
  a.check_ambient(b, "sum");
  auto rows = a.rows();
  for (auto& r : b.rows()) rows.push_back(std::move(r));
  return Subspace::span(rows, a.ambient_dim());
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  a.check_ambient(b, "intersect");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

/// Vectors of V completing a basis of W to a basis of V, taken greedily from
/// V's canonical basis. Throws std::invalid_argument unless W is inside V.
inline std::vector<Vector> quotient_basis(const Subspace& w, const Subspace& v) {
  w.check_ambient(v, "quotient_basis");
  if (!v.contains(w)) throw std::invalid_argument("quotient_basis: W is not contained in V");
  std::vector<Vector> reps;
  Subspace acc = w;
  for (std::size_t i = 0; i < v.dim() && acc.dim() < v.dim(); ++i) {
    Vector cand = v.basis().row(i);
    if (acc.contains(cand)) continue;
    acc = sum(acc, Subspace::span({cand}, v.ambient_dim()));
    reps.push_back(std::move(cand));
  }
  return reps;
}

/// Symmetric bilinear form given by its Gram matrix over a fixed basis.
class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.square()) throw std::invalid_argument("BilinearForm: Gram matrix must be square");
    if (!(gram_ == gram_.transpose())) throw std::invalid_argument("BilinearForm: Gram matrix is not symmetric");
    nondegenerate_ = determinant(gram_) != 0;
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  bool nondegenerate() const { return nondegenerate_; }

  Scalar operator()(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

 private:
  Matrix gram_;
  bool nondegenerate_ = false;
};

/// S^perp with respect to a nondegenerate form.
inline Subspace orth_complement(const Subspace& s, const BilinearForm& form) {
  if (s.ambient_dim() != form.dim()) throw std::invalid_argument("orth_complement: ambient mismatch");
  if (!form.nondegenerate()) throw std::domain_error("orth_complement: degenerate form");
  return Subspace::span(nullspace(s.basis() * form.gram()), s.ambient_dim());
}

}  // namespace lagvar
