#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lagvar/matrix.hpp"
#include "lagvar/scalar.hpp"

namespace lagvar {

using IndexTuple = std::vector<std::size_t>;

/// Sorts `idx` in place and returns the permutation sign, or 0 when an index
/// repeats (the wedge vanishes).
inline int sort_with_parity(IndexTuple& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

/// Alternating k-vector over Q^dim, stored sparsely by strictly increasing
/// index tuples. The term (i1<...<ik) -> c stands for c e_i1 ^ ... ^ e_ik.
class Multivector {
 public:
  Multivector() = default;
  Multivector(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<IndexTuple, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c e_idx[0] ^ ... ^ e_idx[k-1]; indices may be in any order.
  void add(IndexTuple idx, const Scalar& c) {
    if (idx.size() != degree_) throw std::invalid_argument("Multivector::add: arity mismatch");
    for (auto i : idx)
      if (i >= dim_) throw std::invalid_argument("Multivector::add: index out of range");
    if (c == 0) return;
    int s = sort_with_parity(idx);
    if (s == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(idx), 0);
    if (s > 0)
      it->second += c;
    else
      it->second -= c;
    if (it->second == 0) terms_.erase(it);
  }

  Scalar coefficient(IndexTuple idx) const {
    int s = sort_with_parity(idx);
    if (s == 0) return 0;
    auto it = terms_.find(idx);
    if (it == terms_.end()) return 0;
    return s > 0 ? it->second : Scalar(-it->second);
  }

  Multivector& operator+=(const Multivector& o) {
    check_same_shape(o);
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same_shape(o);
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  friend Multivector operator*(const Scalar& c, Multivector m) {
    if (c == 0) return Multivector(m.dim_, m.degree_);
    for (auto& [k, v] : m.terms_) v *= c;
    return m;
  }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Alternating evaluation on k covectors: sum over terms of c * det[covector_a(e_ib)].
  Scalar evaluate(const std::vector<Vector>& covectors) const {
    if (covectors.size() != degree_) throw std::invalid_argument("Multivector::evaluate: arity mismatch");
    for (const auto& c : covectors)
      if (c.size() != dim_) throw std::invalid_argument("Multivector::evaluate: covector length mismatch");
    Scalar total = 0;
    Matrix m(degree_, degree_);
    for (const auto& [idx, coeff] : terms_) {
      for (std::size_t a = 0; a < degree_; ++a)
        for (std::size_t b = 0; b < degree_; ++b) m(a, b) = covectors[a][idx[b]];
      total += coeff * determinant(m);
    }
    return total;
  }

  /// Skew coefficient matrix of a 2-vector: M(i,j) = c_ij, M(j,i) = -c_ij.
  Matrix skew_matrix() const {
    if (degree_ != 2) throw std::invalid_argument("skew_matrix: degree must be 2");
    Matrix m(dim_, dim_);
    for (const auto& [idx, c] : terms_) {
      m(idx[0], idx[1]) = c;
      m(idx[1], idx[0]) = -c;
    }
    return m;
  }

 private:
  void check_same_shape(const Multivector& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_) throw std::invalid_argument("Multivector: shape mismatch");
  }

  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<IndexTuple, Scalar> terms_;
};

/// Wedge product of ordinary vectors v_1 ^ ... ^ v_k.
inline Multivector wedge(const std::vector<Vector>& vs) {
  if (vs.empty()) throw std::invalid_argument("wedge: need at least one vector");
  const std::size_t dim = vs.front().size();
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> nz(vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a) {
    if (vs[a].size() != dim) throw std::invalid_argument("wedge: length mismatch");
    for (std::size_t i = 0; i < dim; ++i)
      if (vs[a][i] != 0) nz[a].emplace_back(i, vs[a][i]);
  }
  Multivector out(dim, vs.size());
  IndexTuple idx(vs.size());
  // Depth-first expansion over the nonzero entries of each factor.
  auto rec = [&](auto&& self, std::size_t a, const Scalar& coeff) -> void {
    if (a == vs.size()) {
      out.add(idx, coeff);
      return;
    }
    for (const auto& [i, x] : nz[a]) {
      if (std::find(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(a), i) !=
          idx.begin() + static_cast<std::ptrdiff_t>(a))
        continue;
      idx[a] = i;
      self(self, a + 1, coeff * x);
    }
  };
  rec(rec, 0, Scalar(1));
  return out;
}

/// Induced map on k-th exterior powers: (Lambda^k phi)(omega). `phi` maps
/// Q^cols -> Q^rows; omega must be a k-vector over Q^cols.
inline Multivector wedge_image(const Matrix& phi, std::size_t k, const Multivector& omega) {
  if (omega.degree() != k) throw std::invalid_argument("wedge_image: arity mismatch");
  if (omega.dim() != phi.cols()) throw std::invalid_argument("wedge_image: rank mismatch");
  Multivector out(phi.rows(), k);
  if (k == 0) return out;
  std::vector<Vector> images(phi.cols());
  std::vector<bool> have(phi.cols(), false);
  for (const auto& [idx, c] : omega.terms()) {
    std::vector<Vector> factors;
    factors.reserve(k);
    bool zero = false;
    for (auto i : idx) {
      if (!have[i]) {
        images[i] = phi.column(i);
        have[i] = true;
      }
      if (lagvar::is_zero(images[i])) zero = true;
      factors.push_back(images[i]);
    }
    if (zero) continue;
    out += c * wedge(factors);
  }
  return out;
}

}  // namespace lagvar
