#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lagvar/lie_algebra.hpp"
#include "lagvar/matrix.hpp"

namespace lagvar {

namespace detail {

inline Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

inline std::string index_label(std::size_t n, std::size_t i, std::size_t j) {
  if (n <= 9) return std::to_string(i + 1) + std::to_string(j + 1);
  return std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

/// Fills in the root datum from per-index torus weights (`diag_weight[i]` is
/// the weight of the i-th diagonal entry) and the list of simple roots.
inline void attach_root_datum(LieAlgebra& g, char series, std::size_t rank, const std::vector<Vector>& diag_weight,
                              std::vector<Vector> simple_roots, std::size_t cartan_begin) {
  const auto& model = *g.matrix_model();
  const std::size_t n = model.n;
  const std::size_t wdim = diag_weight.front().size();
  RootDatum rd;
  rd.series = series;
  rd.rank = rank;
  // Each basis matrix is a torus weight vector; read its weight from any nonzero entry.
  for (const auto& b : model.basis) {
    Vector w = zero_vector(wdim);
    bool found = false;
    for (std::size_t r = 0; r < n && !found; ++r)
      for (std::size_t c = 0; c < n && !found; ++c)
        if (b(r, c) != 0) {
          w = diag_weight[r] - diag_weight[c];
          found = true;
        }
    rd.basis_weights.push_back(std::move(w));
  }
  auto find_weight = [&](const Vector& w) {
    std::size_t hit = g.dim();
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (rd.basis_weights[i] == w) {
        if (hit != g.dim()) throw std::logic_error("root space of dimension > 1");
        hit = i;
      }
    if (hit == g.dim()) throw std::logic_error("simple root has no root vector");
    return hit;
  };
  for (const auto& a : simple_roots) {
    auto pos = g.basis_vector(find_weight(a));
    auto neg = g.basis_vector(find_weight(Scalar(-1) * a));
    rd.positive_simple_spaces.push_back(Subspace::span({pos}, g.dim()));
    rd.negative_simple_spaces.push_back(Subspace::span({neg}, g.dim()));
    rd.positive_root_vectors.push_back(std::move(pos));
    rd.negative_root_vectors.push_back(std::move(neg));
  }
  rd.cartan_matrix.assign(rank, std::vector<int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      Scalar a = 2 * dot(simple_roots[i], simple_roots[j]) / dot(simple_roots[j], simple_roots[j]);
      if (a.get_den() != 1) throw std::logic_error("non-integral Cartan matrix entry");
      rd.cartan_matrix[i][j] = static_cast<int>(a.get_num().get_si());
    }
  std::vector<Vector> cartan;
  for (std::size_t i = cartan_begin; i < g.dim(); ++i) cartan.push_back(g.basis_vector(i));
  rd.cartan_subalgebra = Subspace::span(cartan, g.dim());
  rd.simple_roots = std::move(simple_roots);
  g.set_root_datum(std::move(rd));
}

}  // namespace detail

/// sl_n: off-diagonal units E_ij in row-major order, then H_i = E_ii - E_{i+1,i+1}.
inline LieAlgebra make_sl(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_sl: n must be at least 2");
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      basis.push_back(detail::matrix_unit(n, i, j));
      labels.push_back("E" + detail::index_label(n, i, j));
    }
  const std::size_t cartan_begin = basis.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    basis.push_back(detail::matrix_unit(n, i, i) - detail::matrix_unit(n, i + 1, i + 1));
    labels.push_back("H" + std::to_string(i + 1));
  }
  auto g = LieAlgebra::from_matrix_basis("A" + std::to_string(n - 1), std::move(labels), std::move(basis));
  std::vector<Vector> diag_weight;
  for (std::size_t i = 0; i < n; ++i) diag_weight.push_back(unit_vector(n, i));
  std::vector<Vector> simple;
  for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(diag_weight[i] - diag_weight[i + 1]);
  detail::attach_root_datum(g, 'A', n - 1, diag_weight, std::move(simple), cartan_begin);
  return g;
}

/// so(2l+1), sp(2l), so(2l) preserving an antidiagonal form, so that the
/// diagonal matrices form the Cartan subalgebra and the upper-triangular part
/// is the Borel. Supported ranks: B, C in 1..4; D in 2..4.
inline LieAlgebra make_classical(char series, std::size_t rank) {
  const std::size_t l = rank;
  std::size_t n = 0;
  switch (series) {
    case 'B': n = 2 * l + 1; break;
    case 'C':
    case 'D': n = 2 * l; break;
    default: throw std::invalid_argument(std::string("make_classical: unsupported series '") + series + "'");
  }
  if (l > 4 || l < 1 || (series == 'D' && l < 2))
    throw std::invalid_argument(std::string("make_classical: unsupported rank ") + std::to_string(l) + " for series " +
                                series);
  // Invariant form J: antidiagonal ones for B/D; [[0, K], [-K, 0]] for C.
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ip = n - 1 - i;
    form(i, ip) = (series == 'C' && i >= l) ? -1 : 1;
  }
  const Matrix form_inv = inverse(form);
  // Y -> Y - J^{-1} Y^T J projects gl_n onto the algebra.
  auto project = [&](const Matrix& y) { return y - form_inv * y.transpose() * form; };

  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  std::vector<Vector> flat_rows;
  auto is_new = [&](const Matrix& m) {
    Vector f;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) f.push_back(m(r, c));
    if (lagvar::is_zero(f)) return false;
    auto rows = flat_rows;
    rows.push_back(f);
    if (rank_of_rows(rows, n * n) == flat_rows.size()) return false;
    flat_rows.push_back(std::move(f));
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix x = project(detail::matrix_unit(n, i, j));
      if (is_new(x)) {
        basis.push_back(x);
        labels.push_back("X" + detail::index_label(n, i, j));
      }
    }
  const std::size_t cartan_begin = basis.size();
  for (std::size_t k = 0; k < l; ++k) {
    basis.push_back(project(detail::matrix_unit(n, k, k)));  // E_kk - E_k'k'
    labels.push_back("H" + std::to_string(k + 1));
  }
  std::string name(1, series);
  name += std::to_string(l);
  auto g = LieAlgebra::from_matrix_basis(name, std::move(labels), std::move(basis));

  std::vector<Vector> diag_weight(n, zero_vector(l));
  for (std::size_t i = 0; i < l; ++i) {
    diag_weight[i] = unit_vector(l, i);
    diag_weight[n - 1 - i] = Scalar(-1) * unit_vector(l, i);
  }
  std::vector<Vector> simple;
  for (std::size_t i = 0; i + 1 < l; ++i) simple.push_back(unit_vector(l, i) - unit_vector(l, i + 1));
  switch (series) {
    case 'B': simple.push_back(unit_vector(l, l - 1)); break;
    case 'C': simple.push_back(Scalar(2) * unit_vector(l, l - 1)); break;
    default: simple.push_back(unit_vector(l, l - 2) + unit_vector(l, l - 1)); break;
  }
  detail::attach_root_datum(g, series, l, diag_weight, std::move(simple), cartan_begin);
  return g;
}

/// Resolves "A3", "sl4", "B2", "C3", "D4" (case-insensitive letter).
inline LieAlgebra parse_algebra(std::string_view spec) {
  auto fail = [&]() -> LieAlgebra { throw std::invalid_argument("unknown algebra specifier '" + std::string(spec) + "'"); };
  auto parse_num = [&](std::string_view digits) -> std::size_t {
    if (digits.empty() || digits.size() > 2) fail();
    std::size_t v = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  if (spec.size() >= 3 && (spec.substr(0, 2) == "sl" || spec.substr(0, 2) == "SL")) {
    std::size_t n = parse_num(spec.substr(2));
    if (n < 2) fail();
    return make_sl(n);
  }
  if (spec.size() < 2) fail();
  char s = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
  std::size_t r = parse_num(spec.substr(1));
  if (r < 1) fail();
  if (s == 'A') return make_sl(r + 1);
  if (s == 'B' || s == 'C' || s == 'D') return make_classical(s, r);
  return fail();
}

}  // namespace lagvar
