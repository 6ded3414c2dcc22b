#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagvar/lie_algebra.hpp"
#include "lagvar/subspace.hpp"

namespace lagvar {

/// Sorted set of 1-based simple-root indices.
using IndexSet = std::vector<std::size_t>;

inline std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// Embeddings of g into g + g.
inline Vector embed_first(const Vector& x) { return concat(x, zero_vector(x.size())); }
inline Vector embed_second(const Vector& x) { return concat(zero_vector(x.size()), x); }
inline Vector embed_diagonal(const Vector& x) { return concat(x, x); }

inline const RootDatum& require_root_datum(const LieAlgebra& g) {
  if (!g.root_datum()) throw std::invalid_argument(g.name() + " carries no root datum");
  return *g.root_datum();
}

/// Throws std::invalid_argument unless J is a strictly increasing subset of 1..rank.
inline void check_index_set(const IndexSet& j, std::size_t rank) {
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] < 1 || j[i] > rank)
      throw std::invalid_argument("simple-root index " + std::to_string(j[i]) + " out of range 1.." +
                                  std::to_string(rank));
    if (i > 0 && j[i] <= j[i - 1]) throw std::invalid_argument("index set must be strictly increasing");
  }
}

inline IndexSet full_index_set(std::size_t rank) {
  IndexSet s(rank);
  for (std::size_t i = 0; i < rank; ++i) s[i] = i + 1;
  return s;
}

/// Parabolic subalgebras attached to J, all as subspaces of g.
struct ParabolicData {
  IndexSet J;
  Subspace p, p_minus, u, u_minus, levi, levi_center;
};

/// p_J is generated by the Cartan, all positive simple root vectors and the
/// negative simple root vectors indexed by J; p_J^- symmetrically. The
/// nilradicals are the Killing-orthogonals p^perp.
inline ParabolicData parabolic_data(const LieAlgebra& g, const IndexSet& J) {
  const auto& rd = require_root_datum(g);
  check_index_set(J, rd.rank);
  std::vector<Vector> gens_plus = rd.cartan_subalgebra.rows();
  std::vector<Vector> gens_minus = gens_plus;
  for (std::size_t i = 0; i < rd.rank; ++i) {
    gens_plus.push_back(rd.positive_root_vectors[i]);
    gens_minus.push_back(rd.negative_root_vectors[i]);
  }
  for (auto j : J) {
    gens_plus.push_back(rd.negative_root_vectors[j - 1]);
    gens_minus.push_back(rd.positive_root_vectors[j - 1]);
  }
  ParabolicData pd;
  pd.J = J;
  pd.p = g.generated_subalgebra(gens_plus);
  pd.p_minus = g.generated_subalgebra(gens_minus);
  const BilinearForm kappa = g.killing_form();
  pd.u = orth_complement(pd.p, kappa);
  pd.u_minus = orth_complement(pd.p_minus, kappa);
  pd.levi = intersect(pd.p, pd.p_minus);
  pd.levi_center = g.center_of(pd.levi);
  return pd;
}

inline Subspace borel(const LieAlgebra& g) { return parabolic_data(g, {}).p; }
inline Subspace opposite_borel(const LieAlgebra& g) { return parabolic_data(g, {}).p_minus; }

/// p_J x_{l_J} p_J^- = {(x, y) in p x p^- : Levi components agree}, inside g + g.
inline Subspace fiber_product_lagrangian(const LieAlgebra& g, const ParabolicData& pd) {
  std::vector<Vector> rows;
  for (const auto& x : pd.u.rows()) rows.push_back(embed_first(x));
  for (const auto& y : pd.u_minus.rows()) rows.push_back(embed_second(y));
  for (const auto& z : pd.levi.rows()) rows.push_back(embed_diagonal(z));
  return Subspace::span(rows, 2 * g.dim());
}

inline Subspace fiber_product_lagrangian(const LieAlgebra& g, const IndexSet& J) {
  return fiber_product_lagrangian(g, parabolic_data(g, J));
}

/// Lie algebra of the stabilizer of the basepoint z_J: Levi components may
/// differ by an element of the center of l_J.
inline Subspace stabilizer_algebra(const LieAlgebra& g, const ParabolicData& pd) {
  auto rows = fiber_product_lagrangian(g, pd).rows();
  for (const auto& z : pd.levi_center.rows()) rows.push_back(embed_first(z));
  return Subspace::span(rows, 2 * g.dim());
}

inline Subspace stabilizer_algebra(const LieAlgebra& g, const IndexSet& J) {
  return stabilizer_algebra(g, parabolic_data(g, J));
}

/// One G x G-orbit O_J of the wonderful compactification.
struct OrbitRecord {
  IndexSet J;
  std::size_t dim_orbit = 0;
  std::size_t dim_closure = 0;
  std::size_t codim = 0;
  IndexSet divisors;  // boundary components containing O_J
  std::size_t dim_flag_base = 0;
  std::size_t dim_fiber_group = 0;
  std::size_t dim_stabilizer = 0;
};

/// All subsets of {1..rank}, ordered by size then lexicographically.
inline std::vector<IndexSet> all_index_sets(std::size_t rank) {
  std::vector<IndexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << rank); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < rank; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline OrbitRecord orbit_record(const LieAlgebra& g, const IndexSet& J) {
  const auto& rd = require_root_datum(g);
  const ParabolicData pd = parabolic_data(g, J);
  OrbitRecord r;
  r.J = J;
  r.dim_flag_base = 2 * (g.dim() - pd.p.dim());
  r.dim_fiber_group = pd.levi.dim() - pd.levi_center.dim();
  r.dim_orbit = r.dim_flag_base + r.dim_fiber_group;
  r.dim_closure = r.dim_orbit;
  r.codim = rd.rank - J.size();
  for (std::size_t i = 1; i <= rd.rank; ++i)
    if (!std::binary_search(J.begin(), J.end(), i)) r.divisors.push_back(i);
  r.dim_stabilizer = stabilizer_algebra(g, pd).dim();
  return r;
}

/// Orbit records for every J, including the open orbit J = {1..l}.
inline std::vector<OrbitRecord> orbit_table(const LieAlgebra& g) {
  const auto& rd = require_root_datum(g);
  if (!g.is_semisimple()) throw std::invalid_argument("orbit_table: algebra is not semisimple");
  std::vector<OrbitRecord> out;
  for (const auto& J : all_index_sets(rd.rank)) out.push_back(orbit_record(g, J));
  return out;
}

/// O_{J1} lies in the closure of O_{J2} iff J1 is a subset of J2.
inline bool closure_relation(const OrbitRecord& r1, const OrbitRecord& r2) {
  return std::includes(r2.J.begin(), r2.J.end(), r1.J.begin(), r1.J.end());
}

/// Generalized Belavin-Drinfeld triple (I, J, eta).
struct BDTriple {
  IndexSet I;
  IndexSet Jset;
  std::map<std::size_t, std::size_t> eta;
};

/// Structural problems (eta not a bijection I -> J, indices out of range)
/// throw std::invalid_argument; the return value reports whether eta
/// preserves the inner product of simple roots.
inline bool bd_validate(const RootDatum& rd, const BDTriple& t) {
  check_index_set(t.I, rd.rank);
  check_index_set(t.Jset, rd.rank);
  if (t.I.size() != t.Jset.size() || t.eta.size() != t.I.size())
    throw std::invalid_argument("BD triple: eta is not a bijection I -> J");
  std::set<std::size_t> image;
  for (auto i : t.I) {
    auto it = t.eta.find(i);
    if (it == t.eta.end()) throw std::invalid_argument("BD triple: eta undefined on " + std::to_string(i));
    if (!std::binary_search(t.Jset.begin(), t.Jset.end(), it->second))
      throw std::invalid_argument("BD triple: eta maps outside J");
    image.insert(it->second);
  }
  if (image.size() != t.Jset.size()) throw std::invalid_argument("BD triple: eta is not injective");
  for (auto i : t.I)
    for (auto j : t.I) {
      const auto ei = t.eta.at(i), ej = t.eta.at(j);
      if (rd.inner(rd.simple_roots[ei - 1], rd.simple_roots[ej - 1]) !=
          rd.inner(rd.simple_roots[i - 1], rd.simple_roots[j - 1]))
        return false;
      if (rd.cartan_matrix[ei - 1][ej - 1] != rd.cartan_matrix[i - 1][j - 1]) return false;
    }
  return true;
}

/// dim G/P_I + dim G/P_J^- + dim G_I for the orbit attached to a valid triple.
inline std::size_t bd_orbit_dimension(const LieAlgebra& g, const BDTriple& t) {
  const auto& rd = require_root_datum(g);
  if (!bd_validate(rd, t)) throw std::invalid_argument("BD triple: eta does not preserve the inner product");
  const auto pi = parabolic_data(g, t.I);
  const auto pj = parabolic_data(g, t.Jset);
  return (g.dim() - pi.p.dim()) + (g.dim() - pj.p_minus.dim()) + (pi.levi.dim() - pi.levi_center.dim());
}

}  // namespace lagvar
