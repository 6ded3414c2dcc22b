#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lagvar/classical.hpp"
#include "lagvar/parabolic.hpp"
#include "lagvar/quadratic_double.hpp"

using namespace lagvar;

namespace {

// Block sizes of the Levi of sl_n for J: simple roots in J glue neighbours.
std::vector<std::size_t> blocks(std::size_t n, const IndexSet& J) {
  std::vector<std::size_t> b{1};
  for (std::size_t i = 1; i < n; ++i) {
    if (std::binary_search(J.begin(), J.end(), i))
      ++b.back();
    else
      b.push_back(1);
  }
  return b;
}

struct BlockCounts {
  std::size_t p, u, levi, center;
};

// Free entries of the block upper-triangular pattern, minus one for the trace.
BlockCounts block_counts(std::size_t n, const IndexSet& J) {
  const auto b = blocks(n, J);
  std::size_t diag = 0, off = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    diag += b[i] * b[i];
    for (std::size_t j = i + 1; j < b.size(); ++j) off += b[i] * b[j];
  }
  return {diag + off - 1, off, diag - 1, b.size() - 1};
}

}  // namespace

TEST(Parabolic, Sl4BlockPattern) {
  const auto pd = parabolic_data(make_sl(4), {1, 3});
  EXPECT_EQ(pd.p.dim(), 11u);
  EXPECT_EQ(pd.u.dim(), 4u);
  EXPECT_EQ(pd.levi.dim(), 7u);
  EXPECT_EQ(pd.levi_center.dim(), 1u);
}

TEST(Parabolic, DimensionsMatchBlockCountsForAllJ) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto g = make_sl(n);
    for (const auto& J : all_index_sets(n - 1)) {
      const auto pd = parabolic_data(g, J);
      const auto c = block_counts(n, J);
      EXPECT_EQ(pd.p.dim(), c.p) << n << format_index_set(J);
      EXPECT_EQ(pd.p_minus.dim(), c.p);
      EXPECT_EQ(pd.u.dim(), c.u);
      EXPECT_EQ(pd.u_minus.dim(), c.u);
      EXPECT_EQ(pd.levi.dim(), c.levi);
      EXPECT_EQ(pd.levi_center.dim(), c.center);
    }
  }
}

TEST(Parabolic, StructuralProperties) {
  for (const char* spec : {"A3", "B2", "C3", "D3"}) {
    const auto g = parse_algebra(spec);
    const auto kappa = g.killing_form();
    for (const auto& J : all_index_sets(g.root_datum()->rank)) {
      const auto pd = parabolic_data(g, J);
      EXPECT_TRUE(g.is_subalgebra(pd.p));
      EXPECT_TRUE(g.is_subalgebra(pd.levi));
      EXPECT_TRUE(pd.p.contains(pd.u));
      EXPECT_EQ(sum(pd.levi, pd.u), pd.p);
      EXPECT_EQ(intersect(pd.levi, pd.u).dim(), 0u);
      EXPECT_EQ(g.normalizer(pd.p), pd.p);
      // u is an ideal of p
      for (const auto& x : pd.p.rows())
        for (const auto& y : pd.u.rows()) EXPECT_TRUE(pd.u.contains(g.bracket(x, y)));
      // u is Killing-isotropic and z(l) commutes with l
      for (const auto& x : pd.u.rows())
        for (const auto& y : pd.u.rows()) EXPECT_EQ(kappa(x, y), 0);
      for (const auto& z : pd.levi_center.rows())
        for (const auto& x : pd.levi.rows()) EXPECT_TRUE(is_zero(g.bracket(z, x)));
      EXPECT_EQ(pd.levi_center.dim(), g.root_datum()->rank - J.size());
    }
  }
}

TEST(Parabolic, BadIndexSets) {
  const auto g = make_sl(3);
  EXPECT_THROW(parabolic_data(g, {3}), std::invalid_argument);
  EXPECT_THROW(parabolic_data(g, {0}), std::invalid_argument);
  EXPECT_THROW(parabolic_data(g, {2, 1}), std::invalid_argument);
  EXPECT_THROW(parabolic_data(g, {1, 1}), std::invalid_argument);
  EXPECT_THROW(parabolic_data(make_abelian(2), {}), std::invalid_argument);
}

TEST(Orbits, A1ProjectiveSpacePicture) {
  const auto t = orbit_table(make_sl(2));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].J, IndexSet{});
  EXPECT_EQ(t[0].dim_orbit, 2u);  // boundary quadric P1 x P1
  EXPECT_EQ(t[0].divisors, IndexSet{1});
  EXPECT_EQ(t[1].dim_orbit, 3u);  // open orbit PGL2
  EXPECT_TRUE(t[1].divisors.empty());
}

TEST(Orbits, CombinatoricsA1A2A3) {
  for (std::size_t l = 1; l <= 3; ++l) {
    const auto g = make_sl(l + 1);
    const auto table = orbit_table(g);
    EXPECT_EQ(table.size(), std::size_t{1} << l);
    const std::size_t dim_b = borel(g).dim();
    for (const auto& r : table) {
      const auto pd = parabolic_data(g, r.J);
      EXPECT_EQ(r.codim, l - r.J.size());
      EXPECT_EQ(r.dim_orbit, 2 * (g.dim() - pd.p.dim()) + pd.levi.dim() - pd.levi_center.dim());
      EXPECT_EQ(r.dim_orbit, 2 * g.dim() - r.dim_stabilizer);
      // Independent count: the stabilizer has dim p + dim p^- - dim l + dim z.
      EXPECT_EQ(r.dim_stabilizer, 2 * pd.p.dim() - pd.levi.dim() + pd.levi_center.dim());
      EXPECT_EQ(r.divisors.size(), r.codim);
      if (r.J.empty()) EXPECT_EQ(r.dim_orbit, 2 * (g.dim() - dim_b));
      if (r.J.size() == l) EXPECT_EQ(r.dim_orbit, g.dim());
    }
  }
}

TEST(Orbits, A3Row13) {
  const auto table = orbit_table(make_sl(4));
  auto it = std::find_if(table.begin(), table.end(), [](const OrbitRecord& r) { return r.J == IndexSet{1, 3}; });
  ASSERT_NE(it, table.end());
  EXPECT_EQ(it->dim_orbit, 14u);
  EXPECT_EQ(it->divisors, IndexSet{2});
  std::vector<std::size_t> dims;
  for (const auto& r : table) dims.push_back(r.dim_orbit);
  EXPECT_EQ(dims, (std::vector<std::size_t>{12, 13, 13, 13, 14, 14, 14, 15}));
}

TEST(Orbits, ClosureOrderIsInclusionAndMonotone) {
  const auto table = orbit_table(make_sl(4));
  for (const auto& a : table)
    for (const auto& b : table) {
      const bool sub = std::includes(b.J.begin(), b.J.end(), a.J.begin(), a.J.end());
      EXPECT_EQ(closure_relation(a, b), sub);
      if (sub && a.J != b.J) EXPECT_LT(a.dim_orbit, b.dim_orbit);
    }
}

TEST(Orbits, NotSemisimpleRejected) {
  EXPECT_THROW(orbit_table(make_abelian(2)), std::invalid_argument);
}

TEST(Orbits, StabilizerContainsFiberProduct) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto g = make_sl(n);
    const auto D = direct_sum_double(g);
    for (const auto& J : all_index_sets(n - 1)) {
      const auto fp = fiber_product_lagrangian(g, J);
      const auto st = stabilizer_algebra(g, J);
      EXPECT_TRUE(st.contains(fp));
      EXPECT_TRUE(D.algebra().is_subalgebra(st));
      EXPECT_TRUE(is_lagrangian(D, fp));
    }
  }
}

TEST(BelavinDrinfeld, ValidTriples) {
  const auto g = make_sl(4);
  const auto& rd = *g.root_datum();
  BDTriple t{{1}, {3}, {{1, 3}}};
  EXPECT_TRUE(bd_validate(rd, t));
  // (dim g - dim p_1) + (dim g - dim p_3^-) + (dim l_1 - dim z_1) = 5 + 5 + 3
  EXPECT_EQ(bd_orbit_dimension(g, t), 13u);
  BDTriple shift{{1, 2}, {2, 3}, {{1, 2}, {2, 3}}};
  EXPECT_TRUE(bd_validate(rd, shift));
  BDTriple empty{{}, {}, {}};
  EXPECT_EQ(bd_orbit_dimension(g, empty), 2 * (g.dim() - borel(g).dim()));
  BDTriple full{{1, 2, 3}, {1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}}};
  EXPECT_EQ(bd_orbit_dimension(g, full), g.dim());
  // Diagram flip of A3 preserves the Cartan matrix.
  BDTriple flip{{1, 2, 3}, {1, 2, 3}, {{1, 3}, {2, 2}, {3, 1}}};
  EXPECT_TRUE(bd_validate(rd, flip));
}

TEST(BelavinDrinfeld, InvalidTriples) {
  const auto sl4 = make_sl(4);
  const auto& a3 = *sl4.root_datum();
  // {1,2} -> {1,3} breaks adjacency.
  EXPECT_FALSE(bd_validate(a3, BDTriple{{1, 2}, {1, 3}, {{1, 1}, {2, 3}}}));
  // Short root to long root in B2.
  const auto b2 = parse_algebra("B2");
  EXPECT_FALSE(bd_validate(*b2.root_datum(), BDTriple{{1}, {2}, {{1, 2}}}));
  EXPECT_THROW(bd_validate(a3, BDTriple{{1}, {2, 3}, {{1, 2}}}), std::invalid_argument);
  EXPECT_THROW(bd_validate(a3, BDTriple{{1, 2}, {2, 3}, {{1, 2}, {2, 2}}}), std::invalid_argument);
  EXPECT_THROW(bd_validate(a3, BDTriple{{1}, {3}, {{1, 2}}}), std::invalid_argument);
  EXPECT_THROW(bd_validate(a3, BDTriple{{4}, {3}, {{4, 3}}}), std::invalid_argument);
  EXPECT_THROW(bd_orbit_dimension(make_sl(4), BDTriple{{1, 2}, {1, 3}, {{1, 1}, {2, 3}}}), std::invalid_argument);
}
