// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "lagvar/classical.hpp"
#include "lagvar/lagrangian.hpp"
#include "lagvar/poisson.hpp"
#include "lagvar/projective.hpp"

using namespace lagvar;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::vector<Matrix> sample_elements(const LieAlgebra& g, unsigned seed, std::size_t count) {
  std::mt19937 rng(seed);
  const long rank = static_cast<long>(g.root_datum()->rank);
  std::vector<Matrix> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::pair<long, Scalar>> f;
    for (long k = 0; k < 2 * rank + 1; ++k) {
      long i = static_cast<long>(rng() % rank) + 1;
      f.emplace_back(rng() % 2 ? -i : i, Scalar(static_cast<long>(rng() % 5) - 2));
    }
    out.push_back(root_group_element(g, f));
  }
  return out;
}

// x in u with [x, l] in l, solved on the e-coordinates of x.
Subspace normalizer_by_equations(const ManinTriple& t, const Subspace& l) {
  const auto& alg = t.d().algebra();
  const Subspace ann = annihilator(l);
  std::vector<Vector> eqs;
  for (const auto& v : l.rows())
    for (const auto& f : ann.rows()) {
      Vector eq(t.n());
      for (std::size_t i = 0; i < t.n(); ++i) eq[i] = dot(f, alg.bracket(t.e.row(i), v));
      eqs.push_back(eq);
    }
  std::vector<Vector> rows;
  for (const auto& a : nullspace(Matrix::from_rows(eqs, t.n()))) rows.push_back(t.e.transpose() * a);
  return Subspace::span(rows, t.d().dim());
}

// ---- criteria ----

void lagrangian_corpus() {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto g = make_sl(n);
    const auto D = direct_sum_double(g);
    const std::string tag = "sl" + std::to_string(n) + ": ";
    auto check = [&](const std::string& name, const Subspace& s) { require(is_lagrangian(D, s), tag + name); };
    const Subspace diag = diagonal_lagrangian(g);
    check("g_Delta", diag);
    check("b x_t b^-", fiber_product_lagrangian(g, IndexSet{}));
    check("standard complement", standard_complement(g));
    for (const auto& J : all_index_sets(n - 1)) {
      check("fiber product " + format_index_set(J), fiber_product_lagrangian(g, J));
      check("limit of g_Delta " + format_index_set(J), cocharacter_limit(D, parabolic_cocharacter(D, J), diag));
    }
    check("graph of -x^T", graph_of_involution(g, neg_transpose_involution(g)).graph);
    const auto elements = sample_elements(g, 7 + static_cast<unsigned>(n), 5);
    for (std::size_t k = 0; k < elements.size(); ++k) {
      const auto tr = adjoint_translate(g, elements[k], k % 2 ? Side::right : Side::left, diag);
      check("translate " + std::to_string(k), tr);
      for (const auto& J : all_index_sets(n - 1))
        check("limit of translate " + std::to_string(k) + " " + format_index_set(J),
              cocharacter_limit(D, parabolic_cocharacter(D, J), tr));
    }
  }
}

void orbit_combinatorics() {
  for (std::size_t l = 1; l <= 3; ++l) {
    const auto g = make_sl(l + 1);
    const auto table = orbit_table(g);
    require(table.size() == std::size_t{1} << l, "orbit count");
    for (const auto& r : table) {
      const auto pd = parabolic_data(g, r.J);
      require(r.codim == l - r.J.size(), "codim " + format_index_set(r.J));
      const std::size_t formula = 2 * (g.dim() - pd.p.dim()) + pd.levi.dim() - pd.levi_center.dim();
      require(r.dim_orbit == formula, "dimension formula " + format_index_set(r.J));
      require(formula == 2 * g.dim() - stabilizer_algebra(g, r.J).dim(), "stabilizer count " + format_index_set(r.J));
    }
    require(table.front().dim_orbit == 2 * (g.dim() - borel(g).dim()), "closed orbit");
    if (l == 1) require(table.front().dim_orbit == 2 && table.back().dim_orbit == 3, "A1 picture in P^3");
  }
}

void schouten_identity() {
  require(verify_schouten_identity(abelian_triple()), "abelian double");
  require(verify_schouten_identity(semidirect_triple(make_sl(2))), "semidirect sl2");
  require(verify_schouten_identity(standard_triple(make_sl(2))), "standard sl2");
}

void pointwise_jacobi() {
  const auto g = make_sl(2);
  for (const auto& t : {standard_triple(g), semidirect_triple(g)}) {
    std::vector<Subspace> points{t.u, t.u_star};
    if (t.d().kind() == DoubleKind::direct_sum) {
      points.push_back(graph_of_involution(g, neg_transpose_involution(g)).graph);
      for (const auto& J : all_index_sets(1)) points.push_back(fiber_product_lagrangian(g, J));
      for (const auto& a : sample_elements(g, 11, 5)) points.push_back(adjoint_translate(g, a, Side::left, t.u));
    }
    for (const auto& l : points) require(jacobiator_at(t, l).is_zero(), "jacobiator at a Lagrangian point");
    const auto w = find_jacobiator_witness(t);
    require(w.has_value(), "no witness found");
    require(!is_lagrangian(t.d(), *w) && !jacobiator_at(t, *w).is_zero(), "witness");
  }
}

void drinfeld_suite() {
  const auto g = make_sl(2);
  for (const auto& t : {standard_triple(g), semidirect_triple(g)}) {
    require(drinfeld_subalgebra({t, t.u, Multivector(0, 2)}) == t.u, "point datum");
    require(drinfeld_subalgebra({t, Subspace::zero(t.d().dim()), Multivector(t.n(), 2)}) == t.u_star, "identity datum");
  }
  const auto t = standard_triple(g);
  for (const auto& l : {diagonal_lagrangian(g), fiber_product_lagrangian(g, IndexSet{})}) {
    require(intersect(l, t.u) == normalizer_by_equations(t, l), "l meet u equals the normalizer");
    require(is_model_point(t, l), "is_model_point");
    require(drinfeld_image_of_point(t, l) == l, "image fixes the model point");
  }
}

void cobracket_cocycle() {
  require(verify_cocycle(standard_triple(make_sl(2))), "standard sl2");
  require(verify_cocycle(standard_triple(make_sl(3))), "standard sl3");
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& m : cobracket(semidirect_triple(make_sl(n))).images) require(m.is_zero(), "semidirect cobracket");
}

void degeneration() {
  const auto g2 = make_sl(2);
  const auto D2 = direct_sum_double(g2);
  const auto lim2 = cocharacter_limit(D2, parabolic_cocharacter(D2, {}), diagonal_lagrangian(g2));
  require(lim2 == fiber_product_lagrangian(g2, IndexSet{}), "sl2 limit");
  const auto g3 = make_sl(3);
  const auto D3 = direct_sum_double(g3);
  for (const auto& J : all_index_sets(2)) {
    const auto chi = parabolic_cocharacter(D3, J);
    const auto lim = cocharacter_limit(D3, chi, diagonal_lagrangian(g3));
    require(lim == fiber_product_lagrangian(g3, J), "sl3 limit " + format_index_set(J));
    require(is_lagrangian(D3, lim), "sl3 limit Lagrangian");
    require(cocharacter_limit(D3, chi, lim) == lim, "idempotence");
  }
  require(is_lagrangian(D2, lim2) && cocharacter_limit(D2, parabolic_cocharacter(D2, {}), lim2) == lim2, "sl2 idempotence");
}

void projective_models() {
  require(segre_determinant().is_zero(), "Segre determinant");
  require(naive_compactification_report(2).wonderful, "n = 2");
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto r = naive_compactification_report(n);
    require(!r.wonderful, "n = " + std::to_string(n) + " wonderful");
    require(r.singular_witness && *r.singular_witness == rank_representative(n, 1), "E11 witness");
  }
}

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + LAGVAR_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  require(p != nullptr, "popen");
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void cli_determinism() {
  const std::vector<std::string> runs{
      "orbits --algebra A2",          "orbits --algebra A2 --format csv", "verify-lagrangian --algebra A2",
      "drinfeld --algebra A2",        "bivector --algebra A1",            "wonderful-check --algebra A2",
      "schouten --algebra A2",        "wonderful-check --algebra A1 --format text"};
  for (const auto& args : runs) {
    const auto a = cli(args), b = cli(args);
    require(a.code == 0 && b.code == 0, "exit 0: " + args);
    require(!a.out.empty() && a.out == b.out, "byte-identical: " + args);
  }
  require(cli("orbits --algebra A2 --J 9").code == 2, "usage error exit 2");
  require(cli("orbits").code == 2, "missing --algebra exit 2");
  const auto bad = (std::filesystem::temp_directory_path() / "lagvar_acceptance_bad.json").string();
  std::ofstream(bad) << "[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0]]";
  const auto f = cli("verify-lagrangian --algebra A1 --subspace " + bad);
  std::filesystem::remove(bad);
  require(f.code == 1, "injected failure exit 1");
  require(f.out.find("\"witness\"") != std::string::npos, "witness serialized");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<void()> fn;
  };
  const std::vector<Criterion> criteria{
      {"lagrangian corpus (sl2, sl3, sl4)", 30, lagrangian_corpus},
      {"wonderful orbit combinatorics (A1-A3)", 5, orbit_combinatorics},
      {"Schouten identity", 60, schouten_identity},
      {"pointwise Jacobi", 120, pointwise_jacobi},
      {"Drinfeld suite", 10, drinfeld_suite},
      {"cobracket cocycle", 10, cobracket_cocycle},
      {"degeneration", 30, degeneration},
      {"projective models", 5, projective_models},
      {"CLI determinism and exit codes", 10, cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string reason;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.fn();
    } catch (const Failure& f) {
      reason = f.what;
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (reason.empty() && s > c.budget_s) reason = "over budget";
    std::cout << (reason.empty() ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << " (" << std::fixed
              << std::setprecision(2) << s << " s, budget " << std::setprecision(0) << c.budget_s << " s)";
    if (!reason.empty()) std::cout << ": " << reason;
    std::cout << "\n";
    if (!reason.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
