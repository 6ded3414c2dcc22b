#pragma once

#include <chrono>
#include <cstddef>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lagvar/classical.hpp"
#include "lagvar/lagrangian.hpp"
#include "lagvar/parabolic.hpp"
#include "lagvar/poisson.hpp"
#include "lagvar/projective.hpp"
#include "lagvar/quadratic_double.hpp"

namespace lagvar::report {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

/// Bad command line, unknown algebra, malformed parameters (exit status 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw UsageError("unknown format '" + s + "' (expected json, csv or text)");
}

inline std::string describe(const std::string& command) {
  if (command == "orbits") return "G x G-orbits of the wonderful compactification, one row per J";
  if (command == "verify-lagrangian") return "check the Lagrangian corpus (or --subspace) in g + g";
  if (command == "drinfeld") return "Drinfeld subalgebras and model points for the standard triple";
  if (command == "bivector") return "rank of the bivector Pi and its jacobiator at corpus points";
  if (command == "wonderful-check") return "orbit checks plus the naive projective model PGL_n in P(M_n)";
  if (command == "schouten") return "Schouten identity for [R, R] and the cobracket cocycle";
  return "";
}

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"orbits", "verify-lagrangian", "drinfeld", "bivector", "wonderful-check", "schouten"};
  return c;
}

struct RunConfig {
  std::string command;
  std::string algebra;
  std::optional<IndexSet> J;
  std::string involution = "auto";  // auto | none | neg-transpose
  std::optional<std::size_t> codim;  // orbits filter
  std::optional<std::string> subspace_path;
  Format format = Format::json;
  bool timing = false;
};

struct Report {
  json doc;
  bool failed = false;
};

/// "1,3" -> {1,3}; "" or "{}" -> the empty set.
inline IndexSet parse_index_set(std::string text) {
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  IndexSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("malformed index set '" + text + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

// ---- serialization ----

inline json to_json(const Scalar& x) { return to_string(x); }

inline json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

inline json to_json(const Subspace& s) { return json{{"dim", s.dim()}, {"basis", to_json(s.basis())}}; }

inline json to_json(const IndexSet& j) {
  json a = json::array();
  for (auto i : j) a.push_back(i);
  return a;
}

inline json to_json(const LagrangianDefect& d) {
  json w{{"kind", to_string(d.kind)}};
  if (d.kind == LagrangianDefect::Kind::wrong_dimension) return w;
  w["x"] = to_json(d.x);
  w["y"] = to_json(d.y);
  if (d.kind == LagrangianDefect::Kind::not_isotropic)
    w["pairing"] = to_json(d.pairing);
  else
    w["bracket"] = to_json(d.bracket);
  return w;
}

inline json conventions() {
  return json{
      {"killing_form", "kappa(x, y) = tr(ad x ad y)"},
      {"direct_sum_form", "<(x1, x2), (y1, y2)> = kappa(x1, y1) - kappa(x2, y2)"},
      {"semidirect_form", "<(x, xi), (y, eta)> = xi(y) + eta(x)"},
      {"standard_splitting", "u = g_Delta, u* = {(x, y) in b x b^- : x_t = -y_t}"},
      {"r_matrix", "R = c * sum_i e_i ^ eps^i"},
      {"r_matrix_scale", to_string(r_matrix_scale())},
      {"schouten_bracket", "[R, R] = -([R12, R13] + [R12, R23] + [R13, R23])"},
      {"cocharacter",
       "limit t -> infinity of t^w on weight-w vectors (highest-weight components survive); the coweight "
       "sum over simple roots outside J on the first factor sends g_Delta to the fiber product for J"},
  };
}

// ---- helpers ----

inline json algebra_meta(const LieAlgebra& g) {
  json m{{"name", g.name()}, {"dim", g.dim()}};
  if (g.root_datum()) {
    m["series"] = std::string(1, g.root_datum()->series);
    m["rank"] = g.root_datum()->rank;
  }
  return m;
}

inline std::vector<IndexSet> selected_index_sets(const LieAlgebra& g, const RunConfig& cfg) {
  const auto& rd = require_root_datum(g);
  if (cfg.J) return {*cfg.J};
  return all_index_sets(rd.rank);
}

inline std::optional<InvolutionSpec> selected_involution(const LieAlgebra& g, const RunConfig& cfg) {
  if (cfg.involution == "none") return std::nullopt;
  if (cfg.involution != "auto" && cfg.involution != "neg-transpose")
    throw UsageError("unknown involution '" + cfg.involution + "' (expected auto, none or neg-transpose)");
  try {
    auto sigma = neg_transpose_involution(g);
    sigma.validate(g);
    return sigma;
  } catch (const std::exception& e) {
    if (cfg.involution == "neg-transpose") throw UsageError(std::string("neg-transpose involution unavailable: ") + e.what());
    return std::nullopt;
  }
}

/// Five group elements from a fixed seed: products of exponentials of simple
/// root vectors with coefficients in {-2, -1, 1, 2}.
inline std::vector<Matrix> sample_group_elements(const LieAlgebra& g, std::size_t count = 5) {
  const auto& rd = require_root_datum(g);
  std::mt19937 rng(20240601u);
  std::vector<Matrix> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<std::pair<long, Scalar>> factors;
    for (std::size_t f = 0; f < 2 * rd.rank + 1; ++f) {
      long idx = static_cast<long>(rng() % rd.rank) + 1;
      if (rng() % 2) idx = -idx;
      long c = static_cast<long>(rng() % 4);
      factors.emplace_back(idx, Scalar(c < 2 ? c - 2 : c - 1));
    }
    out.push_back(root_group_element(g, factors));
  }
  return out;
}

inline Subspace read_subspace_file(const std::string& path, std::size_t ambient) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read subspace file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("subspace file is not valid JSON: " + std::string(e.what()));
  }
  const json& rows = doc.is_object() && doc.contains("rows") ? doc["rows"] : doc;
  if (!rows.is_array()) throw UsageError("subspace file: expected an array of rows or {\"rows\": [...]}");
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != ambient)
      throw UsageError("subspace file: every row needs " + std::to_string(ambient) + " entries");
    Vector v;
    for (const auto& x : r) {
      try {
        if (x.is_string())
          v.push_back(parse_scalar(x.get<std::string>()));
        else if (x.is_number_integer())
          v.push_back(Scalar(x.get<long>()));
        else
          throw UsageError("subspace file: entries must be integers or \"p/q\" strings");
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("subspace file: ") + e.what());
      }
    }
    vs.push_back(std::move(v));
  }
  return Subspace::span(vs, ambient);
}

// ---- commands ----

inline json run_orbits(const LieAlgebra& g, const RunConfig& cfg, Report& rep) {
  const auto& rd = require_root_datum(g);
  const auto table = orbit_table(g);
  const auto b = borel(g);
  json rows = json::array();
  json failures = json::array();
  for (const auto& r : table) {
    if (r.dim_orbit + r.dim_stabilizer != 2 * g.dim()) failures.push_back({{"J", to_json(r.J)}, {"check", "dim_orbit + dim_stabilizer = 2 dim g"}});
    if (r.codim != rd.rank - r.J.size()) failures.push_back({{"J", to_json(r.J)}, {"check", "codim = rank - |J|"}});
    if (cfg.J && r.J != *cfg.J) continue;
    if (cfg.codim && r.codim != *cfg.codim) continue;
    rows.push_back({{"J", to_json(r.J)},
                    {"dim_orbit", r.dim_orbit},
                    {"dim_closure", r.dim_closure},
                    {"codim", r.codim},
                    {"divisors", to_json(r.divisors)},
                    {"dim_flag_base", r.dim_flag_base},
                    {"dim_fiber_group", r.dim_fiber_group},
                    {"dim_stabilizer", r.dim_stabilizer}});
  }
  if (table.size() != (std::size_t{1} << rd.rank)) failures.push_back({{"check", "orbit count = 2^rank"}});
  if (table.front().dim_orbit != 2 * (g.dim() - b.dim())) failures.push_back({{"check", "closed orbit dim = 2 dim(g/b)"}});
  if (table.back().dim_orbit != g.dim()) failures.push_back({{"check", "open orbit dim = dim G"}});
  if (!failures.empty()) {
    rep.failed = true;
    rep.doc["failure"] = failures;
  }
  return json{{"orbit_count", table.size()}, {"rows", rows}};
}

inline json run_verify_lagrangian(const LieAlgebra& g, const RunConfig& cfg, Report& rep) {
  const auto D = direct_sum_double(g);
  json points = json::array();
  auto check = [&](const std::string& name, const Subspace& s, json extra = json::object()) {
    const auto defect = lagrangian_defect(D, s);
    json p{{"name", name}, {"dim", s.dim()}, {"lagrangian", !defect}};
    for (auto& [k, v] : extra.items()) p[k] = v;
    points.push_back(p);
    if (defect && !rep.failed) {
      rep.failed = true;
      rep.doc["failure"] = {{"point", name}, {"subspace", to_json(s)}, {"witness", to_json(*defect)}};
    }
  };

  if (cfg.subspace_path) {
    check("input", read_subspace_file(*cfg.subspace_path, D.dim()));
    return json{{"double", D.algebra().name()}, {"points", points}};
  }

  const Subspace diag = diagonal_lagrangian(g);
  check("g_Delta", diag);
  check("standard_complement", standard_complement(g));
  for (const auto& J : selected_index_sets(g, cfg)) {
    const Subspace fp = fiber_product_lagrangian(g, J);
    check("fiber_product " + format_index_set(J), fp);
    const Subspace lim = cocharacter_limit(D, parabolic_cocharacter(D, J), diag);
    const bool matches = lim == fp;
    check("limit of g_Delta " + format_index_set(J), lim, {{"equals_fiber_product", matches}});
    if (!matches && !rep.failed) {
      rep.failed = true;
      rep.doc["failure"] = {{"point", "limit of g_Delta " + format_index_set(J)}, {"subspace", to_json(lim)}, {"witness", {{"kind", "limit differs from fiber product"}}}};
    }
  }
  if (auto sigma = selected_involution(g, cfg)) {
    const auto inv = graph_of_involution(g, *sigma);
    check("graph neg-transpose", inv.graph, {{"fixed_dim", inv.fixed.dim()}, {"diagonal_meet_dim", inv.diagonal_meet.dim()}});
  }
  const auto elements = sample_group_elements(g);
  const auto borel_chi = parabolic_cocharacter(D, {});
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const Subspace tr = adjoint_translate(g, elements[k], k % 2 ? Side::right : Side::left, diag);
    check("translate " + std::to_string(k), tr, {{"side", k % 2 ? "right" : "left"}, {"group_element", to_json(elements[k])}});
    const Subspace lim = cocharacter_limit(D, borel_chi, tr);
    check("limit of translate " + std::to_string(k) + " {}", lim, {{"idempotent", cocharacter_limit(D, borel_chi, lim) == lim}});
  }
  return json{{"double", D.algebra().name()}, {"points", points}};
}

inline json run_drinfeld(const LieAlgebra& g, const RunConfig& cfg, Report& rep) {
  const auto t = standard_triple(g);
  const std::size_t dd = t.d().dim();
  json out;
  auto fail = [&](json why) {
    if (rep.failed) return;
    rep.failed = true;
    rep.doc["failure"] = std::move(why);
  };

  auto datum_check = [&](const ManinTriple& tr, const std::string& label) {
    const auto point = drinfeld_subalgebra({tr, tr.u, Multivector(0, 2)});
    const auto ident = drinfeld_subalgebra({tr, Subspace::zero(tr.d().dim()), Multivector(tr.n(), 2)});
    if (!(point == tr.u)) fail({{"check", label + ": point datum gives u"}, {"subspace", to_json(point)}});
    if (!(ident == tr.u_star)) fail({{"check", label + ": identity datum gives u*"}, {"subspace", to_json(ident)}});
    return json{{"point_datum_is_u", point == tr.u}, {"identity_datum_is_u_star", ident == tr.u_star}};
  };
  out["standard_triple"] = datum_check(t, "standard");
  out["semidirect_triple"] = datum_check(semidirect_triple(g), "semidirect");

  // stab = t_Delta with pi = 0 and pi = q0 ^ q1 on u / stab.
  std::vector<Vector> tor;
  for (const auto& h : require_root_datum(g).cartan_subalgebra.rows()) tor.push_back(embed_diagonal(h));
  const Subspace t_diag = Subspace::span(tor, dd);
  json torus = json::array();
  const std::size_t qdim = t.n() - t_diag.dim();
  for (int variant = 0; variant < 2; ++variant) {
    Multivector pi(qdim, 2);
    if (variant == 1) pi.add({0, 1}, 1);
    json entry{{"stab", "t_Delta"}, {"pi", variant == 0 ? "0" : "q0 ^ q1"}};
    try {
      const auto l = drinfeld_subalgebra({t, t_diag, pi});
      entry["lagrangian"] = true;
      entry["subalgebra"] = to_json(l);
    } catch (const std::invalid_argument&) {
      entry["lagrangian"] = false;
    }
    torus.push_back(entry);
  }
  out["torus_stabilizer_data"] = torus;

  json points = json::array();
  auto model = [&](const std::string& name, const Subspace& l) {
    const Subspace nu = normalizer_in_u(t, l);
    const Subspace meet = intersect(l, t.u);
    const bool is_model = is_model_point(t, l);
    const Subspace image = drinfeld_image_of_point(t, l);
    json p{{"name", name},
           {"normalizer_in_u_dim", nu.dim()},
           {"meet_u_dim", meet.dim()},
           {"model_point", is_model},
           {"image_fixed", image == l}};
    points.push_back(p);
    if (is_model && !(image == l)) fail({{"check", "model point fixed by the Drinfeld map"}, {"point", name}, {"image", to_json(image)}});
  };
  model("g_Delta", diagonal_lagrangian(g));
  model("standard_complement", t.u_star);
  for (const auto& J : selected_index_sets(g, cfg)) model("fiber_product " + format_index_set(J), fiber_product_lagrangian(g, J));
  out["points"] = points;
  return out;
}

inline json run_bivector(const LieAlgebra& g, const RunConfig& cfg, Report& rep) {
  const auto t = standard_triple(g);
  json points = json::array();
  auto eval = [&](const std::string& name, const Subspace& l) {
    const bool lag = is_lagrangian(t.d(), l);
    const std::size_t r = bivector_rank(t, l);
    const bool jac_zero = jacobiator_at(t, l).is_zero();
    points.push_back({{"name", name}, {"lagrangian", lag}, {"bivector_rank", r}, {"jacobiator_zero", jac_zero}});
    if (!rep.failed && (r % 2 != 0 || (lag && !jac_zero))) {
      rep.failed = true;
      rep.doc["failure"] = {{"point", name}, {"subspace", to_json(l)}, {"bivector_rank", r}, {"jacobiator_zero", jac_zero}};
    }
  };
  const Subspace diag = diagonal_lagrangian(g);
  eval("g_Delta", diag);
  eval("standard_complement", t.u_star);
  for (const auto& J : selected_index_sets(g, cfg)) eval("fiber_product " + format_index_set(J), fiber_product_lagrangian(g, J));
  if (auto sigma = selected_involution(g, cfg)) eval("graph neg-transpose", graph_of_involution(g, *sigma).graph);
  const auto elements = sample_group_elements(g, 2);
  for (std::size_t k = 0; k < elements.size(); ++k)
    eval("translate " + std::to_string(k), adjoint_translate(g, elements[k], Side::left, diag));
  json out{{"double", t.d().algebra().name()}, {"points", points}};
  if (t.d().dim() <= 6) {
    const auto w = find_jacobiator_witness(t);
    out["non_lagrangian_witness"] = w ? to_json(*w) : json(nullptr);
  }
  return out;
}

inline json run_wonderful_check(const LieAlgebra& g, const RunConfig&, Report& rep) {
  const auto& rd = require_root_datum(g);
  const auto table = orbit_table(g);
  json out;
  out["orbit_count"] = table.size();
  out["closed_orbit_dim"] = table.front().dim_orbit;
  out["open_orbit_dim"] = table.back().dim_orbit;
  out["boundary_divisors"] = rd.rank;
  json checks{{"orbit_count_is_2^rank", table.size() == (std::size_t{1} << rd.rank)},
              {"closed_orbit_dim_is_2dim(g/b)", table.front().dim_orbit == 2 * (g.dim() - borel(g).dim())}};
  bool closure_ok = true;
  for (const auto& a : table)
    for (const auto& b : table)
      if (closure_relation(a, b) && a.dim_orbit > b.dim_orbit) closure_ok = false;
  checks["closure_order_monotone"] = closure_ok;
  out["checks"] = checks;
  for (const auto& [k, v] : checks.items())
    if (!v.get<bool>() && !rep.failed) {
      rep.failed = true;
      rep.doc["failure"] = {{"check", k}};
    }
  const std::size_t n = rd.rank + 1;
  if (rd.series == 'A' && n >= 2 && n <= 4) {
    const auto pm = naive_compactification_report(n);
    json strata = json::array();
    for (const auto& s : pm.strata) strata.push_back({{"rank", s.rank}, {"gradient_vanishes", s.gradient_vanishes}});
    out["projective_model"] = {
        {"n", pm.n},
        {"boundary_smooth", pm.boundary_smooth},
        {"boundary_irreducible", pm.boundary_irreducible ? json(*pm.boundary_irreducible) : json(nullptr)},
        {"boundary_divisors", pm.boundary_divisors},
        {"singular_witness", pm.singular_witness ? to_json(*pm.singular_witness) : json(nullptr)},
        {"strata", strata},
        {"wonderful", pm.wonderful},
    };
  } else {
    out["projective_model"] = nullptr;
  }
  return out;
}

inline json run_schouten(const LieAlgebra& g, const RunConfig&, Report& rep) {
  json doubles = json::array();
  auto check = [&](const std::string& name, const ManinTriple& t) {
    const auto mm = schouten_mismatch(t);
    const std::size_t dd = t.d().dim();
    doubles.push_back({{"double", name}, {"dim", dd}, {"triples_checked", dd * dd * dd}, {"identity_holds", !mm}});
    if (mm && !rep.failed) {
      rep.failed = true;
      rep.doc["failure"] = {{"double", name}, {"triple", {mm->a, mm->b, mm->c}}, {"lhs", to_json(mm->lhs)}, {"rhs", to_json(mm->rhs)}};
    }
  };
  check("abelian", abelian_triple());
  const auto semi = semidirect_triple(g);
  check("semidirect", semi);
  const auto std_t = standard_triple(g);
  check("standard", std_t);

  bool semi_zero = true;
  for (const auto& img : cobracket(semi).images) semi_zero = semi_zero && img.is_zero();
  const bool cocycle = verify_cocycle(std_t);
  if (!rep.failed && (!semi_zero || !cocycle)) {
    rep.failed = true;
    rep.doc["failure"] = {{"check", !cocycle ? "standard cobracket cocycle" : "semidirect cobracket vanishes"}};
  }
  return json{{"doubles", doubles}, {"cobracket", {{"standard_cocycle", cocycle}, {"semidirect_zero", semi_zero}}}};
}

/// Runs one command. Throws UsageError for invalid configurations.
inline Report run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  LieAlgebra g = [&] {
    try {
      return parse_algebra(cfg.algebra);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (cfg.J) {
    try {
      check_index_set(*cfg.J, require_root_datum(g).rank);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--J: ") + e.what());
    }
  }
  if (cfg.format == Format::csv && cfg.command != "orbits") throw UsageError("csv output is only available for orbits");
  if (cfg.subspace_path && cfg.command != "verify-lagrangian") throw UsageError("--subspace applies to verify-lagrangian only");
  if (cfg.codim && cfg.command != "orbits") throw UsageError("--codim applies to orbits only");

  Report rep;
  rep.doc["command"] = cfg.command;
  rep.doc["algebra"] = algebra_meta(g);
  rep.doc["version"] = kVersion;
  rep.doc["conventions"] = conventions();
  json params = json::object();
  if (cfg.J) params["J"] = to_json(*cfg.J);
  if (cfg.codim) params["codim"] = *cfg.codim;
  params["involution"] = cfg.involution;
  rep.doc["params"] = params;

  json result;
  if (cfg.command == "orbits")
    result = run_orbits(g, cfg, rep);
  else if (cfg.command == "verify-lagrangian")
    result = run_verify_lagrangian(g, cfg, rep);
  else if (cfg.command == "drinfeld")
    result = run_drinfeld(g, cfg, rep);
  else if (cfg.command == "bivector")
    result = run_bivector(g, cfg, rep);
  else if (cfg.command == "wonderful-check")
    result = run_wonderful_check(g, cfg, rep);
  else if (cfg.command == "schouten")
    result = run_schouten(g, cfg, rep);
  else
    throw UsageError("unknown command '" + cfg.command + "'");
  rep.doc["result"] = std::move(result);
  rep.doc["status"] = rep.failed ? "failed" : "ok";
  if (cfg.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    rep.doc["timing_ms"] = ms;
  }
  return rep;
}

// ---- emitters ----

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string index_field(const json& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i].get<std::size_t>());
  return s + "}";
}

inline std::string emit_csv(const Report& rep) {
  if (rep.doc.value("command", "") != "orbits") throw UsageError("csv output is only available for orbits");
  static const char* cols[] = {"J", "dim_orbit", "dim_closure", "codim", "divisors", "dim_flag_base", "dim_fiber_group", "dim_stabilizer"};
  std::string out;
  for (std::size_t i = 0; i < std::size(cols); ++i) out += (i ? "," : "") + std::string(cols[i]);
  out += "\n";
  for (const auto& row : rep.doc["result"]["rows"]) {
    for (std::size_t i = 0; i < std::size(cols); ++i) {
      const json& v = row[cols[i]];
      out += (i ? "," : "") + csv_field(v.is_array() ? index_field(v) : v.dump());
    }
    out += "\n";
  }
  return out;
}

inline void emit_text_value(std::string& out, const json& v, const std::string& indent) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !(x.is_array() && (x.empty() || !x.front().is_structured()))) {
        out += indent + k + ":\n";
        emit_text_value(out, x, indent + "  ");
      } else {
        out += indent + k + ": " + (x.is_string() ? x.get<std::string>() : x.dump()) + "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_structured()) {
        out += indent + "-\n";
        emit_text_value(out, x, indent + "  ");
      } else {
        out += indent + "- " + (x.is_string() ? x.get<std::string>() : x.dump()) + "\n";
      }
    }
  } else {
    out += indent + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
}

inline std::string emit(const Report& rep, Format f) {
  switch (f) {
    case Format::json: return rep.doc.dump(2) + "\n";
    case Format::csv: return emit_csv(rep);
    default: {
      std::string out;
      emit_text_value(out, rep.doc, "");
      return out;
    }
  }
}

}  // namespace lagvar::report
