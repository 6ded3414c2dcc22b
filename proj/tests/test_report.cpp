#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lagvar/report.hpp"

using namespace lagvar;
using namespace lagvar::report;

namespace {

RunConfig config(std::string command, std::string algebra) {
  RunConfig c;
  c.command = std::move(command);
  c.algebra = std::move(algebra);
  return c;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST(Parsing, IndexSets) {
  EXPECT_EQ(parse_index_set("1,3"), (IndexSet{1, 3}));
  EXPECT_EQ(parse_index_set("{2}"), IndexSet{2});
  EXPECT_TRUE(parse_index_set("").empty());
  EXPECT_TRUE(parse_index_set("{}").empty());
  EXPECT_THROW(parse_index_set("1,,2"), UsageError);
  EXPECT_THROW(parse_index_set("a"), UsageError);
  EXPECT_THROW(parse_index_set("-1"), UsageError);
}

TEST(Parsing, Formats) {
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_THROW(parse_format("yaml"), UsageError);
}

TEST(Serialization, RationalsAreStrings) {
  EXPECT_EQ(to_json(rational(-3, 6)), json("-1/2"));
  EXPECT_EQ(to_json(Vector{1, Scalar(2, 3)}), json::parse(R"(["1","2/3"])"));
  const auto s = Subspace::span({Vector{2, 4}}, 2);
  EXPECT_EQ(to_json(s), json::parse(R"({"dim":1,"basis":[["1","2"]]})"));
}

TEST(Run, OrbitsDocumentShape) {
  const auto rep = run(config("orbits", "A1"));
  EXPECT_FALSE(rep.failed);
  const auto& d = rep.doc;
  EXPECT_EQ(d["status"], "ok");
  EXPECT_EQ(d["version"], kVersion);
  EXPECT_EQ(d["conventions"]["r_matrix_scale"], "1");
  EXPECT_EQ(d["algebra"]["dim"], 3);
  EXPECT_FALSE(d.contains("timing_ms"));
  ASSERT_EQ(d["result"]["rows"].size(), 2u);
  EXPECT_EQ(d["result"]["rows"][0]["dim_orbit"], 2);
  EXPECT_EQ(d["result"]["rows"][1]["dim_orbit"], 3);
}

TEST(Run, OrbitFilters) {
  auto c = config("orbits", "A3");
  c.J = IndexSet{1, 3};
  auto rep = run(c);
  ASSERT_EQ(rep.doc["result"]["rows"].size(), 1u);
  EXPECT_EQ(rep.doc["result"]["rows"][0]["dim_orbit"], 14);
  EXPECT_EQ(rep.doc["result"]["rows"][0]["divisors"], json::parse("[2]"));
  EXPECT_EQ(rep.doc["params"]["J"], json::parse("[1,3]"));
  c.J.reset();
  c.codim = 1;
  rep = run(c);
  EXPECT_EQ(rep.doc["result"]["rows"].size(), 3u);
  EXPECT_EQ(rep.doc["result"]["orbit_count"], 8);
}

TEST(Run, AllCommandsSucceedOnA2) {
  for (const auto& cmd : commands()) {
    const auto rep = run(config(cmd, "A2"));
    EXPECT_FALSE(rep.failed) << cmd << "\n" << rep.doc.dump(2);
    EXPECT_EQ(rep.doc["command"], cmd);
  }
}

TEST(Run, VerifyLagrangianPoints) {
  const auto rep = run(config("verify-lagrangian", "A2"));
  const auto& pts = rep.doc["result"]["points"];
  // g_Delta, complement, 4 x (fiber product + limit), graph, 5 x (translate + limit)
  EXPECT_EQ(pts.size(), 2u + 8u + 1u + 10u);
  for (const auto& p : pts) {
    EXPECT_TRUE(p["lagrangian"].get<bool>()) << p["name"];
    if (p.contains("equals_fiber_product")) EXPECT_TRUE(p["equals_fiber_product"].get<bool>());
    if (p.contains("idempotent")) EXPECT_TRUE(p["idempotent"].get<bool>());
  }
}

TEST(Run, InvolutionSelection) {
  // The antidiagonal model of so_5 is closed under transposition.
  auto c = config("verify-lagrangian", "B2");
  c.involution = "neg-transpose";
  const auto b2 = run(c);
  EXPECT_FALSE(b2.failed);
  bool found = false;
  for (const auto& p : b2.doc["result"]["points"])
    if (p["name"] == "graph neg-transpose") found = p["lagrangian"].get<bool>();
  EXPECT_TRUE(found);
  c.algebra = "A1";
  c.involution = "none";
  for (const auto& p : run(c).doc["result"]["points"]) EXPECT_NE(p["name"], "graph neg-transpose");
  c.involution = "bogus";
  EXPECT_THROW(run(c), UsageError);
}

TEST(Run, InjectedFailureCarriesWitness) {
  // (E12, 0), (E21, 0), (H, 0): the first factor, not isotropic.
  const auto path = temp_file("lagvar_bad_subspace.json", R"({"rows": [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,"1",0,0,0]]})");
  auto c = config("verify-lagrangian", "A1");
  c.subspace_path = path;
  const auto rep = run(c);
  EXPECT_TRUE(rep.failed);
  EXPECT_EQ(rep.doc["status"], "failed");
  EXPECT_EQ(rep.doc["failure"]["witness"]["kind"], "not_isotropic");
  EXPECT_EQ(rep.doc["failure"]["point"], "input");
  const auto good = temp_file("lagvar_good_subspace.json", "[[1,0,0,1,0,0],[0,1,0,0,1,0],[0,0,1,0,0,1]]");
  c.subspace_path = good;
  EXPECT_FALSE(run(c).failed);
  std::remove(path.c_str());
  std::remove(good.c_str());
}

TEST(Run, UsageErrors) {
  EXPECT_THROW(run(config("orbits", "Z9")), UsageError);
  EXPECT_THROW(run(config("nope", "A1")), UsageError);
  auto c = config("orbits", "A2");
  c.J = IndexSet{3};
  EXPECT_THROW(run(c), UsageError);
  c = config("schouten", "A1");
  c.format = Format::csv;
  EXPECT_THROW(run(c), UsageError);
  c = config("schouten", "A1");
  c.codim = 0;
  EXPECT_THROW(run(c), UsageError);
  c = config("orbits", "A1");
  c.subspace_path = "x.json";
  EXPECT_THROW(run(c), UsageError);
  c = config("verify-lagrangian", "A1");
  c.subspace_path = "/nonexistent/lagvar.json";
  EXPECT_THROW(run(c), UsageError);
  c.subspace_path = temp_file("lagvar_short_rows.json", "[[1,2]]");
  EXPECT_THROW(run(c), UsageError);
  c.subspace_path = temp_file("lagvar_bad_entry.json", "[[1,0,0,0,0,0.5]]");
  EXPECT_THROW(run(c), UsageError);
}

TEST(Run, WonderfulProjectiveModel) {
  const auto a1 = run(config("wonderful-check", "A1")).doc["result"]["projective_model"];
  EXPECT_TRUE(a1["wonderful"].get<bool>());
  const auto a2 = run(config("wonderful-check", "A2")).doc["result"]["projective_model"];
  EXPECT_FALSE(a2["wonderful"].get<bool>());
  EXPECT_EQ(a2["singular_witness"], json::parse(R"([["1","0","0"],["0","0","0"],["0","0","0"]])"));
  EXPECT_TRUE(run(config("wonderful-check", "B2")).doc["result"]["projective_model"].is_null());
}

TEST(Run, SchoutenAndBivector) {
  const auto s = run(config("schouten", "A1")).doc["result"];
  for (const auto& d : s["doubles"]) EXPECT_TRUE(d["identity_holds"].get<bool>());
  EXPECT_TRUE(s["cobracket"]["standard_cocycle"].get<bool>());
  const auto b = run(config("bivector", "A1")).doc["result"];
  EXPECT_FALSE(b["non_lagrangian_witness"].is_null());
  for (const auto& p : b["points"]) EXPECT_TRUE(p["jacobiator_zero"].get<bool>());
}

TEST(Emit, DeterministicAndSorted) {
  const auto a = emit(run(config("drinfeld", "A2")), Format::json);
  const auto b = emit(run(config("drinfeld", "A2")), Format::json);
  EXPECT_EQ(a, b);
  const auto doc = json::parse(a);
  std::string prev;
  for (const auto& [k, v] : doc.items()) {
    EXPECT_LT(prev, k);
    prev = k;
  }
  EXPECT_EQ(doc.dump(2) + "\n", a);
}

TEST(Emit, CsvAndText) {
  auto c = config("orbits", "A3");
  c.J = IndexSet{1, 3};
  const auto csv = emit(run(c), Format::csv);
  EXPECT_EQ(csv,
            "J,dim_orbit,dim_closure,codim,divisors,dim_flag_base,dim_fiber_group,dim_stabilizer\n"
            "\"{1,3}\",14,14,1,{2},8,6,16\n");
  const auto text = emit(run(config("schouten", "A1")), Format::text);
  EXPECT_NE(text.find("status: ok"), std::string::npos);
  EXPECT_NE(text.find("r_matrix_scale: 1"), std::string::npos);
}

TEST(Timing, OnlyWhenRequested) {
  auto c = config("orbits", "A1");
  c.timing = true;
  EXPECT_TRUE(run(c).doc.contains("timing_ms"));
}
