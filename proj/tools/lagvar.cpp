// Command-line front end. Exit status: 0 success, 1 verification failure,
// 2 usage error.
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "lagvar/report.hpp"

namespace rpt = lagvar::report;

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with quadratic Lie algebra doubles and Lagrangian subalgebras", "lagvar"};
  app.set_version_flag("--version", std::string("lagvar ") + rpt::kVersion);
  app.require_subcommand(1, 1);

  std::string algebra, j_text, involution = "auto", format = "json", out_path, subspace;
  std::size_t codim = 0;
  bool timing = false;
  std::map<std::string, CLI::Option*> j_opt, codim_opt, subspace_opt;

  for (const auto& name : rpt::commands()) {
    auto* sub = app.add_subcommand(name, rpt::describe(name));
    sub->add_option("--algebra", algebra, "A<l>, B<l>, C<l>, D<l> or sl<n>")->required();
    j_opt[name] = sub->add_option("--J", j_text, "simple-root subset, e.g. 1,3");
    sub->add_option("--involution", involution, "auto | none | neg-transpose");
    sub->add_option("--format", format, "json | csv | text");
    sub->add_option("--out", out_path, "write to PATH instead of stdout");
    sub->add_flag("--timing", timing, "include wall-clock timing in the report");
    if (name == "orbits") codim_opt[name] = sub->add_option("--codim", codim, "only orbits of this codimension");
    if (name == "verify-lagrangian") subspace_opt[name] = sub->add_option("--subspace", subspace, "JSON file with basis rows to verify");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  rpt::RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.algebra = algebra;
  cfg.involution = involution;
  cfg.timing = timing;
  try {
    cfg.format = rpt::parse_format(format);
    auto given = [&](const std::map<std::string, CLI::Option*>& opts) {
      auto it = opts.find(cfg.command);
      return it != opts.end() && it->second->count() > 0;
    };
    if (given(j_opt)) cfg.J = rpt::parse_index_set(j_text);
    if (given(subspace_opt)) cfg.subspace_path = subspace;
    if (given(codim_opt)) cfg.codim = codim;

    const rpt::Report rep = rpt::run(cfg);
    const std::string text = rpt::emit(rep, cfg.format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw rpt::UsageError("cannot write '" + out_path + "'");
      out << text;
    }
    return rep.failed ? 1 : 0;
  } catch (const rpt::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
