#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skw/commands.hpp"

namespace {

void add_run_flags(CLI::App* app, skw::RunConfig& cfg, double& tol, double& step) {
  app->add_option("--entry", cfg.entry, "catalog selector, e.g. cubic or quadratic(n=2,tau=i)");
  app->add_option("--points", cfg.points, "number of seeded sample points");
  app->add_option("--seed", cfg.seed, "PRNG seed");
  app->add_option("--tol", tol, "residual tolerance");
  app->add_option("--step", step, "finite-difference step");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special Kaehler, Hodge and Rees verification workbench"};
  app.set_version_flag("--version", skw::kToolVersion);
  app.require_subcommand(1);
  std::string out_path;

  skw::RunConfig cfg;
  double tol = 0.0, step = 0.0;

  auto* catalog = app.add_subcommand("catalog", "list prepotential catalog entries");

  auto* verify = app.add_subcommand("verify", "run equation, special-condition and VHS checks");
  add_run_flags(verify, cfg, tol, step);

  auto* rees = app.add_subcommand("rees", "Rees bundle splitting and purity");
  rees->require_subcommand(1);
  std::string rees_file;
  int weight = 0;
  auto* rees_split = rees->add_subcommand("split", "splitting type of a filtration pair");
  rees_split->add_option("file", rees_file, "filtration JSON")->required();
  auto* rees_purity = rees->add_subcommand("purity", "purity oracle against semistability");
  rees_purity->add_option("file", rees_file, "filtration JSON")->required();
  auto* weight_opt = rees_purity->add_option("--weight", weight, "weight w")->required();

  auto* hk = app.add_subcommand("hk", "hyperkaehler structure on the cotangent bundle");
  hk->require_subcommand(1);
  std::vector<CLI::App*> hk_subs;
  for (const char* name : {"check", "nijenhuis", "correspondence"}) {
    auto* s = hk->add_subcommand(name);
    add_run_flags(s, cfg, tol, step);
    hk_subs.push_back(s);
  }
  hk_subs[0]->description("quaternion relations, orthogonality, closed Kaehler forms");
  hk_subs[1]->description("Nijenhuis residuals of I, J, K and twistor structures");
  hk_subs[2]->description("split J against the J built from the pointwise Hodge structure");

  auto* twistor = app.add_subcommand("twistor", "twistor lines");
  twistor->require_subcommand(1);
  auto* normal = twistor->add_subcommand("normal-bundle", "Rees splitting of the pointwise structure");
  add_run_flags(normal, cfg, tol, step);

  std::vector<CLI::App*> leaves = hk_subs;
  for (auto* sub : {catalog, verify, normal, rees_split, rees_purity}) leaves.push_back(sub);
  for (auto* sub : leaves) sub->add_option("--out", out_path, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : skw::kUsageError;
  }

  const auto apply_overrides = [&](CLI::App* sub) {
    if (sub->count("--tol")) cfg.tol = tol;
    if (sub->count("--step")) cfg.step = step;
  };

  skw::CommandResult result{skw::kUsageError, ""};
  if (catalog->parsed()) {
    result = skw::cmd_catalog();
  } else if (verify->parsed()) {
    apply_overrides(verify);
    result = skw::cmd_verify(cfg);
  } else if (rees->parsed()) {
    const bool is_split = rees_split->parsed();
    std::ifstream in(rees_file);
    if (!in) {
      std::cerr << "cannot read " << rees_file << "\n";
      return skw::kUsageError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    result = skw::cmd_rees(is_split ? "split" : "purity", buf.str(),
                           weight_opt->count() ? std::optional<int>(weight) : std::nullopt);
  } else if (hk->parsed()) {
    for (auto* s : hk_subs)
      if (s->parsed()) {
        apply_overrides(s);
        result = skw::cmd_hk(s->get_name(), cfg);
      }
  } else if (twistor->parsed()) {
    apply_overrides(normal);
    result = skw::cmd_twistor("normal-bundle", cfg);
  }

  if (out_path.empty()) {
    std::cout << result.json;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return skw::kUsageError;
    }
    out << result.json;
  }
  if (result.exit_code != skw::kPass && result.json.find("\"error\"") != std::string::npos)
    std::cerr << result.json;
  return result.exit_code;
}
