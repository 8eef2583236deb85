#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "conecalc/errors.hpp"

using namespace conecalc::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact nef/pseudoeffective cone calculator for projective bundles"};
  app.require_subcommand(1);
  std::string workspace_path;
  bool json = false;
  app.add_option("-w,--workspace", workspace_path, "Workspace JSON file");
  app.add_flag("--json", json, "Machine-readable output");

  auto* ring = app.add_subcommand("ring", "Intersection ring queries")->require_subcommand(1);
  auto* eval = ring->add_subcommand("eval", "Normal form (and degree) of an expression");
  RingEvalArgs ring_args;
  std::string basis = "xi";
  eval->add_option("expr", ring_args.expr, "Polynomial in the ring generators")->required();
  eval->add_option("--basis", basis, "Surface ring presentation")->check(CLI::IsMember({"xi", "lambda"}));

  auto* cone_cmd = app.add_subcommand("cone", "Nef or pseudoeffective cone of the space");
  std::string which = "nef";
  ConeArgs cone_args;
  cone_cmd->add_option("which", which)->required()->check(CLI::IsMember({"nef", "psef"}));
  cone_cmd->add_option("--k", cone_args.k, "Codimension")->check(CLI::PositiveNumber);

  auto* member_cmd = app.add_subcommand("member", "Cone membership test (exit 1 if outside)");
  MemberArgs member_args;
  std::string member_cone = "nef";
  member_cmd->add_option("class", member_args.cls, "Comma-separated coordinates or a workspace class name")
      ->required();
  member_cmd->add_option("--cone", member_cone)->check(CLI::IsMember({"nef", "psef"}));
  member_cmd->add_option("--k", member_args.k, "Codimension")->check(CLI::PositiveNumber);

  auto* zariski_cmd = app.add_subcommand("zariski", "Weak Zariski decomposition with certificate");
  ZariskiArgs zariski_args;
  zariski_cmd->add_option("class", zariski_args.cls)->required();

  auto* homog_cmd = app.add_subcommand("homog", "Check nef^k = psef^k from first principles");
  HomogArgs homog_args;
  homog_cmd->add_option("--k", homog_args.k, "Codimension")->required()->check(CLI::PositiveNumber);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  CommandOutput out;
  try {
    if (selftest_cmd->parsed()) {
      out = selftest();
    } else {
      if (workspace_path.empty()) throw conecalc::InvalidInput("--workspace is required for this command");
      const WorkspaceSpec ws = load_workspace(workspace_path);
      if (eval->parsed()) {
        ring_args.lambda_basis = basis == "lambda";
        out = ring_eval(ws, ring_args);
      } else if (cone_cmd->parsed()) {
        cone_args.nef = which == "nef";
        out = cone(ws, cone_args);
      } else if (member_cmd->parsed()) {
        member_args.nef = member_cone == "nef";
        out = member(ws, member_args);
      } else if (zariski_cmd->parsed()) {
        out = zariski(ws, zariski_args);
      } else if (homog_cmd->parsed()) {
        out = homog(ws, homog_args);
      }
    }
  } catch (const std::exception& e) {
    out = error_output(e);
  }
  if (json) {
    std::cout << out.json.dump(2) << std::endl;
  } else {
    (out.exit_code >= kInvalidInput ? std::cerr : std::cout) << out.text;
  }
  return out.exit_code;
}
