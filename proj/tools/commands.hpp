#pragma once

#include <optional>
#include <string>

#include "conecalc/json_io.hpp"
#include "workspace.hpp"

namespace conecalc::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kInvalidInput = 2,
  kInternalError = 3,
};

struct CommandOutput {
  int exit_code = kOk;
  std::string text;
  Json json;
};

struct RingEvalArgs {
  std::string expr;
  bool lambda_basis = false;
};
struct ConeArgs {
  bool nef = true;
  int k = 1;
};
struct MemberArgs {
  std::string cls;
  bool nef = true;
  int k = 1;
};
struct ZariskiArgs {
  std::string cls;
};
struct HomogArgs {
  int k = 1;
};

CommandOutput ring_eval(const WorkspaceSpec& ws, const RingEvalArgs& args);
CommandOutput cone(const WorkspaceSpec& ws, const ConeArgs& args);
CommandOutput member(const WorkspaceSpec& ws, const MemberArgs& args);
CommandOutput zariski(const WorkspaceSpec& ws, const ZariskiArgs& args);
CommandOutput homog(const WorkspaceSpec& ws, const HomogArgs& args);
CommandOutput selftest();

/// ConeReport for the workspace's space in codimension k.
ConeReport space_cones(const WorkspaceSpec& ws, int k);

/// A named class from the workspace or a comma-separated coordinate list.
QVector resolve_class(const WorkspaceSpec& ws, const std::string& text, std::size_t width);

/// Maps an exception to an exit code and a machine-readable error payload.
CommandOutput error_output(const std::exception& e);

}  // namespace conecalc::cli
