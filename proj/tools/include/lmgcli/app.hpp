#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lmgcli/figures.hpp"

namespace lmgcli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class ArtifactKind { csv, svg };

struct Artifact {
  std::string name;  ///< file name, e.g. "fig2a_th0.8.csv"
  std::string suffix;
  ArtifactKind kind;
  std::string contents;
};

/// All files of one figure panel. points == 0 selects the panel default.
std::vector<Artifact> render_figure(const FigureDef& fig, std::size_t points, bool with_csv,
                                    bool with_svg);

}  // namespace lmgcli
