#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lmg/cycle.hpp"

namespace lmgcli {

enum class FigureKind {
  efficiency,  ///< eta vs lambda1, sweep CSV schema
  entropy,     ///< S(lambda1) at T_H, T_C and T = 0
  derivative,  ///< eta and eta' vs lambda1
};

struct Curve {
  std::string suffix;  ///< appended to the dataset stem when a panel has several curves
  lmg::CycleSpec cycle;
};

struct FigureDef {
  std::string id;
  FigureKind kind;
  std::vector<Curve> curves;
  double lambda1_max;
  std::size_t default_points;
  std::string caption;
};

/// Parameter sets of every reproducible panel, in catalogue order.
const std::vector<FigureDef>& figure_catalog();

std::optional<FigureDef> find_figure(const std::string& id);

}  // namespace lmgcli
