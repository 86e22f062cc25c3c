#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lmg/sweep.hpp"

namespace lmgcli {

inline constexpr std::string_view kSweepHeader =
    "lambda1,eta,eta_carnot,work,q_h,q_ab,q_bc,q_cd,q_da,s_a,s_b,s_c,s_d";

/// 12 significant digits, shortest of fixed/scientific ("%.12g").
std::string format_number(double v);

std::string sweep_row(const lmg::SweepRecord& r);

/// Header plus one LF-terminated row per record.
std::string sweep_csv(const std::vector<lmg::SweepRecord>& records);

/// Generic numeric table; every row must have header.size() columns.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);

/// Writes through a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#000000";
  bool dashed = false;
};

/// Single-panel SVG 1.1 line chart.
std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<Series>& series);

}  // namespace lmgcli
