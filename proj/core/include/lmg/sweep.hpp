#pragma once

#include <cstddef>
#include <vector>

#include "lmg/cycle.hpp"

namespace lmg {

/// A lambda1 scan of one cycle. cycle_template.lambda1 is ignored.
struct SweepSpec {
  CycleSpec cycle_template;
  std::vector<double> lambda1_grid;  ///< strictly ascending, inside [0, lambda2]
  double derivative_step = 1e-3;

  /// Throws DomainError; grid problems come as SweepPointError with the index.
  void validate() const;
};

struct SweepRecord {
  double lambda1 = 0.0;
  double efficiency = 0.0;
  double eta_carnot = 0.0;
  double work = 0.0;
  double q_h = 0.0;
  double q_ab = 0.0;
  double q_bc = 0.0;
  double q_cd = 0.0;
  double q_da = 0.0;
  double s_a = 0.0;
  double s_b = 0.0;
  double s_c = 0.0;
  double s_d = 0.0;
  bool is_engine = false;

  static SweepRecord from(double lambda1, const CycleResult& r);
};

struct Peak {
  double lambda1;
  double efficiency;
};

/// count points from lo to hi inclusive; both endpoints are hit exactly.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

/// One record per grid point in grid order. Points may be evaluated on
/// several threads; the output does not depend on that. A failing point
/// raises SweepPointError carrying the lowest failing index.
std::vector<SweepRecord> sweep_lambda1(const SweepSpec& spec);

/// Central difference [eta(l + h) - eta(l - h)] / 2h. The stencil must stay
/// inside [0, lambda2].
double efficiency_derivative(const CycleSpec& spec, double lambda1, double h);

/// eta' at every grid point; central where the stencil fits, one-sided
/// (forward at the left edge, backward at the right edge) otherwise.
std::vector<double> derivative_profile(const SweepSpec& spec);

/// Minimum height of a peak above the higher of its two bases.
inline constexpr double kPeakProminence = 1e-4;

/// Strict interior local maxima of efficiency whose prominence is at least
/// kPeakProminence. The bases are the lowest values reached walking away
/// from the peak until a higher point (or the grid end) is met. Needs >= 3
/// records.
std::vector<Peak> detect_peaks(const std::vector<SweepRecord>& records);

}  // namespace lmg
