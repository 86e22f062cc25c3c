#include "lmg/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <string>
#include <thread>

#include "lmg/errors.hpp"

namespace lmg {
namespace {

double efficiency_at(CycleSpec spec, double lambda1) {
  spec.lambda1 = lambda1;
  return run_cycle(spec).efficiency;
}

// Below this many points threads cost more than they save.
constexpr std::size_t kParallelThreshold = 64;

}  // namespace

void SweepSpec::validate() const {
  CycleSpec probe = cycle_template;
  probe.lambda1 = 0.0;
  probe.validate();
  if (lambda1_grid.empty()) throw DomainError("lambda1 grid is empty");
  for (std::size_t i = 0; i < lambda1_grid.size(); ++i) {
    const double l = lambda1_grid[i];
    if (!std::isfinite(l) || l < 0.0 || l > cycle_template.lambda2) {
      throw SweepPointError(i, "lambda1 = " + std::to_string(l) + " lies outside [0, lambda2]");
    }
    if (i > 0 && !(l > lambda1_grid[i - 1])) {
      throw SweepPointError(i, "lambda1 grid must be strictly ascending");
    }
  }
  if (!(derivative_step > 0.0) || !std::isfinite(derivative_step)) {
    throw DomainError("derivative_step must be > 0");
  }
}

SweepRecord SweepRecord::from(double lambda1, const CycleResult& r) {
  SweepRecord rec;
  rec.lambda1 = lambda1;
  rec.efficiency = r.efficiency;
  rec.eta_carnot = r.eta_carnot;
  rec.work = r.work;
  rec.q_h = r.q_h;
  rec.q_ab = r.q_ab;
  rec.q_bc = r.q_bc;
  rec.q_cd = r.q_cd;
  rec.q_da = r.q_da;
  rec.s_a = r.a().entropy;
  rec.s_b = r.b().entropy;
  rec.s_c = r.c().entropy;
  rec.s_d = r.d().entropy;
  rec.is_engine = r.is_engine;
  return rec;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  if (count == 0) throw DomainError("grid needs at least one point");
  if (!(hi >= lo)) throw DomainError("grid upper bound below lower bound");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double span = hi - lo;
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + span * (static_cast<double>(i) / last);
  out.back() = hi;
  return out;
}

std::vector<SweepRecord> sweep_lambda1(const SweepSpec& spec) {
  spec.validate();
  const auto& grid = spec.lambda1_grid;
  const std::size_t count = grid.size();
  std::vector<SweepRecord> records(count);
  std::vector<std::optional<std::string>> failures(count);

  auto evaluate = [&](std::size_t i) {
    try {
      CycleSpec c = spec.cycle_template;
      c.lambda1 = grid[i];
      records[i] = SweepRecord::from(grid[i], run_cycle(c));
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  };

  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = count < kParallelThreshold ? 1 : std::min(hw, count / kParallelThreshold + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) evaluate(i);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers) evaluate(i);
      });
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) throw SweepPointError(i, *failures[i]);
  }
  return records;
}

double efficiency_derivative(const CycleSpec& spec, double lambda1, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("derivative step must be > 0");
  if (lambda1 - h < 0.0 || lambda1 + h > spec.lambda2) {
    throw DomainError("derivative stencil [" + std::to_string(lambda1 - h) + ", " +
                      std::to_string(lambda1 + h) + "] leaves [0, lambda2]");
  }
  return (efficiency_at(spec, lambda1 + h) - efficiency_at(spec, lambda1 - h)) / (2.0 * h);
}

std::vector<double> derivative_profile(const SweepSpec& spec) {
  spec.validate();
  const double h = spec.derivative_step;
  const auto& c = spec.cycle_template;
  std::vector<double> out;
  out.reserve(spec.lambda1_grid.size());
  for (double l : spec.lambda1_grid) {
    if (l - h >= 0.0 && l + h <= c.lambda2) {
      out.push_back(efficiency_derivative(c, l, h));
    } else if (l - h < 0.0) {
      out.push_back((efficiency_at(c, l + h) - efficiency_at(c, l)) / h);
    } else {
      out.push_back((efficiency_at(c, l) - efficiency_at(c, l - h)) / h);
    }
  }
  return out;
}

std::vector<Peak> detect_peaks(const std::vector<SweepRecord>& records) {
  if (records.size() < 3) {
    throw DomainError("detect_peaks needs at least 3 records, got " + std::to_string(records.size()));
  }
  std::vector<Peak> peaks;
  const std::size_t n = records.size();
  auto eff = [&](std::size_t i) { return records[i].efficiency; };

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double top = eff(i);
    if (!(top > eff(i - 1) && top > eff(i + 1))) continue;

    // Bases: lowest value passed before meeting a point at least as high on
    // the left, strictly higher on the right.
    double left_base = top;
    for (std::size_t j = i; j-- > 0;) {
      if (eff(j) >= top) break;
      left_base = std::min(left_base, eff(j));
    }
    double right_base = top;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (eff(j) > top) break;
      right_base = std::min(right_base, eff(j));
    }
    if (top - std::max(left_base, right_base) >= kPeakProminence) {
      peaks.push_back({records[i].lambda1, top});
    }
  }
  return peaks;
}

}  // namespace lmg
