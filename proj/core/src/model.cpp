#include "lmg/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lmg/errors.hpp"

namespace lmg {

void ModelSpec::validate() const {
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw DomainError("lambda must be finite and >= 0, got " + std::to_string(lambda));
  if (!std::isfinite(energy_offset)) throw DomainError("energy_offset must be finite");
}

bool is_valid_index(int n, int twice_m) noexcept {
  if (n < 1) return false;
  if (twice_m < -n || twice_m > n) return false;
  return ((twice_m - n) % 2) == 0;
}

MagnetizationIndex MagnetizationIndex::from_twice(int n, int twice_m) {
  if (!is_valid_index(n, twice_m)) {
    throw DomainError("2M = " + std::to_string(twice_m) + " is not a valid magnetization for N = " +
                      std::to_string(n) + " (need |2M| <= N and 2M = N mod 2)");
  }
  return MagnetizationIndex(twice_m);
}

double eigenenergy(const ModelSpec& spec, MagnetizationIndex m) {
  spec.validate();
  if (!is_valid_index(spec.n, m.twice_m())) {
    // An index built for a different N.
    MagnetizationIndex::from_twice(spec.n, m.twice_m());
  }
  const double n = spec.n;
  const double shift = m.twice_m() - n * spec.lambda;  // 2M - N*lambda
  return shift * shift / (2.0 * n) - 0.5 * n * (1.0 + spec.lambda * spec.lambda) - 1.0 +
         spec.energy_offset;
}

double eigenenergy(const ModelSpec& spec, int twice_m) {
  return eigenenergy(spec, MagnetizationIndex::from_twice(spec.n, twice_m));
}

double excitation(const ModelSpec& spec, int twice_m, int twice_m0) {
  const double n = spec.n;
  const double diff = static_cast<double>(twice_m - twice_m0);
  const double sum = static_cast<double>(twice_m + twice_m0);
  return diff * (sum - 2.0 * n * spec.lambda) / (2.0 * n);
}

std::vector<Level> spectrum(const ModelSpec& spec) {
  spec.validate();
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(spec.n) + 1);
  for (int tm = -spec.n; tm <= spec.n; tm += 2) {
    const auto m = MagnetizationIndex::from_twice(spec.n, tm);
    levels.push_back({m, eigenenergy(spec, m)});
  }
  return levels;
}

std::vector<MagnetizationIndex> ground_set(const ModelSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const double target = n * spec.lambda;  // unconstrained minimiser of (2M - N*lambda)^2
  if (target >= n) return {MagnetizationIndex::from_twice(n, n)};

  // Largest allowed 2M not above target.
  const int steps = static_cast<int>(std::ceil((n - target) / 2.0));
  int lo = n - 2 * steps;
  if (lo + 2 <= target) lo += 2;  // guard against ceil rounding up on exact values
  const int hi = lo + 2;

  const double tie_tol = std::max(1e-12, 8.0 * std::numeric_limits<double>::epsilon() * n);
  const double midpoint_gap = target - (lo + 1);
  if (std::abs(midpoint_gap) <= tie_tol) {
    return {MagnetizationIndex::from_twice(n, lo), MagnetizationIndex::from_twice(n, hi)};
  }
  return {MagnetizationIndex::from_twice(n, midpoint_gap < 0.0 ? lo : hi)};
}

std::vector<double> level_crossings(int n) {
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  std::vector<double> out;
  // Pair (M, M+1) is degenerate at N*lambda = 2M + 1; keep those inside (0, 1).
  for (int tm = n % 2; tm <= n - 2; tm += 2) {
    out.push_back(static_cast<double>(tm + 1) / n);
  }
  return out;
}

}  // namespace lmg
