#include "lmg/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lmg/errors.hpp"

namespace lmg {
namespace {

struct Reduced {
  int ground_twice_m;
  double ground_energy;
  std::vector<double> gaps;  // E_k - E_0, indexed like spectrum(); exact zeros on the ground set
};

Reduced reduce(const ModelSpec& spec) {
  const auto ground = ground_set(spec);
  Reduced r;
  r.ground_twice_m = ground.front().twice_m();
  r.ground_energy = eigenenergy(spec, ground.front());
  r.gaps.reserve(static_cast<std::size_t>(spec.n) + 1);
  for (int tm = -spec.n; tm <= spec.n; tm += 2) {
    bool in_ground = false;
    for (auto g : ground) in_ground = in_ground || g.twice_m() == tm;
    r.gaps.push_back(in_ground ? 0.0 : std::max(0.0, excitation(spec, tm, r.ground_twice_m)));
  }
  return r;
}

// ln(1 + sum of the non-reference Boltzmann factors), i.e. ln Z + beta*E_0.
// The reference term is the first exact zero gap, which holds the maximum.
double log_relative_partition(const std::vector<double>& gaps, double beta) {
  bool reference_seen = false;
  double rest = 0.0;
  for (double g : gaps) {
    if (!reference_seen && g == 0.0) {
      reference_seen = true;
      continue;
    }
    rest += std::exp(-beta * g);
  }
  return std::log1p(rest);
}

void check_beta(double beta) {
  if (std::isnan(beta) || beta < 0.0) {
    throw DomainError("beta must be >= 0, got " + std::to_string(beta));
  }
}

}  // namespace

double log_partition_exact(const ModelSpec& spec, double beta) {
  spec.validate();
  check_beta(beta);
  if (std::isinf(beta)) throw DomainError("log_partition_exact: beta must be finite");
  const Reduced r = reduce(spec);
  return -beta * r.ground_energy + log_relative_partition(r.gaps, beta);
}

ThermalState thermal_state(const ModelSpec& spec, double temperature) {
  if (std::isnan(temperature) || temperature < 0.0) {
    throw DomainError("temperature must be >= 0, got " + std::to_string(temperature));
  }
  const double beta =
      temperature == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / temperature;
  ThermalState s = thermal_state_at_beta(spec, beta);
  s.temperature = temperature;
  return s;
}

ThermalState thermal_state_at_beta(const ModelSpec& spec, double beta) {
  spec.validate();
  check_beta(beta);

  const Reduced r = reduce(spec);
  ThermalState s;
  s.spec = spec;
  s.beta = beta;
  s.temperature = beta == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / beta;
  s.reference_energy = r.ground_energy;
  s.populations.assign(r.gaps.size(), 0.0);

  if (std::isinf(beta)) {
    // Uniform over the ground set.
    std::size_t degeneracy = 0;
    for (double g : r.gaps) degeneracy += (g == 0.0);
    const double p = 1.0 / static_cast<double>(degeneracy);
    for (std::size_t k = 0; k < r.gaps.size(); ++k) {
      if (r.gaps[k] == 0.0) s.populations[k] = p;
    }
    const double log_g = std::log(static_cast<double>(degeneracy));
    s.log_z = r.ground_energy == 0.0 ? log_g : -beta * r.ground_energy;
    s.excitation_energy = 0.0;
    s.entropy = log_g;
    s.internal_energy = r.ground_energy;
    return s;
  }

  const double log_rel = log_relative_partition(r.gaps, beta);
  s.log_z = -beta * r.ground_energy + log_rel;

  double excitation_energy = 0.0;
  double entropy = 0.0;
  for (std::size_t k = 0; k < r.gaps.size(); ++k) {
    const double log_p = -beta * r.gaps[k] - log_rel;
    const double p = std::exp(log_p);
    if (p < kPopulationFloor) continue;
    s.populations[k] = p;
    excitation_energy += p * r.gaps[k];
    entropy -= p * log_p;
  }
  s.excitation_energy = excitation_energy;
  s.internal_energy = r.ground_energy + excitation_energy;
  s.entropy = entropy;
  return s;
}

}  // namespace lmg
