#pragma once

#include <vector>

#include "lmg/model.hpp"

namespace lmg {

/// Canonical equilibrium of the J = N/2 sector at one (N, lambda, T).
///
/// Energies are split into a reference part and a thermal part:
/// internal_energy == reference_energy + excitation_energy. For the exact
/// backend the reference is the ground energy and the excitation is
/// sum_i p_i (E_i - E_0). Differences of U at equal field should be taken
/// from excitation_energy, which does not carry the O(N) constant.
///
/// At T = 0, beta is +inf and log_z is the signed infinity of -beta*E_0
/// (or ln|ground_set| when E_0 == 0). `populations` is indexed like
/// spectrum(): entry k belongs to 2M = -N + 2k. It is empty for states
/// produced by the asymptotic backend.
struct ThermalState {
  ModelSpec spec;
  double temperature = 0.0;
  double beta = 0.0;
  double log_z = 0.0;
  std::vector<double> populations;
  double internal_energy = 0.0;
  double entropy = 0.0;
  double reference_energy = 0.0;
  double excitation_energy = 0.0;
};

/// ln sum_M exp(-beta E(M)) with the dominant term factored out. beta = 0 allowed.
double log_partition_exact(const ModelSpec& spec, double beta);

/// temperature in [0, +inf]; 0 is the degenerate ground-set limit and +inf
/// the uniform limit.
ThermalState thermal_state(const ModelSpec& spec, double temperature);

/// Same state addressed by inverse temperature, beta in [0, +inf].
ThermalState thermal_state_at_beta(const ModelSpec& spec, double beta);

/// Populations below this after normalisation are stored as exactly zero.
inline constexpr double kPopulationFloor = 1e-300;

}  // namespace lmg
