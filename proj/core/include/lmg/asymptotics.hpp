#pragma once

// Large-N and closed-form thermodynamics of the LMG model.
//
// The level sum is replaced by the integral over x = M/N, giving
//
//   Z = exp(beta*N*(1 + lambda^2)/2) / sqrt(2*N*beta) * [erf((a+1)/K) + erf(-a/K)]
//
// with a = -(1 + lambda)/2 and K = 1/sqrt(2*N*beta). This form omits the
// "-1" of E(M) and the constant N*sqrt(pi)/2 of the integral, so
//
//   log_partition_exact - log_partition_asymptotic ~ beta + ln(N*sqrt(pi)/2).
//
// Both pieces are constant shifts of the energy or the entropy and cancel in
// every heat and in the efficiency.

#include "lmg/ensemble.hpp"
#include "lmg/model.hpp"

namespace lmg {

/// Gauss error function; odd by construction, exactly +-1 for |x| >= 6.
double erf(double x);

/// ln erfc(x) for x >= 0, finite for arbitrarily large x.
double log_erfc(double x);

struct AsymptoticParams {
  double a = 0.0;  ///< -(1 + lambda)/2
  double k = 0.0;  ///< 1/sqrt(2*N*beta)

  static AsymptoticParams from(const ModelSpec& spec, double beta);
};

enum class Regime { high_t, low_t_sub_critical, low_t_polarized };

/// ln Z from the erf integral; the bracket is kept in log domain so that the
/// polarised phase (erf terms cancelling to ~erfc(|a+1|/K)) stays finite.
double log_partition_asymptotic(const ModelSpec& spec, double beta);

/// -d ln Z / d beta of log_partition_asymptotic, analytic.
double internal_energy_asymptotic(const ModelSpec& spec, double beta);

/// Corner state for the asymptotic cycle backend: log_z and U from the erf
/// form, S = beta*U + ln Z. `populations` is empty. reference_energy is
/// -N(1+lambda^2)/2 + energy_offset, excitation_energy the beta-dependent rest.
ThermalState asymptotic_thermal_state(const ModelSpec& spec, double temperature);

struct RegimeState {
  double log_z;
  double internal_energy;
};

/// Regime closed forms, verbatim:
///   high_t:              ln Z = (1/2) ln pi + N beta (1 + beta lambda^2)/2,  U = -(N/2 + N beta lambda^2)
///   low_t_sub_critical:  ln Z = ln 2 - (1/2) ln(2 N beta) + N beta (1 + lambda^2)/2,  U = -N(1 + lambda^2)/2
///   low_t_polarized:     ln Z = beta N lambda,  U = -N lambda   (requires lambda > 1)
/// The regime is the caller's choice; nothing is checked beyond lambda > 1
/// for the polarised branch.
RegimeState asymptotic_state(const ModelSpec& spec, double beta, Regime regime);

/// ln Z from the small-argument expansion erf(x) ~ 2x/sqrt(pi) of the bracket:
/// ln(2/sqrt(pi)) + N beta (1 + lambda^2)/2. Differs from the printed high_t
/// closed form; both are exposed.
double high_t_log_partition_from_erf(const ModelSpec& spec, double beta);

/// (1 - kappa^2) eta_c / (1 - kappa^2 + eta_c (1 + kappa^2)), kappa = lambda1/lambda2.
double high_t_efficiency(double kappa, double eta_c);

/// Two-spin low-temperature results around the single crossing at lambda1 = 1/2,
/// valid for beta_c > beta_h >> 1 and exp(-2 beta lambda1) << 1.
struct N2ClosedForms {
  double work;                ///< ln[1+e^{bh(1-2l)}]/bh - ln[1+e^{bc(1-2l)}]/bc
  double dwork_dlambda1;      ///< 2 (e^{bc x} - e^{bh x}) / ((1+e^{bh x})(1+e^{bc x})), x = 1-2l
  int dqh_dlambda1_sign;      ///< sign(1 - 2 lambda1)
  double q_h;                 ///< T_H * S_B with the two-level Z_B
  double dqh_dlambda1;        ///< 2 bh e^{2 bh l} e^{bh} (1-2l) / Z_B^2, Z_B = e^{2 bh l} + e^{bh}
  double deta_dlambda1;       ///< (dW Q_H - dQ_H W) / Q_H^2
};

N2ClosedForms n2_closed_forms(double beta_h, double beta_c, double lambda1);

/// Leading small-delta slope of eta at lambda1 = 1/2 + delta:
/// (beta_h^2 / ln 2)(2 - T_H/T_C - T_C/T_H) delta.
double n2_efficiency_slope_near_crossing(double beta_h, double beta_c, double delta);

}  // namespace lmg
