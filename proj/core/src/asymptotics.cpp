#include "lmg/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lmg/errors.hpp"

namespace lmg {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void require_positive_beta(double beta, const char* where) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError(std::string(where) + ": beta must be finite and > 0, got " +
                      std::to_string(beta));
  }
}

// softplus(z) = ln(1 + e^z) without overflow.
double softplus(double z) { return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

struct Bracket {
  double u1;     // (a + 1)/K
  double u2;     // -a/K, always > 0
  double log_b;  // ln[erf(u1) + erf(u2)]
};

Bracket bracket(const ModelSpec& spec, double beta) {
  const auto p = AsymptoticParams::from(spec, beta);
  Bracket b{(p.a + 1.0) / p.k, -p.a / p.k, 0.0};
  if (b.u1 >= 0.0) {
    b.log_b = std::log(erf(b.u1) + erf(b.u2));
  } else {
    // erf(u2) - erf(v) = erfc(v) - erfc(u2) with 0 < v < u2.
    const double v = -b.u1;
    const double lv = log_erfc(v);
    b.log_b = lv + std::log(-std::expm1(log_erfc(b.u2) - lv));
  }
  return b;
}

// d ln(bracket) / d beta; each u scales as sqrt(beta).
double dlog_bracket_dbeta(const Bracket& b, double beta) {
  const double t1 = b.u1 * std::exp(-b.u1 * b.u1 - b.log_b);
  const double t2 = b.u2 * std::exp(-b.u2 * b.u2 - b.log_b);
  return (t1 + t2) / (beta * kSqrtPi);
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  const double value = ax >= 6.0 ? 1.0 : std::erf(ax);
  return x < 0.0 ? -value : value;
}

double log_erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) throw DomainError("log_erfc: x must be >= 0");
  if (x < 26.0) return std::log(std::erfc(x));
  // erfc(x) = e^{-x^2}/(x sqrt(pi)) * (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6) + 105/(16x^8) ...)
  const double inv = 1.0 / (2.0 * x * x);
  const double series = 1.0 - inv * (1.0 - 3.0 * inv * (1.0 - 5.0 * inv * (1.0 - 7.0 * inv)));
  return -x * x - std::log(x * kSqrtPi) + std::log(series);
}

AsymptoticParams AsymptoticParams::from(const ModelSpec& spec, double beta) {
  spec.validate();
  require_positive_beta(beta, "AsymptoticParams");
  return {-(1.0 + spec.lambda) / 2.0, 1.0 / std::sqrt(2.0 * spec.n * beta)};
}

double log_partition_asymptotic(const ModelSpec& spec, double beta) {
  const Bracket b = bracket(spec, beta);
  const double n = spec.n;
  const double lam2 = spec.lambda * spec.lambda;
  return beta * n * (1.0 + lam2) / 2.0 - 0.5 * std::log(2.0 * n * beta) + b.log_b -
         beta * spec.energy_offset;
}

double internal_energy_asymptotic(const ModelSpec& spec, double beta) {
  const Bracket b = bracket(spec, beta);
  const double reference = -spec.n * (1.0 + spec.lambda * spec.lambda) / 2.0;
  return reference + 0.5 / beta - dlog_bracket_dbeta(b, beta) + spec.energy_offset;
}

ThermalState asymptotic_thermal_state(const ModelSpec& spec, double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("asymptotic backend needs a finite temperature > 0, got " +
                      std::to_string(temperature));
  }
  const double beta = 1.0 / temperature;
  const Bracket b = bracket(spec, beta);
  const double n = spec.n;
  const double lam2 = spec.lambda * spec.lambda;

  ThermalState s;
  s.spec = spec;
  s.temperature = temperature;
  s.beta = beta;
  s.reference_energy = -n * (1.0 + lam2) / 2.0 + spec.energy_offset;
  s.excitation_energy = 0.5 / beta - dlog_bracket_dbeta(b, beta);
  s.internal_energy = s.reference_energy + s.excitation_energy;
  // ln Z = -beta*reference - (1/2) ln(2 N beta) + ln bracket, so
  // S = beta*U + ln Z needs only the beta-dependent part.
  const double log_rel = -0.5 * std::log(2.0 * n * beta) + b.log_b;
  s.log_z = -beta * s.reference_energy + log_rel;
  s.entropy = beta * s.excitation_energy + log_rel;
  return s;
}

RegimeState asymptotic_state(const ModelSpec& spec, double beta, Regime regime) {
  spec.validate();
  require_positive_beta(beta, "asymptotic_state");
  const double n = spec.n;
  const double lam = spec.lambda;
  const double c = spec.energy_offset;
  switch (regime) {
    case Regime::high_t:
      return {0.5 * std::log(std::numbers::pi) + n * beta * (1.0 + beta * lam * lam) / 2.0 - beta * c,
              -(n / 2.0 + n * beta * lam * lam) + c};
    case Regime::low_t_sub_critical:
      return {std::numbers::ln2 - 0.5 * std::log(2.0 * n * beta) + n * beta * (1.0 + lam * lam) / 2.0 -
                  beta * c,
              -n * (1.0 + lam * lam) / 2.0 + c};
    case Regime::low_t_polarized:
      if (lam <= 1.0) {
        throw DomainError("low_t_polarized regime requires lambda > 1, got " + std::to_string(lam));
      }
      return {beta * n * lam - beta * c, -n * lam + c};
  }
  throw DomainError("unknown regime");
}

double high_t_log_partition_from_erf(const ModelSpec& spec, double beta) {
  spec.validate();
  require_positive_beta(beta, "high_t_log_partition_from_erf");
  const double n = spec.n;
  return std::log(2.0 / kSqrtPi) + beta * n * (1.0 + spec.lambda * spec.lambda) / 2.0 -
         beta * spec.energy_offset;
}

double high_t_efficiency(double kappa, double eta_c) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw DomainError("kappa must lie in [0, 1], got " + std::to_string(kappa));
  }
  if (!(eta_c > 0.0 && eta_c < 1.0)) {
    throw DomainError("eta_c must lie in (0, 1), got " + std::to_string(eta_c));
  }
  const double k2 = kappa * kappa;
  return (1.0 - k2) * eta_c / (1.0 - k2 + eta_c * (1.0 + k2));
}

N2ClosedForms n2_closed_forms(double beta_h, double beta_c, double lambda1) {
  if (!(beta_h > 0.0) || !std::isfinite(beta_h) || !std::isfinite(beta_c) || !(beta_c > beta_h)) {
    throw DomainError("n2_closed_forms needs finite beta_c > beta_h > 0");
  }
  if (!(lambda1 > 0.0) || !std::isfinite(lambda1)) {
    throw DomainError("n2_closed_forms needs lambda1 > 0, got " + std::to_string(lambda1));
  }
  const double x = 1.0 - 2.0 * lambda1;
  const double h = beta_h * x;
  const double c = beta_c * x;

  N2ClosedForms out{};
  out.work = softplus(h) / beta_h - softplus(c) / beta_c;

  // Printed ratio, numerator and denominator scaled by e^{-max(0,h)-max(0,c)}.
  const double mh = std::max(0.0, h);
  const double mc = std::max(0.0, c);
  const double num = std::exp(c - mh - mc) - std::exp(h - mh - mc);
  const double den = (std::exp(-mh) + std::exp(h - mh)) * (std::exp(-mc) + std::exp(c - mc));
  out.dwork_dlambda1 = 2.0 * num / den;

  out.dqh_dlambda1_sign = x > 0.0 ? 1 : (x < 0.0 ? -1 : 0);

  // Two-level point B: p is the weight of M = 1 against M = 0, p = 1/(1 + e^{h}).
  const double log_p = -softplus(h);
  const double log_q = -softplus(-h);
  const double p = std::exp(log_p);
  const double q = std::exp(log_q);
  out.q_h = -(p * log_p + q * log_q) / beta_h;
  // e^{2 bh l} e^{bh} / Z_B^2 with Z_B = e^{2 bh l} + e^{bh} equals p*q.
  out.dqh_dlambda1 = 2.0 * beta_h * x * p * q;
  out.deta_dlambda1 =
      (out.dwork_dlambda1 * out.q_h - out.dqh_dlambda1 * out.work) / (out.q_h * out.q_h);
  return out;
}

double n2_efficiency_slope_near_crossing(double beta_h, double beta_c, double delta) {
  if (!(beta_h > 0.0) || !(beta_c > beta_h)) {
    throw DomainError("n2_efficiency_slope_near_crossing needs beta_c > beta_h > 0");
  }
  const double ratio = beta_c / beta_h;  // T_H / T_C
  return beta_h * beta_h / std::numbers::ln2 * (2.0 - ratio - 1.0 / ratio) * delta;
}

}  // namespace lmg
