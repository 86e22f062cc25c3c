#include "lmg/cycle.hpp"

#include <cmath>
#include <string>

#include "lmg/asymptotics.hpp"
#include "lmg/errors.hpp"

namespace lmg {
namespace {

void require_ordered_baths(double t_hot, double t_cold) {
  if (!std::isfinite(t_hot) || !std::isfinite(t_cold) || !(t_cold > 0.0)) {
    throw DomainError("bath temperatures must be finite with t_cold > 0");
  }
  if (!(t_hot > t_cold)) {
    throw DomainError("t_hot > t_cold required, got t_hot = " + std::to_string(t_hot) +
                      ", t_cold = " + std::to_string(t_cold));
  }
}

ThermalState corner(const CycleSpec& spec, double lambda, double temperature) {
  const ModelSpec model{spec.n, lambda, spec.energy_offset};
  return spec.backend == Backend::exact ? thermal_state(model, temperature)
                                        : asymptotic_thermal_state(model, temperature);
}

// U_x - U_y at a shared field. The reference energies are bitwise identical,
// so only the thermal parts are subtracted.
double energy_change(const ThermalState& to, const ThermalState& from) {
  return (to.reference_energy - from.reference_energy) +
         (to.excitation_energy - from.excitation_energy);
}

}  // namespace

std::string_view to_string(Backend b) noexcept {
  return b == Backend::exact ? "exact" : "asymptotic";
}

Backend parse_backend(std::string_view text) {
  if (text == "exact") return Backend::exact;
  if (text == "asymptotic") return Backend::asymptotic;
  throw DomainError("backend must be 'exact' or 'asymptotic', got '" + std::string(text) + "'");
}

void CycleSpec::validate() const {
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  require_ordered_baths(t_hot, t_cold);
  if (!std::isfinite(lambda1) || !std::isfinite(lambda2) || lambda1 < 0.0) {
    throw DomainError("fields must be finite with lambda1 >= 0");
  }
  if (lambda1 > lambda2) {
    throw DomainError("lambda1 <= lambda2 required, got lambda1 = " + std::to_string(lambda1) +
                      ", lambda2 = " + std::to_string(lambda2));
  }
}

double carnot_bound(double t_hot, double t_cold) {
  require_ordered_baths(t_hot, t_cold);
  return 1.0 - t_cold / t_hot;
}

CycleResult run_cycle(const CycleSpec& spec) {
  spec.validate();
  CycleResult r;
  r.corners = {corner(spec, spec.lambda2, spec.t_hot), corner(spec, spec.lambda1, spec.t_hot),
               corner(spec, spec.lambda1, spec.t_cold), corner(spec, spec.lambda2, spec.t_cold)};
  const auto& [a, b, c, d] = r.corners;

  r.q_ab = spec.t_hot * (b.entropy - a.entropy);
  r.q_bc = energy_change(c, b);
  r.q_cd = spec.t_cold * (d.entropy - c.entropy);
  r.q_da = energy_change(a, d);
  r.work = r.q_ab + r.q_bc + r.q_cd + r.q_da;
  r.q_h = r.q_ab + r.q_da;
  r.eta_carnot = carnot_bound(spec.t_hot, spec.t_cold);
  r.is_engine = r.work > 0.0 && r.q_h > 0.0;
  r.efficiency = r.q_h > 0.0 ? r.work / r.q_h : 0.0;
  return r;
}

}  // namespace lmg
