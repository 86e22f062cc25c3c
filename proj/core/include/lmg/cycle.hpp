#pragma once

#include <array>
#include <string_view>

#include "lmg/ensemble.hpp"

namespace lmg {

enum class Backend { exact, asymptotic };

std::string_view to_string(Backend b) noexcept;
/// "exact" or "asymptotic"; throws DomainError otherwise.
Backend parse_backend(std::string_view text);

/// Four-corner cycle: isothermal A(lambda2, T_H) -> B(lambda1, T_H), isomagnetic
/// B -> C(lambda1, T_C), isothermal C -> D(lambda2, T_C), isomagnetic D -> A.
struct CycleSpec {
  int n = 2;
  double t_hot = 1.0;
  double t_cold = 0.5;
  double lambda1 = 0.0;
  double lambda2 = 1.0;
  Backend backend = Backend::exact;
  double energy_offset = 0.0;  ///< test hook, see ModelSpec

  /// Throws DomainError naming the violated precondition.
  void validate() const;
};

struct CycleResult {
  std::array<ThermalState, 4> corners;  ///< A, B, C, D
  double q_ab = 0.0;
  double q_bc = 0.0;
  double q_cd = 0.0;
  double q_da = 0.0;
  double work = 0.0;
  double q_h = 0.0;
  double efficiency = 0.0;
  double eta_carnot = 0.0;
  bool is_engine = false;

  const ThermalState& a() const { return corners[0]; }
  const ThermalState& b() const { return corners[1]; }
  const ThermalState& c() const { return corners[2]; }
  const ThermalState& d() const { return corners[3]; }
};

/// Heats into the working substance:
///   q_ab = T_H (S_B - S_A)   q_bc = U_C - U_B   q_cd = T_C (S_D - S_C)   q_da = U_A - U_D
/// work = sum of the four, q_h = q_ab + q_da. efficiency = work/q_h if q_h > 0
/// and 0 otherwise; is_engine requires work > 0 and q_h > 0.
CycleResult run_cycle(const CycleSpec& spec);

/// 1 - t_cold/t_hot; requires t_hot > t_cold > 0.
double carnot_bound(double t_hot, double t_cold);

}  // namespace lmg
