#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lmg/asymptotics.hpp"
#include "lmg/cycle.hpp"
#include "lmg/errors.hpp"
#include "support/oracles.hpp"

using lmg::ModelSpec;
using lmg::Regime;

TEST_CASE("erf examples") {
  CHECK(lmg::erf(0.0) == 0.0);
  CHECK(std::abs(lmg::erf(40.0) - 1.0) <= 1e-15);
  CHECK(lmg::erf(-40.0) == -1.0);
  CHECK(lmg::erf(1.0) == doctest::Approx(oracle::erf_quadrature(1.0)).epsilon(1e-7));
  CHECK(lmg::erf(1.0) == doctest::Approx(0.8427008).epsilon(1e-7));
}

TEST_CASE("erf against quadrature and oddness") {
  for (int i = 0; i < 1000; ++i) {
    const double x = -7.0 + 14.0 * i / 999.0;
    CHECK(lmg::erf(-x) == -lmg::erf(x));
    if (i % 25 == 0) CHECK(std::abs(lmg::erf(x) - oracle::erf_quadrature(x)) <= 1e-7);
  }
}

TEST_CASE("log_erfc is continuous across the series switch and finite far out") {
  const double below = lmg::log_erfc(std::nextafter(26.0, 0.0));
  const double above = lmg::log_erfc(26.0);
  CHECK(above == doctest::Approx(below).epsilon(1e-12));
  CHECK(lmg::log_erfc(0.0) == 0.0);
  CHECK(std::isfinite(lmg::log_erfc(1e4)));
  CHECK(lmg::log_erfc(1e4) == doctest::Approx(-1e8 - std::log(1e4 * std::sqrt(std::numbers::pi))).epsilon(1e-15));
  CHECK_THROWS_AS(lmg::log_erfc(-1.0), lmg::DomainError);
}

TEST_CASE("asymptotic parameters") {
  const auto p = lmg::AsymptoticParams::from({8, 0.6}, 2.0);
  CHECK(p.a == doctest::Approx(-0.8));
  CHECK(p.k == doctest::Approx(1.0 / std::sqrt(32.0)));
  CHECK_THROWS_AS(lmg::AsymptoticParams::from({8, 0.6}, 0.0), lmg::DomainError);
}

TEST_CASE("erf partition function reference values") {
  // Frozen from a 60-digit evaluation of the same integral.
  struct Row {
    int n;
    double lambda, beta, log_z, u;
  };
  const Row rows[] = {
      {50, 2.5, 3.0, 369.00859332558475, -124.66764000111986},
      {20, 4.0, 5.0, 393.72274454094273, -79.800220997698969},
      {100, 3.0, 50.0, 14990.217244691348, -299.98000099975009},
      {1000, 0.7, 0.01, 6.4572742843904682, -709.56200422006087},
      {10, 1.5, 2.0, 26.980477946311843, -14.555568860332286},
  };
  for (const auto& r : rows) {
    const ModelSpec s{r.n, r.lambda};
    CHECK(lmg::log_partition_asymptotic(s, r.beta) == doctest::Approx(r.log_z).epsilon(1e-11));
    CHECK(lmg::internal_energy_asymptotic(s, r.beta) == doctest::Approx(r.u).epsilon(1e-10));
  }
  CHECK_THROWS_AS(lmg::log_partition_asymptotic({10, 0.5}, 0.0), lmg::DomainError);
  CHECK_THROWS_AS(lmg::log_partition_asymptotic({10, 0.5}, -1.0), lmg::DomainError);
}

TEST_CASE("offset between the level sum and the erf integral") {
  // The integral drops the -1 of the levels and the constant N*sqrt(pi)/2.
  const double diff = lmg::log_partition_exact({2000, 0.3}, 1.0) - lmg::log_partition_asymptotic({2000, 0.3}, 1.0);
  CHECK(diff == doctest::Approx(8.4801202219068371).epsilon(1e-9));
  for (int n : {500, 2000, 8000}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const double d = lmg::log_partition_exact({n, 0.3}, beta) - lmg::log_partition_asymptotic({n, 0.3}, beta);
      CHECK(d == doctest::Approx(beta + std::log(n * std::sqrt(std::numbers::pi) / 2)).epsilon(2.0 / n));
    }
  }
}

TEST_CASE("U of the erf form is minus the beta derivative") {
  for (int n : {10, 100, 1000}) {
    for (double lam : {0.0, 0.4, 0.99, 1.01, 3.0}) {
      for (double beta : {0.01, 0.3, 5.0, 40.0}) {
        const ModelSpec s{n, lam};
        const double h = 1e-5 * beta;
        const double fd =
            -(lmg::log_partition_asymptotic(s, beta + h) - lmg::log_partition_asymptotic(s, beta - h)) / (2 * h);
        CHECK(lmg::internal_energy_asymptotic(s, beta) == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("erf ln Z is even in lambda") {
  // Only lambda >= 0 is a valid spec; check the symmetric bracket at lambda = 0.
  for (int n : {4, 40, 400}) {
    for (double beta : {0.1, 1.0}) {
      const double u = std::sqrt(n * beta / 2.0);
      const double expect = beta * n / 2.0 - 0.5 * std::log(2.0 * n * beta) + std::log(2.0 * std::erf(u));
      CHECK(lmg::log_partition_asymptotic({n, 0.0}, beta) == doctest::Approx(expect).epsilon(1e-13));
    }
  }
}

TEST_CASE("sub-critical low temperature reduces to the ln 2 branch") {
  for (int n : {1000, 10000}) {
    for (double lam : {0.2, 0.5, 0.8}) {
      const double beta = 20.0;
      const auto rs = lmg::asymptotic_state({n, lam}, beta, Regime::low_t_sub_critical);
      CHECK(lmg::log_partition_asymptotic({n, lam}, beta) == doctest::Approx(rs.log_z).epsilon(1e-12));
    }
  }
}

TEST_CASE("regime closed forms") {
  const auto pol = lmg::asymptotic_state({20, 4.0}, 5.0, Regime::low_t_polarized);
  CHECK(pol.log_z == doctest::Approx(400.0));
  CHECK(pol.internal_energy == doctest::Approx(-80.0));
  CHECK_THROWS_AS(lmg::asymptotic_state({20, 1.0}, 5.0, Regime::low_t_polarized), lmg::DomainError);

  const auto sub = lmg::asymptotic_state({30, 0.5}, 10.0, Regime::low_t_sub_critical);
  CHECK(sub.internal_energy == doctest::Approx(-18.75));
  // The exact sum carries the extra -1 of the levels; remove it before comparing.
  const double exact_u = lmg::thermal_state_at_beta({30, 0.5}, 10.0).internal_energy + 1.0;
  CHECK(std::abs(exact_u - sub.internal_energy) <= 0.01 * std::abs(sub.internal_energy));

  const auto hot = lmg::asymptotic_state({100, 0.0}, 1e-3, Regime::high_t);
  CHECK(hot.internal_energy == doctest::Approx(-50.0));
  CHECK(hot.log_z == doctest::Approx(0.5 * std::log(std::numbers::pi) + 100 * 1e-3 / 2));

  CHECK(lmg::high_t_log_partition_from_erf({100, 2.0}, 1e-3) ==
        doctest::Approx(std::log(2.0 / std::sqrt(std::numbers::pi)) + 100 * 1e-3 * 5.0 / 2));
  CHECK_THROWS_AS(lmg::asymptotic_state({10, 0.5}, 0.0, Regime::high_t), lmg::DomainError);
}

TEST_CASE("erf expansion tracks the integral at high temperature") {
  const ModelSpec s{100, 0.5};
  const double beta = 1e-6;
  CHECK(lmg::high_t_log_partition_from_erf(s, beta) ==
        doctest::Approx(lmg::log_partition_asymptotic(s, beta)).epsilon(1e-3));
}

TEST_CASE("closed forms carry the energy offset consistently") {
  const double c = 3.5, beta = 0.7;
  for (auto regime : {Regime::high_t, Regime::low_t_sub_critical, Regime::low_t_polarized}) {
    const auto a = lmg::asymptotic_state({20, 2.0}, beta, regime);
    const auto b = lmg::asymptotic_state({20, 2.0, c}, beta, regime);
    CHECK(b.internal_energy == doctest::Approx(a.internal_energy + c));
    CHECK(b.log_z == doctest::Approx(a.log_z - beta * c));
  }
}

TEST_CASE("high temperature efficiency formula") {
  for (double ec : {0.1, 0.375, 0.9}) CHECK(lmg::high_t_efficiency(1.0, ec) == 0.0);
  CHECK(lmg::high_t_efficiency(0.0, 0.375) == doctest::Approx(0.375 / 1.375));
  CHECK(lmg::high_t_efficiency(0.0, 0.375) == doctest::Approx(0.272727).epsilon(1e-6));
  CHECK(lmg::high_t_efficiency(0.1, 0.375) == doctest::Approx(0.27124).epsilon(1e-5));
  CHECK_THROWS_AS(lmg::high_t_efficiency(1.1, 0.5), lmg::DomainError);
  CHECK_THROWS_AS(lmg::high_t_efficiency(-0.1, 0.5), lmg::DomainError);
  CHECK_THROWS_AS(lmg::high_t_efficiency(0.5, 0.0), lmg::DomainError);
  CHECK_THROWS_AS(lmg::high_t_efficiency(0.5, 1.0), lmg::DomainError);
  // Decreasing in kappa, bounded by eta_c.
  double prev = 1.0;
  for (int i = 0; i <= 100; ++i) {
    const double v = lmg::high_t_efficiency(i / 100.0, 0.375);
    CHECK(v <= prev);
    CHECK(v < 0.375);
    prev = v;
  }
}

TEST_CASE("two-spin closed forms at the crossing") {
  const auto f = lmg::n2_closed_forms(1 / 0.6, 1 / 0.3, 0.5);
  CHECK(f.work == doctest::Approx(std::log(2.0) * 0.3).epsilon(1e-12));
  CHECK(f.work == doctest::Approx(0.20794).epsilon(1e-4));
  CHECK(f.dwork_dlambda1 == 0.0);
  CHECK(f.dqh_dlambda1_sign == 0);
  CHECK(f.q_h == doctest::Approx(0.6 * std::log(2.0)));
  CHECK(lmg::n2_closed_forms(1 / 0.6, 1 / 0.3, 0.3).dqh_dlambda1_sign == 1);
  CHECK(lmg::n2_closed_forms(1 / 0.6, 1 / 0.3, 0.8).dqh_dlambda1_sign == -1);
  CHECK(std::abs(lmg::n2_closed_forms(1 / 0.6, 1 / 0.3, 40.0).work) < 1e-12);
  CHECK_THROWS_AS(lmg::n2_closed_forms(2.0, 1.0, 0.5), lmg::DomainError);
  CHECK_THROWS_AS(lmg::n2_closed_forms(1.0, 2.0, 0.0), lmg::DomainError);
}

TEST_CASE("efficiency slope changes sign across the two-spin crossing") {
  for (double th : {0.6, 0.1}) {
    for (double d : {1e-3, 1e-2, 0.05}) {
      CHECK(lmg::n2_closed_forms(1 / th, 2 / th, 0.5 + d).deta_dlambda1 < 0.0);
      CHECK(lmg::n2_closed_forms(1 / th, 2 / th, 0.5 - d).deta_dlambda1 > 0.0);
    }
  }
  // Leading-order slope.
  for (double d : {1e-4, -1e-4}) {
    const auto f = lmg::n2_closed_forms(1 / 0.6, 1 / 0.3, 0.5 + d);
    CHECK(f.deta_dlambda1 == doctest::Approx(lmg::n2_efficiency_slope_near_crossing(1 / 0.6, 1 / 0.3, d)).epsilon(1e-4));
  }
}

TEST_CASE("printed work derivative matches a finite difference of the work") {
  for (double l : {0.1, 0.3, 0.45, 0.5, 0.55, 0.9, 2.0}) {
    const double bh = 5.0, bc = 9.0, h = 1e-6;
    const double fd = (lmg::n2_closed_forms(bh, bc, l + h).work - lmg::n2_closed_forms(bh, bc, l - h).work) / (2 * h);
    CHECK(lmg::n2_closed_forms(bh, bc, l).dwork_dlambda1 == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
    const double fq = (lmg::n2_closed_forms(bh, bc, l + h).q_h - lmg::n2_closed_forms(bh, bc, l - h).q_h) / (2 * h);
    CHECK(lmg::n2_closed_forms(bh, bc, l).dqh_dlambda1 == doctest::Approx(fq).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("closed-form work has its single maximum at one half") {
  double best = -1.0, arg = -1.0;
  int maxima = 0;
  double prev2 = -1e9, prev1 = -1e9;
  for (int i = 1; i <= 400; ++i) {
    const double l = i / 100.0;
    const double w = lmg::n2_closed_forms(1 / 0.6, 1 / 0.3, l).work;
    if (w > best) best = w, arg = l;
    if (i >= 3 && prev1 > prev2 && prev1 > w) ++maxima;
    prev2 = prev1;
    prev1 = w;
  }
  CHECK(arg == doctest::Approx(0.5));
  CHECK(maxima == 1);
}

TEST_CASE("closed forms track the exact two-spin cycle deep in the validity window") {
  const double bh = 10.0, bc = 20.0;
  for (double l : {0.3, 0.45, 0.55, 0.7, 1.0}) {
    const auto f = lmg::n2_closed_forms(bh, bc, l);
    const auto r = lmg::run_cycle({2, 1 / bh, 1 / bc, l, 4.0});
    CHECK(r.work == doctest::Approx(f.work).epsilon(1e-3).scale(1.0));
    CHECK(r.q_h == doctest::Approx(f.q_h).epsilon(1e-3).scale(1.0));
  }
}

TEST_CASE("exact and asymptotic backends agree at large N") {
  // Below the critical field only; past it the low-T state sits on the edge
  // level and the continuum integral does not apply.
  for (int n : {500, 2000}) {
    for (double l1 : {0.0, 0.2, 0.5, 0.8, 0.95, 1.0}) {
      lmg::CycleSpec c{n, 0.3, 0.2, l1, 4.0};
      const double exact = lmg::run_cycle(c).efficiency;
      c.backend = lmg::Backend::asymptotic;
      const double asym = lmg::run_cycle(c).efficiency;
      CHECK(std::abs(exact - asym) <= 1e-2);
    }
  }
}
