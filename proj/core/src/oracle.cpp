// Dense many-body oracle for the LMG spectrum.
//
// Spin i is bit i of the basis label (0 = up, sigma_z = +1). With
// sigma_y = i*Y, Y = [[0,-1],[1,0]] real, we have Jy = i*Ky and Jy^2 = -Ky^2,
// so every operator used below is real.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmg/errors.hpp"
#include "lmg/model.hpp"

namespace lmg {
namespace {

using State = std::uint32_t;

enum class Pauli { X, Y, Z };  // Y here is the real factor of sigma_y

struct Term {
  State state;
  double amplitude;
};

Term apply_site(Pauli op, int site, Term in) {
  const State mask = State{1} << site;
  const bool down = (in.state & mask) != 0;
  switch (op) {
    case Pauli::X:
      return {in.state ^ mask, in.amplitude};
    case Pauli::Y:
      // Y|up> = |down>, Y|down> = -|up>
      return {in.state ^ mask, down ? -in.amplitude : in.amplitude};
    case Pauli::Z:
      return {in.state, down ? -in.amplitude : in.amplitude};
  }
  return in;
}

double jz_value(int n, State s) {
  const int down = std::popcount(s);
  return 0.5 * (n - 2 * down);
}

// Matrix of coeff_x * Jx^2 + coeff_y * Ky^2 restricted to one Jz sector.
// The two squares separately move weight between sectors (double flips);
// only their sum commutes with Jz, so leakage has to cancel column by column.
Eigen::MatrixXd sector_matrix(int n, const std::vector<State>& basis,
                              const std::vector<int>& position, double coeff_x,
                              double coeff_y) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  std::map<State, double> column;
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Term start{basis[static_cast<std::size_t>(col)], 1.0};
    column.clear();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Term xx = apply_site(Pauli::X, i, apply_site(Pauli::X, j, start));
        const Term yy = apply_site(Pauli::Y, i, apply_site(Pauli::Y, j, start));
        column[xx.state] += 0.25 * coeff_x * xx.amplitude;
        column[yy.state] += 0.25 * coeff_y * yy.amplitude;
      }
    }
    const int down = std::popcount(start.state);
    for (const auto& [state, amp] : column) {
      if (std::popcount(state) == down) {
        h(position[state], col) += amp;
      } else if (std::abs(amp) > 1e-12) {
        throw std::logic_error("bruteforce_spectrum: Hamiltonian does not conserve Jz");
      }
    }
  }
  return h;
}

}  // namespace

std::vector<double> bruteforce_spectrum(const ModelSpec& spec) {
  spec.validate();
  if (spec.n > kMaxOracleSpins) {
    throw ResourceError("bruteforce_spectrum: N = " + std::to_string(spec.n) +
                        " exceeds the dense oracle limit of " + std::to_string(kMaxOracleSpins));
  }
  const int n = spec.n;
  const double eps = -2.0 * spec.lambda;
  const double v = 0.0;
  const double w = -2.0 / n;

  // J^2 - Jz^2 = Jx^2 + Jy^2 = Jx^2 - Ky^2 ;  Jx^2 - Jy^2 = Jx^2 + Ky^2.
  // With V = 0 the Hamiltonian commutes with Jz.
  const double coeff_x = w + v;
  const double coeff_y = v - w;

  const State dim = State{1} << n;
  std::vector<double> eigenvalues;
  eigenvalues.reserve(dim);
  std::vector<int> position(dim, -1);

  for (int down = 0; down <= n; ++down) {
    std::vector<State> basis;
    for (State s = 0; s < dim; ++s) {
      if (std::popcount(s) == down) {
        position[s] = static_cast<int>(basis.size());
        basis.push_back(s);
      }
    }
    Eigen::MatrixXd h = sector_matrix(n, basis, position, coeff_x, coeff_y);
    const double diag = eps * jz_value(n, basis.front()) + spec.energy_offset;
    h.diagonal().array() += diag;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw ResourceError("bruteforce_spectrum: eigensolver failed to converge");
    }
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
      eigenvalues.push_back(solver.eigenvalues()[k]);
    }
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

}  // namespace lmg
