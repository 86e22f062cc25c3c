#pragma once

// Lipkin-Meshkov-Glick spectrum in the maximum-spin sector J = N/2 with
// interaction strength lambda_0 = 1 and anisotropy gamma = 1:
//
//   E(M) = (2/N)(M - N*lambda/2)^2 - (N/2)(1 + lambda^2) - 1
//
// Quantum numbers are carried as 2M so that odd N (half-integer M) is exact.

#include <vector>

namespace lmg {

/// Number of spins and external field. `energy_offset` is a test hook that
/// shifts every level by the same constant; physical results must not depend
/// on it.
struct ModelSpec {
  int n = 1;
  double lambda = 0.0;
  double energy_offset = 0.0;

  /// Throws DomainError unless n >= 1 and lambda is finite and >= 0.
  void validate() const;
};

class MagnetizationIndex {
 public:
  /// Validates |twice_m| <= n and twice_m == n (mod 2).
  static MagnetizationIndex from_twice(int n, int twice_m);

  int twice_m() const noexcept { return twice_m_; }
  double value() const noexcept { return 0.5 * twice_m_; }

  friend bool operator==(MagnetizationIndex, MagnetizationIndex) = default;
  friend auto operator<=>(MagnetizationIndex, MagnetizationIndex) = default;

 private:
  explicit MagnetizationIndex(int twice_m) : twice_m_(twice_m) {}
  int twice_m_;
};

struct Level {
  MagnetizationIndex m;
  double energy;
};

bool is_valid_index(int n, int twice_m) noexcept;

double eigenenergy(const ModelSpec& spec, MagnetizationIndex m);

/// Same as eigenenergy, but validates twice_m against spec.n first.
double eigenenergy(const ModelSpec& spec, int twice_m);

/// E(M) - E(M0) from the factored form (2/N)(M - M0)(M + M0 - N*lambda);
/// free of the constant terms and therefore of their cancellation error.
double excitation(const ModelSpec& spec, int twice_m, int twice_m0);

/// N+1 levels ordered by twice_m ascending.
std::vector<Level> spectrum(const ModelSpec& spec);

/// All minimisers of E(M), ascending. Two adjacent entries at a level crossing.
std::vector<MagnetizationIndex> ground_set(const ModelSpec& spec);

/// Fields lambda in (0, 1) where the ground state is doubly degenerate.
std::vector<double> level_crossings(int n);

/// Largest N accepted by the dense many-body oracle.
inline constexpr int kMaxOracleSpins = 12;

/// All 2^N eigenvalues of the many-body Hamiltonian
///   H = eps*Jz + V*(Jx^2 - Jy^2) + W*(J^2 - Jz^2),  eps = -2 lambda, V = 0, W = -2/N
/// assembled from single-site Pauli matrices, ascending.
std::vector<double> bruteforce_spectrum(const ModelSpec& spec);

}  // namespace lmg
