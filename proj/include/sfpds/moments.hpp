#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sfpds/error.hpp"
#include "sfpds/pauli.hpp"
#include "sfpds/statevector.hpp"

namespace sfpds {

/// Raised when a Hamiltonian power would exceed the configured term budget.
class TermBudgetExceeded : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Lazily computed powers of one Hamiltonian, optionally shifted.
///
/// With shift c the cached operator is H - c*I and power(n) = (H - c)^n.
/// H^n = H^{n-1} * H with simplification at every step. Powers are kept for
/// reuse across expansion orders.
class PowerCache {
 public:
  static constexpr std::size_t kDefaultTermBudget = 10'000'000;

  explicit PowerCache(PauliSum hamiltonian, double shift = 0.0,
                      std::size_t term_budget = kDefaultTermBudget);

  /// The cached operator, i.e. H - shift.
  const PauliSum& hamiltonian() const { return powers_[1]; }
  double shift() const { return shift_; }
  std::size_t n_qubits() const { return powers_[1].n_qubits(); }
  std::size_t cached_powers() const { return powers_.size(); }

  const PauliSum& power(std::size_t n);

 private:
  std::size_t term_budget_;
  double shift_ = 0.0;
  std::vector<PauliSum> powers_;
};

const PauliSum& hamiltonian_power(PowerCache& cache, std::size_t n);

/// Reference implementation by repeated squaring, for cross-checks.
PauliSum hamiltonian_power_by_squaring(const PauliSum& h, std::size_t n);

struct MomentTable {
  std::size_t order = 0;                                  // K
  double shift = 0.0;                                     // c
  std::vector<double> values;                             // <(H-c)^n>, n = 0..2K-1
  std::vector<double> power_values;                       // same, contracted from the Pauli powers
  std::vector<std::vector<PauliString>> per_power_strings;  // strings of H^n
  std::vector<PauliString> unique_strings;                // union over n >= 1, identity excluded

  /// Distinct non-identity strings that have to be measured.
  std::size_t measured_string_count() const { return unique_strings.size(); }

  /// <H^n> recovered from the shifted values by the binomial expansion.
  std::vector<double> raw_moments() const;
};

/// <H^n> = sum_k C(n,k) c^{n-k} <(H-c)^k>.
std::vector<double> unshift_moments(std::span<const double> shifted, double shift);

/// Exact moments <phi|H^n|phi> for n = 0..2K-1, plus the string ledger.
/// `values` come from repeated application of H to the state; `power_values`
/// contract each Pauli-sum power with the state as an independent check.
MomentTable moments_for_state(PowerCache& cache, const StateVector& state, std::size_t order);

/// <phi|H^n|phi> for n = 0..max_power by applying H to the state repeatedly
/// and pairing <H^a phi|H^b phi>; independent of the Pauli-sum powers.
std::vector<double> moments_by_state_pipelining(const PauliSum& h, const StateVector& state,
                                                std::size_t max_power);

/// Sorted union of the non-identity strings of H^1..H^max_power.
std::vector<PauliString> unique_strings(PowerCache& cache, std::size_t max_power);

/// counts[n-1] = |union of non-identity strings of H^1..H^n| for n = 1..max_power.
std::vector<std::size_t> unique_string_count(PowerCache& cache, std::size_t max_power);

}  // namespace sfpds
