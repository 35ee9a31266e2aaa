#include "sfpds/moments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sfpds {

namespace {

// Round-off in H^n grows with its coefficient scale (~||H||^n), so the drop
// tolerance is applied relative to max(1, largest |coefficient|).
PauliSum scale_pruned(const PauliSum& s) {
  const double cutoff = s.drop_tolerance() * std::max(1.0, s.max_abs_coefficient());
  std::vector<PauliTerm> kept;
  kept.reserve(s.size());
  for (const auto& t : s.terms()) {
    if (std::abs(t.coefficient) >= cutoff) kept.push_back(t);
  }
  return PauliSum(s.n_qubits(), kept, s.drop_tolerance());
}

}  // namespace

PowerCache::PowerCache(PauliSum hamiltonian, double shift, std::size_t term_budget)
    : term_budget_(term_budget), shift_(shift) {
  if (!std::isfinite(shift)) throw ValidationError("moment shift must be finite");
  const std::size_t n = hamiltonian.n_qubits();
  PauliSum id = PauliSum::identity(n).pruned(hamiltonian.drop_tolerance());
  if (shift != 0.0) hamiltonian = hamiltonian - shift * id;
  powers_.push_back(std::move(id));
  powers_.push_back(std::move(hamiltonian));
}

const PauliSum& PowerCache::power(std::size_t n) {
  while (powers_.size() <= n) {
    const PauliSum& prev = powers_.back();
    const PauliSum& h = powers_[1];
    if (prev.size() * h.size() > 50 * term_budget_) {
      throw TermBudgetExceeded("H^" + std::to_string(powers_.size()) +
                               " would need too many string products");
    }
    PauliSum next = scale_pruned(multiply_sums(prev, h));
    if (next.size() > term_budget_) {
      throw TermBudgetExceeded("H^" + std::to_string(powers_.size()) + " has " +
                               std::to_string(next.size()) + " terms, over the budget of " +
                               std::to_string(term_budget_));
    }
    powers_.push_back(std::move(next));
  }
  return powers_[n];
}

const PauliSum& hamiltonian_power(PowerCache& cache, std::size_t n) { return cache.power(n); }

PauliSum hamiltonian_power_by_squaring(const PauliSum& h, std::size_t n) {
  PauliSum result = PauliSum::identity(h.n_qubits()).pruned(h.drop_tolerance());
  PauliSum base = h;
  while (n > 0) {
    if (n & 1U) result = scale_pruned(multiply_sums(result, base));
    n >>= 1U;
    if (n > 0) base = scale_pruned(multiply_sums(base, base));
  }
  return result;
}

MomentTable moments_for_state(PowerCache& cache, const StateVector& state, std::size_t order) {
  if (order == 0) throw ValidationError("expansion order K must be at least 1");
  if (state.n_qubits() != cache.n_qubits()) {
    throw ValidationError("state and Hamiltonian act on different qubit counts");
  }
  MomentTable table;
  table.order = order;
  table.shift = cache.shift();
  const std::size_t top = 2 * order - 1;
  std::set<PauliString> unique;
  for (std::size_t n = 0; n <= top; ++n) {
    const PauliSum& hn = cache.power(n);
    std::complex<double> acc = 0.0;
    std::vector<PauliString> strings;
    strings.reserve(hn.size());
    for (const auto& t : hn.terms()) {
      acc += t.coefficient * expectation(t.string, state);
      strings.push_back(t.string);
      if (n > 0 && !t.string.is_identity()) unique.insert(t.string);
    }
    const double scale = std::max(1.0, std::abs(acc));
    if (std::abs(acc.imag()) > 1e-10 * scale) {
      throw ComputationError("moment <H^" + std::to_string(n) + "> is not real");
    }
    table.power_values.push_back(n == 0 ? 1.0 : acc.real());
    table.per_power_strings.push_back(std::move(strings));
  }
  table.unique_strings.assign(unique.begin(), unique.end());
  // The pruned powers carry ~1e-12 relative truncation; repeated application
  // to the state does not, and the PDS solve needs that accuracy at large K.
  table.values = moments_by_state_pipelining(cache.hamiltonian(), state, top);
  table.values[0] = 1.0;
  return table;
}

std::vector<double> unshift_moments(std::span<const double> shifted, double shift) {
  std::vector<double> out(shifted.size(), 0.0);
  for (std::size_t n = 0; n < shifted.size(); ++n) {
    double binom = 1.0;  // C(n, k)
    for (std::size_t k = 0; k <= n; ++k) {
      out[n] += binom * std::pow(shift, static_cast<double>(n - k)) * shifted[k];
      binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
  }
  return out;
}

std::vector<double> MomentTable::raw_moments() const { return unshift_moments(values, shift); }

std::vector<double> moments_by_state_pipelining(const PauliSum& h, const StateVector& state,
                                                std::size_t max_power) {
  if (state.n_qubits() != h.n_qubits()) {
    throw ValidationError("state and Hamiltonian act on different qubit counts");
  }
  // v[k] = H^k |phi>, k <= ceil(max_power / 2)
  const std::size_t half = (max_power + 1) / 2;
  std::vector<std::vector<std::complex<double>>> v;
  v.emplace_back(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t k = 1; k <= half; ++k) v.push_back(apply_operator(h, v.back()));

  std::vector<double> out(max_power + 1);
  for (std::size_t n = 0; n <= max_power; ++n) {
    const std::size_t a = n / 2;
    const std::size_t b = n - a;
    out[n] = inner(v[a], v[b]).real();
  }
  return out;
}

std::vector<PauliString> unique_strings(PowerCache& cache, std::size_t max_power) {
  std::set<PauliString> unique;
  for (std::size_t n = 1; n <= max_power; ++n) {
    for (const auto& t : cache.power(n).terms()) {
      if (!t.string.is_identity()) unique.insert(t.string);
    }
  }
  return {unique.begin(), unique.end()};
}

std::vector<std::size_t> unique_string_count(PowerCache& cache, std::size_t max_power) {
  std::set<PauliString> unique;
  std::vector<std::size_t> counts;
  counts.reserve(max_power);
  for (std::size_t n = 1; n <= max_power; ++n) {
    for (const auto& t : cache.power(n).terms()) {
      if (!t.string.is_identity()) unique.insert(t.string);
    }
    counts.push_back(unique.size());
  }
  return counts;
}

}  // namespace sfpds
