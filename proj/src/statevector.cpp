#include "sfpds/statevector.hpp"

#include <bit>
#include <cmath>

#include "sfpds/error.hpp"

namespace sfpds {

namespace {

std::complex<double> y_phase(const PauliString& p) {
  return to_complex(static_cast<Phase>(std::popcount(p.x_mask() & p.z_mask()) & 3));
}

}  // namespace

std::string bits_to_string(std::uint64_t bits, std::size_t n_bits) {
  std::string s(n_bits, '0');
  for (std::size_t q = 0; q < n_bits; ++q) {
    if ((bits >> q) & 1U) s[q] = '1';
  }
  return s;
}

std::uint64_t bits_from_string(std::string_view s) {
  if (s.size() > 64) throw ValidationError("bitstring longer than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t q = 0; q < s.size(); ++q) {
    if (s[q] == '1') {
      v |= std::uint64_t{1} << q;
    } else if (s[q] != '0') {
      throw ValidationError("bitstring may only contain 0 and 1: '" + std::string(s) + "'");
    }
  }
  return v;
}

StateVector::StateVector(std::vector<std::complex<double>> amplitudes) : amps_(std::move(amplitudes)) {
  const std::size_t dim = amps_.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw ValidationError("state dimension must be a power of two");
  }
  n_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
  double norm = 0.0;
  for (const auto& a : amps_) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw ValidationError("state is not normalized (|psi|^2 = " + std::to_string(norm) + ")");
  }
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  if (n_qubits > 30) throw ValidationError("statevector limited to 30 qubits");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw ValidationError("basis index out of range");
  std::vector<std::complex<double>> amps(dim);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

StateVector StateVector::normalized(std::vector<std::complex<double>> amplitudes) {
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (norm == 0.0) throw ValidationError("cannot normalize the zero vector");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : amplitudes) a *= scale;
  return StateVector(std::move(amplitudes));
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

StateVector prepare_basis_state(std::span<const bool> bits) {
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q]) index |= std::uint64_t{1} << q;
  }
  return StateVector::basis(bits.size(), index);
}

StateVector prepare_basis_state(std::string_view bits) {
  return StateVector::basis(bits.size(), bits_from_string(bits));
}

std::vector<std::complex<double>> apply_operator(const PauliString& p,
                                        std::span<const std::complex<double>> psi) {
  if (psi.size() != (std::size_t{1} << p.n_qubits())) {
    throw ValidationError("operator and state dimensions differ");
  }
  std::vector<std::complex<double>> out(psi.size());
  const auto ph = y_phase(p);
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const double sign = (std::popcount(k & p.z_mask()) & 1) ? -1.0 : 1.0;
    out[k ^ p.x_mask()] = ph * sign * psi[k];
  }
  return out;
}

std::vector<std::complex<double>> apply_operator(const PauliSum& h,
                                        std::span<const std::complex<double>> psi) {
  if (psi.size() != (std::size_t{1} << h.n_qubits())) {
    throw ValidationError("operator and state dimensions differ");
  }
  std::vector<std::complex<double>> out(psi.size());
  for (const auto& t : h.terms()) {
    const auto& p = t.string;
    const auto ph = t.coefficient * y_phase(p);
    for (std::size_t k = 0; k < psi.size(); ++k) {
      const double sign = (std::popcount(k & p.z_mask()) & 1) ? -1.0 : 1.0;
      out[k ^ p.x_mask()] += ph * sign * psi[k];
    }
  }
  return out;
}

std::complex<double> inner(std::span<const std::complex<double>> a,
                           std::span<const std::complex<double>> b) {
  if (a.size() != b.size()) throw ValidationError("vector dimensions differ");
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

std::complex<double> expectation(const PauliString& p, const StateVector& s) {
  if (s.n_qubits() != p.n_qubits()) throw ValidationError("operator and state dimensions differ");
  const auto amps = s.amplitudes();
  const auto ph = y_phase(p);
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    if (amps[k] == 0.0) continue;
    const double sign = (std::popcount(k & p.z_mask()) & 1) ? -1.0 : 1.0;
    acc += std::conj(amps[k ^ p.x_mask()]) * sign * amps[k];
  }
  return ph * acc;
}

double exact_expectation(const PauliSum& h, const StateVector& s) {
  if (s.n_qubits() != h.n_qubits()) throw ValidationError("operator and state dimensions differ");
  std::complex<double> acc = 0.0;
  for (const auto& t : h.terms()) acc += t.coefficient * expectation(t.string, s);
  const double scale = std::max(1.0, std::abs(acc));
  if (std::abs(acc.imag()) > 1e-10 * scale) {
    throw ComputationError("expectation value has an imaginary part; operator is not Hermitian");
  }
  return acc.real();
}

}  // namespace sfpds
