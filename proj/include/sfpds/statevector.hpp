#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfpds/pauli.hpp"

namespace sfpds {

/// Bit order used everywhere: qubit q is bit q of a basis index, and the
/// character at position q of a serialized bitstring.
std::string bits_to_string(std::uint64_t bits, std::size_t n_bits);
std::uint64_t bits_from_string(std::string_view s);

/// Dense normalized state of n qubits (2^n complex amplitudes).
class StateVector {
 public:
  StateVector() = default;
  /// Takes ownership of amplitudes; the length must be a power of two and
  /// the norm 1 to 1e-12.
  explicit StateVector(std::vector<std::complex<double>> amplitudes);

  static StateVector basis(std::size_t n_qubits, std::uint64_t index);
  /// Normalizes an arbitrary nonzero vector.
  static StateVector normalized(std::vector<std::complex<double>> amplitudes);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::complex<double> operator[](std::size_t i) const { return amps_[i]; }

  /// |amplitude|^2 per basis index.
  std::vector<double> probabilities() const;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<std::complex<double>> amps_;
};

/// One-hot state from a bit pattern (qubit 0 first).
StateVector prepare_basis_state(std::span<const bool> bits);
StateVector prepare_basis_state(std::string_view bits);

/// P|psi> and H|psi> on raw amplitude vectors (not renormalized).
std::vector<std::complex<double>> apply_operator(const PauliString& p,
                                        std::span<const std::complex<double>> psi);
std::vector<std::complex<double>> apply_operator(const PauliSum& h,
                                        std::span<const std::complex<double>> psi);

std::complex<double> inner(std::span<const std::complex<double>> a,
                           std::span<const std::complex<double>> b);

/// <s|P|s>
std::complex<double> expectation(const PauliString& p, const StateVector& s);
/// <s|h|s>; real part returned, Hermitian h is assumed and the imaginary
/// residue is checked to 1e-10.
double exact_expectation(const PauliSum& h, const StateVector& s);

}  // namespace sfpds
