#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sfpds/chem.hpp"
#include "sfpds/pauli.hpp"
#include "sfpds/statevector.hpp"

namespace sfpds {

/// Z2 symmetry data for removing qubits from a Hamiltonian.
struct TaperingData {
  std::size_t n_qubits = 0;
  std::vector<PauliString> generators;       // Z-type, reduced row-echelon order
  std::vector<std::size_t> paulix_partners;  // one X position per generator
  std::vector<int> sector_signs;             // +1 / -1 per generator
  std::vector<std::size_t> removed_qubits;   // ascending
  std::size_t n_remaining = 0;

  /// Original indices of the kept qubits, in tapered-register order.
  std::vector<std::size_t> kept_qubits() const;
};

/// Independent Z-type strings commuting with every term of h.
///
/// Computed as the GF(2) null space of the terms' X masks and returned in
/// reduced row-echelon form (pivot = lowest qubit index of each generator).
std::vector<PauliString> find_symmetries(const PauliSum& h);

/// Dimension of the full symplectic commutant (Z-type or not); diagnostics only.
std::size_t symmetry_dimension(const PauliSum& h);

/// Eigenvalue of each Z-type generator on the determinant's basis state.
std::vector<int> sector_of(const ReferenceDeterminant& det, const std::vector<PauliString>& generators);
std::vector<int> sector_of(std::uint64_t bits, const std::vector<PauliString>& generators);

/// Generators, partners and the sector selected by a reference determinant.
TaperingData make_tapering(const PauliSum& h, const ReferenceDeterminant& det);
/// Same with explicit sector signs.
TaperingData make_tapering(const PauliSum& h, const std::vector<int>& sector_signs);

/// Clifford-rotates h so each generator becomes X on its partner, fixes those
/// qubits to the sector eigenvalues and drops them.
PauliSum taper_operator(const PauliSum& h, const TaperingData& td);

/// Bits of the tapered reference on the kept qubits.
std::uint64_t taper_bits(const ReferenceDeterminant& det, const TaperingData& td);
StateVector taper_state(const ReferenceDeterminant& det, const TaperingData& td);

}  // namespace sfpds
