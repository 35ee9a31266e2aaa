#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sfpds/pauli.hpp"

namespace sfpds {

/// Particle number and S_z of a block of the Fock space (blocked spin order).
struct Sector {
  std::size_t n_electrons = 0;
  double s_z = 0.0;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending, hartree
  std::optional<Sector> sector;     // set when the spectrum was filtered
};

/// Dense eigenvalues of h (n_qubits <= 14), optionally restricted to the
/// basis states with the given electron count and S_z. Qubits 0..n/2-1 are
/// alpha spin orbitals and n/2..n-1 beta.
SpectrumResult exact_spectrum(const PauliSum& h, std::optional<Sector> sector = std::nullopt);

struct ExactTransitions {
  double s0 = 0.0;  // hartree
  double s1 = 0.0;
  double t0 = 0.0;
  double s0_s1_ev = 0.0;
  double s0_t0_ev = 0.0;
};

/// Singlet levels are the S_z = 0 levels without a partner in the S_z = 1
/// spectrum (within `degeneracy_tolerance`); S0, S1 are the lowest two of
/// them and T0 is the lowest S_z = 1 level.
ExactTransitions exact_transitions(const SpectrumResult& sz0, const SpectrumResult& sz1,
                                   double degeneracy_tolerance = 1e-9);

/// S_z = 0 levels with no partner in the S_z = 1 spectrum.
std::vector<double> singlet_levels(const SpectrumResult& sz0, const SpectrumResult& sz1,
                                   double degeneracy_tolerance = 1e-9);

}  // namespace sfpds
