#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sfpds/pauli.hpp"

namespace sfpds {

inline constexpr double kHartreeToEv = 27.211386245988;
inline constexpr double kAngstromToBohr = 1.8897259886;

struct Atom {
  std::string element;
  std::array<double, 3> position;  // angstrom
};

struct Geometry {
  std::vector<Atom> atoms;

  std::size_t size() const { return atoms.size(); }
  /// Smallest interatomic distance in angstrom (infinity for < 2 atoms).
  double min_distance() const;
};

/// n+1 hydrogens along z, first at the origin, separated by the given
/// spacings (angstrom).
Geometry build_h_chain(std::span<const double> spacings);

/// XYZ-like text: optional "<count>\n<comment>\n" header, then one
/// "element x y z" line per atom in angstrom.
Geometry parse_xyz(std::string_view text);

/// Molecular integrals over an n-orbital basis.
///
/// `overlap` is the identity for orthonormal (e.g. FCIDUMP) orbital sets.
/// The two-electron tensor is stored densely in chemists' notation (pq|rs).
class IntegralSet {
 public:
  IntegralSet() = default;
  explicit IntegralSet(std::size_t n_orbitals);

  std::size_t n_orbitals() const { return n_; }

  double core_energy = 0.0;
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd one_body;
  std::size_t n_electrons = 0;
  int ms2 = 0;

  double eri(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return two_body_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  /// Sets all 8 symmetry-equivalent entries.
  void set_eri(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v);
  std::span<const double> two_body() const { return two_body_; }

  /// Largest violation of the 8-fold (pq|rs) and h_pq symmetries.
  double symmetry_violation() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> two_body_;
};

/// Minimal-basis (STO-3G) integrals for hydrogen-only geometries.
IntegralSet compute_integrals(const Geometry& geometry, std::string_view basis = "STO-3G");

/// Sum of Z_i Z_j / r_ij in hartree.
double nuclear_repulsion(const Geometry& geometry);

struct ScfOptions {
  std::size_t max_iterations = 200;
  double density_tolerance = 1e-10;
  std::size_t diis_subspace = 8;
};

struct ScfResult {
  Eigen::MatrixXd coefficients;     // AO x MO, columns in ascending energy
  Eigen::VectorXd orbital_energies;  // ascending
  double energy = 0.0;              // total, including core energy
  std::size_t iterations = 0;
  std::size_t n_occupied = 0;
};

/// Restricted closed-shell SCF from the core-Hamiltonian guess with DIIS.
ScfResult hartree_fock(const IntegralSet& ints, std::size_t n_electrons,
                       const ScfOptions& options = {});

/// Spin-orbital integrals in the MO basis.
///
/// Blocked ordering: spin orbital P < n is spatial orbital P with alpha spin,
/// P >= n is spatial orbital P - n with beta spin.
struct SpinOrbitalTables {
  std::size_t n_spin_orbitals = 0;
  double core_energy = 0.0;
  Eigen::MatrixXd one_body;  // h_PQ
  std::vector<double> antisymmetrized;  // <PQ||RS>, row-major P,Q,R,S

  double g(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    const std::size_t n = n_spin_orbitals;
    return antisymmetrized[((p * n + q) * n + r) * n + s];
  }
};

/// Integrals over the orbitals given by the columns of `orbitals` (AO x MO).
IntegralSet transform_integrals(const IntegralSet& ints, const Eigen::MatrixXd& orbitals);

/// Transforms to the MO basis given by `orbitals` (AO x MO).
SpinOrbitalTables second_quantized_hamiltonian(const IntegralSet& ints,
                                               const Eigen::MatrixXd& orbitals);

/// <D|H|D> for a determinant given by its occupied spin orbitals.
double determinant_energy(const SpinOrbitalTables& tables, std::span<const std::size_t> occupied);

/// Jordan-Wigner images of a_p^dagger and a_p on n qubits (qubit = mode).
PauliSum jw_creation(std::size_t n_modes, std::size_t mode);
PauliSum jw_annihilation(std::size_t n_modes, std::size_t mode);

/// H = E_core + sum h_PQ a+_P a_Q + 1/4 sum <PQ||RS> a+_P a+_Q a_S a_R,
/// mapped to qubits; the result has real coefficients.
PauliSum jordan_wigner(const SpinOrbitalTables& tables);

/// Total number and S_z operators under the blocked convention.
PauliSum jw_number_operator(std::size_t n_spin_orbitals);
PauliSum jw_sz_operator(std::size_t n_spin_orbitals);

enum class SpinSector { kSinglet, kTriplet };

SpinSector parse_spin_sector(std::string_view name);
std::string_view to_string(SpinSector sector);

struct ReferenceDeterminant {
  std::size_t n_spin_orbitals = 0;
  std::vector<std::size_t> occupied;  // ascending spin-orbital indices
  double s_z = 0.0;

  /// Computational basis index (bit P = occupation of spin orbital P).
  std::uint64_t bits() const;
};

/// Aufbau determinant in the given sector: singlet fills the lowest orbitals
/// with alpha and beta pairs; triplet moves one beta electron to the next
/// alpha orbital (s_z = 1).
ReferenceDeterminant reference_determinant(SpinSector sector, std::size_t n_electrons,
                                           std::size_t n_spin_orbitals);

}  // namespace sfpds
