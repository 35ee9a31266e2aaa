#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfpds/chem.hpp"
#include "sfpds/measurement.hpp"
#include "sfpds/moments.hpp"
#include "sfpds/pds.hpp"
#include "sfpds/sampling.hpp"
#include "sfpds/taper.hpp"

namespace sfpds {

/// Integrals, SCF and the Jordan-Wigner Hamiltonian of one molecule.
struct MolecularSystem {
  IntegralSet integrals;
  ScfResult scf;
  SpinOrbitalTables tables;
  PauliSum hamiltonian;  // 2 * n_orbitals qubits
};

/// Builds the system from integrals (computed or read); n_electrons comes from
/// the integral set.
MolecularSystem build_molecular_system(IntegralSet integrals, const ScfOptions& scf = {});

/// Full and tapered operators and reference states for one spin sector.
struct SectorModel {
  SpinSector sector = SpinSector::kSinglet;
  ReferenceDeterminant determinant;
  double reference_energy = 0.0;  // <D|H|D>
  TaperingData tapering;
  PauliSum tapered_hamiltonian;
  StateVector full_state;
  StateVector tapered_state;
};

SectorModel build_sector(const MolecularSystem& system, SpinSector sector);

/// Measurement counts for one operator.
struct MeasurementLadder {
  std::size_t unique_strings = 0;
  std::size_t qwc_groups = 0;
  std::optional<std::size_t> batches;  // only when the register fits the slot width
};

/// Unique strings of H^1..H^{2K-1}, their QWC groups and packed batches.
MeasurementLadder measurement_ladder(PowerCache& unshifted_cache, std::size_t order,
                                     std::size_t slot_width = 5, std::size_t register_width = 20);

enum class Mode { kExact, kSerial, kParallel };

Mode parse_mode(std::string_view name);
std::string_view to_string(Mode mode);

struct SamplingOptions {
  Mode mode = Mode::kSerial;
  std::uint64_t shots = 100'000;  // per group (serial) or per batch (parallel)
  std::uint64_t seed = 12345;
  double spam_p = 0.0;            // injected readout flip probability
  std::optional<double> mitigation_p;  // apply mitigation with this p when set
};

/// Estimated <P> for every member of every group, plus bookkeeping.
struct ExpectationEstimates {
  std::map<PauliString, double> values;
  std::size_t circuits = 0;  // groups (serial) or batches (parallel)
  std::uint64_t total_shots = 0;
};

/// Samples the state group by group (serial) or in packed batches
/// (parallel). Circuit i uses seed derive_seed(options.seed, i).
ExpectationEstimates estimate_expectations(const StateVector& state, const std::vector<QwcGroup>& groups,
                                           const SamplingOptions& options);

/// Moments <(H-c)^n>, n = 0..top, as sum_i c_i^(n) <P_i> over the cached
/// powers. Every non-identity string needs an estimate.
std::vector<double> moments_from_expectations(PowerCache& cache,
                                              const std::map<PauliString, double>& estimates,
                                              std::size_t top);

/// PDS(K) roots for one sector from sampled moments of the tapered operator.
struct SampledPdsResult {
  PdsResult pds;
  ExpectationEstimates estimates;
  std::vector<double> moments;  // shifted
  double shift = 0.0;
};

/// Weight floor applied to sampled PDS roots unless the caller sets one.
inline constexpr double kSampledMinWeight = 1e-3;

/// Exact mode uses exact moments of the tapered reference; sampled modes
/// estimate every string, drop roots below the weight floor and set complex
/// roots above the lowest real root aside.
SampledPdsResult sampled_pds(const SectorModel& model, std::size_t order, const SamplingOptions& options,
                             const PdsOptions& pds_options = {});

}  // namespace sfpds
