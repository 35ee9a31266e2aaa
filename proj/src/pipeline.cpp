#include "sfpds/pipeline.hpp"

#include <cmath>

#include "sfpds/mitigation.hpp"

namespace sfpds {

MolecularSystem build_molecular_system(IntegralSet integrals, const ScfOptions& scf) {
  if (integrals.n_electrons == 0) throw ValidationError("integral set has no electrons");
  if (integrals.n_electrons % 2 != 0) {
    throw ValidationError("restricted SCF needs an even electron count");
  }
  MolecularSystem sys;
  sys.scf = hartree_fock(integrals, integrals.n_electrons, scf);
  sys.tables = second_quantized_hamiltonian(integrals, sys.scf.coefficients);
  sys.hamiltonian = jordan_wigner(sys.tables);
  sys.integrals = std::move(integrals);
  return sys;
}

SectorModel build_sector(const MolecularSystem& system, SpinSector sector) {
  SectorModel m;
  m.sector = sector;
  const std::size_t n_qubits = system.hamiltonian.n_qubits();
  m.determinant = reference_determinant(sector, system.integrals.n_electrons, n_qubits);
  m.reference_energy = determinant_energy(system.tables, m.determinant.occupied);
  m.tapering = make_tapering(system.hamiltonian, m.determinant);
  m.tapered_hamiltonian = taper_operator(system.hamiltonian, m.tapering);
  m.full_state = StateVector::basis(n_qubits, m.determinant.bits());
  m.tapered_state = taper_state(m.determinant, m.tapering);
  return m;
}

MeasurementLadder measurement_ladder(PowerCache& unshifted_cache, std::size_t order,
                                     std::size_t slot_width, std::size_t register_width) {
  if (order == 0) throw ValidationError("expansion order K must be at least 1");
  if (unshifted_cache.shift() != 0.0) {
    throw ValidationError("string tallies are defined on the unshifted Hamiltonian");
  }
  const auto strings = unique_strings(unshifted_cache, 2 * order - 1);
  const auto groups = group_qwc(strings);
  MeasurementLadder l;
  l.unique_strings = strings.size();
  l.qwc_groups = groups.size();
  if (unshifted_cache.n_qubits() == slot_width) {
    l.batches = pack_batches(groups, slot_width, register_width).size();
  }
  return l;
}

Mode parse_mode(std::string_view name) {
  if (name == "exact") return Mode::kExact;
  if (name == "serial") return Mode::kSerial;
  if (name == "parallel") return Mode::kParallel;
  throw ValidationError("mode must be exact, serial or parallel (got '" + std::string(name) + "')");
}

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kExact: return "exact";
    case Mode::kSerial: return "serial";
    case Mode::kParallel: return "parallel";
  }
  return "?";
}

ExpectationEstimates estimate_expectations(const StateVector& state, const std::vector<QwcGroup>& groups,
                                           const SamplingOptions& options) {
  if (options.mode == Mode::kExact) throw ValidationError("exact mode does not sample");
  if (options.shots == 0) throw ValidationError("shot count must be positive");
  const NoiseModel noise{options.spam_p, options.seed};
  noise.validate();
  std::optional<MitigationConfig> mit;
  if (options.mitigation_p) {
    mit = MitigationConfig{*options.mitigation_p};
    mit->validate();
  }
  const auto distribution = [&](const CountTable& counts) {
    return mit ? mitigate(counts, *mit) : ProbabilityTable::from_counts(counts);
  };

  ExpectationEstimates out;
  if (options.mode == Mode::kSerial) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const CountTable counts =
          serial_sample(state, groups[g], options.shots, noise, derive_seed(options.seed, g));
      for (const auto& [p, e] : expectations_from_distribution(distribution(counts), groups[g])) {
        out.values[p] = e;
      }
    }
    out.circuits = groups.size();
  } else {
    const auto batches = pack_batches(groups, state.n_qubits());
    for (std::size_t b = 0; b < batches.size(); ++b) {
      const std::vector<StateVector> states(batches[b].slots.size(), state);
      const CountTable counts =
          sample_batch(states, batches[b], options.shots, noise, derive_seed(options.seed, b));
      for (const auto& [p, e] : expectations_from_distribution(distribution(counts), batches[b])) {
        out.values[p] = e;
      }
    }
    out.circuits = batches.size();
  }
  out.total_shots = options.shots * out.circuits;
  return out;
}

std::vector<double> moments_from_expectations(PowerCache& cache,
                                              const std::map<PauliString, double>& estimates,
                                              std::size_t top) {
  std::vector<double> moments(top + 1, 0.0);
  moments[0] = 1.0;
  for (std::size_t n = 1; n <= top; ++n) {
    double acc = 0.0;
    for (const auto& t : cache.power(n).terms()) {
      if (t.string.is_identity()) {
        acc += t.coefficient.real();
        continue;
      }
      const auto it = estimates.find(t.string);
      if (it == estimates.end()) {
        throw ValidationError("no estimate for string " + t.string.to_string() + " of power " + std::to_string(n));
      }
      acc += t.coefficient.real() * it->second;
    }
    moments[n] = acc;
  }
  return moments;
}

SampledPdsResult sampled_pds(const SectorModel& model, std::size_t order, const SamplingOptions& options,
                             const PdsOptions& pds_options) {
  if (order == 0) throw ValidationError("expansion order K must be at least 1");
  const std::size_t top = 2 * order - 1;
  SampledPdsResult r;
  // The reference energy is known classically; centering keeps the moment
  // matrix well scaled and does not change the roots.
  r.shift = model.reference_energy;
  PowerCache cache(model.tapered_hamiltonian, r.shift);
  const auto strings = unique_strings(cache, top);
  const auto groups = group_qwc(strings);
  PdsOptions solve = pds_options;
  if (options.mode == Mode::kExact) {
    for (const auto& s : strings) r.estimates.values[s] = expectation(s, model.tapered_state).real();
    r.estimates.circuits = groups.size();
    r.moments = moments_for_state(cache, model.tapered_state, order).values;
  } else {
    r.estimates = estimate_expectations(model.tapered_state, groups, options);
    r.moments = moments_from_expectations(cache, r.estimates.values, top);
    if (!solve.min_weight) solve.min_weight = kSampledMinWeight;
    solve.set_aside_complex = true;
  }
  r.pds = pds_from_moments(r.moments, order, solve, r.shift);
  return r;
}

}  // namespace sfpds
