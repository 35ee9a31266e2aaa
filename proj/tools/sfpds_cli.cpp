// Command-line front end: one subcommand per pipeline stage plus `run`.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sfpds/config.hpp"
#include "sfpds/error.hpp"
#include "sfpds/fci.hpp"
#include "sfpds/fcidump.hpp"
#include "sfpds/mitigation.hpp"
#include "sfpds/report.hpp"

using namespace sfpds;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Text goes to `path` when given, else stdout.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  f << text;
  if (!f) throw ComputationError("failed writing '" + path + "'");
}

std::vector<SpinSector> sectors_for(const std::string& name) {
  if (name == "both") return {SpinSector::kSinglet, SpinSector::kTriplet};
  return {parse_spin_sector(name)};
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Config-file values first, then any flag given on the command line.
struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App& app) {
    app.add_option("-c,--config", config_path, "flat key = value configuration file");
    const std::pair<std::string, std::string> keys[] = {
        {"spacings", "comma-separated H-H spacings in angstrom (H chain)"},
        {"xyz", "geometry file (element x y z per line, angstrom)"},
        {"fcidump", "FCIDUMP integral file"},
        {"k_max", "PDS expansion order K"},
        {"shots", "shots per circuit when sampling"},
        {"seed", "master random seed"},
        {"spam_p", "injected readout bit-flip probability"},
        {"mitigation_p", "mitigate readout with this flip probability ('none' to disable)"},
        {"mode", "exact | serial | parallel"},
        {"output_dir", "report directory (default $" + std::string(kOutputDirEnv) + " or .)"},
    };
    for (const auto& [key, help] : keys) {
      std::string flag = "--" + key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      options[key] = app.add_option(flag, values[key], help);
    }
  }

  RunConfig resolve() const {
    RunConfig cfg = config_path.empty() ? RunConfig{} : read_config(config_path);
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) {
        // A flag naming a Hamiltonian source replaces the file's source.
        if (key == "spacings" || key == "xyz" || key == "fcidump") {
          cfg.spacings.reset();
          cfg.xyz_path.reset();
          cfg.fcidump_path.reset();
        }
        apply_setting(cfg, key, values.at(key));
      }
    }
    // Two source flags on one command line are still an error.
    std::size_t given = 0;
    for (const char* k : {"spacings", "xyz", "fcidump"}) given += options.at(k)->count() > 0;
    if (given > 1) throw ValidationError("give exactly one Hamiltonian source (spacings, xyz or fcidump)");
    cfg.validate();
    return cfg;
  }
};

int run_main(int argc, char** argv) {
  CLI::App app{"Moment-based (PDS) singlet/triplet energies of hydrogen chains on a simulated quantum device"};
  app.require_subcommand(1);
  app.fallthrough();
  ConfigFlags flags;
  flags.attach(app);

  std::string out_path;
  std::string sector_name = "both";

  auto* integrals = app.add_subcommand("integrals", "integrals, SCF energy; optional MO-basis FCIDUMP export");
  std::string fcidump_out;
  integrals->add_option("--write-fcidump", fcidump_out, "write MO-basis integrals to this FCIDUMP file");

  auto* hamiltonian = app.add_subcommand("hamiltonian", "qubit Hamiltonian as 'coeff * PAULIS' lines");
  bool tapered = false;
  hamiltonian->add_flag("--tapered", tapered, "taper for --sector (singlet or triplet)");
  hamiltonian->add_option("--sector", sector_name, "singlet | triplet (with --tapered)");
  hamiltonian->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* taper = app.add_subcommand("taper", "symmetry generators, sectors and removed qubits");
  taper->add_option("--sector", sector_name, "singlet | triplet | both");

  auto* plan = app.add_subcommand("plan", "measurement-count ladder (original, QWC, tapered, tapered+QWC, batches)");

  auto* moments = app.add_subcommand("moments", "CSV: power, cumulative unique strings, <H^n> (full Hamiltonian)");
  moments->add_option("--sector", sector_name, "reference state: singlet | triplet");
  moments->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* pds = app.add_subcommand("pds", "PDS(K) roots for K = 1..k_max (exact moments)");
  pds->add_option("--sector", sector_name, "singlet | triplet | both");
  pds->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* exact = app.add_subcommand("exact", "lowest levels per (N, S_z) sector by dense diagonalization");
  std::size_t levels = 5;
  exact->add_option("--levels", levels, "levels per sector")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "sample one measurement circuit and print its histogram");
  std::size_t circuit = 0;
  simulate->add_option("--sector", sector_name, "singlet | triplet");
  simulate->add_option("--circuit", circuit, "group index (serial) or batch index (parallel)");
  simulate->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* mitigate_cmd = app.add_subcommand("mitigate", "readout-mitigate a histogram file into a probability table");
  std::string input;
  double p = 0.0;
  mitigate_cmd->add_option("-i,--input", input, "histogram file ('bits count' per line)")->required();
  mitigate_cmd->add_option("--p", p, "bit-flip probability")->required();
  mitigate_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* run = app.add_subcommand("run", "full pipeline; writes CSV reports and a summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  const RunConfig cfg = flags.resolve();
  const auto system = [&] { return build_molecular_system(load_integrals(cfg)); };

  if (*integrals) {
    const MolecularSystem sys = system();
    std::cout << "n_orbitals " << sys.integrals.n_orbitals() << "\n"
              << "n_electrons " << sys.integrals.n_electrons << "\n"
              << "core_energy " << fmt("%.12f", sys.integrals.core_energy) << "\n"
              << "scf_energy " << fmt("%.12f", sys.scf.energy) << "\n"
              << "scf_iterations " << sys.scf.iterations << "\n";
    std::cout << "orbital_energies";
    for (double e : sys.scf.orbital_energies) std::cout << " " << fmt("%.10f", e);
    std::cout << "\n";
    if (!fcidump_out.empty()) write_fcidump(transform_integrals(sys.integrals, sys.scf.coefficients), fcidump_out);
  } else if (*hamiltonian) {
    const MolecularSystem sys = system();
    if (tapered) {
      if (sector_name == "both") throw ValidationError("--tapered needs --sector singlet or triplet");
      emit(build_sector(sys, parse_spin_sector(sector_name)).tapered_hamiltonian.to_text(), out_path);
    } else {
      emit(sys.hamiltonian.to_text(), out_path);
    }
  } else if (*taper) {
    const MolecularSystem sys = system();
    for (SpinSector s : sectors_for(sector_name)) {
      const SectorModel m = build_sector(sys, s);
      std::cout << to_string(s) << ": reference " << bits_to_string(m.determinant.bits(), sys.hamiltonian.n_qubits())
                << ", <D|H|D> = " << fmt("%.10f", m.reference_energy) << "\n";
      for (std::size_t g = 0; g < m.tapering.generators.size(); ++g) {
        std::cout << "  generator " << m.tapering.generators[g].to_string() << "  partner X" << m.tapering.paulix_partners[g]
                  << "  sign " << (m.tapering.sector_signs[g] > 0 ? "+1" : "-1") << "\n";
      }
      std::cout << "  qubits " << sys.hamiltonian.n_qubits() << " -> " << m.tapering.n_remaining << ", terms "
                << sys.hamiltonian.size() << " -> " << m.tapered_hamiltonian.size() << ", tapered reference "
                << bits_to_string(taper_bits(m.determinant, m.tapering), m.tapering.n_remaining) << "\n";
    }
  } else if (*plan) {
    const MolecularSystem sys = system();
    PowerCache full(sys.hamiltonian);
    const MeasurementLadder orig = measurement_ladder(full, cfg.k_max);
    std::cout << "K = " << cfg.k_max << " (powers 1.." << 2 * cfg.k_max - 1 << ")\n";
    std::cout << "sector,original,qwc,tapered,tapered_qwc,tapered_qwc_parallel\n";
    for (SpinSector s : {SpinSector::kSinglet, SpinSector::kTriplet}) {
      PowerCache c(build_sector(sys, s).tapered_hamiltonian);
      const MeasurementLadder t = measurement_ladder(c, cfg.k_max);
      std::cout << to_string(s) << "," << orig.unique_strings << "," << orig.qwc_groups << "," << t.unique_strings
                << "," << t.qwc_groups << "," << (t.batches ? std::to_string(*t.batches) : "") << "\n";
    }
  } else if (*moments) {
    if (sector_name == "both") sector_name = "singlet";
    const MolecularSystem sys = system();
    const SectorModel m = build_sector(sys, parse_spin_sector(sector_name));
    PowerCache full(sys.hamiltonian);
    const auto counts = unique_string_count(full, 2 * cfg.k_max - 1);
    const MomentTable table = moments_for_state(full, m.full_state, cfg.k_max);
    std::string csv = "power,cumulative_unique,moment_value\n";
    for (std::size_t n = 1; n < table.values.size(); ++n) {
      csv += std::to_string(n) + "," + std::to_string(counts[n - 1]) + "," + fmt("%.17g", table.values[n]) + "\n";
    }
    emit(csv, out_path);
  } else if (*pds) {
    const MolecularSystem sys = system();
    std::string csv = "sector,K,effective_order,root_index,energy,weight\n";
    for (SpinSector s : sectors_for(sector_name)) {
      const SectorModel m = build_sector(sys, s);
      for (std::size_t k = 1; k <= cfg.k_max; ++k) {
        const PdsResult r = pds_energies(m.tapered_hamiltonian, m.tapered_state, k);
        for (std::size_t i = 0; i < r.roots.size(); ++i) {
          csv += std::string(to_string(s)) + "," + std::to_string(k) + "," + std::to_string(r.effective_order) + "," +
                 std::to_string(i) + "," + format_energy(r.roots[i]) + "," + fmt("%.6e", r.weights[i]) + "\n";
        }
      }
    }
    emit(csv, out_path);
  } else if (*exact) {
    const MolecularSystem sys = system();
    const std::size_t ne = sys.integrals.n_electrons;
    const auto sz0 = exact_spectrum(sys.hamiltonian, Sector{ne, 0.0});
    const auto sz1 = exact_spectrum(sys.hamiltonian, Sector{ne, 1.0});
    const auto singlets = singlet_levels(sz0, sz1);
    const auto is_singlet = [&](double e) {
      return std::any_of(singlets.begin(), singlets.end(), [&](double s) { return std::abs(s - e) < 1e-12; });
    };
    std::cout << "sector,index,energy,label\n";
    for (std::size_t i = 0; i < std::min(levels, sz0.eigenvalues.size()); ++i) {
      const double e = sz0.eigenvalues[i];
      std::cout << "N=" << ne << ";Sz=0," << i << "," << format_energy(e) << ","
                << (is_singlet(e) ? "singlet" : "S>=1") << "\n";
    }
    for (std::size_t i = 0; i < std::min(levels, sz1.eigenvalues.size()); ++i) {
      std::cout << "N=" << ne << ";Sz=1," << i << "," << format_energy(sz1.eigenvalues[i]) << ",S>=1\n";
    }
    const ExactTransitions t = exact_transitions(sz0, sz1);
    std::cout << "# S0->S1 " << fmt("%.6f", t.s0_s1_ev) << " eV, S0->T0 " << fmt("%.6f", t.s0_t0_ev) << " eV\n";
  } else if (*simulate) {
    if (cfg.mode == Mode::kExact) throw ValidationError("simulate needs --mode serial or parallel");
    if (sector_name == "both") sector_name = "singlet";
    const MolecularSystem sys = system();
    const SectorModel m = build_sector(sys, parse_spin_sector(sector_name));
    PowerCache c(m.tapered_hamiltonian);
    const auto groups = group_qwc(unique_strings(c, 2 * cfg.k_max - 1));
    const NoiseModel noise{cfg.spam_p, cfg.seed};
    const std::uint64_t seed = derive_seed(cfg.seed, circuit);
    CountTable counts;
    if (cfg.mode == Mode::kSerial) {
      if (circuit >= groups.size()) throw ValidationError("circuit index out of range (" + std::to_string(groups.size()) + " groups)");
      counts = serial_sample(m.tapered_state, groups[circuit], cfg.shots, noise, seed);
    } else {
      const auto batches = pack_batches(groups, m.tapered_state.n_qubits());
      if (circuit >= batches.size()) throw ValidationError("circuit index out of range (" + std::to_string(batches.size()) + " batches)");
      const std::vector<StateVector> states(batches[circuit].slots.size(), m.tapered_state);
      counts = sample_batch(states, batches[circuit], cfg.shots, noise, seed);
    }
    emit(counts.to_text(), out_path);
  } else if (*mitigate_cmd) {
    const CountTable counts = CountTable::parse_text(read_file(input));
    emit(mitigate(counts, MitigationConfig{p}).to_text(), out_path);
  } else if (*run) {
    const ReportBundle bundle = run_pipeline(cfg);
    const std::string dir = cfg.resolved_output_dir();
    write_reports(bundle, dir);
    std::cout << bundle.summary << "Reports written to " << dir << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_main(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kExitComputation;
  }
}
