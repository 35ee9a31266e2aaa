#pragma once

#include <optional>
#include <string>

#include "sfpds/config.hpp"
#include "sfpds/fci.hpp"
#include "sfpds/pds.hpp"

namespace sfpds {

/// Energies of one method row.
struct EnergyRow {
  std::string method;
  double s0 = 0.0;
  std::optional<double> s1;
  double t0 = 0.0;
  TransitionEnergies transitions;
};

/// Everything `run` writes; each string is a complete file.
struct ReportBundle {
  std::string measurement_csv;  // measurement-count ladder per sector
  std::string convergence_csv;  // K, unique strings, S0, S1, T0
  std::string energies_csv;     // exact diagonalization plus the selected mode
  std::string summary;          // human-readable
  EnergyRow exact;
  EnergyRow selected;
};

/// Runs every stage for the configuration. Errors keep their type and are
/// prefixed with the failing stage's name.
ReportBundle run_pipeline(const RunConfig& cfg);

/// Writes measurement.csv, convergence.csv, energies.csv and summary.txt.
void write_reports(const ReportBundle& bundle, const std::string& directory);

/// Shared CSV number formatting (%.10f for energies).
std::string format_energy(double e);

}  // namespace sfpds
