#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfpds/pipeline.hpp"

namespace sfpds {

/// Environment variable consulted for the default output directory.
inline constexpr const char* kOutputDirEnv = "SFPDS_OUTPUT_DIR";

/// Settings shared by every subcommand.
///
/// Keys (file and command line alike): spacings, xyz, fcidump, k_max, shots,
/// seed, spam_p, mitigation_p, mode, output_dir.
struct RunConfig {
  std::optional<std::vector<double>> spacings;  // H chain, angstrom
  std::optional<std::string> xyz_path;
  std::optional<std::string> fcidump_path;
  std::size_t k_max = 10;
  std::uint64_t shots = 100'000;
  std::uint64_t seed = 12345;
  double spam_p = 0.0;
  std::optional<double> mitigation_p;
  Mode mode = Mode::kExact;
  std::optional<std::string> output_dir;

  /// Number of Hamiltonian sources given (spacings, xyz, fcidump).
  std::size_t source_count() const;
  /// Throws ValidationError on inconsistent settings.
  void validate() const;
  /// The configured directory, else $SFPDS_OUTPUT_DIR, else ".".
  std::string resolved_output_dir() const;
  SamplingOptions sampling() const;
};

/// Applies one key = value setting; unknown keys and bad values throw.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Flat "key = value" lines; '#' starts a comment. Errors name the line.
RunConfig parse_config(std::string_view text);
RunConfig read_config(const std::string& path);

/// The integral set named by the configuration; with no source given, the
/// default H4 chain (2 A spacings).
IntegralSet load_integrals(const RunConfig& cfg);

}  // namespace sfpds
