#include "sfpds/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sfpds/error.hpp"
#include "sfpds/fcidump.hpp"

namespace sfpds {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ValidationError("invalid value for " + std::string(key) + ": '" + std::string(v) + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(out)) throw ValidationError(std::string(key) + " must be finite");
  }
  return out;
}

std::vector<double> parse_list(std::string_view key, std::string_view v) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= v.size()) {
    const auto comma = v.find(',', start);
    const auto item = trim(v.substr(start, comma == std::string_view::npos ? v.npos : comma - start));
    if (item.empty()) throw ValidationError("empty entry in " + std::string(key));
    out.push_back(parse_number<double>(key, item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::size_t RunConfig::source_count() const {
  return static_cast<std::size_t>(spacings.has_value()) + xyz_path.has_value() + fcidump_path.has_value();
}

void RunConfig::validate() const {
  if (source_count() > 1) {
    throw ValidationError("give exactly one Hamiltonian source (spacings, xyz or fcidump)");
  }
  if (k_max < 1) throw ValidationError("k_max must be at least 1");
  if (mode != Mode::kExact && shots < 1) throw ValidationError("shots must be at least 1 when sampling");
  if (!(spam_p >= 0.0 && spam_p < 0.5)) throw ValidationError("spam_p must lie in [0, 0.5)");
  if (mitigation_p && !(*mitigation_p >= 0.0 && *mitigation_p < 0.5)) {
    throw ValidationError("mitigation_p must lie in [0, 0.5)");
  }
}

std::string RunConfig::resolved_output_dir() const {
  if (output_dir) return *output_dir;
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
  return ".";
}

SamplingOptions RunConfig::sampling() const {
  SamplingOptions o;
  o.mode = mode;
  o.shots = shots;
  o.seed = seed;
  o.spam_p = spam_p;
  o.mitigation_p = mitigation_p;
  return o;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "spacings") {
    cfg.spacings = parse_list(key, value);
  } else if (key == "xyz") {
    cfg.xyz_path = std::string(value);
  } else if (key == "fcidump") {
    cfg.fcidump_path = std::string(value);
  } else if (key == "k_max") {
    cfg.k_max = parse_number<std::size_t>(key, value);
  } else if (key == "shots") {
    cfg.shots = parse_number<std::uint64_t>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "spam_p") {
    cfg.spam_p = parse_number<double>(key, value);
  } else if (key == "mitigation_p") {
    if (value == "none" || value.empty()) {
      cfg.mitigation_p.reset();
    } else {
      cfg.mitigation_p = parse_number<double>(key, value);
    }
  } else if (key == "mode") {
    cfg.mode = parse_mode(value);
  } else if (key == "output_dir") {
    cfg.output_dir = std::string(value);
  } else {
    throw ValidationError("unknown configuration key '" + std::string(key) + "'");
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view l = line;
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    try {
      apply_setting(cfg, trim(l.substr(0, eq)), l.substr(eq + 1));
    } catch (const ValidationError& e) {
      throw ValidationError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

IntegralSet load_integrals(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.fcidump_path) return read_fcidump(*cfg.fcidump_path);
  Geometry g;
  if (cfg.xyz_path) {
    std::ifstream f(*cfg.xyz_path);
    if (!f) throw ValidationError("cannot open geometry file '" + *cfg.xyz_path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    g = parse_xyz(ss.str());
  } else {
    const std::vector<double> spacings = cfg.spacings.value_or(std::vector<double>{2.0, 2.0, 2.0});
    g = build_h_chain(spacings);
  }
  IntegralSet ints = compute_integrals(g);
  return ints;
}

}  // namespace sfpds
