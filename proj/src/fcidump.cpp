#include "sfpds/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "sfpds/error.hpp"

namespace sfpds {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ValidationError("FCIDUMP line " + std::to_string(line) + ": " + msg);
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Accepts Fortran D/d exponents.
double parse_value(std::string tok, std::size_t line) {
  std::replace_if(tok.begin(), tok.end(), [](char c) { return c == 'D' || c == 'd'; }, 'E');
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    fail(line, "non-numeric value '" + tok + "'");
  }
  if (used != tok.size() || !std::isfinite(v)) fail(line, "non-numeric value '" + tok + "'");
  return v;
}

long parse_index(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    fail(line, "non-integer index '" + tok + "'");
  }
  if (used != tok.size()) fail(line, "non-integer index '" + tok + "'");
  return v;
}

// Integer value of KEY=<int> in the flattened header, if present.
bool header_int(const std::string& header, const std::string& key, long& out) {
  std::size_t pos = 0;
  while ((pos = header.find(key, pos)) != std::string::npos) {
    const bool left_ok = pos == 0 || !std::isalnum(static_cast<unsigned char>(header[pos - 1]));
    std::size_t p = pos + key.size();
    while (p < header.size() && header[p] == ' ') ++p;
    if (left_ok && p < header.size() && header[p] == '=') {
      ++p;
      while (p < header.size() && header[p] == ' ') ++p;
      std::size_t end = p;
      if (end < header.size() && (header[end] == '-' || header[end] == '+')) ++end;
      while (end < header.size() && std::isdigit(static_cast<unsigned char>(header[end]))) ++end;
      if (end == p) return false;
      out = std::stol(header.substr(p, end - p));
      return true;
    }
    pos += key.size();
  }
  return false;
}

}  // namespace

IntegralSet parse_fcidump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  // Header: from "&FCI" to "&END" or "/".
  std::string header;
  bool started = false;
  bool ended = false;
  while (!ended && std::getline(in, line)) {
    ++line_no;
    std::string u = upper(line);
    if (!started) {
      const auto first = u.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (u.compare(first, 4, "&FCI") != 0) fail(line_no, "expected '&FCI' header");
      started = true;
      u = u.substr(first + 4);
    }
    for (const char* terminator : {"&END", "/"}) {
      const auto t = u.find(terminator);
      if (t != std::string::npos) {
        u.erase(t);
        ended = true;
        break;
      }
    }
    header += ' ' + u;
  }
  if (!started) fail(std::max<std::size_t>(line_no, 1), "expected '&FCI' header");
  if (!ended) fail(line_no, "header is not terminated by '&END' or '/'");

  long norb = 0;
  long nelec = 0;
  long ms2 = 0;
  if (!header_int(header, "NORB", norb) || norb <= 0) fail(1, "header lacks a positive NORB");
  if (!header_int(header, "NELEC", nelec) || nelec < 0) fail(1, "header lacks NELEC");
  header_int(header, "MS2", ms2);
  if (nelec > 2 * norb) fail(1, "NELEC exceeds 2*NORB");

  const auto n = static_cast<std::size_t>(norb);
  IntegralSet ints(n);
  ints.n_electrons = static_cast<std::size_t>(nelec);
  ints.ms2 = static_cast<int>(ms2);

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string vtok;
    if (!(ls >> vtok)) continue;
    std::string itok[4];
    for (auto& t : itok) {
      if (!(ls >> t)) fail(line_no, "expected 'value i j k l'");
    }
    std::string extra;
    if (ls >> extra) fail(line_no, "trailing text '" + extra + "'");
    const double v = parse_value(vtok, line_no);
    long idx[4];
    for (int a = 0; a < 4; ++a) {
      idx[a] = parse_index(itok[a], line_no);
      if (idx[a] < 0 || idx[a] > norb) fail(line_no, "index " + itok[a] + " out of range 0.." + std::to_string(norb));
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      ints.core_energy = v;
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      ints.one_body(i - 1, j - 1) = v;
      ints.one_body(j - 1, i - 1) = v;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      ints.set_eri(i - 1, j - 1, k - 1, l - 1, v);
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy record; not used
    } else {
      fail(line_no, "unsupported index pattern");
    }
  }
  return ints;
}

IntegralSet read_fcidump(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open FCIDUMP file '" + path.string() + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_fcidump(ss.str());
}

std::string format_fcidump(const IntegralSet& ints) {
  const std::size_t n = ints.n_orbitals();
  std::string out = "&FCI NORB=" + std::to_string(n) + ",NELEC=" + std::to_string(ints.n_electrons) +
                    ",MS2=" + std::to_string(ints.ms2) + ",\n ORBSYM=";
  for (std::size_t i = 0; i < n; ++i) out += "1,";
  out += "\n ISYM=1,\n&END\n";
  char buf[128];
  const auto rec = [&](double v, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    std::snprintf(buf, sizeof buf, "%24.17g %3zu %3zu %3zu %3zu\n", v, i, j, k, l);
    out += buf;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = ints.eri(i, j, k, l);
          if (v != 0.0) rec(v, i + 1, j + 1, k + 1, l + 1);
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (ints.one_body(i, j) != 0.0) rec(ints.one_body(i, j), i + 1, j + 1, 0, 0);
    }
  rec(ints.core_energy, 0, 0, 0, 0);
  return out;
}

void write_fcidump(const IntegralSet& ints, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write FCIDUMP file '" + path.string() + "'");
  f << format_fcidump(ints);
  if (!f) throw ComputationError("failed writing '" + path.string() + "'");
}

}  // namespace sfpds
