#include "sfpds/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "sfpds/error.hpp"

namespace sfpds {

namespace {

std::uint64_t width_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_width(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ValidationError("Pauli strings act on different qubit counts (" +
                          std::to_string(a.n_qubits()) + " vs " +
                          std::to_string(b.n_qubits()) + ")");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) {
  s = trim(s);
  std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw ValidationError("not a number: '" + buf + "'");
  }
  return v;
}

std::complex<double> parse_coefficient(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ValidationError("unterminated complex coefficient");
    s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ValidationError("complex coefficient needs (re,im)");
    return {parse_double(s.substr(0, comma)), parse_double(s.substr(comma + 1))};
  }
  return {parse_double(s), 0.0};
}

}  // namespace

std::complex<double> to_complex(Phase phase) {
  switch (phase) {
    case Phase::kOne: return {1.0, 0.0};
    case Phase::kI: return {0.0, 1.0};
    case Phase::kMinusOne: return {-1.0, 0.0};
    case Phase::kMinusI: return {0.0, -1.0};
  }
  return {1.0, 0.0};
}

Phase operator*(Phase a, Phase b) {
  return static_cast<Phase>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 3U);
}

PauliString::PauliString(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > kMaxQubits) throw ValidationError("at most 64 qubits are supported");
}

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
  if (n_qubits > kMaxQubits) throw ValidationError("at most 64 qubits are supported");
  if (((x_mask | z_mask) & ~width_mask(n_qubits)) != 0) {
    throw ValidationError("Pauli masks set bits beyond the register width");
  }
}

PauliString PauliString::parse(std::string_view letters) {
  letters = trim(letters);
  PauliString p(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (letters[q]) {
      case 'I': break;
      case 'X': p.x_ |= bit; break;
      case 'Y': p.x_ |= bit; p.z_ |= bit; break;
      case 'Z': p.z_ |= bit; break;
      default:
        throw ValidationError(std::string("invalid Pauli letter '") + letters[q] + "'");
    }
  }
  return p;
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, char letter) {
  if (qubit >= n_qubits) throw ValidationError("qubit index out of range");
  std::string s(n_qubits, 'I');
  s[qubit] = letter;
  return parse(s);
}

std::size_t PauliString::weight() const { return std::popcount(x_ | z_); }

char PauliString::letter(std::size_t qubit) const {
  const bool x = (x_ >> qubit) & 1U;
  const bool z = (z_ >> qubit) & 1U;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::to_string() const {
  std::string s(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) s[q] = letter(q);
  return s;
}

std::pair<PauliString, Phase> multiply_strings(const PauliString& a, const PauliString& b) {
  require_same_width(a, b);
  const std::uint64_t ax = a.x_mask() & ~a.z_mask();
  const std::uint64_t ay = a.x_mask() & a.z_mask();
  const std::uint64_t az = ~a.x_mask() & a.z_mask();
  const std::uint64_t bx = b.x_mask() & ~b.z_mask();
  const std::uint64_t by = b.x_mask() & b.z_mask();
  const std::uint64_t bz = ~b.x_mask() & b.z_mask();
  // XY = iZ, YZ = iX, ZX = iY; reversed orders pick up -i.
  const int plus = std::popcount((ax & by) | (ay & bz) | (az & bx));
  const int minus = std::popcount((ay & bx) | (az & by) | (ax & bz));
  const auto phase = static_cast<Phase>(static_cast<unsigned>(plus - minus) & 3U);
  return {PauliString(a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask()), phase};
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_width(a, b);
  const std::uint64_t sym = (a.x_mask() & b.z_mask()) ^ (a.z_mask() & b.x_mask());
  return (std::popcount(sym) & 1) == 0;
}

bool qubit_wise_commutes(const PauliString& a, const PauliString& b) {
  require_same_width(a, b);
  const std::uint64_t both = a.support() & b.support();
  const std::uint64_t differ = (a.x_mask() ^ b.x_mask()) | (a.z_mask() ^ b.z_mask());
  return (both & differ) == 0;
}

Eigen::MatrixXcd to_dense(const PauliString& p) {
  if (p.n_qubits() > 14) throw ValidationError("dense conversion limited to 14 qubits");
  const std::size_t dim = std::size_t{1} << p.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  // P|k> = i^{#Y} (-1)^{|k & z|} |k ^ x>
  const std::complex<double> y_phase =
      to_complex(static_cast<Phase>(std::popcount(p.x_mask() & p.z_mask()) & 3));
  for (std::size_t k = 0; k < dim; ++k) {
    const double sign = (std::popcount(k & p.z_mask()) & 1) ? -1.0 : 1.0;
    m(k ^ p.x_mask(), k) = y_phase * sign;
  }
  return m;
}

// ---------------------------------------------------------------------------

PauliSum::PauliSum(std::size_t n_qubits, double drop_tolerance)
    : n_qubits_(n_qubits), drop_tolerance_(drop_tolerance) {
  if (n_qubits > PauliString::kMaxQubits) throw ValidationError("at most 64 qubits are supported");
  if (!(drop_tolerance >= 0.0)) throw ValidationError("drop tolerance must be non-negative");
}

PauliSum::PauliSum(std::size_t n_qubits, std::span<const PauliTerm> terms, double drop_tolerance)
    : PauliSum(n_qubits, drop_tolerance) {
  PauliSumBuilder b(n_qubits, drop_tolerance);
  for (const auto& t : terms) b.add(t.string, t.coefficient);
  *this = b.build();
}

PauliSum PauliSum::identity(std::size_t n_qubits, std::complex<double> scale) {
  const PauliTerm t{PauliString(n_qubits), scale};
  return PauliSum(n_qubits, std::span<const PauliTerm>(&t, 1));
}

std::complex<double> PauliSum::coefficient(const PauliString& p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const PauliTerm& t, const PauliString& s) { return t.string < s; });
  if (it != terms_.end() && it->string == p) return it->coefficient;
  return {0.0, 0.0};
}

bool PauliSum::contains(const PauliString& p) const {
  return std::binary_search(terms_.begin(), terms_.end(), PauliTerm{p, {}},
                            [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });
}

bool PauliSum::has_real_coefficients(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const PauliTerm& t) { return std::abs(t.coefficient.imag()) <= tol; });
}

double PauliSum::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient));
  return m;
}

std::vector<PauliString> PauliSum::strings() const {
  std::vector<PauliString> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.string);
  return out;
}

Eigen::MatrixXcd PauliSum::to_dense() const {
  if (n_qubits_ > 14) throw ValidationError("dense conversion limited to 14 qubits");
  const std::size_t dim = std::size_t{1} << n_qubits_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : terms_) {
    const auto& p = t.string;
    const std::complex<double> y_phase =
        to_complex(static_cast<Phase>(std::popcount(p.x_mask() & p.z_mask()) & 3));
    for (std::size_t k = 0; k < dim; ++k) {
      const double sign = (std::popcount(k & p.z_mask()) & 1) ? -1.0 : 1.0;
      m(k ^ p.x_mask(), k) += t.coefficient * y_phase * sign;
    }
  }
  return m;
}

PauliSum PauliSum::pruned(double drop_tolerance) const {
  return PauliSum(n_qubits_, terms_, drop_tolerance);
}

PauliSum PauliSum::real_part() const {
  std::vector<PauliTerm> re;
  re.reserve(terms_.size());
  for (const auto& t : terms_) re.push_back({t.string, {t.coefficient.real(), 0.0}});
  return PauliSum(n_qubits_, re, drop_tolerance_);
}

std::string format_coefficient(std::complex<double> c) {
  char buf[96];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
  } else {
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", c.real(), c.imag());
  }
  return buf;
}

std::string PauliSum::to_text() const {
  std::string out;
  for (const auto& t : terms_) {
    out += format_coefficient(t.coefficient);
    out += " * ";
    out += t.string.to_string();
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::parse_text(std::string_view text, double drop_tolerance) {
  std::vector<PauliTerm> terms;
  std::size_t width = 0;
  bool have_width = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    const auto star = sv.rfind('*');
    if (star == std::string_view::npos) {
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'coeff * LETTERS'");
    }
    try {
      const auto coeff = parse_coefficient(sv.substr(0, star));
      const auto string = PauliString::parse(sv.substr(star + 1));
      if (!have_width) {
        width = string.n_qubits();
        have_width = true;
      } else if (string.n_qubits() != width) {
        throw ValidationError("inconsistent string width");
      }
      terms.push_back({string, coeff});
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_width) throw ValidationError("no Pauli terms found");
  return PauliSum(width, terms, drop_tolerance);
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw ValidationError("Pauli sums act on different qubit counts");
  PauliSumBuilder acc(a.n_qubits(), a.drop_tolerance());
  acc.add(a);
  acc.add(b);
  return acc.build();
}

PauliSum operator-(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw ValidationError("Pauli sums act on different qubit counts");
  PauliSumBuilder acc(a.n_qubits(), a.drop_tolerance());
  acc.add(a);
  acc.add(b, -1.0);
  return acc.build();
}

PauliSum operator*(std::complex<double> s, const PauliSum& a) {
  PauliSumBuilder acc(a.n_qubits(), a.drop_tolerance());
  acc.add(a, s);
  return acc.build();
}

// ---------------------------------------------------------------------------

PauliSumBuilder::PauliSumBuilder(std::size_t n_qubits, double drop_tolerance)
    : n_qubits_(n_qubits), drop_tolerance_(drop_tolerance) {}

void PauliSumBuilder::add(const PauliString& p, std::complex<double> c) {
  if (p.n_qubits() != n_qubits_) throw ValidationError("term width does not match the sum");
  acc_[p] += c;
}

void PauliSumBuilder::add(const PauliSum& s, std::complex<double> scale) {
  if (s.n_qubits() != n_qubits_) throw ValidationError("term width does not match the sum");
  for (const auto& t : s.terms()) acc_[t.string] += scale * t.coefficient;
}

PauliSum PauliSumBuilder::build() const {
  PauliSum out(n_qubits_, drop_tolerance_);
  out.terms_.reserve(acc_.size());
  for (const auto& [p, c] : acc_) {
    if (std::abs(c) >= drop_tolerance_ && std::abs(c) > 0.0) out.terms_.push_back({p, c});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });
  return out;
}

PauliSum multiply_sums(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw ValidationError("Pauli sums act on different qubit counts");
  PauliSumBuilder acc(a.n_qubits(), a.drop_tolerance());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      auto [p, phase] = multiply_strings(ta.string, tb.string);
      acc.add(p, to_complex(phase) * ta.coefficient * tb.coefficient);
    }
  }
  return acc.build();
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) { return multiply_sums(a, b); }

}  // namespace sfpds
