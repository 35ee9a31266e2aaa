#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sfpds {

/// Scalar phase picked up by a product of two Pauli strings: i^k, k = 0..3.
enum class Phase : std::uint8_t { kOne = 0, kI = 1, kMinusOne = 2, kMinusI = 3 };

std::complex<double> to_complex(Phase phase);
Phase operator*(Phase a, Phase b);

/**
 * Tensor product of single-qubit Paulis in binary symplectic form.
 *
 * Per qubit the (x, z) bit pair encodes I=(0,0), X=(1,0), Y=(1,1), Z=(0,1);
 * the string is the plain tensor product of those letters (no hidden phase).
 * Qubit q lives in bit q of both masks. Up to 64 qubits.
 */
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);
  PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  /// Parses a letter string such as "IXYZ"; qubit 0 is the leftmost letter.
  static PauliString parse(std::string_view letters);
  static PauliString single(std::size_t n_qubits, std::size_t qubit, char letter);

  std::size_t n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  std::uint64_t support() const { return x_ | z_; }
  bool is_identity() const { return (x_ | z_) == 0; }
  bool is_z_type() const { return x_ == 0; }
  std::size_t weight() const;
  char letter(std::size_t qubit) const;
  std::string to_string() const;

  /// Canonical order: lexicographic on (z_mask, x_mask), then width.
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.z_ <=> b.z_; c != 0) return c;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.n_qubits_ <=> b.n_qubits_;
  }
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept {
    std::uint64_t h = p.x_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= p.z_mask() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ p.n_qubits());
  }
};

/// a·b = phase · result, exactly.
std::pair<PauliString, Phase> multiply_strings(const PauliString& a, const PauliString& b);

/// Full commutation via the symplectic inner product.
bool commutes(const PauliString& a, const PauliString& b);

/// Letter-by-letter commutation: on each qubit the letters agree or one is I.
bool qubit_wise_commutes(const PauliString& a, const PauliString& b);

/// Dense 2^n x 2^n matrix of a string; basis index bit q is qubit q.
Eigen::MatrixXcd to_dense(const PauliString& p);

struct PauliTerm {
  PauliString string;
  std::complex<double> coefficient;
};

/**
 * Sparse complex-weighted sum of Pauli strings on a fixed register width.
 *
 * Terms are kept in canonical string order with no duplicates, and any term
 * whose |coefficient| falls below the drop tolerance is removed when the sum
 * is built. Values are immutable once constructed.
 */
class PauliSum {
 public:
  static constexpr double kDefaultDropTolerance = 1e-12;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits, double drop_tolerance = kDefaultDropTolerance);
  PauliSum(std::size_t n_qubits, std::span<const PauliTerm> terms,
           double drop_tolerance = kDefaultDropTolerance);

  static PauliSum identity(std::size_t n_qubits, std::complex<double> scale = 1.0);

  std::size_t n_qubits() const { return n_qubits_; }
  double drop_tolerance() const { return drop_tolerance_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::span<const PauliTerm> terms() const { return terms_; }

  /// Zero when the string is not present.
  std::complex<double> coefficient(const PauliString& p) const;
  bool contains(const PauliString& p) const;

  /// True when every coefficient has |Im| <= tol.
  bool has_real_coefficients(double tol = 1e-12) const;
  /// Largest |coefficient|, 0 for an empty sum.
  double max_abs_coefficient() const;

  std::vector<PauliString> strings() const;
  Eigen::MatrixXcd to_dense() const;

  /// Re-applies a (possibly different) drop tolerance.
  PauliSum pruned(double drop_tolerance) const;
  /// Drops imaginary parts; callers use it once Hermiticity has been checked.
  PauliSum real_part() const;

  /// One `coeff * LETTERS` record per line, canonical order.
  std::string to_text() const;
  static PauliSum parse_text(std::string_view text,
                             double drop_tolerance = kDefaultDropTolerance);

  friend PauliSum operator+(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator-(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(std::complex<double> s, const PauliSum& a);

 private:
  friend class PauliSumBuilder;

  std::size_t n_qubits_ = 0;
  double drop_tolerance_ = kDefaultDropTolerance;
  std::vector<PauliTerm> terms_;
};

/// Accumulates terms in a hash map; build() merges, prunes and sorts.
class PauliSumBuilder {
 public:
  explicit PauliSumBuilder(std::size_t n_qubits,
                           double drop_tolerance = PauliSum::kDefaultDropTolerance);

  void add(const PauliString& p, std::complex<double> c);
  void add(const PauliSum& s, std::complex<double> scale = 1.0);
  std::size_t pending_size() const { return acc_.size(); }
  PauliSum build() const;

 private:
  std::size_t n_qubits_;
  double drop_tolerance_;
  std::unordered_map<PauliString, std::complex<double>, PauliStringHash> acc_;
};

/// Distributes a·b, merging like strings; output uses a's drop tolerance.
PauliSum multiply_sums(const PauliSum& a, const PauliSum& b);
PauliSum operator*(const PauliSum& a, const PauliSum& b);

/// Formats one coefficient the way PauliSum::to_text does.
std::string format_coefficient(std::complex<double> c);

}  // namespace sfpds
