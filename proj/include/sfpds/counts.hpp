#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace sfpds {

/// Measurement histogram over n-bit outcomes (bit q = qubit q).
class CountTable {
 public:
  CountTable() = default;
  explicit CountTable(std::size_t n_bits);

  std::size_t n_bits() const { return n_bits_; }
  std::uint64_t shots() const { return shots_; }
  const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }

  void add(std::uint64_t outcome, std::uint64_t count = 1);
  std::uint64_t count(std::uint64_t outcome) const;

  /// "bitstring count" per line, qubit 0 leftmost, ascending bitstring order.
  std::string to_text() const;
  static CountTable parse_text(std::string_view text);

 private:
  std::size_t n_bits_ = 0;
  std::uint64_t shots_ = 0;
  std::map<std::uint64_t, std::uint64_t> counts_;
};

/// Sparse probability distribution over n-bit outcomes.
struct ProbabilityTable {
  std::size_t n_bits = 0;
  std::map<std::uint64_t, double> probabilities;

  double total() const;
  double probability(std::uint64_t outcome) const;

  /// Relative frequencies of a histogram.
  static ProbabilityTable from_counts(const CountTable& counts);

  /// Distribution of the `width` bits starting at `offset`.
  ProbabilityTable marginal(std::size_t offset, std::size_t width) const;

  /// "bitstring probability" per line with %.17g values.
  std::string to_text() const;
  static ProbabilityTable parse_text(std::string_view text);
};

}  // namespace sfpds
