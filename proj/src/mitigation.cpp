#include "sfpds/mitigation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "sfpds/error.hpp"

namespace sfpds {

namespace {

constexpr std::size_t kDenseLimit = 24;

// In-place action of the same 2x2 matrix [[d, o], [o, d]] on every bit.
void tensor_apply(std::vector<double>& v, std::size_t n_bits, double d, double o) {
  for (std::size_t q = 0; q < n_bits; ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k & bit) continue;
      const double v0 = v[k];
      const double v1 = v[k | bit];
      v[k] = d * v0 + o * v1;
      v[k | bit] = o * v0 + d * v1;
    }
  }
}

ProbabilityTable clip_and_normalize(ProbabilityTable t) {
  double total = 0.0;
  for (auto& [k, p] : t.probabilities) {
    p = std::max(p, 0.0);
    total += p;
  }
  if (!(total > 0.0)) throw ComputationError("mitigated distribution has no positive mass");
  for (auto& [k, p] : t.probabilities) p /= total;
  return t;
}

}  // namespace

void MitigationConfig::validate() const {
  if (!(p >= 0.0 && p < 0.5)) {
    throw ValidationError("mitigation needs 0 <= p < 0.5 (the channel is singular at p = 0.5)");
  }
}

ProbabilityTable mitigate(const ProbabilityTable& observed, const MitigationConfig& cfg) {
  cfg.validate();
  if (observed.probabilities.empty()) throw ValidationError("cannot mitigate an empty distribution");
  const std::size_t n = observed.n_bits;
  const double diag = (1.0 - cfg.p) / (1.0 - 2.0 * cfg.p);
  const double off = -cfg.p / (1.0 - 2.0 * cfg.p);

  ProbabilityTable out;
  out.n_bits = n;
  if (cfg.p == 0.0) {
    out.probabilities = observed.probabilities;
    return clip_and_normalize(std::move(out));
  }

  const double support = static_cast<double>(observed.probabilities.size());
  const bool dense = n <= kDenseLimit && support * support > static_cast<double>(n) * std::ldexp(1.0, static_cast<int>(n));
  if (dense) {
    // Unobserved entries are zero, so the full transform restricted to the
    // support equals the sum over observed strings only.
    std::vector<double> v(std::size_t{1} << n, 0.0);
    for (const auto& [k, p] : observed.probabilities) v[k] = p;
    tensor_apply(v, n, diag, off);
    for (const auto& [k, p] : observed.probabilities) out.probabilities[k] = v[k];
  } else {
    std::vector<double> weight(n + 1);  // a^{n-d} b^d by Hamming distance d
    for (std::size_t d = 0; d <= n; ++d) {
      weight[d] = std::pow(diag, static_cast<double>(n - d)) * std::pow(off, static_cast<double>(d));
    }
    for (const auto& [i, pi] : observed.probabilities) {
      double acc = 0.0;
      for (const auto& [j, pj] : observed.probabilities) acc += weight[std::popcount(i ^ j)] * pj;
      out.probabilities[i] = acc;
    }
  }
  return clip_and_normalize(std::move(out));
}

ProbabilityTable mitigate(const CountTable& counts, const MitigationConfig& cfg) {
  return mitigate(ProbabilityTable::from_counts(counts), cfg);
}

ProbabilityTable apply_spam_channel(const ProbabilityTable& clean, double p) {
  if (!(p >= 0.0 && p <= 0.5)) throw ValidationError("flip probability must lie in [0, 0.5]");
  const std::size_t n = clean.n_bits;
  if (n == 0 || n > kDenseLimit) throw ValidationError("forward channel supports 1..24 bits");
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (const auto& [k, q] : clean.probabilities) v[k] = q;
  tensor_apply(v, n, 1.0 - p, p);
  ProbabilityTable out;
  out.n_bits = n;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] > 0.0) out.probabilities[k] = v[k];
  }
  return out;
}

}  // namespace sfpds
