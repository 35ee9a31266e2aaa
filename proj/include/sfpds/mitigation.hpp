#pragma once

#include <cstddef>

#include "sfpds/counts.hpp"

namespace sfpds {

/// Which outcomes the inverse channel is evaluated on.
enum class SupportPolicy {
  kObserved,  // only strings with nonzero observed probability
};

struct MitigationConfig {
  double p = 0.0;  // symmetric bit-flip probability, [0, 0.5)
  SupportPolicy support_policy = SupportPolicy::kObserved;

  void validate() const;
};

/// Inverse of the tensored readout channel restricted to the observed support.
///
/// Each bit's inverse matrix has (1-p)/(1-2p) on the diagonal and -p/(1-2p)
/// off it, so the entry for strings i, j at Hamming distance d is
/// a^{n-d} b^d. Negative results are clipped to zero and the table is
/// renormalized to sum 1.
ProbabilityTable mitigate(const ProbabilityTable& observed, const MitigationConfig& cfg);
ProbabilityTable mitigate(const CountTable& counts, const MitigationConfig& cfg);

/// Exact push-forward of a distribution through the independent flip channel
/// (every outcome reachable by flips gets mass). Dense in 2^n; n <= 24.
ProbabilityTable apply_spam_channel(const ProbabilityTable& clean, double p);

}  // namespace sfpds
