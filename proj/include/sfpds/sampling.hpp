#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sfpds/counts.hpp"
#include "sfpds/measurement.hpp"
#include "sfpds/statevector.hpp"

namespace sfpds {

/// Symmetric, independent readout bit flips.
struct NoiseModel {
  double spam_flip_probability = 0.0;  // p in [0, 0.5)
  std::uint64_t seed = 0;

  void validate() const;
};

/// Basis change applied in place of measurement-basis rotations.
StateVector apply_rotation(const StateVector& state, std::span<const BasisChange> changes);

/// Independent seed for stream `index` of a master seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Draws indices from a fixed discrete distribution; uniform variates come
/// from the top 53 bits of mt19937_64 so streams are platform independent.
class OutcomeSampler {
 public:
  explicit OutcomeSampler(std::span<const double> probabilities);
  std::uint64_t draw(std::uint64_t random_word) const;

 private:
  std::vector<double> cumulative_;
};

/// One execution of a packed batch: each slot's state is rotated into its
/// group basis and sampled on its own, the slot outcomes are concatenated
/// into one register word, then every bit flips with probability p.
/// `states` holds one state per slot (slot_width qubits each).
CountTable sample_batch(std::span<const StateVector> states, const PackedBatch& batch,
                        std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed);

/// A single group measured on its own register.
CountTable serial_sample(const StateVector& state, const QwcGroup& group, std::uint64_t shots,
                         const NoiseModel& noise, std::uint64_t seed);

}  // namespace sfpds
