#include "sfpds/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sfpds/error.hpp"

namespace sfpds {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double to_unit(std::uint64_t word) { return static_cast<double>(word >> 11) * 0x1.0p-53; }

// Flips each of n_bits with probability p, drawing one variate per bit.
std::uint64_t flip_bits(std::uint64_t outcome, std::size_t n_bits, double p, std::mt19937_64& rng) {
  for (std::size_t q = 0; q < n_bits; ++q) {
    if (to_unit(rng()) < p) outcome ^= std::uint64_t{1} << q;
  }
  return outcome;
}

}  // namespace

void NoiseModel::validate() const {
  if (!(spam_flip_probability >= 0.0 && spam_flip_probability < 0.5)) {
    throw ValidationError("SPAM flip probability must lie in [0, 0.5)");
  }
}

StateVector apply_rotation(const StateVector& state, std::span<const BasisChange> changes) {
  if (changes.size() != state.n_qubits()) throw ValidationError("rotation width differs from the state");
  std::vector<std::complex<double>> a(state.amplitudes().begin(), state.amplitudes().end());
  const double r = std::numbers::sqrt2 / 2.0;
  const std::complex<double> minus_i(0.0, -1.0);
  for (std::size_t q = 0; q < changes.size(); ++q) {
    if (changes[q] == BasisChange::kNone) continue;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k & bit) continue;
      std::complex<double> a0 = a[k];
      std::complex<double> a1 = a[k | bit];
      if (changes[q] == BasisChange::kSdgThenH) a1 *= minus_i;
      a[k] = r * (a0 + a1);
      a[k | bit] = r * (a0 - a1);
    }
  }
  return StateVector::normalized(std::move(a));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

OutcomeSampler::OutcomeSampler(std::span<const double> probabilities) {
  if (probabilities.empty()) throw ValidationError("empty distribution");
  cumulative_.reserve(probabilities.size());
  double acc = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw ValidationError("negative probability");
    acc += p;
    cumulative_.push_back(acc);
  }
  if (!(acc > 0.0)) throw ValidationError("distribution has zero mass");
  for (double& c : cumulative_) c /= acc;
  cumulative_.back() = 1.0;
}

std::uint64_t OutcomeSampler::draw(std::uint64_t random_word) const {
  const double u = to_unit(random_word);
  // First entry whose cumulative mass exceeds u; zero-mass entries never qualify.
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return std::min<std::uint64_t>(static_cast<std::uint64_t>(it - cumulative_.begin()),
                                 cumulative_.size() - 1);
}

CountTable sample_batch(std::span<const StateVector> states, const PackedBatch& batch,
                        std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed) {
  noise.validate();
  if (shots == 0) throw ValidationError("shot count must be positive");
  if (states.size() != batch.slots.size()) {
    throw ValidationError("need one state per slot (" + std::to_string(batch.slots.size()) + ")");
  }
  std::vector<OutcomeSampler> samplers;
  samplers.reserve(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (states[s].n_qubits() != batch.slot_width) {
      throw ValidationError("slot states must have " + std::to_string(batch.slot_width) + " qubits");
    }
    const auto rotated = apply_rotation(states[s], rotation_circuit(batch.slots[s].group));
    samplers.emplace_back(rotated.probabilities());
  }

  std::mt19937_64 rng(seed);
  const double p = noise.spam_flip_probability;
  CountTable counts(batch.register_width);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    std::uint64_t word = 0;
    for (std::size_t s = 0; s < samplers.size(); ++s) {
      word |= samplers[s].draw(rng()) << batch.slots[s].offset;
    }
    if (p > 0.0) word = flip_bits(word, batch.register_width, p, rng);
    counts.add(word);
  }
  return counts;
}

CountTable serial_sample(const StateVector& state, const QwcGroup& group, std::uint64_t shots,
                         const NoiseModel& noise, std::uint64_t seed) {
  const std::size_t width = group.rotation.n_qubits();
  if (state.n_qubits() != width) throw ValidationError("state width differs from the group");
  PackedBatch single{{{group, 0}}, width, width};
  return sample_batch(std::span<const StateVector>(&state, 1), single, shots, noise, seed);
}

}  // namespace sfpds
