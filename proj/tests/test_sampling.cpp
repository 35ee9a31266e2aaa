#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "h4_fixture.hpp"
#include "sfpds/error.hpp"
#include "sfpds/measurement.hpp"
#include "sfpds/sampling.hpp"

namespace sfpds {
namespace {

using cd = std::complex<double>;

QwcGroup single_group(std::initializer_list<const char*> letters) {
  std::vector<PauliString> s;
  for (const char* l : letters) s.push_back(PauliString::parse(l));
  const auto g = group_qwc(s);
  EXPECT_EQ(g.size(), 1u);
  return g.front();
}

StateVector random_state(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cd> a(std::size_t{1} << n);
  for (auto& x : a) x = cd(g(rng), g(rng));
  return StateVector::normalized(a);
}

TEST(Seeds, DerivedSeedsAreDistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(12345, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
  EXPECT_NE(derive_seed(1, 2), derive_seed(2, 1));
}

TEST(Sampler, InvertsCumulativeDistribution) {
  const double p[] = {0.25, 0.0, 0.75};
  const OutcomeSampler s(p);
  EXPECT_EQ(s.draw(0), 0u);
  EXPECT_EQ(s.draw(~std::uint64_t{0}), 2u);
  EXPECT_EQ(s.draw(std::uint64_t{1} << 63), 2u);  // u = 0.5
  EXPECT_THROW(OutcomeSampler(std::vector<double>{}), ValidationError);
  EXPECT_THROW(OutcomeSampler(std::vector<double>{0.5, -0.1}), ValidationError);
}

TEST(Sampling, SameSeedSameCounts) {
  const StateVector psi = random_state(3, 1);
  const QwcGroup g = single_group({"XXI", "IXZ"});
  const NoiseModel noise{0.01, 0};
  const CountTable a = serial_sample(psi, g, 5000, noise, 99);
  const CountTable b = serial_sample(psi, g, 5000, noise, 99);
  const CountTable c = serial_sample(psi, g, 5000, noise, 100);
  EXPECT_EQ(a.counts(), b.counts());
  EXPECT_NE(a.counts(), c.counts());
  EXPECT_EQ(a.shots(), 5000u);
}

TEST(Sampling, NoiselessBasisStateIsDeterministic) {
  const StateVector zero = StateVector::basis(5, 0);
  const QwcGroup g = single_group({"ZZIII", "IIZIZ"});
  const CountTable c = serial_sample(zero, g, 1000, NoiseModel{}, 3);
  ASSERT_EQ(c.counts().size(), 1u);
  EXPECT_EQ(c.count(0), 1000u);
}

TEST(Sampling, BitFlipRateMatchesNoiseModel) {
  const StateVector zero = StateVector::basis(4, 0);
  const QwcGroup g = single_group({"ZZZZ"});
  const double p = 0.1;
  const std::uint64_t shots = 100'000;
  const CountTable c = serial_sample(zero, g, shots, NoiseModel{p, 0}, 5);
  for (std::size_t q = 0; q < 4; ++q) {
    std::uint64_t flips = 0;
    for (const auto& [o, n] : c.counts())
      if ((o >> q) & 1) flips += n;
    const double sigma = std::sqrt(p * (1 - p) / shots);
    EXPECT_NEAR(static_cast<double>(flips) / shots, p, 5 * sigma) << q;
  }
  EXPECT_THROW(serial_sample(zero, g, shots, NoiseModel{0.5, 0}, 5), ValidationError);
}

TEST(Sampling, EstimatesWithinFiveSigma) {
  const StateVector psi = random_state(3, 2);
  const QwcGroup g = single_group({"XYZ", "XII", "IYZ", "XYI"});
  const std::uint64_t shots = 200'000;
  const auto est = expectations_from_counts(serial_sample(psi, g, shots, NoiseModel{}, 17), g);
  for (const auto& p : g.members) {
    const double exact = expectation(p, psi).real();
    const double sigma = std::sqrt(std::max(1e-12, 1 - exact * exact) / shots);
    EXPECT_NEAR(est.at(p), exact, 5 * sigma) << p.to_string();
  }
}

TEST(Sampling, BatchConcatenatesSlotOutcomes) {
  const auto& m = testing::h4_sector(SpinSector::kSinglet);
  PowerCache cache(m.tapered_hamiltonian);
  const auto groups = group_qwc(unique_strings(cache, 3));
  // only Z-type groups leave a basis state deterministic
  std::vector<QwcGroup> z;
  for (const auto& g : groups)
    if (g.rotation.is_z_type()) z.push_back(g);
  ASSERT_FALSE(z.empty());
  while (z.size() < 4) z.push_back(z.front());
  z.resize(4);
  const auto batch = pack_batches(z).front();
  const std::uint64_t patterns[] = {0b00001, 0b10010, 0b11111, 0b00100};
  std::vector<StateVector> states;
  std::uint64_t expected = 0;
  for (std::size_t s = 0; s < 4; ++s) {
    states.push_back(StateVector::basis(5, patterns[s]));
    expected |= patterns[s] << (5 * s);
  }
  const CountTable c = sample_batch(states, batch, 100, NoiseModel{}, 1);
  ASSERT_EQ(c.counts().size(), 1u);
  EXPECT_EQ(c.count(expected), 100u);
  EXPECT_EQ(c.n_bits(), 20u);
  states.pop_back();
  EXPECT_THROW(sample_batch(states, batch, 100, NoiseModel{}, 1), ValidationError);
}

TEST(Sampling, SerialAndParallelEstimatesAgreeWithExact) {
  const auto& m = testing::h4_sector(SpinSector::kTriplet);
  PowerCache cache(m.tapered_hamiltonian);
  const auto groups = group_qwc(unique_strings(cache, 3));
  for (Mode mode : {Mode::kSerial, Mode::kParallel}) {
    SamplingOptions o;
    o.mode = mode;
    o.shots = 20'000;
    o.seed = 4;
    const auto est = estimate_expectations(m.tapered_state, groups, o);
    EXPECT_EQ(est.circuits, mode == Mode::kSerial ? groups.size() : (groups.size() + 3) / 4);
    std::size_t total = 0;
    for (const auto& g : groups) total += g.members.size();
    ASSERT_EQ(est.values.size(), total);
    for (const auto& [p, v] : est.values) {
      const double exact = expectation(p, m.tapered_state).real();
      const double sigma = std::sqrt(std::max(1e-12, 1 - exact * exact) / o.shots);
      EXPECT_NEAR(v, exact, 5 * sigma + 1e-12) << p.to_string();
    }
    const auto again = estimate_expectations(m.tapered_state, groups, o);
    EXPECT_EQ(again.values, est.values);
  }
}

TEST(Sampling, ExactModeMomentsMatchSampledLimit) {
  const auto& m = testing::h4_sector(SpinSector::kSinglet);
  SamplingOptions o;
  o.mode = Mode::kExact;
  const auto r = sampled_pds(m, 4, o);
  const auto ref = pds_energies(m.tapered_hamiltonian, m.tapered_state, 4);
  EXPECT_NEAR(r.pds.roots[0], ref.roots[0], 1e-10);
}

}  // namespace
}  // namespace sfpds
