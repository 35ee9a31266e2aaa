#include <gtest/gtest.h>

#include <random>
#include <set>

#include "h4_fixture.hpp"
#include "sfpds/counts.hpp"
#include "sfpds/error.hpp"
#include "sfpds/measurement.hpp"
#include "sfpds/sampling.hpp"

namespace sfpds {
namespace {

using cd = std::complex<double>;

std::vector<PauliString> parse_all(std::initializer_list<const char*> letters) {
  std::vector<PauliString> out;
  for (const char* l : letters) out.push_back(PauliString::parse(l));
  return out;
}

ProbabilityTable rotated_distribution(const StateVector& s, const QwcGroup& g) {
  const StateVector r = apply_rotation(s, rotation_circuit(g));
  ProbabilityTable t{s.n_qubits(), {}};
  const auto p = r.probabilities();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > 0.0) t.probabilities[i] = p[i];
  return t;
}

StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cd> a(std::size_t{1} << n);
  for (auto& x : a) x = cd(g(rng), g(rng));
  return StateVector::normalized(a);
}

void expect_valid_partition(const std::vector<PauliString>& input, const std::vector<QwcGroup>& groups) {
  std::multiset<PauliString> seen;
  for (const auto& g : groups) {
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      seen.insert(g.members[i]);
      for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(qubit_wise_commutes(g.members[i], g.members[j]));
      for (std::size_t q = 0; q < g.members[i].n_qubits(); ++q) {
        const char c = g.members[i].letter(q);
        if (c != 'I') {
          EXPECT_EQ(g.rotation.letter(q), c);
        }
      }
    }
  }
  EXPECT_EQ(seen, std::multiset<PauliString>(input.begin(), input.end()));
}

TEST(Qwc, MergesCompatibleStrings) {
  const auto s = parse_all({"XI", "IX", "XX"});
  const auto g = group_qwc(s);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].rotation.to_string(), "XX");
  EXPECT_EQ(g[0].members.size(), 3u);
  EXPECT_EQ(g[0].members.front().to_string(), "XX");  // heaviest first
}

TEST(Qwc, SeparatesConflictingStrings) {
  const auto s = parse_all({"XX", "ZZ"});
  const auto g = group_qwc(s);
  EXPECT_EQ(g.size(), 2u);
  expect_valid_partition(s, g);
}

TEST(Qwc, RejectsIdentityAndMixedWidths) {
  EXPECT_THROW(group_qwc(parse_all({"II", "XZ"})), ValidationError);
  EXPECT_THROW(group_qwc(parse_all({"X", "XZ"})), ValidationError);
  EXPECT_TRUE(group_qwc(std::vector<PauliString>{}).empty());
}

TEST(Qwc, RandomSetsArePartitioned) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::uint64_t> m(0, 15);
  for (int trial = 0; trial < 20; ++trial) {
    std::set<PauliString> s;
    while (s.size() < 30) {
      PauliString p(4, m(rng), m(rng));
      if (!p.is_identity()) s.insert(p);
    }
    const std::vector<PauliString> v(s.begin(), s.end());
    const auto g1 = group_qwc(v);
    expect_valid_partition(v, g1);
    std::vector<PauliString> shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto g2 = group_qwc(shuffled);
    ASSERT_EQ(g1.size(), g2.size());  // independent of input order
    for (std::size_t i = 0; i < g1.size(); ++i) EXPECT_EQ(g1[i].members, g2[i].members);
  }
}

TEST(Rotation, CircuitLetters) {
  QwcGroup g;
  g.members = parse_all({"XYZI"});
  g.rotation = PauliString::parse("XYZI");
  const auto c = rotation_circuit(g);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], BasisChange::kHadamard);
  EXPECT_EQ(c[1], BasisChange::kSdgThenH);
  EXPECT_EQ(c[2], BasisChange::kNone);
  EXPECT_EQ(c[3], BasisChange::kNone);
}

TEST(Rotation, ReconstructsExpectationsOnRandomStates) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::uint64_t> m(0, 7);
  for (int trial = 0; trial < 20; ++trial) {
    std::set<PauliString> s;
    while (s.size() < 12) {
      PauliString p(3, m(rng), m(rng));
      if (!p.is_identity()) s.insert(p);
    }
    const std::vector<PauliString> v(s.begin(), s.end());
    const StateVector psi = random_state(3, rng);
    for (const auto& g : group_qwc(v)) {
      const auto est = expectations_from_distribution(rotated_distribution(psi, g), g);
      for (const auto& p : g.members) EXPECT_NEAR(est.at(p), expectation(p, psi).real(), 1e-10) << p.to_string();
    }
  }
}

TEST(Rotation, ReconstructsH4TaperedExpectations) {
  const auto& m = testing::h4_sector(SpinSector::kSinglet);
  PowerCache cache(m.tapered_hamiltonian);
  const auto groups = group_qwc(unique_strings(cache, 5));
  EXPECT_EQ(groups.size(), 122u);
  // a generic state exercises every basis
  std::mt19937_64 rng(8);
  const StateVector psi = random_state(5, rng);
  for (const auto& g : groups) {
    const auto est = expectations_from_distribution(rotated_distribution(psi, g), g);
    for (const auto& p : g.members) EXPECT_NEAR(est.at(p), expectation(p, psi).real(), 1e-10);
  }
}

TEST(Packing, BatchCountsAreCeilingOfGroupsOverFour) {
  for (auto sector : {SpinSector::kSinglet, SpinSector::kTriplet}) {
    PowerCache cache(testing::h4_sector(sector).tapered_hamiltonian);
    const auto groups = group_qwc(unique_strings(cache, 19));
    const auto batches = pack_batches(groups);
    EXPECT_EQ(batches.size(), (groups.size() + 3) / 4);
    EXPECT_EQ(batches.size(), sector == SpinSector::kSinglet ? 31u : 17u);
    std::size_t i = 0;
    for (const auto& b : batches) {
      for (std::size_t s = 0; s < b.slots.size(); ++s) {
        EXPECT_EQ(b.slots[s].offset, 5 * s);
        EXPECT_EQ(b.slots[s].group.members, groups[i++].members);
      }
    }
    EXPECT_EQ(i, groups.size());
  }
  std::vector<QwcGroup> four(4, group_qwc(parse_all({"XZIIY"}))[0]);
  EXPECT_EQ(pack_batches(four).size(), 1u);
  EXPECT_THROW(pack_batches(group_qwc(parse_all({"XZ"}))), ValidationError);
}

TEST(Packing, JointDistributionMarginalizesPerSlot) {
  const auto& m = testing::h4_sector(SpinSector::kTriplet);
  PowerCache cache(m.tapered_hamiltonian);
  const auto groups = group_qwc(unique_strings(cache, 3));
  const auto batches = pack_batches(groups);
  const PackedBatch& b = batches.front();
  ASSERT_EQ(b.slots.size(), 4u);
  // product distribution of the four rotated slot states
  std::map<std::uint64_t, double> joint{{0, 1.0}};
  for (std::size_t s = 0; s < 4; ++s) {
    const auto d = rotated_distribution(m.tapered_state, b.slots[s].group);
    std::map<std::uint64_t, double> next;
    for (const auto& [k, p] : joint)
      for (const auto& [o, q] : d.probabilities) next[k | (o << b.slots[s].offset)] += p * q;
    joint = std::move(next);
  }
  const auto est = expectations_from_distribution(ProbabilityTable{20, joint}, b);
  for (const auto& slot : b.slots)
    for (const auto& p : slot.group.members) EXPECT_NEAR(est.at(p), expectation(p, m.tapered_state).real(), 1e-10);
}

TEST(Counts, TextRoundTripAndErrors) {
  CountTable c(3);
  c.add(0b001, 5);
  c.add(0b110, 2);
  c.add(0b001);
  EXPECT_EQ(c.shots(), 8u);
  EXPECT_EQ(c.count(0b001), 6u);
  EXPECT_EQ(c.to_text(), "100 6\n011 2\n");
  const CountTable back = CountTable::parse_text(c.to_text());
  EXPECT_EQ(back.counts(), c.counts());
  EXPECT_THROW(CountTable::parse_text("10 1\n101 2\n"), ValidationError);
  EXPECT_THROW(CountTable::parse_text("101 -2\n"), ValidationError);
  EXPECT_THROW(CountTable::parse_text("1a1 2\n"), ValidationError);
  EXPECT_THROW(c.add(0b1000), ValidationError);
  try {
    CountTable::parse_text("101 2\nxyz\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Counts, MarginalsOfProductHistogram) {
  const double pa[] = {0.1, 0.2, 0.3, 0.4};       // 2 bits
  const double pb[] = {0.5, 0.25, 0.125, 0.125};  // 2 bits
  ProbabilityTable t{4, {}};
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) t.probabilities[a | (b << 2)] = pa[a] * pb[b];
  const auto ma = t.marginal(0, 2);
  const auto mb = t.marginal(2, 2);
  for (std::uint64_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(ma.probability(i), pa[i], 1e-15);
    EXPECT_NEAR(mb.probability(i), pb[i], 1e-15);
  }
  EXPECT_NEAR(t.total(), 1.0, 1e-15);
  EXPECT_THROW(t.marginal(3, 2), ValidationError);
  const ProbabilityTable back = ProbabilityTable::parse_text(t.to_text());
  EXPECT_EQ(back.probabilities, t.probabilities);
}

TEST(Counts, ParityExpectation) {
  ProbabilityTable t{2, {{0b00, 0.5}, {0b01, 0.25}, {0b11, 0.25}}};
  EXPECT_NEAR(parity_expectation(t, PauliString::parse("ZI")), 0.5 - 0.25 - 0.25, 1e-15);
  EXPECT_NEAR(parity_expectation(t, PauliString::parse("ZZ")), 0.5 - 0.25 + 0.25, 1e-15);
  EXPECT_NEAR(parity_expectation(t, PauliString::parse("IX")), 0.5 + 0.25 - 0.25, 1e-15);
}

}  // namespace
}  // namespace sfpds
