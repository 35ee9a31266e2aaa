#include <gtest/gtest.h>

#include <algorithm>

#include "h4_fixture.hpp"
#include "sfpds/error.hpp"
#include "sfpds/fci.hpp"

namespace sfpds {
namespace {

SpectrumResult levels(std::vector<double> e) { return SpectrumResult{std::move(e), std::nullopt}; }

TEST(ExactSpectrum, SingleQubitZ) {
  const PauliTerm t[] = {{PauliString::parse("Z"), 1.0}};
  const auto r = exact_spectrum(PauliSum(1, t));
  ASSERT_EQ(r.eigenvalues.size(), 2u);
  EXPECT_NEAR(r.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(r.eigenvalues[1], 1.0, 1e-15);
  EXPECT_FALSE(r.sector.has_value());
}

TEST(ExactSpectrum, RejectsNonHermitianInput) {
  const PauliTerm t[] = {{PauliString::parse("X"), std::complex<double>(0.0, 1.0)}};
  EXPECT_THROW(exact_spectrum(PauliSum(1, t)), ValidationError);
}

TEST(ExactSpectrum, H4SectorsAreSubsetsWithExpectedDimensions) {
  const auto& h = testing::h4().hamiltonian;
  const auto full = exact_spectrum(h).eigenvalues;
  ASSERT_EQ(full.size(), 256u);
  const auto sz0 = exact_spectrum(h, Sector{4, 0.0});
  const auto sz1 = exact_spectrum(h, Sector{4, 1.0});
  EXPECT_EQ(sz0.eigenvalues.size(), 36u);
  EXPECT_EQ(sz1.eigenvalues.size(), 16u);
  ASSERT_TRUE(sz0.sector.has_value());
  EXPECT_EQ(sz0.sector->n_electrons, 4u);
  for (const auto* s : {&sz0, &sz1}) {
    EXPECT_TRUE(std::is_sorted(s->eigenvalues.begin(), s->eigenvalues.end()));
    for (double e : s->eigenvalues) {
      const auto it = std::lower_bound(full.begin(), full.end(), e - 1e-9);
      ASSERT_NE(it, full.end());
      EXPECT_NEAR(*it, e, 1e-9);
    }
  }
  // every S_z = 1 level also appears at S_z = 0 (M = 0 member of the multiplet)
  for (double e : sz1.eigenvalues) {
    const bool found = std::any_of(sz0.eigenvalues.begin(), sz0.eigenvalues.end(),
                                   [&](double x) { return std::abs(x - e) < 1e-9; });
    EXPECT_TRUE(found) << e;
  }
  EXPECT_THROW(exact_spectrum(h, Sector{9, 0.0}), ValidationError);
}

TEST(Transitions, SingletsAreUnpairedLevels) {
  const auto sz0 = levels({-2.0, -1.5, -1.0, 0.0});
  const auto sz1 = levels({-1.5});
  EXPECT_EQ(singlet_levels(sz0, sz1), (std::vector<double>{-2.0, -1.0, 0.0}));
  const auto t = exact_transitions(sz0, sz1);
  EXPECT_DOUBLE_EQ(t.s0, -2.0);
  EXPECT_DOUBLE_EQ(t.s1, -1.0);
  EXPECT_DOUBLE_EQ(t.t0, -1.5);
  EXPECT_NEAR(t.s0_s1_ev, kHartreeToEv, 1e-12);
  EXPECT_NEAR(t.s0_t0_ev, 0.5 * kHartreeToEv, 1e-12);
}

TEST(Transitions, SharedLowestLevelGivesZeroSingletTripletGap) {
  const auto t = exact_transitions(levels({-2.0, -2.0, -1.0, 0.0}), levels({-2.0}));
  EXPECT_DOUBLE_EQ(t.s0, -2.0);
  EXPECT_DOUBLE_EQ(t.t0, -2.0);
  EXPECT_DOUBLE_EQ(t.s0_t0_ev, 0.0);
}

TEST(Transitions, IdenticalSpectraLeaveNoSinglets) {
  const auto s = levels({-1.0, 0.0, 1.0});
  EXPECT_TRUE(singlet_levels(s, s).empty());
  EXPECT_THROW(exact_transitions(s, s), ValidationError);
  EXPECT_THROW(exact_transitions(s, levels({})), ValidationError);
}

}  // namespace
}  // namespace sfpds
