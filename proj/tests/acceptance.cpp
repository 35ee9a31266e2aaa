// Acceptance checks for the H4 singlet-fission workflow. Prints one
// PASS/FAIL line per criterion and exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sfpds/fci.hpp"
#include "sfpds/measurement.hpp"
#include "sfpds/mitigation.hpp"
#include "sfpds/pipeline.hpp"

using namespace sfpds;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (ok ? "" : "[x] ") << what << "; ";
  }
};

std::string num(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

const MolecularSystem& h4() {
  static const MolecularSystem s = [] {
    const double spacings[] = {2.0, 2.0, 2.0};
    return build_molecular_system(compute_integrals(build_h_chain(spacings)));
  }();
  return s;
}

const SectorModel& sector(SpinSector which) {
  static const SectorModel singlet = build_sector(h4(), SpinSector::kSinglet);
  static const SectorModel triplet = build_sector(h4(), SpinSector::kTriplet);
  return which == SpinSector::kSinglet ? singlet : triplet;
}

const PdsResult& noiseless(SpinSector which) {
  static const PdsResult s = pds_energies(sector(SpinSector::kSinglet).tapered_hamiltonian,
                                          sector(SpinSector::kSinglet).tapered_state, 10);
  static const PdsResult t = pds_energies(sector(SpinSector::kTriplet).tapered_hamiltonian,
                                          sector(SpinSector::kTriplet).tapered_state, 10);
  return which == SpinSector::kSinglet ? s : t;
}

void criterion1(Outcome& o) {
  const auto sz0 = exact_spectrum(h4().hamiltonian, Sector{4, 0.0});
  const auto sz1 = exact_spectrum(h4().hamiltonian, Sector{4, 1.0});
  const ExactTransitions t = exact_transitions(sz0, sz1);
  o.check(std::abs(t.s0 - -1.897781) <= 2e-4, "S0 " + num(t.s0) + " vs -1.897781 +- 2e-4");
  o.check(std::abs(t.t0 - -1.881876) <= 2e-4, "T0 " + num(t.t0) + " vs -1.881876 +- 2e-4");
  o.detail << "S1 " << num(t.s1);
}

void criterion2(Outcome& o) {
  const PdsResult& s = noiseless(SpinSector::kSinglet);
  const PdsResult& t = noiseless(SpinSector::kTriplet);
  o.check(s.roots.size() >= 2, "singlet roots " + std::to_string(s.roots.size()));
  if (s.roots.size() < 2) return;
  o.check(std::abs(s.roots[0] - -1.897780) <= 2e-4, "S0 " + num(s.roots[0]) + " vs -1.897780 +- 2e-4");
  o.check(std::abs(s.roots[1] - -1.856543) <= 2e-3, "S1 " + num(s.roots[1]) + " vs -1.856543 +- 2e-3");
  o.check(std::abs(t.roots[0] - -1.881876) <= 2e-4, "T0 " + num(t.roots[0]) + " vs -1.881876 +- 2e-4");
  const TransitionEnergies tr = transition_energies(s, t);
  o.check(std::abs(tr.s0_s1_ev - 1.122) <= 0.01, "S0->S1 " + num(tr.s0_s1_ev, 4) + " eV vs 1.122 +- 0.01");
  o.check(std::abs(tr.s0_t0_ev - 0.433) <= 0.005, "S0->T0 " + num(tr.s0_t0_ev, 4) + " eV vs 0.433 +- 0.005");
  o.check(tr.fission_ratio > 1.0 && tr.fission_ratio < 1.5, "fission ratio " + num(tr.fission_ratio, 4) + " in (1, 1.5)");
  o.detail << "effective orders " << s.effective_order << "/" << t.effective_order;
}

void criterion3(Outcome& o) {
  PowerCache cache(h4().hamiltonian);
  const auto counts = unique_string_count(cache, 19);
  std::ostringstream list;
  bool flat = true;
  for (std::size_t k = 1; k <= 10; ++k) {
    list << counts[2 * k - 2] << (k < 10 ? "," : "");
    if (k >= 3 && counts[2 * k - 2] != counts[4]) flat = false;
  }
  o.check(flat, "plateau over K = 3..10");
  o.check(counts[4] == 4223, "plateau value " + std::to_string(counts[4]) + " vs 4223");
  o.detail << "K = 1..10: " << list.str();
}

void criterion4(Outcome& o) {
  PowerCache full(h4().hamiltonian);
  const MeasurementLadder f = measurement_ladder(full, 10);
  o.check(f.qwc_groups <= 1.1 * 441, "full QWC " + std::to_string(f.qwc_groups) + " vs 441 +10%");
  struct Ref { SpinSector s; double unique, qwc; std::size_t batches; const char* name; };
  for (const Ref& r : {Ref{SpinSector::kSinglet, 527, 122, 31, "singlet"}, Ref{SpinSector::kTriplet, 379, 66, 17, "triplet"}}) {
    PowerCache c(sector(r.s).tapered_hamiltonian);
    const MeasurementLadder t = measurement_ladder(c, 10);
    const std::string n = r.name;
    o.check(std::abs(t.unique_strings - r.unique) <= 0.05 * r.unique,
            n + " tapered unique " + std::to_string(t.unique_strings) + " vs " + num(r.unique, 0) + " +-5%");
    o.check(t.qwc_groups <= 1.1 * r.qwc, n + " tapered QWC " + std::to_string(t.qwc_groups) + " vs " + num(r.qwc, 0) + " +10%");
    const std::size_t expected = (t.qwc_groups + 3) / 4;
    o.check(t.batches && *t.batches == expected,
            n + " batches " + std::to_string(t.batches.value_or(0)) + " = ceil(" + std::to_string(t.qwc_groups) + "/4)");
    if (t.qwc_groups == r.qwc) o.check(*t.batches == r.batches, n + " batches match " + std::to_string(r.batches));
  }
}

void criterion5(Outcome& o) {
  std::mt19937_64 rng(20240501);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> mask(0, 7);
  std::uniform_int_distribution<int> n_terms(2, 10);
  std::size_t violations = 0;
  std::size_t runs = 0;
  double worst = -1e300;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PauliTerm> terms;
    const int nt = n_terms(rng);
    for (int k = 0; k < nt; ++k) terms.push_back({PauliString(3, mask(rng), mask(rng)), g(rng)});
    const PauliSum h(3, terms);
    std::vector<std::complex<double>> a(8);
    for (auto& x : a) x = {g(rng), g(rng)};
    const StateVector s = StateVector::normalized(a);
    const double ground = exact_spectrum(h).eigenvalues.front();
    const double mean = exact_expectation(h, s);
    for (std::size_t k = 1; k <= 4; ++k) {
      const double lo = pds_energies(h, s, k).ground_bound();
      ++runs;
      worst = std::max(worst, std::max(ground - lo, lo - mean));
      if (lo < ground - 1e-8 || lo > mean + 1e-8) ++violations;
    }
  }
  o.check(violations == 0, std::to_string(violations) + " violations in " + std::to_string(runs) + " runs");
  o.detail << "largest bound excess " << sci(worst);
}

void criterion6(Outcome& o) {
  for (SpinSector which : {SpinSector::kSinglet, SpinSector::kTriplet}) {
    const SectorModel& m = sector(which);
    const PdsResult full = pds_energies(h4().hamiltonian, m.full_state, 10);
    const PdsResult& tap = noiseless(which);
    const std::string n(to_string(which));
    o.check(full.roots.size() == tap.roots.size(),
            n + " root counts " + std::to_string(full.roots.size()) + "/" + std::to_string(tap.roots.size()));
    double diff = 0.0;
    for (std::size_t i = 0; i < std::min(full.roots.size(), tap.roots.size()); ++i)
      diff = std::max(diff, std::abs(full.roots[i] - tap.roots[i]));
    o.check(diff <= 1e-8, n + " max |tapered - full| " + sci(diff));
  }
}

void criterion7(Outcome& o) {
  SamplingOptions so;
  so.mode = Mode::kSerial;
  so.shots = 100'000;
  so.seed = 12345;
  const SampledPdsResult r = sampled_pds(sector(SpinSector::kSinglet), 10, so);
  const double ref = noiseless(SpinSector::kSinglet).roots[0];
  const double err = std::abs(r.pds.roots[0] - ref);
  o.check(err <= 5e-4, "serial 1e5 S0 " + num(r.pds.roots[0]) + ", |error| " + sci(err) + " <= 5e-4");

  // error vs shots on one fixed group
  const SectorModel& m = sector(SpinSector::kSinglet);
  PowerCache cache(m.tapered_hamiltonian);
  const auto groups = group_qwc(unique_strings(cache, 19));
  const QwcGroup& group = groups.front();
  std::vector<std::pair<PauliString, double>> targets;
  for (const auto& p : group.members) {
    const double e = expectation(p, m.tapered_state).real();
    if (std::abs(e) < 0.99) targets.emplace_back(p, e);
  }
  if (targets.empty()) {
    o.check(false, "fixed group has no member with nonzero variance");
    return;
  }
  const int repeats = 24;
  std::vector<double> lx;
  std::vector<double> ly;
  std::ostringstream pts;
  for (std::uint64_t shots : {1'000ULL, 10'000ULL, 100'000ULL, 1'000'000ULL}) {
    double sq = 0.0;
    for (int rep = 0; rep < repeats; ++rep) {
      const CountTable c = serial_sample(m.tapered_state, group, shots, NoiseModel{}, derive_seed(shots, rep));
      const auto est = expectations_from_counts(c, group);
      for (const auto& [p, e] : targets) sq += std::pow(est.at(p) - e, 2);
    }
    const double rms = std::sqrt(sq / (repeats * targets.size()));
    lx.push_back(std::log10(static_cast<double>(shots)));
    ly.push_back(std::log10(rms));
    pts << sci(rms) << " ";
  }
  const double mx = (lx[0] + lx[1] + lx[2] + lx[3]) / 4;
  const double my = (ly[0] + ly[1] + ly[2] + ly[3]) / 4;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = sxy / sxx;
  o.check(std::abs(slope + 0.5) <= 0.1, "log-log slope " + num(slope, 3) + " vs -0.5 +- 0.1");
  o.detail << "rms error at 1e3..1e6 shots: " << pts.str();
}

void criterion8(Outcome& o) {
  double worst = 0.0;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (std::size_t n : {2u, 5u, 8u, 10u}) {
    ProbabilityTable clean{n, {}};
    double total = 0.0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) total += clean.probabilities[i] = u(rng);
    for (auto& [k, v] : clean.probabilities) v /= total;
    const ProbabilityTable back = mitigate(apply_spam_channel(clean, 1e-3), MitigationConfig{1e-3});
    for (const auto& [k, v] : clean.probabilities) worst = std::max(worst, std::abs(back.probability(k) - v));
  }
  o.check(worst <= 1e-10, "channel round trip max error " + sci(worst));

  for (SpinSector which : {SpinSector::kSinglet, SpinSector::kTriplet}) {
    SamplingOptions so;
    so.mode = Mode::kParallel;
    so.shots = 100'000;
    so.seed = 2024;
    const SampledPdsResult plain = sampled_pds(sector(which), 10, so);
    so.mitigation_p = 1e-3;
    const SampledPdsResult mit = sampled_pds(sector(which), 10, so);
    const std::string n(to_string(which));
    const double d0 = std::abs(plain.pds.roots[0] - mit.pds.roots[0]);
    o.check(d0 < 1e-4, n + " ground |mitigated - unmitigated| " + sci(d0));
    if (which == SpinSector::kSinglet && plain.pds.roots.size() > 1 && mit.pds.roots.size() > 1) {
      const double d1 = std::abs(plain.pds.roots[1] - mit.pds.roots[1]);
      o.check(d1 < 1e-4, "S1 |mitigated - unmitigated| " + sci(d1));
    }
  }
}

void criterion9(Outcome& o) {
  o.detail << "hardware-run reference values are documented in README.md and are not computed";
}

}  // namespace

int main() {
  struct Item { int id; const char* title; std::function<void(Outcome&)> run; };
  const std::vector<Item> items = {
      {1, "exact spectrum S0/T0", criterion1},
      {2, "noiseless PDS(10) roots and transitions", criterion2},
      {3, "unique-string cost plateau", criterion3},
      {4, "measurement-reduction ladder", criterion4},
      {5, "PDS bound property on random states", criterion5},
      {6, "tapered vs full PDS(10) roots", criterion6},
      {7, "sampling accuracy and shot scaling", criterion7},
      {8, "readout mitigation", criterion8},
      {9, "hardware reference values (documentation only)", criterion9},
  };
  int failed = 0;
  for (const auto& item : items) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      item.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s criterion %d: %s | %s(%.1f s)\n", o.pass ? "PASS" : "FAIL", item.id, item.title,
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(items.size()) - failed, items.size());
  return failed == 0 ? 0 : 1;
}
