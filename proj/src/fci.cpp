#include "sfpds/fci.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include <Eigen/Dense>

#include "sfpds/chem.hpp"
#include "sfpds/error.hpp"

namespace sfpds {

namespace {

constexpr std::size_t kMaxQubits = 16;
constexpr std::size_t kMaxDimension = 4096;

}  // namespace

SpectrumResult exact_spectrum(const PauliSum& h, std::optional<Sector> sector) {
  const std::size_t n = h.n_qubits();
  if (n == 0 || n > kMaxQubits) {
    throw ValidationError("exact diagonalization supports 1.." + std::to_string(kMaxQubits) + " qubits");
  }
  std::vector<std::uint64_t> basis;
  if (sector) {
    if (n % 2 != 0) throw ValidationError("sector filtering needs an even number of spin orbitals");
    const std::uint64_t alpha = (std::uint64_t{1} << (n / 2)) - 1;
    const int two_sz = static_cast<int>(std::lround(2.0 * sector->s_z));
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
      const int na = std::popcount(k & alpha);
      const int nb = std::popcount(k & ~alpha);
      if (static_cast<std::size_t>(na + nb) == sector->n_electrons && na - nb == two_sz) basis.push_back(k);
    }
    if (basis.empty()) throw ValidationError("requested sector is empty");
  } else {
    basis.resize(std::size_t{1} << n);
    for (std::size_t k = 0; k < basis.size(); ++k) basis[k] = k;
  }
  if (basis.size() > kMaxDimension) {
    throw ValidationError("matrix dimension " + std::to_string(basis.size()) + " exceeds the dense limit of " +
                          std::to_string(kMaxDimension));
  }

  std::unordered_map<std::uint64_t, Eigen::Index> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = static_cast<Eigen::Index>(i);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms()) {
    const auto& p = t.string;
    const std::complex<double> y_phase =
        to_complex(static_cast<Phase>(std::popcount(p.x_mask() & p.z_mask()) & 3));
    for (Eigen::Index j = 0; j < dim; ++j) {
      const std::uint64_t k = basis[j];
      const auto it = position.find(k ^ p.x_mask());
      if (it == position.end()) continue;
      const double sign = (std::popcount(k & p.z_mask()) & 1) ? -1.0 : 1.0;
      m(it->second, j) += t.coefficient * y_phase * sign;
    }
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw ValidationError("operator is not Hermitian on the requested space");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ComputationError("dense eigensolver failed");

  SpectrumResult r;
  r.sector = sector;
  r.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + dim);
  return r;
}

std::vector<double> singlet_levels(const SpectrumResult& sz0, const SpectrumResult& sz1,
                                   double degeneracy_tolerance) {
  // Each S_z = 1 level is the M = 1 component of a multiplet whose M = 0
  // component sits in the S_z = 0 spectrum; remove one partner per level.
  std::vector<double> remaining = sz0.eigenvalues;
  std::vector<bool> used(remaining.size(), false);
  for (double e : sz1.eigenvalues) {
    std::size_t best = remaining.size();
    double best_gap = degeneracy_tolerance;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const double gap = std::abs(remaining[i] - e);
      if (!used[i] && gap <= best_gap) {
        best = i;
        best_gap = gap;
      }
    }
    if (best < remaining.size()) used[best] = true;
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (!used[i]) out.push_back(remaining[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExactTransitions exact_transitions(const SpectrumResult& sz0, const SpectrumResult& sz1,
                                   double degeneracy_tolerance) {
  if (sz1.eigenvalues.empty()) throw ValidationError("triplet spectrum is empty");
  const auto singlets = singlet_levels(sz0, sz1, degeneracy_tolerance);
  if (singlets.size() < 2) throw ValidationError("fewer than two singlet levels in the S_z = 0 spectrum");
  ExactTransitions t;
  t.s0 = singlets[0];
  t.s1 = singlets[1];
  t.t0 = *std::min_element(sz1.eigenvalues.begin(), sz1.eigenvalues.end());
  t.s0_s1_ev = (t.s1 - t.s0) * kHartreeToEv;
  t.s0_t0_ev = (t.t0 - t.s0) * kHartreeToEv;
  return t;
}

}  // namespace sfpds
