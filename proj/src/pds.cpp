#include "sfpds/pds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfpds/chem.hpp"

namespace sfpds {

namespace {

void fill_system(std::span<const double> moments, std::size_t k, Eigen::MatrixXd& m,
                 Eigen::VectorXd& y) {
  m.resize(k, k);
  y.resize(k);
  // 1-based i, j in the defining formulas.
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) m(i - 1, j - 1) = moments[2 * k - i - j];
    y(i - 1) = moments[2 * k - i];
  }
}

}  // namespace

MomentSystem build_system(std::span<const double> moments, std::size_t order,
                          const PdsOptions& options) {
  if (order == 0) throw ValidationError("expansion order K must be at least 1");
  if (moments.size() < 2 * order) {
    throw ValidationError("PDS(" + std::to_string(order) + ") needs moments up to <H^" +
                          std::to_string(2 * order - 1) + ">");
  }
  for (std::size_t n = 0; n < 2 * order; ++n) {
    if (!std::isfinite(moments[n])) throw ValidationError("moments must be finite");
  }
  if (!(options.svd_cutoff >= 0.0 && options.svd_cutoff < 1.0)) {
    throw ValidationError("svd cutoff must lie in [0, 1)");
  }

  MomentSystem sys;
  sys.order = order;
  for (std::size_t k = order; k >= 1; --k) {
    fill_system(moments, k, sys.M, sys.Y);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double smax = sigma(0);
    if (!(smax > 0.0)) break;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) rank += sigma(i) > options.svd_cutoff * smax;
    if (k == order) sys.rank = rank;
    if (rank < k) continue;
    Eigen::VectorXd rhs = svd.matrixU().transpose() * (-sys.Y);
    sys.X = svd.matrixV() * rhs.cwiseQuotient(sigma);
    sys.effective_order = k;
    sys.condition_estimate = smax / sigma(sigma.size() - 1);
    return sys;
  }
  throw ComputationError("moment matrix collapsed below one retained singular value");
}

MomentSystem build_system(const MomentTable& moments, std::size_t order, const PdsOptions& options) {
  return build_system(std::span<const double>(moments.values), order, options);
}

PdsResult polynomial_roots(const Eigen::VectorXd& coefficients, const PdsOptions& options) {
  PdsResult r;
  for (const auto& root : companion_roots(coefficients)) {
    const double im = std::abs(root.imag());
    if (im > options.imaginary_tolerance) {
      throw ComplexRootError("PDS polynomial has a complex root (" + std::to_string(root.real()) +
                                 (root.imag() < 0 ? " - " : " + ") + std::to_string(im) +
                                 "i); moments are noisy or inconsistent",
                             root);
    }
    r.discarded_imaginary = std::max(r.discarded_imaginary, im);
    r.roots.push_back(root.real());
  }
  std::sort(r.roots.begin(), r.roots.end());
  for (double a : r.roots) {
    double p = 1.0;
    for (Eigen::Index i = 0; i < coefficients.size(); ++i) p = p * a + coefficients(i);
    r.residuals.push_back(std::abs(p));
  }
  r.order = r.effective_order = static_cast<std::size_t>(coefficients.size());
  return r;
}

std::vector<std::complex<double>> companion_roots(const Eigen::VectorXd& coefficients) {
  const auto k = coefficients.size();
  if (k == 0) throw ValidationError("polynomial needs at least one coefficient");
  if (!coefficients.allFinite()) throw ValidationError("polynomial coefficients must be finite");
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
  companion.row(0) = -coefficients.transpose();
  for (Eigen::Index i = 1; i < k; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  if (es.info() != Eigen::Success) throw ComputationError("companion eigensolver failed");
  return {es.eigenvalues().data(), es.eigenvalues().data() + k};
}

std::vector<std::complex<double>> quadrature_weights(std::span<const std::complex<double>> nodes,
                                                     std::span<const double> moments) {
  const auto k = static_cast<Eigen::Index>(nodes.size());
  if (moments.size() < nodes.size()) throw ValidationError("need as many moments as nodes");
  // Columns are scaled to unit max entry; a far-out node otherwise swamps
  // the pivoting threshold.
  Eigen::MatrixXcd v(k, k);
  Eigen::VectorXd scale(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    scale(j) = std::pow(std::max(1.0, std::abs(nodes[j])), static_cast<double>(k - 1));
    std::complex<double> pw = 1.0;
    for (Eigen::Index n = 0; n < k; ++n) {
      v(n, j) = pw / scale(j);
      pw *= nodes[j];
    }
  }
  Eigen::VectorXcd rhs(k);
  for (Eigen::Index n = 0; n < k; ++n) rhs(n) = moments[n];
  const Eigen::VectorXcd y = v.fullPivLu().solve(rhs);
  std::vector<std::complex<double>> w(k);
  for (Eigen::Index j = 0; j < k; ++j) w[j] = y(j) / scale(j);
  return w;
}

PdsResult pds_from_moments(std::span<const double> moments, std::size_t order,
                           const PdsOptions& options, double shift) {
  const MomentSystem sys = build_system(moments, order, options);
  const auto nodes = companion_roots(sys.X);
  const auto weights = quadrature_weights(nodes, moments);

  PdsResult r;
  r.order = order;
  r.effective_order = sys.effective_order;
  std::vector<std::pair<double, double>> kept;  // (root, weight)
  std::vector<std::complex<double>> complex_roots;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto root = nodes[i];
    if (options.min_weight && !(weights[i].real() >= *options.min_weight)) {
      r.rejected.push_back(root + shift);
      r.rejected_weights.push_back(weights[i]);
      continue;
    }
    const double im = std::abs(root.imag());
    if (im > options.imaginary_tolerance) {
      if (!options.set_aside_complex) {
        throw ComplexRootError("PDS polynomial has a complex root (" + std::to_string(root.real() + shift) +
                                   (root.imag() < 0 ? " - " : " + ") + std::to_string(im) +
                                   "i); moments are noisy or inconsistent",
                               root + shift);
      }
      complex_roots.push_back(root);
      r.rejected.push_back(root + shift);
      r.rejected_weights.push_back(weights[i]);
      continue;
    }
    r.discarded_imaginary = std::max(r.discarded_imaginary, im);
    kept.emplace_back(root.real(), weights[i].real());
  }
  for (const auto& root : complex_roots) {
    // A complex pair below the lowest real root leaves the ground-state
    // assignment ambiguous.
    if (kept.empty() || root.real() < std::min_element(kept.begin(), kept.end())->first) {
      throw ComplexRootError("PDS polynomial has a complex root (" + std::to_string(root.real() + shift) +
                                 " +/- " + std::to_string(std::abs(root.imag())) +
                                 "i) below every real root; moments are noisy or inconsistent",
                             root + shift);
    }
  }
  if (kept.empty()) throw ComputationError("no PDS root carries weight above the threshold");
  std::sort(kept.begin(), kept.end());
  for (const auto& [e, w] : kept) {
    double p = 1.0;
    for (Eigen::Index i = 0; i < sys.X.size(); ++i) p = p * e + sys.X(i);
    r.roots.push_back(e + shift);
    r.weights.push_back(w);
    r.residuals.push_back(std::abs(p));
  }
  return r;
}

PdsResult pds_from_moments(const MomentTable& moments, std::size_t order, const PdsOptions& options) {
  return pds_from_moments(moments.values, order, options, moments.shift);
}

PdsResult pds_energies(PowerCache& cache, const StateVector& state, std::size_t order,
                       const PdsOptions& options) {
  return pds_from_moments(moments_for_state(cache, state, order), order, options);
}

PdsResult pds_energies(const PauliSum& h, const StateVector& state, std::size_t order,
                       const PdsOptions& options) {
  PowerCache cache(h, exact_expectation(h, state));
  return pds_energies(cache, state, order, options);
}

TransitionEnergies transition_energies(const PdsResult& singlet, const PdsResult& triplet) {
  if (singlet.roots.size() < 2) throw ValidationError("S0->S1 needs at least two singlet roots (K >= 2)");
  if (triplet.roots.empty()) throw ValidationError("triplet result has no roots");
  TransitionEnergies t;
  t.s0_s1_ev = (singlet.roots[1] - singlet.roots[0]) * kHartreeToEv;
  t.s0_t0_ev = (triplet.roots[0] - singlet.roots[0]) * kHartreeToEv;
  t.fission_ratio = t.s0_t0_ev != 0.0 ? t.s0_s1_ev / (2.0 * t.s0_t0_ev)
                                      : std::numeric_limits<double>::infinity();
  return t;
}

}  // namespace sfpds
