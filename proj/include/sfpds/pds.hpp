#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sfpds/error.hpp"
#include "sfpds/moments.hpp"
#include "sfpds/statevector.hpp"

namespace sfpds {

struct PdsOptions {
  /// Relative singular-value cutoff: an order whose moment matrix has
  /// sigma_min <= cutoff * sigma_max counts as rank deficient.
  double svd_cutoff = 1e-12;
  /// Roots with |Im| up to this (hartree) are projected onto the real axis.
  double imaginary_tolerance = 1e-6;
  /// When set, roots whose quadrature weight (the spectral mass the moments
  /// assign to that node) is below this value are set aside as unresolved
  /// instead of being reported or raising. Sampled moments produce such
  /// nodes far outside the spectrum or as complex pairs.
  std::optional<double> min_weight;
  /// Set complex roots aside (reported in `rejected`) instead of raising,
  /// unless one lies below the lowest real root.
  bool set_aside_complex = false;
};

/// The k x k moment system M X = -Y with M_ij = <H^{2k-i-j}>, Y_i = <H^{2k-i}>.
///
/// When the requested order K is numerically rank deficient (the state
/// overlaps fewer than K eigenvectors to working precision), the polynomial of
/// degree K is not determined by the moments; the largest order k < K with a
/// full-rank matrix is solved instead and reported as `effective_order`.
struct MomentSystem {
  std::size_t order = 0;            // requested K
  std::size_t effective_order = 0;  // k, the size of M
  Eigen::MatrixXd M;
  Eigen::VectorXd Y;
  Eigen::VectorXd X;
  double condition_estimate = 0.0;  // sigma_max / sigma_min of the solved M
  std::size_t rank = 0;             // numerical rank of the K x K matrix
};

struct PdsResult {
  std::vector<double> roots;      // ascending, hartree
  std::vector<double> weights;    // quadrature weight per root
  std::vector<double> residuals;  // |P_k(root)|, shifted frame
  double discarded_imaginary = 0.0;
  std::vector<std::complex<double>> rejected;  // below min_weight, or set-aside complex roots
  std::vector<std::complex<double>> rejected_weights;
  std::size_t order = 0;
  std::size_t effective_order = 0;

  double ground_bound() const { return roots.front(); }
};

/// Thrown when the polynomial has a root with |Im| above the tolerance; this
/// usually means the moments are noisy or inconsistent.
class ComplexRootError : public ComputationError {
 public:
  ComplexRootError(const std::string& what, std::complex<double> root)
      : ComputationError(what), root_(root) {}
  std::complex<double> root() const { return root_; }

 private:
  std::complex<double> root_;
};

/// `moments` must hold <H^n> (or shifted moments) for n = 0..2K-1 at least.
MomentSystem build_system(std::span<const double> moments, std::size_t order,
                          const PdsOptions& options = {});
MomentSystem build_system(const MomentTable& moments, std::size_t order,
                          const PdsOptions& options = {});

/// Roots of E^K + sum_i X_i E^{K-i} from the companion matrix.
PdsResult polynomial_roots(const Eigen::VectorXd& coefficients, const PdsOptions& options = {});

/// All (complex) roots of the monic polynomial.
std::vector<std::complex<double>> companion_roots(const Eigen::VectorXd& coefficients);
/// Weights w_j with sum_j w_j z_j^n = moments[n], n < number of nodes.
std::vector<std::complex<double>> quadrature_weights(std::span<const std::complex<double>> nodes,
                                                     std::span<const double> moments);

/// Roots for moments of H - shift; the shift is added back to the roots.
PdsResult pds_from_moments(std::span<const double> moments, std::size_t order,
                           const PdsOptions& options = {}, double shift = 0.0);
PdsResult pds_from_moments(const MomentTable& moments, std::size_t order,
                           const PdsOptions& options = {});

/// Exact moments of `state` from the cache (in its shifted frame), then the
/// PDS(K) roots.
PdsResult pds_energies(PowerCache& cache, const StateVector& state, std::size_t order,
                       const PdsOptions& options = {});

/// Convenience: centers H on <state|H|state> before taking powers.
/// Unshifted double-precision moments grow like ||H||^n and make the Hankel
/// matrix singular to round-off beyond K ~ 7; the roots are shift invariant.
PdsResult pds_energies(const PauliSum& h, const StateVector& state, std::size_t order,
                       const PdsOptions& options = {});

struct TransitionEnergies {
  double s0_s1_ev = 0.0;
  double s0_t0_ev = 0.0;
  double fission_ratio = 0.0;  // s0_s1 / (2 s0_t0)
};

/// S1 is the second singlet root, T0 the first triplet root.
TransitionEnergies transition_energies(const PdsResult& singlet, const PdsResult& triplet);

}  // namespace sfpds
