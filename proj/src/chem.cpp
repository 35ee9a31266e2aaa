#include "sfpds/chem.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <sstream>

#include "sfpds/error.hpp"

namespace sfpds {

// ---------------------------------------------------------------------------
// Geometry

double Geometry::min_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      double d2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double d = atoms[i].position[k] - atoms[j].position[k];
        d2 += d * d;
      }
      best = std::min(best, std::sqrt(d2));
    }
  }
  return best;
}

Geometry build_h_chain(std::span<const double> spacings) {
  Geometry g;
  double z = 0.0;
  g.atoms.push_back({"H", {0.0, 0.0, 0.0}});
  for (double s : spacings) {
    if (!(s > 0.0 && s < 100.0)) {
      throw ValidationError("H-chain spacing must lie in (0, 100) angstrom, got " + std::to_string(s));
    }
    z += s;
    g.atoms.push_back({"H", {0.0, 0.0, z}});
  }
  return g;
}

Geometry parse_xyz(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);

  std::size_t start = 0;
  // Standard .xyz header: atom count, then a free comment line.
  if (!lines.empty()) {
    std::istringstream first(lines[0]);
    std::size_t count = 0;
    std::string rest;
    if ((first >> count) && !(first >> rest)) start = std::min<std::size_t>(2, lines.size());
  }

  Geometry g;
  for (std::size_t i = start; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string element;
    if (!(ls >> element) || element.front() == '#') continue;
    Atom a;
    a.element = element;
    if (!(ls >> a.position[0] >> a.position[1] >> a.position[2])) {
      throw ValidationError("xyz line " + std::to_string(i + 1) + ": expected 'element x y z'");
    }
    g.atoms.push_back(a);
  }
  if (g.atoms.empty()) throw ValidationError("geometry contains no atoms");
  if (g.min_distance() <= 0.0) throw ValidationError("geometry has coincident atoms");
  return g;
}

double nuclear_repulsion(const Geometry& geometry) {
  double e = 0.0;
  for (std::size_t i = 0; i < geometry.atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < geometry.atoms.size(); ++j) {
      double d2 = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double d = (geometry.atoms[i].position[k] - geometry.atoms[j].position[k]) * kAngstromToBohr;
        d2 += d * d;
      }
      // Hydrogen only: Z = 1.
      e += 1.0 / std::sqrt(d2);
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// Integrals

IntegralSet::IntegralSet(std::size_t n_orbitals)
    : overlap(Eigen::MatrixXd::Identity(n_orbitals, n_orbitals)),
      one_body(Eigen::MatrixXd::Zero(n_orbitals, n_orbitals)),
      n_(n_orbitals),
      two_body_(n_orbitals * n_orbitals * n_orbitals * n_orbitals, 0.0) {}

void IntegralSet::set_eri(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double v) {
  const auto at = [this](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> double& {
    return two_body_[((a * n_ + b) * n_ + c) * n_ + d];
  };
  at(p, q, r, s) = v;
  at(q, p, r, s) = v;
  at(p, q, s, r) = v;
  at(q, p, s, r) = v;
  at(r, s, p, q) = v;
  at(s, r, p, q) = v;
  at(r, s, q, p) = v;
  at(s, r, q, p) = v;
}

double IntegralSet::symmetry_violation() const {
  double worst = (one_body - one_body.transpose()).cwiseAbs().maxCoeff();
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t s = 0; s < n_; ++s) {
          const double v = eri(p, q, r, s);
          worst = std::max({worst, std::abs(v - eri(q, p, r, s)), std::abs(v - eri(p, q, s, r)),
                            std::abs(v - eri(r, s, p, q))});
        }
  return worst;
}

namespace {

struct Primitive {
  double exponent;
  double coefficient;  // includes the primitive normalization
};

struct SShell {
  std::array<double, 3> center;  // bohr
  std::vector<Primitive> primitives;
};

// STO-3G hydrogen 1s (zeta = 1.24).
constexpr std::array<double, 3> kSto3gHExponents{3.42525091, 0.62391373, 0.16885540};
constexpr std::array<double, 3> kSto3gHCoefficients{0.15432897, 0.53532814, 0.44463454};

double boys0(double t) {
  if (t < 1e-12) return 1.0 - t / 3.0;
  const double st = std::sqrt(t);
  return 0.5 * std::sqrt(std::numbers::pi / t) * std::erf(st);
}

double dist2(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double d = 0.0;
  for (int k = 0; k < 3; ++k) d += (a[k] - b[k]) * (a[k] - b[k]);
  return d;
}

std::array<double, 3> weighted_center(double a, const std::array<double, 3>& A, double b,
                                      const std::array<double, 3>& B) {
  std::array<double, 3> p{};
  for (int k = 0; k < 3; ++k) p[k] = (a * A[k] + b * B[k]) / (a + b);
  return p;
}

double overlap_prim(double a, const std::array<double, 3>& A, double b, const std::array<double, 3>& B) {
  const double p = a + b;
  return std::pow(std::numbers::pi / p, 1.5) * std::exp(-a * b / p * dist2(A, B));
}

double kinetic_prim(double a, const std::array<double, 3>& A, double b, const std::array<double, 3>& B) {
  const double mu = a * b / (a + b);
  const double r2 = dist2(A, B);
  return mu * (3.0 - 2.0 * mu * r2) * overlap_prim(a, A, b, B);
}

double nuclear_prim(double a, const std::array<double, 3>& A, double b, const std::array<double, 3>& B,
                    const std::array<double, 3>& C, double charge) {
  const double p = a + b;
  const auto P = weighted_center(a, A, b, B);
  return -charge * 2.0 * std::numbers::pi / p * std::exp(-a * b / p * dist2(A, B)) *
         boys0(p * dist2(P, C));
}

double eri_prim(double a, const std::array<double, 3>& A, double b, const std::array<double, 3>& B,
                double c, const std::array<double, 3>& C, double d, const std::array<double, 3>& D) {
  const double p = a + b;
  const double q = c + d;
  const auto P = weighted_center(a, A, b, B);
  const auto Q = weighted_center(c, C, d, D);
  const double pre = 2.0 * std::pow(std::numbers::pi, 2.5) / (p * q * std::sqrt(p + q));
  return pre * std::exp(-a * b / p * dist2(A, B) - c * d / q * dist2(C, D)) *
         boys0(p * q / (p + q) * dist2(P, Q));
}

}  // namespace

IntegralSet compute_integrals(const Geometry& geometry, std::string_view basis) {
  std::string b(basis);
  std::transform(b.begin(), b.end(), b.begin(), [](unsigned char c) { return std::toupper(c); });
  if (b != "STO-3G") throw ValidationError("unsupported basis '" + std::string(basis) + "'");
  if (geometry.atoms.empty()) throw ValidationError("geometry contains no atoms");

  std::vector<SShell> shells;
  std::vector<std::array<double, 3>> nuclei;
  for (const auto& atom : geometry.atoms) {
    if (atom.element != "H" && atom.element != "h") {
      throw ValidationError("built-in integrals support hydrogen only, got '" + atom.element + "'");
    }
    SShell sh;
    for (int k = 0; k < 3; ++k) sh.center[k] = atom.position[k] * kAngstromToBohr;
    for (std::size_t i = 0; i < kSto3gHExponents.size(); ++i) {
      const double a = kSto3gHExponents[i];
      sh.primitives.push_back({a, kSto3gHCoefficients[i] * std::pow(2.0 * a / std::numbers::pi, 0.75)});
    }
    nuclei.push_back(sh.center);
    shells.push_back(std::move(sh));
  }

  const std::size_t n = shells.size();
  IntegralSet ints(n);
  ints.core_energy = nuclear_repulsion(geometry);
  ints.n_electrons = geometry.atoms.size();
  ints.ms2 = static_cast<int>(ints.n_electrons % 2);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      double t = 0.0;
      double v = 0.0;
      for (const auto& pa : shells[i].primitives) {
        for (const auto& pb : shells[j].primitives) {
          const double cc = pa.coefficient * pb.coefficient;
          s += cc * overlap_prim(pa.exponent, shells[i].center, pb.exponent, shells[j].center);
          t += cc * kinetic_prim(pa.exponent, shells[i].center, pb.exponent, shells[j].center);
          for (const auto& c : nuclei) {
            v += cc * nuclear_prim(pa.exponent, shells[i].center, pb.exponent, shells[j].center, c, 1.0);
          }
        }
      }
      ints.overlap(i, j) = s;
      ints.one_body(i, j) = t + v;
    }
  }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          double v = 0.0;
          for (const auto& a : shells[p].primitives)
            for (const auto& bb : shells[q].primitives)
              for (const auto& c : shells[r].primitives)
                for (const auto& d : shells[s].primitives) {
                  v += a.coefficient * bb.coefficient * c.coefficient * d.coefficient *
                       eri_prim(a.exponent, shells[p].center, bb.exponent, shells[q].center,
                                c.exponent, shells[r].center, d.exponent, shells[s].center);
                }
          ints.set_eri(p, q, r, s, v);
        }
  return ints;
}

// ---------------------------------------------------------------------------
// Restricted Hartree-Fock

namespace {

Eigen::MatrixXd build_fock(const IntegralSet& ints, const Eigen::MatrixXd& density) {
  const std::size_t n = ints.n_orbitals();
  Eigen::MatrixXd f = ints.one_body;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = 0; v < n; ++v) {
      double g = 0.0;
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t s = 0; s < n; ++s) {
          g += density(l, s) * (2.0 * ints.eri(m, v, l, s) - ints.eri(m, l, v, s));
        }
      f(m, v) += g;
    }
  return f;
}

struct Diagonalized {
  Eigen::VectorXd energies;
  Eigen::MatrixXd coefficients;
};

Diagonalized diagonalize_fock(const Eigen::MatrixXd& fock, const Eigen::MatrixXd& x) {
  const Eigen::MatrixXd fp = x.transpose() * fock * x;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fp);
  Eigen::MatrixXd c = x * es.eigenvectors();
  // Deterministic phase: largest-magnitude coefficient of each orbital positive.
  for (Eigen::Index k = 0; k < c.cols(); ++k) {
    Eigen::Index imax = 0;
    c.col(k).cwiseAbs().maxCoeff(&imax);
    if (c(imax, k) < 0.0) c.col(k) *= -1.0;
  }
  return {es.eigenvalues(), c};
}

}  // namespace

ScfResult hartree_fock(const IntegralSet& ints, std::size_t n_electrons, const ScfOptions& options) {
  if (n_electrons == 0 || n_electrons % 2 != 0) {
    throw ValidationError("restricted closed-shell SCF needs a positive even electron count");
  }
  const std::size_t n = ints.n_orbitals();
  const std::size_t n_occ = n_electrons / 2;
  if (n_occ > n) throw ValidationError("more electron pairs than orbitals");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s_eig(ints.overlap);
  if (s_eig.eigenvalues().minCoeff() <= 1e-10) {
    throw ComputationError("overlap matrix is numerically singular");
  }
  const Eigen::MatrixXd x = s_eig.eigenvectors() *
                            s_eig.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
                            s_eig.eigenvectors().transpose();

  auto density_of = [&](const Eigen::MatrixXd& c) -> Eigen::MatrixXd {
    const auto occ = c.leftCols(n_occ);
    return occ * occ.transpose();
  };

  Diagonalized current = diagonalize_fock(ints.one_body, x);
  Eigen::MatrixXd density = density_of(current.coefficients);

  std::deque<Eigen::MatrixXd> focks;
  std::deque<Eigen::MatrixXd> errors;

  for (std::size_t iter = 1; iter <= options.max_iterations; ++iter) {
    const Eigen::MatrixXd fock = build_fock(ints, density);
    const Eigen::MatrixXd err =
        x.transpose() * (fock * density * ints.overlap - ints.overlap * density * fock) * x;

    focks.push_back(fock);
    errors.push_back(err);
    if (focks.size() > options.diis_subspace) {
      focks.pop_front();
      errors.pop_front();
    }

    Eigen::MatrixXd extrapolated = fock;
    const std::size_t m = focks.size();
    if (m >= 2) {
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m + 1, m + 1);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) b(i, j) = errors[i].cwiseProduct(errors[j]).sum();
        b(i, m) = b(m, i) = -1.0;
      }
      rhs(m) = -1.0;
      const Eigen::VectorXd w = b.completeOrthogonalDecomposition().solve(rhs);
      if (w.allFinite()) {
        extrapolated.setZero();
        for (std::size_t i = 0; i < m; ++i) extrapolated += w(i) * focks[i];
      }
    }

    current = diagonalize_fock(extrapolated, x);
    const Eigen::MatrixXd next = density_of(current.coefficients);
    const double change = (next - density).cwiseAbs().maxCoeff();
    density = next;

    if (change < options.density_tolerance) {
      // Final, un-extrapolated Fock build for consistent orbitals and energy.
      const Eigen::MatrixXd f = build_fock(ints, density);
      current = diagonalize_fock(f, x);
      density = density_of(current.coefficients);
      const Eigen::MatrixXd f2 = build_fock(ints, density);
      ScfResult r;
      r.coefficients = current.coefficients;
      r.orbital_energies = current.energies;
      r.energy = ints.core_energy + density.cwiseProduct(ints.one_body + f2).sum();
      r.iterations = iter;
      r.n_occupied = n_occ;
      return r;
    }
  }
  throw ComputationError("SCF did not converge in " + std::to_string(options.max_iterations) +
                         " iterations");
}

// ---------------------------------------------------------------------------
// Spin-orbital tables and Jordan-Wigner

IntegralSet transform_integrals(const IntegralSet& ints, const Eigen::MatrixXd& orbitals) {
  const std::size_t n = ints.n_orbitals();
  if (static_cast<std::size_t>(orbitals.rows()) != n || static_cast<std::size_t>(orbitals.cols()) != n) {
    throw ValidationError("orbital matrix must be n_orbitals x n_orbitals");
  }
  IntegralSet out(n);
  out.core_energy = ints.core_energy;
  out.n_electrons = ints.n_electrons;
  out.ms2 = ints.ms2;
  out.overlap = orbitals.transpose() * ints.overlap * orbitals;
  out.one_body = orbitals.transpose() * ints.one_body * orbitals;

  // Four quarter transformations of (pq|rs).
  std::vector<double> a(ints.two_body().begin(), ints.two_body().end());
  std::vector<double> b(a.size(), 0.0);
  const auto idx = [n](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return ((p * n + q) * n + r) * n + s;
  };
  for (int pass = 0; pass < 4; ++pass) {
    std::fill(b.begin(), b.end(), 0.0);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s) {
            const double v = a[idx(p, q, r, s)];
            if (v == 0.0) continue;
            // Transform the first index and rotate it to the back.
            for (std::size_t i = 0; i < n; ++i) b[idx(q, r, s, i)] += orbitals(p, i) * v;
          }
    std::swap(a, b);
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) out.set_eri(p, q, r, s, a[idx(p, q, r, s)]);
  return out;
}

SpinOrbitalTables second_quantized_hamiltonian(const IntegralSet& ints, const Eigen::MatrixXd& orbitals) {
  const IntegralSet mo = transform_integrals(ints, orbitals);
  const std::size_t n = mo.n_orbitals();
  const Eigen::MatrixXd& h = mo.one_body;
  const auto a = mo.two_body();
  const auto idx = [n](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return ((p * n + q) * n + r) * n + s;
  };

  SpinOrbitalTables t;
  const std::size_t ns = 2 * n;
  t.n_spin_orbitals = ns;
  t.core_energy = ints.core_energy;
  t.one_body = Eigen::MatrixXd::Zero(ns, ns);
  for (std::size_t p = 0; p < ns; ++p)
    for (std::size_t q = 0; q < ns; ++q) {
      if (p / n == q / n) t.one_body(p, q) = h(p % n, q % n);
    }

  // <PQ|RS> = (pr|qs) with matching spins P~R, Q~S.
  const auto phys = [&](std::size_t P, std::size_t Q, std::size_t R, std::size_t S) {
    if (P / n != R / n || Q / n != S / n) return 0.0;
    return a[idx(P % n, R % n, Q % n, S % n)];
  };
  t.antisymmetrized.assign(ns * ns * ns * ns, 0.0);
  for (std::size_t P = 0; P < ns; ++P)
    for (std::size_t Q = 0; Q < ns; ++Q)
      for (std::size_t R = 0; R < ns; ++R)
        for (std::size_t S = 0; S < ns; ++S) {
          t.antisymmetrized[((P * ns + Q) * ns + R) * ns + S] = phys(P, Q, R, S) - phys(P, Q, S, R);
        }
  return t;
}

double determinant_energy(const SpinOrbitalTables& tables, std::span<const std::size_t> occupied) {
  double e = tables.core_energy;
  for (std::size_t i : occupied) {
    if (i >= tables.n_spin_orbitals) throw ValidationError("occupied index out of range");
    e += tables.one_body(i, i);
  }
  for (std::size_t i : occupied)
    for (std::size_t j : occupied) e += 0.5 * tables.g(i, j, i, j);
  return e;
}

PauliSum jw_creation(std::size_t n_modes, std::size_t mode) {
  if (mode >= n_modes) throw ValidationError("mode index out of range");
  const std::uint64_t tail = (std::uint64_t{1} << mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << mode;
  // a+ = Z..Z (X - iY)/2
  const std::array<PauliTerm, 2> terms{
      PauliTerm{PauliString(n_modes, bit, tail), {0.5, 0.0}},
      PauliTerm{PauliString(n_modes, bit, tail | bit), {0.0, -0.5}},
  };
  return PauliSum(n_modes, terms);
}

PauliSum jw_annihilation(std::size_t n_modes, std::size_t mode) {
  if (mode >= n_modes) throw ValidationError("mode index out of range");
  const std::uint64_t tail = (std::uint64_t{1} << mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << mode;
  const std::array<PauliTerm, 2> terms{
      PauliTerm{PauliString(n_modes, bit, tail), {0.5, 0.0}},
      PauliTerm{PauliString(n_modes, bit, tail | bit), {0.0, 0.5}},
  };
  return PauliSum(n_modes, terms);
}

PauliSum jordan_wigner(const SpinOrbitalTables& tables) {
  const std::size_t ns = tables.n_spin_orbitals;
  if (ns == 0 || ns > 32) throw ValidationError("Jordan-Wigner supports 1..32 spin orbitals");
  if (static_cast<std::size_t>(tables.one_body.rows()) != ns ||
      tables.antisymmetrized.size() != ns * ns * ns * ns) {
    throw ValidationError("spin-orbital tables have inconsistent dimensions");
  }
  constexpr double kIntegralCutoff = 1e-14;

  std::vector<PauliSum> cr;
  std::vector<PauliSum> an;
  for (std::size_t p = 0; p < ns; ++p) {
    cr.push_back(jw_creation(ns, p));
    an.push_back(jw_annihilation(ns, p));
  }

  PauliSumBuilder acc(ns);
  acc.add(PauliString(ns), tables.core_energy);
  for (std::size_t p = 0; p < ns; ++p)
    for (std::size_t q = 0; q < ns; ++q) {
      const double h = tables.one_body(p, q);
      if (std::abs(h) < kIntegralCutoff) continue;
      acc.add(cr[p] * an[q], h);
    }
  for (std::size_t p = 0; p < ns; ++p)
    for (std::size_t q = 0; q < ns; ++q) {
      if (p == q) continue;
      const PauliSum cc = cr[p] * cr[q];
      for (std::size_t r = 0; r < ns; ++r)
        for (std::size_t s = 0; s < ns; ++s) {
          if (r == s) continue;
          const double g = tables.g(p, q, r, s);
          if (std::abs(g) < kIntegralCutoff) continue;
          acc.add(cc * (an[s] * an[r]), 0.25 * g);
        }
    }
  const PauliSum h = acc.build();
  if (!h.has_real_coefficients(1e-12)) {
    throw ComputationError("Jordan-Wigner Hamiltonian has complex coefficients");
  }
  return h.real_part();
}

PauliSum jw_number_operator(std::size_t n_spin_orbitals) {
  PauliSumBuilder acc(n_spin_orbitals);
  for (std::size_t p = 0; p < n_spin_orbitals; ++p) {
    acc.add(PauliString(n_spin_orbitals), 0.5);
    acc.add(PauliString::single(n_spin_orbitals, p, 'Z'), -0.5);
  }
  return acc.build();
}

PauliSum jw_sz_operator(std::size_t n_spin_orbitals) {
  if (n_spin_orbitals % 2 != 0) throw ValidationError("blocked ordering needs an even mode count");
  const std::size_t n = n_spin_orbitals / 2;
  PauliSumBuilder acc(n_spin_orbitals);
  // n_p = (1 - Z_p)/2; S_z = (N_alpha - N_beta)/2
  for (std::size_t p = 0; p < n_spin_orbitals; ++p) {
    const double sign = p < n ? 0.5 : -0.5;
    acc.add(PauliString::single(n_spin_orbitals, p, 'Z'), -0.5 * sign);
  }
  return acc.build();
}

// ---------------------------------------------------------------------------
// Reference determinants

SpinSector parse_spin_sector(std::string_view name) {
  if (name == "singlet") return SpinSector::kSinglet;
  if (name == "triplet") return SpinSector::kTriplet;
  throw ValidationError("unknown spin sector '" + std::string(name) + "' (singlet|triplet)");
}

std::string_view to_string(SpinSector sector) {
  return sector == SpinSector::kSinglet ? "singlet" : "triplet";
}

std::uint64_t ReferenceDeterminant::bits() const {
  std::uint64_t b = 0;
  for (std::size_t i : occupied) b |= std::uint64_t{1} << i;
  return b;
}

ReferenceDeterminant reference_determinant(SpinSector sector, std::size_t n_electrons,
                                           std::size_t n_spin_orbitals) {
  if (n_spin_orbitals % 2 != 0) throw ValidationError("spin-orbital count must be even");
  if (n_electrons > n_spin_orbitals) {
    throw ValidationError("electron count exceeds spin-orbital count");
  }
  const std::size_t n = n_spin_orbitals / 2;
  std::size_t n_alpha = (n_electrons + 1) / 2;
  if (sector == SpinSector::kTriplet) {
    if (n_electrons < 2) throw ValidationError("triplet reference needs at least two electrons");
    n_alpha = n_electrons / 2 + 1;
  }
  const std::size_t n_beta = n_electrons - n_alpha;
  if (n_alpha > n) throw ValidationError("not enough spatial orbitals for the alpha electrons");

  ReferenceDeterminant det;
  det.n_spin_orbitals = n_spin_orbitals;
  for (std::size_t i = 0; i < n_alpha; ++i) det.occupied.push_back(i);
  for (std::size_t i = 0; i < n_beta; ++i) det.occupied.push_back(n + i);
  det.s_z = 0.5 * (static_cast<double>(n_alpha) - static_cast<double>(n_beta));
  return det;
}

}  // namespace sfpds
