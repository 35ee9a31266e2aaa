#include "sfpds/taper.hpp"

#include <algorithm>
#include <bit>

#include "sfpds/error.hpp"

namespace sfpds {

namespace {

/// In-place reduced row echelon form over GF(2); columns are bit positions,
/// lower bit = earlier column. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::uint64_t>& rows, std::size_t n_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_cols && r < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                           [bit](std::uint64_t v) { return (v & bit) != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), it);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Null space {v : popcount(row & v) even for all rows} over n_cols bits.
std::vector<std::uint64_t> null_space(std::vector<std::uint64_t> rows, std::size_t n_cols) {
  const auto pivots = rref(rows, n_cols);
  std::vector<std::uint64_t> basis;
  for (std::size_t free = 0; free < n_cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::uint64_t v = std::uint64_t{1} << free;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] & (std::uint64_t{1} << free)) v |= std::uint64_t{1} << pivots[i];
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

std::vector<std::size_t> TaperingData::kept_qubits() const {
  std::vector<std::size_t> kept;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if (!std::binary_search(removed_qubits.begin(), removed_qubits.end(), q)) kept.push_back(q);
  }
  return kept;
}

std::vector<PauliString> find_symmetries(const PauliSum& h) {
  const std::size_t n = h.n_qubits();
  std::vector<std::uint64_t> rows;
  for (const auto& t : h.terms()) {
    if (t.string.x_mask() != 0) rows.push_back(t.string.x_mask());
  }
  auto basis = null_space(rows, n);
  rref(basis, n);
  std::vector<PauliString> gens;
  for (std::uint64_t z : basis) gens.emplace_back(n, 0, z);
  return gens;
}

std::size_t symmetry_dimension(const PauliSum& h) {
  const std::size_t n = h.n_qubits();
  if (2 * n > 64) throw ValidationError("symmetry_dimension supports up to 32 qubits");
  // Row (z | x) pairs with candidate (x | z): the symplectic product.
  std::vector<std::uint64_t> rows;
  for (const auto& t : h.terms()) rows.push_back(t.string.z_mask() | (t.string.x_mask() << n));
  return null_space(rows, 2 * n).size();
}

std::vector<int> sector_of(std::uint64_t bits, const std::vector<PauliString>& generators) {
  std::vector<int> signs;
  for (const auto& g : generators) {
    if (!g.is_z_type()) throw ValidationError("sector signs need Z-type generators, got " + g.to_string());
    signs.push_back((std::popcount(g.z_mask() & bits) & 1) ? -1 : 1);
  }
  return signs;
}

std::vector<int> sector_of(const ReferenceDeterminant& det, const std::vector<PauliString>& generators) {
  return sector_of(det.bits(), generators);
}

TaperingData make_tapering(const PauliSum& h, const std::vector<int>& sector_signs) {
  TaperingData td;
  td.n_qubits = h.n_qubits();
  td.generators = find_symmetries(h);
  if (sector_signs.size() != td.generators.size()) {
    throw ValidationError("expected " + std::to_string(td.generators.size()) + " sector signs, got " +
                          std::to_string(sector_signs.size()));
  }
  for (int s : sector_signs) {
    if (s != 1 && s != -1) throw ValidationError("sector signs must be +1 or -1");
  }
  td.sector_signs = sector_signs;
  for (const auto& g : td.generators) {
    // Reduced row-echelon rows: the lowest set bit is exclusive to this row.
    td.paulix_partners.push_back(static_cast<std::size_t>(std::countr_zero(g.z_mask())));
  }
  td.removed_qubits = td.paulix_partners;
  std::sort(td.removed_qubits.begin(), td.removed_qubits.end());
  td.n_remaining = td.n_qubits - td.removed_qubits.size();
  return td;
}

TaperingData make_tapering(const PauliSum& h, const ReferenceDeterminant& det) {
  if (det.n_spin_orbitals != h.n_qubits()) {
    throw ValidationError("determinant and Hamiltonian sizes differ");
  }
  return make_tapering(h, sector_of(det, find_symmetries(h)));
}

PauliSum taper_operator(const PauliSum& h, const TaperingData& td) {
  if (h.n_qubits() != td.n_qubits) throw ValidationError("tapering data built for another register");
  const auto kept = td.kept_qubits();
  PauliSumBuilder acc(td.n_remaining, h.drop_tolerance());

  for (const auto& term : h.terms()) {
    PauliString p = term.string;
    std::complex<double> c = term.coefficient;
    for (std::size_t i = 0; i < td.generators.size(); ++i) {
      const auto& g = td.generators[i];
      if (!commutes(g, p)) {
        throw ValidationError("generator " + g.to_string() + " does not commute with term " +
                              p.to_string());
      }
      const std::size_t q = td.paulix_partners[i];
      const PauliString xq = PauliString::single(td.n_qubits, q, 'X');
      if (commutes(xq, p)) continue;
      // U P U = X_q tau P for U = (X_q + tau)/sqrt(2) when P anticommutes with X_q.
      auto [xt, ph1] = multiply_strings(xq, g);
      auto [res, ph2] = multiply_strings(xt, p);
      p = res;
      c *= to_complex(ph1 * ph2);
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < td.generators.size(); ++i) {
      const std::size_t q = td.paulix_partners[i];
      const char l = p.letter(q);
      if (l == 'X') {
        c *= static_cast<double>(td.sector_signs[i]);
      } else if (l != 'I') {
        throw ValidationError("rotated term " + p.to_string() + " is not diagonal on tapered qubit " +
                              std::to_string(q));
      }
    }
    for (std::size_t k = 0; k < kept.size(); ++k) {
      x |= ((p.x_mask() >> kept[k]) & 1U) << k;
      z |= ((p.z_mask() >> kept[k]) & 1U) << k;
    }
    acc.add(PauliString(td.n_remaining, x, z), c);
  }
  return acc.build();
}

std::uint64_t taper_bits(const ReferenceDeterminant& det, const TaperingData& td) {
  if (det.n_spin_orbitals != td.n_qubits) throw ValidationError("determinant and tapering sizes differ");
  const std::uint64_t bits = det.bits();
  if (sector_of(bits, td.generators) != td.sector_signs) {
    throw ValidationError("determinant does not lie in the tapered symmetry sector");
  }
  const auto kept = td.kept_qubits();
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < kept.size(); ++k) out |= ((bits >> kept[k]) & 1U) << k;
  return out;
}

StateVector taper_state(const ReferenceDeterminant& det, const TaperingData& td) {
  return StateVector::basis(td.n_remaining, taper_bits(det, td));
}

}  // namespace sfpds
