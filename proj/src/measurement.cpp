#include "sfpds/measurement.hpp"

#include <algorithm>
#include <bit>

#include "sfpds/error.hpp"

namespace sfpds {

namespace {

bool fits(const PauliString& s, const PauliString& rotation) {
  const std::uint64_t overlap = (s.x_mask() | s.z_mask()) & (rotation.x_mask() | rotation.z_mask());
  return (((s.x_mask() ^ rotation.x_mask()) | (s.z_mask() ^ rotation.z_mask())) & overlap) == 0;
}

}  // namespace

std::vector<QwcGroup> group_qwc(std::span<const PauliString> strings) {
  if (strings.empty()) return {};
  const std::size_t n = strings.front().n_qubits();
  std::vector<PauliString> order(strings.begin(), strings.end());
  for (const auto& s : order) {
    if (s.n_qubits() != n) throw ValidationError("strings to group have different qubit counts");
    if (s.is_identity()) throw ValidationError("the identity string is not measured and cannot be grouped");
  }
  std::sort(order.begin(), order.end(), [](const PauliString& a, const PauliString& b) {
    if (a.weight() != b.weight()) return a.weight() > b.weight();
    return a < b;
  });
  order.erase(std::unique(order.begin(), order.end()), order.end());

  std::vector<QwcGroup> groups;
  for (const auto& s : order) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const QwcGroup& g) { return fits(s, g.rotation); });
    if (it == groups.end()) {
      groups.push_back({{s}, s});
      continue;
    }
    it->members.push_back(s);
    it->rotation = PauliString(n, it->rotation.x_mask() | s.x_mask(), it->rotation.z_mask() | s.z_mask());
  }
  return groups;
}

std::vector<BasisChange> rotation_circuit(const QwcGroup& group) {
  const PauliString& r = group.rotation;
  std::vector<BasisChange> out(r.n_qubits(), BasisChange::kNone);
  for (std::size_t q = 0; q < r.n_qubits(); ++q) {
    switch (r.letter(q)) {
      case 'X': out[q] = BasisChange::kHadamard; break;
      case 'Y': out[q] = BasisChange::kSdgThenH; break;
      default: break;
    }
  }
  return out;
}

std::vector<PackedBatch> pack_batches(std::span<const QwcGroup> groups, std::size_t slot_width,
                                      std::size_t register_width) {
  if (slot_width == 0 || register_width < slot_width || register_width > 64) {
    throw ValidationError("invalid slot or register width");
  }
  const std::size_t per_batch = register_width / slot_width;
  std::vector<PackedBatch> batches;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].rotation.n_qubits() != slot_width) {
      throw ValidationError("group " + std::to_string(i) + " acts on " +
                            std::to_string(groups[i].rotation.n_qubits()) +
                            " qubits; slots are " + std::to_string(slot_width) + " wide");
    }
    if (i % per_batch == 0) batches.push_back({{}, slot_width, register_width});
    batches.back().slots.push_back({groups[i], (i % per_batch) * slot_width});
  }
  return batches;
}

double parity_expectation(const ProbabilityTable& distribution, const PauliString& member) {
  if (distribution.n_bits != member.n_qubits()) {
    throw ValidationError("distribution width differs from the string's qubit count");
  }
  const std::uint64_t support = member.x_mask() | member.z_mask();
  double e = 0.0;
  for (const auto& [b, p] : distribution.probabilities) {
    e += (std::popcount(b & support) & 1) ? -p : p;
  }
  return e;
}

std::map<PauliString, double> expectations_from_distribution(const ProbabilityTable& distribution,
                                                             const QwcGroup& group) {
  std::map<PauliString, double> out;
  for (const auto& m : group.members) out[m] = parity_expectation(distribution, m);
  return out;
}

std::map<PauliString, double> expectations_from_counts(const CountTable& counts, const QwcGroup& group) {
  return expectations_from_distribution(ProbabilityTable::from_counts(counts), group);
}

std::map<PauliString, double> expectations_from_distribution(const ProbabilityTable& distribution,
                                                             const PackedBatch& batch) {
  if (distribution.n_bits != batch.register_width) {
    throw ValidationError("distribution width differs from the batch register");
  }
  std::map<PauliString, double> out;
  for (const auto& slot : batch.slots) {
    const ProbabilityTable m = distribution.marginal(slot.offset, batch.slot_width);
    for (const auto& member : slot.group.members) out[member] = parity_expectation(m, member);
  }
  return out;
}

std::map<PauliString, double> expectations_from_counts(const CountTable& counts, const PackedBatch& batch) {
  return expectations_from_distribution(ProbabilityTable::from_counts(counts), batch);
}

}  // namespace sfpds
