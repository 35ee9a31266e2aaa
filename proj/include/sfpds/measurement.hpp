#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "sfpds/counts.hpp"
#include "sfpds/pauli.hpp"

namespace sfpds {

/// Strings that share one measurement basis.
struct QwcGroup {
  std::vector<PauliString> members;
  PauliString rotation;  // per qubit, the non-identity letter used by any member
};

/// Greedy first-fit partition into qubit-wise commuting groups.
///
/// Strings are visited by descending weight, ties in canonical order; each
/// joins the first group it is compatible with, else opens a new one.
std::vector<QwcGroup> group_qwc(std::span<const PauliString> strings);

/// Single-qubit basis change applied before a computational-basis readout.
enum class BasisChange {
  kNone,      // Z or I
  kHadamard,  // X
  kSdgThenH,  // Y: S^dagger, then H
};

/// One entry per qubit of the group's register.
std::vector<BasisChange> rotation_circuit(const QwcGroup& group);

struct PackedSlot {
  QwcGroup group;
  std::size_t offset = 0;  // first register bit of this slot
};

/// Up to register_width / slot_width groups measured side by side.
struct PackedBatch {
  std::vector<PackedSlot> slots;
  std::size_t slot_width = 5;
  std::size_t register_width = 20;
};

/// Groups in creation order, filling slots at offsets 0, w, 2w, ...
std::vector<PackedBatch> pack_batches(std::span<const QwcGroup> groups, std::size_t slot_width = 5,
                                      std::size_t register_width = 20);

/// <P> from a rotated-basis distribution over the group's own qubits:
/// sum_b p(b) (-1)^{|b & support(P)|}.
double parity_expectation(const ProbabilityTable& distribution, const PauliString& member);

/// Every member of a single group, from a histogram on the group's qubits.
std::map<PauliString, double> expectations_from_counts(const CountTable& counts, const QwcGroup& group);
std::map<PauliString, double> expectations_from_distribution(const ProbabilityTable& distribution,
                                                             const QwcGroup& group);

/// Every member of every slot, marginalizing the joint register onto each slot.
std::map<PauliString, double> expectations_from_counts(const CountTable& counts, const PackedBatch& batch);
std::map<PauliString, double> expectations_from_distribution(const ProbabilityTable& distribution,
                                                             const PackedBatch& batch);

}  // namespace sfpds
