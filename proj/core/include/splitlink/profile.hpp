// profile.hpp
// The splitting profile: every single-qubit computational-basis measurement
// of a state together with the Schmidt analysis of each residue.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitlink/measure.hpp"
#include "splitlink/schmidt.hpp"

namespace splitlink {

// One (qubit, outcome) row. rank, gram_eigenvalues and post_state are
// present iff probability >= kProbTol.
struct SplittingEntry {
    int qubit = 0;
    int outcome = 0;
    double probability = 0.0;
    std::optional<int> rank;
    std::optional<std::vector<double>> gram_eigenvalues;
    std::optional<PureState> post_state;

    friend bool operator==(const SplittingEntry&, const SplittingEntry&) = default;
};

// Exactly 2 * num_qubits entries, ordered by (qubit, outcome).
struct SplittingProfile {
    std::string state_label;
    int num_qubits = 0;
    std::vector<SplittingEntry> entries;

    friend bool operator==(const SplittingProfile&, const SplittingProfile&) = default;
};

// Measures each qubit in the computational basis and ranks every residue.
// The residue's bipartition is the two remaining single qubits when
// num_qubits == 3, the first remaining qubit versus the rest when
// num_qubits > 3, and trivial (rank 1, gram {1}) for the single leftover
// qubit when num_qubits == 2.
SplittingProfile build_profile(const PureState& state, std::string label = "");

}  // namespace splitlink
