#include "splitlink/profile.hpp"

#include <utility>

namespace splitlink {

SplittingProfile build_profile(const PureState& state, std::string label) {
    const int n = state.num_qubits();
    SplittingProfile profile;
    profile.state_label = std::move(label);
    profile.num_qubits = n;
    profile.entries.reserve(2 * static_cast<std::size_t>(n));

    for (int qubit = 0; qubit < n; ++qubit) {
        for (auto& record : measure_computational(state, qubit)) {
            SplittingEntry entry;
            entry.qubit = record.qubit;
            entry.outcome = record.outcome;
            entry.probability = record.probability;
            if (record.post_state) {
                if (n == 2) {
                    // A single leftover qubit holds no bipartite entanglement.
                    entry.rank = 1;
                    entry.gram_eigenvalues = std::vector<double>{1.0};
                } else {
                    Bipartition split;
                    split.left = {0};
                    for (int q = 1; q < n - 1; ++q) split.right.push_back(q);
                    const SchmidtResult schmidt =
                        schmidt_decompose(*record.post_state, split);
                    entry.rank = schmidt.rank;
                    entry.gram_eigenvalues = schmidt.gram_eigenvalues;
                }
                entry.post_state = std::move(record.post_state);
            }
            profile.entries.push_back(std::move(entry));
        }
    }
    return profile;
}

}  // namespace splitlink
