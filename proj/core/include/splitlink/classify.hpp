// classify.hpp
// Maps a splitting profile to its topological analogue and checks a profile
// against a link model's cut behavior.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitlink/links.hpp"
#include "splitlink/profile.hpp"

namespace splitlink {

enum class Analogue { Hopf3, Borromean, Chain3, Unclassified };

std::string_view to_string(Analogue analogue);

struct ClassificationResult {
    Analogue primary_analogue = Analogue::Unclassified;
    // Present iff primary_analogue == Chain3.
    std::optional<int> center;
    // (qubit, outcome) pairs that fully disentangle the residue while the
    // overall pattern is Chain3.
    std::vector<std::pair<int, int>> borromean_outcomes;
    // Per-entry annotations (residue rank, gram spectrum shape).
    std::vector<std::string> notes;

    friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

// Decision procedure over the entries with probability >= kProbTol:
//   1. every entry has rank >= 2            -> Hopf3
//   2. every entry has rank 1               -> Borromean
//   3. exactly one qubit is all rank 1 and each other qubit has at least
//      one rank >= 2 entry                  -> Chain3 with that center;
//      rank-1 entries on non-center qubits land in borromean_outcomes
//   4. otherwise                            -> Unclassified
// Throws WrongArity unless the profile has exactly 3 qubits.
ClassificationResult classify(const SplittingProfile& profile);

// Whether a measured qubit counts as leaving the others "linked":
// possibilistic = any kept outcome has rank >= 2; necessitarian = all do.
enum class CutSemantics { Possibilistic, Necessitarian };

std::string_view to_string(CutSemantics semantics);

struct CutMismatch {
    int qubit = 0;
    char component = 'A';
    bool quantum_linked = false;
    bool model_linked = false;

    friend bool operator==(const CutMismatch&, const CutMismatch&) = default;
};

struct ConsistencyResult {
    bool consistent = false;
    std::vector<CutMismatch> mismatches;

    friend bool operator==(const ConsistencyResult&, const ConsistencyResult&) = default;
};

inline constexpr std::array<char, 3> kIdentityMapping{'A', 'B', 'C'};

// Compares, for each qubit q, the quantum cut verdict under the chosen
// semantics against cut(model, qubit_to_component[q]) being nonempty.
// Throws WrongArity, InvalidMapping.
ConsistencyResult consistency_check(const SplittingProfile& profile,
                                    const LinkModel& model,
                                    const std::array<char, 3>& qubit_to_component = kIdentityMapping,
                                    CutSemantics semantics = CutSemantics::Possibilistic);

}  // namespace splitlink
