#include "splitlink/classify.hpp"

#include <algorithm>
#include <cstdio>

namespace splitlink {

std::string_view to_string(Analogue analogue) {
    switch (analogue) {
        case Analogue::Hopf3: return "HOPF3";
        case Analogue::Borromean: return "BORROMEAN";
        case Analogue::Chain3: return "CHAIN3";
        case Analogue::Unclassified: return "UNCLASSIFIED";
    }
    return "?";
}

std::string_view to_string(CutSemantics semantics) {
    return semantics == CutSemantics::Possibilistic ? "possibilistic" : "necessitarian";
}

namespace {

void check_arity(const SplittingProfile& profile) {
    if (profile.num_qubits != 3) {
        throw WrongArity("classification requires a 3-qubit profile, got " +
                         std::to_string(profile.num_qubits) + " qubits");
    }
}

std::string short_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string entry_note(const SplittingEntry& entry) {
    std::string note = "qubit ";
    note += qubit_letter(entry.qubit);
    note += " outcome " + std::to_string(entry.outcome) + ": ";
    if (*entry.rank <= 1) {
        note += "separable residue (rank 1)";
        return note;
    }
    note += "entangled residue (rank " + std::to_string(*entry.rank) +
            ", gram spectrum [";
    const auto& spectrum = *entry.gram_eigenvalues;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        if (i) note += ", ";
        note += short_real(spectrum[i]);
    }
    const double spread = spectrum.front() - spectrum[static_cast<std::size_t>(*entry.rank) - 1];
    note += spread <= 1e-10 ? "], maximal)" : "], non-maximal)";
    return note;
}

}  // namespace

ClassificationResult classify(const SplittingProfile& profile) {
    check_arity(profile);

    // Entries that actually occur; the invariant guarantees rank presence.
    std::vector<const SplittingEntry*> kept;
    for (const auto& entry : profile.entries) {
        if (entry.probability >= kProbTol) kept.push_back(&entry);
    }

    ClassificationResult result;
    for (const auto* entry : kept) result.notes.push_back(entry_note(*entry));

    std::array<bool, 3> all_separable{true, true, true};
    std::array<bool, 3> any_entangled{false, false, false};
    for (const auto* entry : kept) {
        if (*entry->rank >= 2) {
            all_separable[static_cast<std::size_t>(entry->qubit)] = false;
            any_entangled[static_cast<std::size_t>(entry->qubit)] = true;
        }
    }

    const bool every_entry_entangled =
        std::all_of(kept.begin(), kept.end(),
                    [](const SplittingEntry* e) { return *e->rank >= 2; });
    const bool every_entry_separable =
        std::all_of(kept.begin(), kept.end(),
                    [](const SplittingEntry* e) { return *e->rank == 1; });

    if (every_entry_entangled) {
        result.primary_analogue = Analogue::Hopf3;
        return result;
    }
    if (every_entry_separable) {
        result.primary_analogue = Analogue::Borromean;
        return result;
    }

    const int separable_qubits =
        static_cast<int>(std::count(all_separable.begin(), all_separable.end(), true));
    if (separable_qubits == 1) {
        const int center = static_cast<int>(
            std::find(all_separable.begin(), all_separable.end(), true) -
            all_separable.begin());
        bool others_entangled = true;
        for (int q = 0; q < 3; ++q) {
            if (q != center && !any_entangled[static_cast<std::size_t>(q)]) {
                others_entangled = false;
            }
        }
        if (others_entangled) {
            result.primary_analogue = Analogue::Chain3;
            result.center = center;
            for (const auto* entry : kept) {
                if (entry->qubit != center && *entry->rank == 1) {
                    result.borromean_outcomes.emplace_back(entry->qubit, entry->outcome);
                }
            }
            return result;
        }
    }

    result.primary_analogue = Analogue::Unclassified;
    return result;
}

ConsistencyResult consistency_check(const SplittingProfile& profile,
                                    const LinkModel& model,
                                    const std::array<char, 3>& qubit_to_component,
                                    CutSemantics semantics) {
    check_arity(profile);

    // The map must hit each model component exactly once.
    for (char c : model.components) {
        if (std::count(qubit_to_component.begin(), qubit_to_component.end(), c) != 1) {
            throw InvalidMapping(std::string("mapping must use component '") + c +
                                 "' exactly once");
        }
    }

    ConsistencyResult result;
    result.consistent = true;
    for (int qubit = 0; qubit < 3; ++qubit) {
        bool any_linked = false;
        bool all_linked = true;
        for (const auto& entry : profile.entries) {
            if (entry.qubit != qubit || entry.probability < kProbTol) continue;
            const bool linked = *entry.rank >= 2;
            any_linked |= linked;
            all_linked &= linked;
        }
        const bool quantum_linked =
            semantics == CutSemantics::Possibilistic ? any_linked : all_linked;

        const char component = qubit_to_component[static_cast<std::size_t>(qubit)];
        const bool model_linked = !cut(model, component).empty();

        if (quantum_linked != model_linked) {
            result.consistent = false;
            result.mismatches.push_back({qubit, component, quantum_linked, model_linked});
        }
    }
    return result;
}

}  // namespace splitlink
