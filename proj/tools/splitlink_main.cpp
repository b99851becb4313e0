// splitlink command-line tool: measure, Schmidt-analyze, and classify small
// multi-qubit pure states against link cut-profiles.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 usage error.

#include <charconv>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitlink/splitlink.hpp"

namespace {

using namespace splitlink;

constexpr int kExitOk = 0;
constexpr int kExitIoError = 1;
constexpr int kExitUsage = 2;

// Raised for selector/argument problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, CanonicalState>& canonical_catalogue() {
    static const std::map<std::string, CanonicalState> catalogue{
        {"ghz", CanonicalState::Ghz},
        {"w", CanonicalState::W},
        {"wbar", CanonicalState::Wbar},
        {"wwbar", CanonicalState::WWbar},
        {"star", CanonicalState::Star},
        {"dicke42", CanonicalState::Dicke42},
        {"bell", CanonicalState::BellPhiPlus},
    };
    return catalogue;
}

struct SelectedState {
    PureState state;
    std::string label;
};

SelectedState resolve_state(const std::string& name, const std::string& file) {
    if (name.empty() == file.empty()) {
        throw UsageError("supply exactly one of a canonical state name or --file");
    }
    if (!name.empty()) {
        const auto it = canonical_catalogue().find(name);
        if (it == canonical_catalogue().end()) {
            std::string known;
            for (const auto& [key, value] : canonical_catalogue()) {
                if (!known.empty()) known += ", ";
                known += key;
            }
            throw UsageError("unknown state '" + name + "' (known: " + known + ")");
        }
        return {construct_canonical(it->second), name};
    }
    return {read_state_file(file), file};
}

std::vector<int> parse_qubit_list(const std::string& text, const char* flag) {
    std::vector<int> qubits;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        int value = 0;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw UsageError(std::string(flag) + " expects comma-separated qubit " +
                             "indices, got '" + text + "'");
        }
        qubits.push_back(value);
        pos = comma + 1;
    }
    return qubits;
}

std::string qubit_list_text(const std::vector<int>& qubits) {
    std::string out;
    for (int q : qubits) {
        if (!out.empty()) out += ",";
        out += qubit_letter(q);
    }
    return out;
}

ClassificationResult classify_for_report(const SplittingProfile& profile,
                                         CutSemantics semantics) {
    if (profile.num_qubits != 3) {
        ClassificationResult result;
        result.primary_analogue = Analogue::Unclassified;
        result.notes.push_back("classification requires a 3-qubit state; profile only");
        return result;
    }
    ClassificationResult result = classify(profile);
    if (result.primary_analogue != Analogue::Unclassified) {
        LinkModel model = LinkModel::hopf3();
        std::string model_text{to_string(result.primary_analogue)};
        switch (result.primary_analogue) {
            case Analogue::Hopf3: model = LinkModel::hopf3(); break;
            case Analogue::Borromean: model = LinkModel::borromean(); break;
            case Analogue::Chain3:
                model = LinkModel::chain3(qubit_letter(*result.center));
                model_text += std::string(" (center ") + qubit_letter(*result.center) + ")";
                break;
            case Analogue::Unclassified: break;
        }
        const ConsistencyResult check =
            consistency_check(profile, model, kIdentityMapping, semantics);
        result.notes.push_back("consistency with " + model_text + " under " +
                               std::string(to_string(semantics)) + " semantics: " +
                               (check.consistent ? "true" : "false"));
    }
    return result;
}

int run_analyze(const SelectedState& selected, const std::string& format,
                const std::string& semantics_name) {
    const CutSemantics semantics = semantics_name == "necessitarian"
                                       ? CutSemantics::Necessitarian
                                       : CutSemantics::Possibilistic;
    ReportDocument doc;
    doc.state_label = selected.label;
    doc.profile = build_profile(selected.state, selected.label);
    doc.classification = classify_for_report(doc.profile, semantics);
    doc.tool_version = kVersion;

    ReportFormat report_format = ReportFormat::Table;
    if (format == "json") report_format = ReportFormat::Json;
    if (format == "csv") report_format = ReportFormat::Csv;
    std::cout << render_report(doc, report_format);
    return kExitOk;
}

int run_measure(const SelectedState& selected, int qubit, int outcome) {
    const auto records = measure_computational(selected.state, qubit);
    const MeasurementRecord& record = records[static_cast<std::size_t>(outcome)];

    std::cout << "state: " << selected.label << "\n";
    std::cout << "qubit: " << qubit_letter(record.qubit) << "\n";
    std::cout << "outcome: " << record.outcome << "\n";
    std::cout << "probability: " << format_double(record.probability) << "\n";
    std::cout << "post-measurement state: "
              << (record.post_state ? ket_notation(*record.post_state) : "(none)")
              << "\n";
    return kExitOk;
}

int run_schmidt(const SelectedState& selected, const std::string& left,
                const std::string& right) {
    Bipartition partition;
    partition.left = parse_qubit_list(left, "--left");
    partition.right = parse_qubit_list(right, "--right");
    const SchmidtResult result = schmidt_decompose(selected.state, partition);

    auto join = [](const std::vector<double>& values) {
        std::string out;
        for (double v : values) {
            if (!out.empty()) out += ", ";
            out += format_double(v);
        }
        return out;
    };
    std::cout << "state: " << selected.label << "\n";
    std::cout << "left: " << qubit_list_text(partition.left) << "\n";
    std::cout << "right: " << qubit_list_text(partition.right) << "\n";
    std::cout << "schmidt rank: " << result.rank << "\n";
    std::cout << "gram eigenvalues: " << join(result.gram_eigenvalues) << "\n";
    std::cout << "schmidt coefficients: " << join(result.coefficients) << "\n";
    std::cout << "maximally entangled: "
              << (result.maximally_entangled ? "true" : "false") << "\n";
    return kExitOk;
}

int run_states() {
    std::cout << "ghz = 1/sqrt(2)(|000>+|111>)\n"
              << "w = 1/sqrt(3)(|001>+|010>+|100>)\n"
              << "wbar = 1/sqrt(3)(|011>+|101>+|110>)\n"
              << "wwbar = 1/sqrt(6)(|001>+|010>+|011>+|100>+|101>+|110>)\n"
              << "star = 1/2(|000>+|100>+|101>+|111>)\n"
              << "dicke42 = 1/sqrt(6)(|0011>+|0101>+|0110>+|1001>+|1010>+|1100>)\n"
              << "bell = 1/sqrt(2)(|00>+|11>)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement splitting profiles and their link analogues"};
    app.set_version_flag("--version", splitlink::kVersion);
    app.require_subcommand(1);

    std::string state_name, state_file;
    std::string format = "table";
    std::string semantics = "possibilistic";
    int qubit = 0, outcome = 0;
    std::string left, right;

    auto add_selector = [&](CLI::App* sub) {
        sub->add_option("state", state_name,
                        "canonical state name (see `splitlink states`)");
        sub->add_option("--file", state_file, "path to a JSON state file");
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "full splitting profile plus topological classification");
    add_selector(analyze);
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    analyze->add_option("--semantics", semantics, "cut semantics for consistency")
        ->check(CLI::IsMember({"possibilistic", "necessitarian"}));

    CLI::App* measure = app.add_subcommand(
        "measure", "single projective measurement of one qubit");
    add_selector(measure);
    measure->add_option("--qubit", qubit, "qubit index to measure")->required();
    measure->add_option("--outcome", outcome, "outcome bit")
        ->required()
        ->check(CLI::IsMember({0, 1}));

    CLI::App* schmidt = app.add_subcommand(
        "schmidt", "Schmidt decomposition across a bipartition");
    add_selector(schmidt);
    schmidt->add_option("--left", left, "left register, comma-separated qubits")
        ->required();
    schmidt->add_option("--right", right, "right register, comma-separated qubits")
        ->required();

    CLI::App* states = app.add_subcommand("states", "list the canonical states");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (states->parsed()) return run_states();
        const SelectedState selected = resolve_state(state_name, state_file);
        if (analyze->parsed()) return run_analyze(selected, format, semantics);
        if (measure->parsed()) return run_measure(selected, qubit, outcome);
        if (schmidt->parsed()) return run_schmidt(selected, left, right);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const splitlink::QubitOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const splitlink::InvalidPartition& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const splitlink::WrongArity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const splitlink::Error& e) {
        // remaining library errors are input-document problems
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
}
