#include "splitlink/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace splitlink {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

namespace {

std::string short_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string amplitude_text(const Amplitude& a) {
    if (a.imag() == 0.0) return short_real(a.real());
    std::string text = "(" + short_real(a.real());
    if (a.imag() >= 0.0) text += "+";
    text += short_real(a.imag()) + "i)";
    return text;
}

std::string basis_bits(std::size_t index, int num_qubits) {
    std::string bits(static_cast<std::size_t>(num_qubits), '0');
    for (int q = 0; q < num_qubits; ++q) {
        if ((index >> (num_qubits - 1 - q)) & 1u) bits[static_cast<std::size_t>(q)] = '1';
    }
    return bits;
}

const ordered_json& require_key(const ordered_json& j, const char* key) {
    if (!j.is_object()) throw SchemaError("expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
    return *it;
}

PureState state_from_json(const ordered_json& j) {
    const auto& nq = require_key(j, "num_qubits");
    if (!nq.is_number_integer()) throw SchemaError("'num_qubits' must be an integer");
    const int num_qubits = nq.get<int>();
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SchemaError("'num_qubits' must be in [1, " +
                          std::to_string(kMaxQubits) + "]");
    }

    const auto& amps_json = require_key(j, "amplitudes");
    if (!amps_json.is_array()) throw SchemaError("'amplitudes' must be an array");
    const std::size_t expected = std::size_t{1} << num_qubits;
    if (amps_json.size() != expected) {
        throw SchemaError("'amplitudes' must hold " + std::to_string(expected) +
                          " entries for num_qubits=" + std::to_string(num_qubits) +
                          ", got " + std::to_string(amps_json.size()));
    }

    std::vector<Amplitude> amps;
    amps.reserve(expected);
    for (const auto& pair : amps_json) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number()) {
            throw SchemaError("each amplitude must be a [re, im] number pair");
        }
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw SchemaError("amplitudes must be finite");
        }
        amps.emplace_back(re, im);
    }
    return from_amplitudes(num_qubits, std::move(amps));
}

ordered_json state_to_json(const PureState& state) {
    ordered_json j;
    j["num_qubits"] = state.num_qubits();
    ordered_json amps = ordered_json::array();
    for (const auto& a : state.amplitudes()) {
        amps.push_back(ordered_json::array({a.real(), a.imag()}));
    }
    j["amplitudes"] = std::move(amps);
    return j;
}

ordered_json report_to_json(const ReportDocument& doc) {
    ordered_json j;
    j["state_label"] = doc.state_label;

    ordered_json rows = ordered_json::array();
    for (const auto& entry : doc.profile.entries) {
        ordered_json row;
        row["qubit"] = entry.qubit;
        row["outcome"] = entry.outcome;
        row["probability"] = entry.probability;
        row["rank"] = entry.rank ? ordered_json(*entry.rank) : ordered_json(nullptr);
        row["gram_eigenvalues"] = entry.gram_eigenvalues
                                      ? ordered_json(*entry.gram_eigenvalues)
                                      : ordered_json(nullptr);
        row["post_state"] = entry.post_state ? state_to_json(*entry.post_state)
                                             : ordered_json(nullptr);
        rows.push_back(std::move(row));
    }
    j["profile"] = std::move(rows);

    ordered_json cls;
    cls["analogue"] = std::string(to_string(doc.classification.primary_analogue));
    cls["center"] = doc.classification.center
                        ? ordered_json(std::string(1, qubit_letter(*doc.classification.center)))
                        : ordered_json(nullptr);
    ordered_json outcomes = ordered_json::array();
    for (const auto& [qubit, outcome] : doc.classification.borromean_outcomes) {
        outcomes.push_back(
            ordered_json::array({std::string(1, qubit_letter(qubit)), outcome}));
    }
    cls["borromean_outcomes"] = std::move(outcomes);
    cls["notes"] = doc.classification.notes;
    j["classification"] = std::move(cls);

    j["tool_version"] = doc.tool_version;
    return j;
}

int letter_to_qubit(const std::string& letter) {
    if (letter.size() != 1 || letter[0] < 'A' || letter[0] > 'Z') {
        throw SchemaError("qubit letters must be single characters A..Z, got '" +
                          letter + "'");
    }
    return letter[0] - 'A';
}

Analogue analogue_from_string(const std::string& text) {
    for (Analogue a : {Analogue::Hopf3, Analogue::Borromean, Analogue::Chain3,
                       Analogue::Unclassified}) {
        if (text == to_string(a)) return a;
    }
    throw SchemaError("unknown analogue '" + text + "'");
}

ReportDocument report_from_json(const ordered_json& j) {
    ReportDocument doc;
    const auto& label = require_key(j, "state_label");
    if (!label.is_string()) throw SchemaError("'state_label' must be a string");
    doc.state_label = label.get<std::string>();

    const auto& rows = require_key(j, "profile");
    if (!rows.is_array() || rows.empty() || rows.size() % 2 != 0) {
        throw SchemaError("'profile' must be a nonempty array of entry pairs");
    }
    doc.profile.state_label = doc.state_label;
    doc.profile.num_qubits = static_cast<int>(rows.size() / 2);
    for (const auto& row : rows) {
        SplittingEntry entry;
        entry.qubit = require_key(row, "qubit").get<int>();
        entry.outcome = require_key(row, "outcome").get<int>();
        entry.probability = require_key(row, "probability").get<double>();
        const auto& rank = require_key(row, "rank");
        if (!rank.is_null()) entry.rank = rank.get<int>();
        const auto& gram = require_key(row, "gram_eigenvalues");
        if (!gram.is_null()) entry.gram_eigenvalues = gram.get<std::vector<double>>();
        const auto& post = require_key(row, "post_state");
        if (!post.is_null()) entry.post_state = state_from_json(post);
        doc.profile.entries.push_back(std::move(entry));
    }

    const auto& cls = require_key(j, "classification");
    doc.classification.primary_analogue =
        analogue_from_string(require_key(cls, "analogue").get<std::string>());
    const auto& center = require_key(cls, "center");
    if (!center.is_null()) {
        doc.classification.center = letter_to_qubit(center.get<std::string>());
    }
    const auto& outcomes = require_key(cls, "borromean_outcomes");
    if (!outcomes.is_array()) throw SchemaError("'borromean_outcomes' must be an array");
    for (const auto& pair : outcomes) {
        if (!pair.is_array() || pair.size() != 2) {
            throw SchemaError("each borromean outcome must be a [qubit, outcome] pair");
        }
        doc.classification.borromean_outcomes.emplace_back(
            letter_to_qubit(pair[0].get<std::string>()), pair[1].get<int>());
    }
    const auto& notes = require_key(cls, "notes");
    if (!notes.is_array()) throw SchemaError("'notes' must be an array");
    for (const auto& note : notes) {
        doc.classification.notes.push_back(note.get<std::string>());
    }

    const auto& version = require_key(j, "tool_version");
    if (!version.is_string()) throw SchemaError("'tool_version' must be a string");
    doc.tool_version = version.get<std::string>();
    return doc;
}

std::string render_table(const ReportDocument& doc) {
    std::ostringstream out;
    out << "state: " << doc.state_label << "  (" << doc.profile.num_qubits
        << " qubits, tool " << doc.tool_version << ")\n\n";

    const std::array<std::string, 5> header{"qubit measured", "outcome",
                                            "probability", "post-measurement state",
                                            "schmidt rank"};
    std::vector<std::array<std::string, 5>> cells;
    for (const auto& entry : doc.profile.entries) {
        char prob[32];
        std::snprintf(prob, sizeof(prob), "%.4f", entry.probability);
        cells.push_back({std::string(1, qubit_letter(entry.qubit)),
                         std::to_string(entry.outcome), prob,
                         entry.post_state ? ket_notation(*entry.post_state) : "-",
                         entry.rank ? std::to_string(*entry.rank) : "-"});
    }

    std::array<std::size_t, 5> width;
    for (std::size_t c = 0; c < 5; ++c) {
        width[c] = header[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    auto emit_row = [&](const std::array<std::string, 5>& row) {
        for (std::size_t c = 0; c < 5; ++c) {
            if (c) out << " | ";
            out << row[c] << std::string(width[c] - row[c].size(), ' ');
        }
        out << "\n";
    };
    emit_row(header);
    for (std::size_t c = 0; c < 5; ++c) {
        if (c) out << "-+-";
        out << std::string(width[c], '-');
    }
    out << "\n";
    for (const auto& row : cells) emit_row(row);

    out << "\nclassification:\n";
    out << "  analogue: " << to_string(doc.classification.primary_analogue) << "\n";
    if (doc.classification.center) {
        out << "  center: " << qubit_letter(*doc.classification.center) << "\n";
    }
    if (!doc.classification.borromean_outcomes.empty()) {
        out << "  borromean outcomes:";
        for (const auto& [qubit, outcome] : doc.classification.borromean_outcomes) {
            out << " (" << qubit_letter(qubit) << "," << outcome << ")";
        }
        out << "\n";
    }
    if (!doc.classification.notes.empty()) {
        out << "  notes:\n";
        for (const auto& note : doc.classification.notes) {
            out << "    - " << note << "\n";
        }
    }
    return out.str();
}

std::string render_csv(const ReportDocument& doc) {
    std::string out = "qubit,outcome,probability,rank\n";
    for (const auto& entry : doc.profile.entries) {
        out += qubit_letter(entry.qubit);
        out += "," + std::to_string(entry.outcome);
        out += "," + format_double(entry.probability);
        out += ",";
        if (entry.rank) out += std::to_string(*entry.rank);
        out += "\n";
    }
    return out;
}

}  // namespace

PureState parse_state_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed state document: ") + e.what());
    }
    return state_from_json(j);
}

PureState read_state_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read state file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_state_json(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const SchemaError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

std::string render_report(const ReportDocument& doc, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return report_to_json(doc).dump(2) + "\n";
        case ReportFormat::Table: return render_table(doc);
        case ReportFormat::Csv: return render_csv(doc);
    }
    throw Error("unknown report format");
}

ReportDocument parse_report(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed report document: ") + e.what());
    }
    return report_from_json(j);
}

std::string ket_notation(const PureState& state) {
    std::string out;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const Amplitude& a = state[i];
        if (std::norm(a) <= kProbTol) continue;
        if (!out.empty()) {
            if (a.imag() == 0.0 && a.real() < 0.0) {
                out += " - " + amplitude_text(Amplitude{-a.real(), 0.0});
            } else {
                out += " + " + amplitude_text(a);
            }
        } else {
            out += amplitude_text(a);
        }
        out += "|" + basis_bits(i, state.num_qubits()) + ">";
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace splitlink
