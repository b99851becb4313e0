// io.hpp
// State files and machine-readable reports.
//
// State file schema (JSON): {"num_qubits": n, "amplitudes": [[re, im], ...]}
// with exactly 2^n [re, im] pairs in the shared basis order.
//
// Report schema (JSON): top-level keys "state_label", "profile",
// "classification", "tool_version". The profile is an array of
// SplittingEntry rows; classification carries the analogue, the center as a
// qubit letter, borromean outcomes as [letter, bit] pairs, and notes.

#pragma once

#include <filesystem>
#include <string>

#include "splitlink/classify.hpp"
#include "splitlink/profile.hpp"

namespace splitlink {

enum class ReportFormat { Json, Table, Csv };

struct ReportDocument {
    std::string state_label;
    SplittingProfile profile;
    ClassificationResult classification;
    std::string tool_version;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// Reads and validates a state file. Throws ParseError (unreadable or
// malformed), SchemaError (wrong keys/types/lengths, non-finite values),
// ZeroVector.
PureState read_state_file(const std::filesystem::path& path);

// Same contract on an in-memory document.
PureState parse_state_json(const std::string& text);

// Json: stable key order, full-precision numbers, byte-deterministic.
// Table: human-readable layout Qubit | Outcome | Probability |
//        Post-Measurement State | Schmidt Rank, plus the classification.
// Csv:   header + one entry per row, columns qubit,outcome,probability,rank.
std::string render_report(const ReportDocument& doc, ReportFormat format);

// Inverse of render_report for the Json format.
// Throws ParseError, SchemaError.
ReportDocument parse_report(const std::string& json_text);

// Ket notation with amplitudes rounded to 6 digits, listing only basis
// terms whose probability exceeds kProbTol.
std::string ket_notation(const PureState& state);

// Shortest representation that parses back to the same double.
std::string format_double(double value);

}  // namespace splitlink
