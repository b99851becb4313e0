#include "splitlink/state.hpp"

#include <cmath>

namespace splitlink {

namespace {

double norm_squared(const std::vector<Amplitude>& amps) {
    double sum = 0.0;
    for (const auto& a : amps) sum += std::norm(a);
    return sum;
}

}  // namespace

PureState::PureState(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
        throw LengthMismatch("num_qubits must be in [1, " +
                             std::to_string(kMaxQubits) + "], got " +
                             std::to_string(num_qubits_));
    }
    const std::size_t expected = std::size_t{1} << num_qubits_;
    if (amplitudes_.size() != expected) {
        throw LengthMismatch("expected " + std::to_string(expected) +
                             " amplitudes for " + std::to_string(num_qubits_) +
                             " qubits, got " + std::to_string(amplitudes_.size()));
    }
    for (const auto& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NonFiniteAmplitude("amplitude vector contains NaN or Inf");
        }
    }
    const double n2 = norm_squared(amplitudes_);
    if (std::sqrt(n2) < kNormTol) {
        throw ZeroVector("amplitude vector has zero norm");
    }
    // Rescale only when meaningfully off-unit; keeps analytic coefficients
    // (and round-tripped vectors) bit-stable.
    if (std::abs(n2 - 1.0) > kNormTol) {
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& a : amplitudes_) a *= inv;
    }
}

PureState PureState::basis(int num_qubits, std::size_t basis_index) {
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps.at(basis_index) = Amplitude{1.0, 0.0};
    return PureState(num_qubits, std::move(amps));
}

PureState construct_canonical(CanonicalState which) {
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s3 = 1.0 / std::sqrt(3.0);
    const double s6 = 1.0 / std::sqrt(6.0);

    auto make = [](int n, std::initializer_list<std::pair<std::size_t, double>> terms) {
        std::vector<Amplitude> amps(std::size_t{1} << n, Amplitude{0.0, 0.0});
        for (const auto& [index, value] : terms) amps[index] = Amplitude{value, 0.0};
        return PureState(n, std::move(amps));
    };

    switch (which) {
        case CanonicalState::Ghz:
            return make(3, {{0, s2}, {7, s2}});
        case CanonicalState::W:
            return make(3, {{1, s3}, {2, s3}, {4, s3}});
        case CanonicalState::Wbar:
            return make(3, {{3, s3}, {5, s3}, {6, s3}});
        case CanonicalState::WWbar:
            return make(3, {{1, s6}, {2, s6}, {3, s6}, {4, s6}, {5, s6}, {6, s6}});
        case CanonicalState::Star:
            return make(3, {{0, 0.5}, {4, 0.5}, {5, 0.5}, {7, 0.5}});
        case CanonicalState::Dicke42:
            // the six 4-bit strings of Hamming weight 2
            return make(4, {{3, s6}, {5, s6}, {6, s6}, {9, s6}, {10, s6}, {12, s6}});
        case CanonicalState::BellPhiPlus:
            return make(2, {{0, s2}, {3, s2}});
    }
    throw Error("unknown canonical state");
}

PureState from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes) {
    return PureState(num_qubits, std::move(amplitudes));
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionMismatch("fidelity requires equal qubit counts, got " +
                                std::to_string(a.num_qubits()) + " and " +
                                std::to_string(b.num_qubits()));
    }
    Amplitude overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

}  // namespace splitlink
