#include "splitlink/measure.hpp"

#include <cmath>

namespace splitlink {

namespace {

void check_qubit(const PureState& state, int qubit) {
    if (state.num_qubits() < 2) {
        throw QubitOutOfRange("measurement requires at least 2 qubits, state has " +
                              std::to_string(state.num_qubits()));
    }
    if (qubit < 0 || qubit >= state.num_qubits()) {
        throw QubitOutOfRange("qubit " + std::to_string(qubit) +
                              " out of range for " +
                              std::to_string(state.num_qubits()) + " qubits");
    }
}

// Deletes the bit at position `bit_pos` from a basis label, closing the gap.
// Remaining qubits keep their original relative order.
std::size_t drop_bit(std::size_t index, int bit_pos) {
    const std::size_t low_mask = (std::size_t{1} << bit_pos) - 1;
    return ((index >> (bit_pos + 1)) << bit_pos) | (index & low_mask);
}

MeasurementRecord make_record(const PureState& state, int qubit, int outcome,
                              std::vector<Amplitude> projected, double prob) {
    MeasurementRecord record;
    record.qubit = qubit;
    record.outcome = outcome;
    if (prob < kProbTol) {
        record.probability = 0.0;
        return record;
    }
    record.probability = prob;
    const double inv = 1.0 / std::sqrt(prob);
    for (auto& a : projected) a *= inv;
    record.post_state = PureState(state.num_qubits() - 1, std::move(projected));
    return record;
}

}  // namespace

SingleQubitBasis SingleQubitBasis::computational() {
    return {{Amplitude{1, 0}, Amplitude{0, 0}}, {Amplitude{0, 0}, Amplitude{1, 0}}};
}

SingleQubitBasis SingleQubitBasis::plus_minus() {
    const double s2 = 1.0 / std::sqrt(2.0);
    return {{Amplitude{s2, 0}, Amplitude{s2, 0}}, {Amplitude{s2, 0}, Amplitude{-s2, 0}}};
}

bool SingleQubitBasis::orthonormal(double tol) const {
    const double n0 = std::norm(ket0[0]) + std::norm(ket0[1]);
    const double n1 = std::norm(ket1[0]) + std::norm(ket1[1]);
    const Amplitude dot = std::conj(ket0[0]) * ket1[0] + std::conj(ket0[1]) * ket1[1];
    return std::abs(n0 - 1.0) <= tol && std::abs(n1 - 1.0) <= tol &&
           std::abs(dot) <= tol;
}

std::array<MeasurementRecord, 2> measure_computational(const PureState& state,
                                                       int qubit) {
    check_qubit(state, qubit);
    const int bit_pos = state.num_qubits() - 1 - qubit;
    const std::size_t reduced_dim = state.dim() >> 1;

    std::array<std::vector<Amplitude>, 2> projected{
        std::vector<Amplitude>(reduced_dim, Amplitude{0, 0}),
        std::vector<Amplitude>(reduced_dim, Amplitude{0, 0})};
    std::array<double, 2> prob{0.0, 0.0};

    for (std::size_t i = 0; i < state.dim(); ++i) {
        const int k = static_cast<int>((i >> bit_pos) & 1u);
        prob[k] += std::norm(state[i]);
        projected[k][drop_bit(i, bit_pos)] = state[i];
    }

    return {make_record(state, qubit, 0, std::move(projected[0]), prob[0]),
            make_record(state, qubit, 1, std::move(projected[1]), prob[1])};
}

MeasurementRecord project_arbitrary(const PureState& state, int qubit,
                                    const SingleQubitBasis& basis, int which) {
    check_qubit(state, qubit);
    if (!basis.orthonormal()) {
        throw NonOrthonormalBasis("single-qubit basis is not orthonormal");
    }
    const auto& ket = basis.ket(which);
    const int bit_pos = state.num_qubits() - 1 - qubit;
    const std::size_t reduced_dim = state.dim() >> 1;

    // v(rest) = <ket|_qubit psi, accumulated over both bit values.
    std::vector<Amplitude> projected(reduced_dim, Amplitude{0, 0});
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const int k = static_cast<int>((i >> bit_pos) & 1u);
        projected[drop_bit(i, bit_pos)] += std::conj(ket[k]) * state[i];
    }
    double prob = 0.0;
    for (const auto& a : projected) prob += std::norm(a);

    MeasurementRecord record =
        make_record(state, qubit, which, std::move(projected), prob);
    return record;
}

}  // namespace splitlink
