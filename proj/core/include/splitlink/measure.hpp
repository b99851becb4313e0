// measure.hpp
// Single-qubit projective measurement: Born probabilities and normalized
// post-measurement states on the unmeasured qubits.

#pragma once

#include <array>
#include <optional>

#include "splitlink/state.hpp"

namespace splitlink {

// One (qubit, outcome) row of a measurement. The post-measurement state
// lives on num_qubits - 1 qubits: the measured qubit's tensor factor is
// removed and the remaining qubits keep their original relative order
// (measuring B of ABC leaves the register ordered A, C). Outcomes with
// probability below kProbTol carry probability 0 and no post-state.
struct MeasurementRecord {
    int qubit = 0;
    int outcome = 0;
    double probability = 0.0;
    std::optional<PureState> post_state;

    friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

// Two orthonormal single-qubit kets; outcome k projects onto ket(k).
struct SingleQubitBasis {
    std::array<Amplitude, 2> ket0;
    std::array<Amplitude, 2> ket1;

    static SingleQubitBasis computational();  // {|0>, |1>}
    static SingleQubitBasis plus_minus();     // {|+>, |->}

    const std::array<Amplitude, 2>& ket(int which) const {
        return which == 0 ? ket0 : ket1;
    }
    bool orthonormal(double tol = kNormTol) const;
};

// Computational-basis measurement of one qubit; returns the outcome-0 and
// outcome-1 records. Probabilities obey p(0) + p(1) = 1 within kNormTol.
// Throws QubitOutOfRange (also when the state has fewer than 2 qubits).
std::array<MeasurementRecord, 2> measure_computational(const PureState& state,
                                                       int qubit);

// Projection onto |basis.ket(which)><...| at `qubit`, same Born-rule
// contract as measure_computational.
// Throws QubitOutOfRange, NonOrthonormalBasis.
MeasurementRecord project_arbitrary(const PureState& state, int qubit,
                                    const SingleQubitBasis& basis, int which);

}  // namespace splitlink
