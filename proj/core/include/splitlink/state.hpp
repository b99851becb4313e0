// state.hpp
// n-qubit pure states as dense complex amplitude vectors, plus the canonical
// states used throughout the analysis.
//
// Basis convention (shared by every module): amplitude index i is the
// computational basis label read as a big-endian bit string. Qubit 0 is the
// leftmost ket symbol, i.e. the most significant bit of i. For |ABC>,
// qubit A = 0, B = 1, C = 2, and |101> sits at index 5.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "splitlink/errors.hpp"

namespace splitlink {

using Amplitude = std::complex<double>;

// Normalization tolerance on sum of squared magnitudes.
inline constexpr double kNormTol = 1e-12;
// Outcomes with probability below this are reported as 0 with no post-state.
inline constexpr double kProbTol = 1e-12;
// Gram eigenvalues above this count toward the Schmidt rank.
inline constexpr double kRankTol = 1e-10;
// Hard cap on register size; the analysis targets small states.
inline constexpr int kMaxQubits = 16;

// Letter used for qubit q in reports and kets: A, B, C, ...
inline char qubit_letter(int qubit) { return static_cast<char>('A' + qubit); }

// Normalized pure state. Immutable after construction; cheap to copy at the
// sizes this library targets (<= 10 qubits).
class PureState {
public:
    // Validates length and finiteness; rescales to unit norm when the input
    // is more than kNormTol away from normalized, otherwise keeps the
    // amplitudes verbatim. Throws LengthMismatch, NonFiniteAmplitude,
    // ZeroVector.
    PureState(int num_qubits, std::vector<Amplitude> amplitudes);

    // |basis_index> on num_qubits qubits.
    static PureState basis(int num_qubits, std::size_t basis_index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }

    const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
    const Amplitude& operator[](std::size_t basis_index) const {
        return amplitudes_[basis_index];
    }

    // Bit of `qubit` within basis label `basis_index` (big-endian).
    int bit(std::size_t basis_index, int qubit) const {
        return static_cast<int>((basis_index >> (num_qubits_ - 1 - qubit)) & 1u);
    }

    friend bool operator==(const PureState&, const PureState&) = default;

private:
    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

// The named states of the analysis.
enum class CanonicalState {
    Ghz,          // (|000> + |111>)/sqrt(2)
    W,            // (|001> + |010> + |100>)/sqrt(3)
    Wbar,         // (|011> + |101> + |110>)/sqrt(3)
    WWbar,        // equal superposition of W and Wbar: 1/sqrt(6) over weight-1,2 strings
    Star,         // (|000> + |100> + |101> + |111>)/2, central qubit C
    Dicke42,      // 4-qubit, equal superposition of the six weight-2 strings
    BellPhiPlus,  // (|00> + |11>)/sqrt(2)
};

PureState construct_canonical(CanonicalState which);

// Rescales to unit norm, preserving relative phases.
// Throws LengthMismatch if amplitudes.size() != 2^num_qubits, ZeroVector if
// the norm is below kNormTol.
PureState from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes);

// |<a|b>|^2. Symmetric, phase-invariant, in [0, 1].
// Throws DimensionMismatch if qubit counts differ.
double fidelity(const PureState& a, const PureState& b);

}  // namespace splitlink
