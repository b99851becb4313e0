// schmidt.hpp
// Schmidt decomposition of bipartite pure states via the coefficient matrix
// and its Gram matrix: Schmidt coefficients, Gram eigenvalues, rank.

#pragma once

#include <cstddef>
#include <vector>

#include "splitlink/state.hpp"

namespace splitlink {

// Ordered split of a state's qubits into two registers. Must be disjoint,
// nonempty, and cover every qubit of the target state.
struct Bipartition {
    std::vector<int> left;
    std::vector<int> right;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Dense row-major complex matrix; just big enough for coefficient and Gram
// matrices of <= 10-qubit states.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Amplitude> data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Amplitude& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Amplitude& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct SchmidtResult {
    // Schmidt coefficients, descending; square roots of gram_eigenvalues.
    std::vector<double> coefficients;
    // Eigenvalues of C^dagger C, descending; sum to 1 for normalized input.
    std::vector<double> gram_eigenvalues;
    // Count of gram eigenvalues above kRankTol. 1 means separable.
    int rank = 0;
    // rank > 1 and all nonzero coefficients equal within 1e-10.
    bool maximally_entangled = false;

    friend bool operator==(const SchmidtResult&, const SchmidtResult&) = default;
};

// Entry (i, j) is the amplitude of |i>_left x |j>_right, where i and j read
// the listed qubits big-endian (left[0] is the most significant bit of i).
// Throws InvalidPartition.
ComplexMatrix coefficient_matrix(const PureState& state, const Bipartition& partition);

// Throws InvalidPartition.
SchmidtResult schmidt_decompose(const PureState& state, const Bipartition& partition);

// Convenience projection of schmidt_decompose.
int schmidt_rank(const PureState& state, const Bipartition& partition);

}  // namespace splitlink
