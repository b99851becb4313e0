#include "splitlink/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace splitlink {

namespace {

// Pairwise-equality tolerance on nonzero Schmidt coefficients.
constexpr double kMaxEntTol = 1e-10;
// A sweep stops once the Frobenius norm of the off-diagonal part is below this.
constexpr double kJacobiOffTol = 1e-12;
constexpr int kJacobiMaxSweeps = 64;

void check_partition(const PureState& state, const Bipartition& partition) {
    const int n = state.num_qubits();
    if (partition.left.empty() || partition.right.empty()) {
        throw InvalidPartition("both sides of a bipartition must be nonempty");
    }
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    auto visit = [&](int q) {
        if (q < 0 || q >= n) {
            throw InvalidPartition("qubit " + std::to_string(q) +
                                   " out of range for " + std::to_string(n) +
                                   " qubits");
        }
        if (seen[static_cast<std::size_t>(q)]++) {
            throw InvalidPartition("qubit " + std::to_string(q) +
                                   " listed more than once");
        }
    };
    for (int q : partition.left) visit(q);
    for (int q : partition.right) visit(q);
    if (partition.left.size() + partition.right.size() != static_cast<std::size_t>(n)) {
        throw InvalidPartition("bipartition must cover all " + std::to_string(n) +
                               " qubits");
    }
}

double off_diagonal_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (i != j) sum += std::norm(m.at(i, j));
        }
    }
    return std::sqrt(sum);
}

// Exact roots of lambda^2 - tr*lambda + det = 0 for the 2x2 hermitian case.
std::vector<double> eigenvalues_2x2(const ComplexMatrix& g) {
    const double a = g.at(0, 0).real();
    const double d = g.at(1, 1).real();
    const double b2 = std::norm(g.at(0, 1));
    const double tr = a + d;
    const double disc = std::sqrt((a - d) * (a - d) + 4.0 * b2);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

// Cyclic Jacobi for hermitian matrices. Each rotation zeroes one pivot via a
// phase factor and a real plane rotation; diagonals converge to the spectrum.
std::vector<double> eigenvalues_jacobi(ComplexMatrix g) {
    const std::size_t n = g.rows;
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(g) < kJacobiOffTol) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Amplitude beta = g.at(p, q);
                const double b = std::abs(beta);
                if (b == 0.0) continue;
                const Amplitude phase = beta / b;  // e^{i arg(beta)}
                const double alpha = g.at(p, p).real();
                const double gamma = g.at(q, q).real();

                double t;
                if (alpha == gamma) {
                    t = 1.0;
                } else {
                    const double tau = (alpha - gamma) / (2.0 * b);
                    t = (tau >= 0 ? 1.0 : -1.0) /
                        (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Rows/columns outside the pivot pair.
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const Amplitude hrp = g.at(r, p);
                    const Amplitude hrq = g.at(r, q);
                    const Amplitude new_rp = hrp * c + hrq * s * std::conj(phase);
                    const Amplitude new_rq = -hrp * s * phase + hrq * c;
                    g.at(r, p) = new_rp;
                    g.at(p, r) = std::conj(new_rp);
                    g.at(r, q) = new_rq;
                    g.at(q, r) = std::conj(new_rq);
                }
                const double shift = 2.0 * b * c * s;
                g.at(p, p) = Amplitude{alpha * c * c + gamma * s * s + shift, 0.0};
                g.at(q, q) = Amplitude{alpha * s * s + gamma * c * c - shift, 0.0};
                g.at(p, q) = Amplitude{0.0, 0.0};
                g.at(q, p) = Amplitude{0.0, 0.0};
            }
        }
    }
    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = g.at(i, i).real();
    return eigenvalues;
}

}  // namespace

ComplexMatrix coefficient_matrix(const PureState& state, const Bipartition& partition) {
    check_partition(state, partition);
    const int left_n = static_cast<int>(partition.left.size());
    const int right_n = static_cast<int>(partition.right.size());
    ComplexMatrix m(std::size_t{1} << left_n, std::size_t{1} << right_n);

    for (std::size_t full = 0; full < state.dim(); ++full) {
        std::size_t i = 0;
        for (int a = 0; a < left_n; ++a) {
            i |= static_cast<std::size_t>(state.bit(full, partition.left[a]))
                 << (left_n - 1 - a);
        }
        std::size_t j = 0;
        for (int a = 0; a < right_n; ++a) {
            j |= static_cast<std::size_t>(state.bit(full, partition.right[a]))
                 << (right_n - 1 - a);
        }
        m.at(i, j) = state[full];
    }
    return m;
}

SchmidtResult schmidt_decompose(const PureState& state, const Bipartition& partition) {
    const ComplexMatrix c = coefficient_matrix(state, partition);

    // Gram matrix C^dagger C, hermitian by construction.
    ComplexMatrix gram(c.cols, c.cols);
    for (std::size_t j = 0; j < c.cols; ++j) {
        for (std::size_t k = j; k < c.cols; ++k) {
            Amplitude sum{0.0, 0.0};
            for (std::size_t i = 0; i < c.rows; ++i) {
                sum += std::conj(c.at(i, j)) * c.at(i, k);
            }
            gram.at(j, k) = sum;
            gram.at(k, j) = std::conj(sum);
        }
    }

    std::vector<double> eigenvalues = gram.rows == 2 ? eigenvalues_2x2(gram)
                                                     : eigenvalues_jacobi(std::move(gram));
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
    for (double& v : eigenvalues) v = std::max(v, 0.0);  // PSD up to roundoff

    SchmidtResult result;
    result.gram_eigenvalues = eigenvalues;
    result.coefficients.reserve(eigenvalues.size());
    for (double v : eigenvalues) result.coefficients.push_back(std::sqrt(v));
    result.rank = static_cast<int>(
        std::count_if(eigenvalues.begin(), eigenvalues.end(),
                      [](double v) { return v > kRankTol; }));
    result.maximally_entangled =
        result.rank > 1 &&
        result.coefficients[0] - result.coefficients[result.rank - 1] <= kMaxEntTol;
    return result;
}

int schmidt_rank(const PureState& state, const Bipartition& partition) {
    return schmidt_decompose(state, partition).rank;
}

}  // namespace splitlink
