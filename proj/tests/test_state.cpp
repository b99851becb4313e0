#include <doctest.h>

#include <cmath>
#include <random>

#include "splitlink/state.hpp"
#include "support/oracles.hpp"

using namespace splitlink;

namespace {

double norm_squared(const PureState& state) {
    double sum = 0.0;
    for (const auto& a : state.amplitudes()) sum += std::norm(a);
    return sum;
}

}  // namespace

TEST_SUITE("state") {

TEST_CASE("ghz amplitudes sit at |000> and |111>") {
    const PureState ghz = construct_canonical(CanonicalState::Ghz);
    REQUIRE(ghz.num_qubits() == 3);
    const double s2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < 8; ++i) {
        const double expected = (i == 0 || i == 7) ? s2 : 0.0;
        CHECK(ghz[i].real() == doctest::Approx(expected).epsilon(1e-15));
        CHECK(ghz[i].imag() == 0.0);
    }
}

TEST_CASE("star amplitudes sit at indices 0,4,5,7 with value 1/2") {
    const PureState star = construct_canonical(CanonicalState::Star);
    for (std::size_t i = 0; i < 8; ++i) {
        const bool support = i == 0 || i == 4 || i == 5 || i == 7;
        CHECK(star[i].real() == (support ? 0.5 : 0.0));
    }
}

TEST_CASE("wwbar amplitudes are 1/sqrt(6) on indices 1..6, zero at ends") {
    const PureState wwbar = construct_canonical(CanonicalState::WWbar);
    const double s6 = 1.0 / std::sqrt(6.0);
    CHECK(wwbar[0] == Amplitude{0.0, 0.0});
    CHECK(wwbar[7] == Amplitude{0.0, 0.0});
    for (std::size_t i = 1; i <= 6; ++i) {
        CHECK(wwbar[i].real() == doctest::Approx(s6).epsilon(1e-15));
    }
}

TEST_CASE("w, wbar, dicke42 and bell supports") {
    const PureState w = construct_canonical(CanonicalState::W);
    CHECK(w[1].real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(w[2].real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(w[4].real() == doctest::Approx(1.0 / std::sqrt(3.0)));

    const PureState wbar = construct_canonical(CanonicalState::Wbar);
    CHECK(wbar[3].real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(wbar[5].real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(wbar[6].real() == doctest::Approx(1.0 / std::sqrt(3.0)));

    const PureState dicke = construct_canonical(CanonicalState::Dicke42);
    REQUIRE(dicke.num_qubits() == 4);
    for (std::size_t i = 0; i < 16; ++i) {
        const int weight = __builtin_popcountll(i);
        if (weight == 2) {
            CHECK(dicke[i].real() == doctest::Approx(1.0 / std::sqrt(6.0)));
        } else {
            CHECK(dicke[i] == Amplitude{0.0, 0.0});
        }
    }

    const PureState bell = construct_canonical(CanonicalState::BellPhiPlus);
    REQUIRE(bell.num_qubits() == 2);
    CHECK(bell[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(bell[3].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("every canonical state is normalized within tolerance") {
    for (CanonicalState which :
         {CanonicalState::Ghz, CanonicalState::W, CanonicalState::Wbar,
          CanonicalState::WWbar, CanonicalState::Star, CanonicalState::Dicke42,
          CanonicalState::BellPhiPlus}) {
        const PureState state = construct_canonical(which);
        CHECK(std::abs(norm_squared(state) - 1.0) <= kNormTol);
        // and still normalized after a round-trip through from_amplitudes
        const PureState again = from_amplitudes(state.num_qubits(), state.amplitudes());
        CHECK(std::abs(norm_squared(again) - 1.0) <= 1e-12);
    }
}

TEST_CASE("from_amplitudes rescales and preserves phases") {
    const PureState scaled = from_amplitudes(1, {Amplitude{2, 0}, Amplitude{0, 0}});
    CHECK(scaled[0] == Amplitude{1.0, 0.0});
    CHECK(scaled[1] == Amplitude{0.0, 0.0});

    const PureState uniform =
        from_amplitudes(2, {Amplitude{1, 0}, Amplitude{1, 0}, Amplitude{1, 0},
                            Amplitude{1, 0}});
    for (std::size_t i = 0; i < 4; ++i) CHECK(uniform[i].real() == doctest::Approx(0.5));

    // relative phase i between the two legs survives rescaling
    const PureState phased = from_amplitudes(1, {Amplitude{3, 0}, Amplitude{0, 3}});
    CHECK(phased[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(phased[1].imag() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("from_amplitudes rejects bad input") {
    CHECK_THROWS_AS(from_amplitudes(2, std::vector<Amplitude>(4, Amplitude{0, 0})),
                    ZeroVector);
    CHECK_THROWS_AS(from_amplitudes(2, std::vector<Amplitude>(3, Amplitude{1, 0})),
                    LengthMismatch);
    CHECK_THROWS_AS(from_amplitudes(0, std::vector<Amplitude>{Amplitude{1, 0}}),
                    LengthMismatch);
    std::vector<Amplitude> bad(4, Amplitude{1, 0});
    bad[2] = Amplitude{std::nan(""), 0};
    CHECK_THROWS_AS(from_amplitudes(2, std::move(bad)), NonFiniteAmplitude);
}

TEST_CASE("fidelity on canonical pairs") {
    const PureState ghz = construct_canonical(CanonicalState::Ghz);
    const PureState w = construct_canonical(CanonicalState::W);
    const PureState wwbar = construct_canonical(CanonicalState::WWbar);
    const PureState star = construct_canonical(CanonicalState::Star);

    CHECK(fidelity(ghz, ghz) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(ghz, w) == 0.0);  // disjoint supports

    // frozen from the direct inner-product oracle: the supports overlap at
    // |100> and |101>, overlap = 2 * (1/2) * (1/sqrt 6) = 1/sqrt 6
    Amplitude overlap{0, 0};
    for (std::size_t i = 0; i < 8; ++i) overlap += std::conj(wwbar[i]) * star[i];
    CHECK(std::norm(overlap) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(fidelity(wwbar, star) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(fidelity(star, wwbar) == doctest::Approx(fidelity(wwbar, star)));

    CHECK_THROWS_AS(fidelity(ghz, construct_canonical(CanonicalState::BellPhiPlus)),
                    DimensionMismatch);
}

TEST_CASE("wwbar equals the normalized sum of w and wbar") {
    const PureState w = construct_canonical(CanonicalState::W);
    const PureState wbar = construct_canonical(CanonicalState::Wbar);
    std::vector<Amplitude> sum(8);
    for (std::size_t i = 0; i < 8; ++i) sum[i] = w[i] + wbar[i];
    const PureState combined = from_amplitudes(3, std::move(sum));
    CHECK(fidelity(combined, construct_canonical(CanonicalState::WWbar)) >=
          1.0 - 1e-12);
}

TEST_CASE("fidelity is invariant under a global phase") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0.0, 6.28318530717958648);
    for (int trial = 0; trial < 50; ++trial) {
        const PureState a = testing::random_state(rng, 3);
        const PureState b = testing::random_state(rng, 3);
        const Amplitude phase = std::polar(1.0, angle(rng));
        std::vector<Amplitude> rotated = b.amplitudes();
        for (auto& amp : rotated) amp *= phase;
        const PureState b_rotated(3, std::move(rotated));
        CHECK(fidelity(a, b_rotated) == doctest::Approx(fidelity(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("bit accessor follows the big-endian ket convention") {
    const PureState star = construct_canonical(CanonicalState::Star);
    // index 5 is |101>: qubit A = 1, B = 0, C = 1
    CHECK(star.bit(5, 0) == 1);
    CHECK(star.bit(5, 1) == 0);
    CHECK(star.bit(5, 2) == 1);
    CHECK(qubit_letter(0) == 'A');
    CHECK(qubit_letter(2) == 'C');
}

}  // TEST_SUITE
