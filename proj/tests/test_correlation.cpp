#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zcseq/codes.hpp"
#include "zcseq/correlation.hpp"
#include "zcseq/fft.hpp"

using namespace zcseq;

namespace {

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<Complex> to_vector(const ComplexSequence& x) { return {x.begin(), x.end()}; }

}  // namespace

TEST(CyclicCorrelation, MatchesNaiveOracle) {
    std::mt19937_64 rng(3);
    for (std::size_t N : {1u, 2u, 5u, 12u, 31u}) {
        const auto x = oracle::random_complex(rng, N);
        const auto y = oracle::random_complex(rng, N);
        for (bool normalized : {false, true}) {
            const auto p = cyclic_cross_correlation(ComplexSequence(x), ComplexSequence(y), normalized);
            EXPECT_EQ(p.normalized, normalized);
            EXPECT_LT(max_abs_diff(p.values, oracle::naive_correlation(x, y, normalized)), 1e-12);
        }
    }
}

TEST(CyclicCorrelation, LengthFiveShiftTwoInnerProductIsZero) {
    const auto r = cyclic_autocorrelation(zc_generate({1, 5}), false);
    EXPECT_LT(std::abs(r.values[2]), 1e-12);
}

TEST(CyclicCorrelation, LengthFiveCrossLevel) {
    const auto p = cyclic_cross_correlation(zc_generate({1, 5}), zc_generate({4, 5}), true);
    for (double m : p.magnitudes()) EXPECT_NEAR(m, 0.4472, 5e-5);
}

TEST(CyclicCorrelation, CrossWithSelfIsAuto) {
    const auto x = zc_generate({3, 13});
    const auto a = cyclic_cross_correlation(x, x, true);
    const auto b = cyclic_autocorrelation(x, true);
    EXPECT_EQ(a.values, b.values);
}

TEST(CyclicCorrelation, WalshRowsOrthogonalAtZeroShift) {
    const auto rows = walsh_codes(4);
    const auto p = cyclic_cross_correlation(rows[1].to_complex(), rows[2].to_complex(), true);
    EXPECT_EQ(p.values[0], Complex(0.0, 0.0));
}

TEST(CyclicCorrelation, PrimeZcIsDelta) {
    for (int q = 1; q < 7; ++q) {
        const auto p = cyclic_autocorrelation(zc_generate({q, 7}), true);
        EXPECT_NEAR(p.values[0].real(), 1.0, 1e-9);
        for (std::size_t tau = 1; tau < 7; ++tau) EXPECT_LT(std::abs(p.values[tau]), 1e-9);
    }
}

TEST(CyclicCorrelation, AllOnesIsFlat) {
    const ComplexSequence ones(std::vector<Complex>(9, 1.0));
    for (const auto& v : cyclic_autocorrelation(ones, true).values) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-15);
}

TEST(CyclicCorrelation, ExtendedTwelveHasOneTwelfthSidelobes) {
    const auto z1 = zc_extended(1, ExtensionSpec::make(12, ExtensionMethod::CyclicExtend));
    const auto m = cyclic_autocorrelation(z1, true).magnitudes();
    for (std::size_t tau : {1u, 2u, 10u, 11u}) EXPECT_NEAR(m[tau], 1.0 / 12.0, 1e-9);
}

TEST(CyclicCorrelation, LengthMismatch) {
    try {
        cyclic_cross_correlation(zc_generate({1, 5}), zc_generate({1, 7}), true);
        FAIL();
    } catch (const SequenceError& e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    }
    EXPECT_THROW(fft_cyclic_cross_correlation(zc_generate({1, 5}), zc_generate({1, 7}), true), SequenceError);
}

TEST(FftCorrelation, LengthFiveMatchesDirect) {
    const auto a = zc_generate({1, 5});
    const auto b = zc_generate({4, 5});
    for (bool normalized : {false, true}) {
        EXPECT_LT(max_abs_diff(fft_cyclic_cross_correlation(a, b, normalized).values,
                               cyclic_cross_correlation(a, b, normalized).values),
                  1e-9);
    }
}

TEST(FftCorrelation, RandomPairsMatchDirect) {
    std::mt19937_64 rng(17);
    for (std::size_t N : {1u, 2u, 3u, 11u, 12u, 16u, 63u, 139u}) {
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexSequence x(oracle::random_complex(rng, N));
            const ComplexSequence y(oracle::random_complex(rng, N));
            EXPECT_LT(max_abs_diff(fft_cyclic_cross_correlation(x, y, false).values,
                                   cyclic_cross_correlation(x, y, false).values),
                      1e-9)
                << "N=" << N;
        }
    }
}

TEST(FftCorrelation, PrachLongRootsMatchDirect) {
    for (int q : {1, 129, 838}) {
        const auto a = zc_generate({q, 839});
        const auto b = zc_generate({q == 1 ? 2 : q - 1, 839});
        EXPECT_LT(max_abs_diff(fft_cyclic_cross_correlation(a, b, false).values,
                               cyclic_cross_correlation(a, b, false).values),
                  1e-9);
        EXPECT_LT(max_abs_diff(fft_cyclic_cross_correlation(a, a, true).values,
                               cyclic_autocorrelation(a, true).values),
                  1e-9);
    }
}

TEST(DftPlan, MatchesNaiveDft) {
    std::mt19937_64 rng(5);
    for (std::size_t N : {1u, 2u, 3u, 5u, 8u, 12u, 13u, 64u, 139u, 839u}) {
        const auto x = oracle::random_complex(rng, N);
        const DftPlan plan(N);
        EXPECT_LT(max_abs_diff(plan.forward(x), oracle::naive_dft(x, -1)), 1e-10 * std::sqrt(double(N)) * 10)
            << "N=" << N;
        EXPECT_LT(max_abs_diff(plan.backward(x), oracle::naive_dft(x, +1)), 1e-10 * std::sqrt(double(N)) * 10)
            << "N=" << N;
    }
}

TEST(DftPlan, RejectsWrongInputLength) {
    const DftPlan plan(5);
    std::vector<Complex> x(4);
    EXPECT_THROW(plan.forward(x), SequenceError);
    EXPECT_THROW(DftPlan(0), SequenceError);
    std::vector<Complex> three(3);
    EXPECT_THROW(fft_radix2(three, false), SequenceError);
}

TEST(Dft, UnitaryRoundTrip) {
    std::mt19937_64 rng(9);
    for (std::size_t N : {1u, 4u, 7u, 12u, 63u}) {
        const ComplexSequence x(oracle::random_complex(rng, N));
        const auto back = idft(dft(x));
        EXPECT_LT(max_abs_diff(to_vector(back), to_vector(x)), 1e-12);
        EXPECT_NEAR(dft(x).energy(), x.energy(), 1e-9);
    }
}

TEST(Dft, AllOnesIsSpike) {
    for (std::size_t N : {4u, 7u, 12u}) {
        const auto X = dft(ComplexSequence(std::vector<Complex>(N, 1.0)));
        EXPECT_NEAR(std::abs(X[0] - std::sqrt(double(N))), 0.0, 1e-12);
        for (std::size_t k = 1; k < N; ++k) EXPECT_LT(std::abs(X[k]), 1e-12);
    }
}

TEST(Dft, ZcSpectrumHasUnitMagnitude) {
    for (const auto& v : dft(zc_generate({1, 5}))) EXPECT_NEAR(std::abs(v), 1.0, 1e-9);
}

TEST(Papr, Values) {
    EXPECT_NEAR(papr(zc_generate({7, 139})), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(papr(ComplexSequence({1.0, 0.0})), 2.0);
    EXPECT_NEAR(papr(zc_extended(4, ExtensionSpec::make(12, ExtensionMethod::CyclicExtend))), 1.0, 1e-12);
    try {
        papr(ComplexSequence({0.0, 0.0}));
        FAIL();
    } catch (const SequenceError& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroEnergy);
    }
}

TEST(FrequencyOffset, IdentityCases) {
    const auto x = zc_generate({29, 63});
    for (double eps : {0.0, 1.0, -2.0}) {
        const auto y = apply_frequency_offset(x, eps);
        EXPECT_LT(max_abs_diff(to_vector(y), to_vector(x)), 1e-12) << eps;
    }
}

TEST(FrequencyOffset, PreservesAmplitudeAndMatchesDefinition) {
    const auto x = zc_generate({3, 11});
    const double eps = 0.137;
    const auto y = apply_frequency_offset(x, eps);
    for (std::size_t n = 0; n < x.size(); ++n) {
        EXPECT_NEAR(std::abs(y[n]), 1.0, 1e-12);
        const auto expected = x[n] * std::polar(1.0, 2.0 * std::numbers::pi * eps * double(n));
        EXPECT_LT(std::abs(y[n] - expected), 1e-12);
    }
}

TEST(FrequencyOffset, HalfBinDegradesPssPeak) {
    const auto x = zc_generate({29, 63});
    const auto y = apply_frequency_offset(x, 0.5 / 63.0);
    const auto m = cyclic_cross_correlation(x, y, true).magnitudes();
    const double peak = *std::max_element(m.begin(), m.end());
    EXPECT_LT(peak, 1.0);
    // Regression value from an independent numpy evaluation.
    EXPECT_NEAR(peak, 0.6366857381970186, 1e-9);
}
