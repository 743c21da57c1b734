#include <gtest/gtest.h>

#include <cmath>

#include "zcseq/verify.hpp"

using namespace zcseq;

namespace {

ComplexSequence extended12(int q) {
    return zc_extended(q, ExtensionSpec::make(12, ExtensionMethod::CyclicExtend));
}

void expect_consistent(const PropertyReport& r) {
    EXPECT_EQ(r.passed, r.worst_deviation <= r.tolerance_used);
}

}  // namespace

TEST(VerifyConstantAmplitude, Cases) {
    const auto zc = verify_constant_amplitude(zc_generate({3, 7}));
    EXPECT_TRUE(zc.passed);
    EXPECT_LT(zc.worst_deviation, 1e-12);
    EXPECT_EQ(zc.property_id, PropertyId::ConstantAmplitude);

    const auto bad = verify_constant_amplitude(ComplexSequence({1.0, Complex(0.0, 0.5)}));
    EXPECT_FALSE(bad.passed);
    EXPECT_DOUBLE_EQ(bad.worst_deviation, 0.5);
    EXPECT_EQ(bad.worst_location, 1u);

    EXPECT_TRUE(verify_constant_amplitude(extended12(4)).passed);
}

TEST(VerifyZeroAutocorrelation, Cases) {
    for (int N : {5, 7, 11, 13, 31, 139}) {
        for (int q = 1; q < N; ++q) {
            const auto r = verify_zero_autocorrelation(zc_generate({q, N}), 1e-9);
            EXPECT_TRUE(r.passed) << N << ' ' << q;
        }
    }

    const auto z4 = verify_zero_autocorrelation(extended12(4), kDemonstrationTolerance);
    EXPECT_FALSE(z4.passed);
    EXPECT_GT(z4.worst_deviation, 1.0 / 12.0);

    const auto ones = verify_zero_autocorrelation(ComplexSequence(std::vector<Complex>(6, 1.0)));
    EXPECT_FALSE(ones.passed);
    EXPECT_NEAR(ones.worst_deviation, 1.0, 1e-15);
    EXPECT_GE(ones.worst_location, 1u);
}

TEST(VerifyCrossCorrelation, Cases) {
    const auto ex1 = verify_cross_correlation_level(zc_generate({1, 5}), zc_generate({4, 5}));
    EXPECT_TRUE(ex1.passed);
    EXPECT_TRUE(verify_cross_correlation_level(zc_generate({1, 13}), zc_generate({2, 13}), 1e-9).passed);

    const auto gcd9 = verify_cross_correlation_level(zc_generate({34, 63}), zc_generate({25, 63}));
    EXPECT_FALSE(gcd9.passed);
    EXPECT_GT(gcd9.worst_deviation, 1e-3);

    try {
        verify_cross_correlation_level(zc_generate({1, 5}), zc_generate({1, 7}));
        FAIL();
    } catch (const SequenceError& e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    }
}

TEST(VerifyDftClosure, SmallPrimesAllRoots) {
    for (int N : {5, 7, 11, 13}) {
        for (int q = 1; q < N; ++q) {
            const auto r = verify_dft_closure({q, N});
            EXPECT_TRUE(r.passed) << "N=" << N << " q=" << q << " dev=" << r.worst_deviation;
            ASSERT_TRUE(r.matched_root.has_value());
            ASSERT_TRUE(r.matched_shift.has_value());
            expect_consistent(r);
        }
    }
}

TEST(VerifyDftClosure, RootOneNeedsNoShift) {
    // Brute-forced with numpy: the spectrum of s_1 is a phase-rotated s_{N-1}.
    const auto r = verify_dft_closure({1, 11});
    EXPECT_EQ(*r.matched_root, 10);
    EXPECT_EQ(*r.matched_shift, 0);
    const auto r2 = verify_dft_closure({2, 5});
    EXPECT_EQ(*r2.matched_root, 2);
    EXPECT_EQ(*r2.matched_shift, 3);
}

TEST(VerifyDftClosure, NonPrimeLengthIsReported) {
    // gcd(3, 9) = 3: the spectrum is not unit amplitude.
    const auto r = verify_dft_closure({3, 9});
    EXPECT_FALSE(r.passed);
    expect_consistent(r);
}

TEST(VerifyFamily, PrimeElevenAllRoots) {
    std::vector<int> roots;
    for (int q = 1; q < 11; ++q) roots.push_back(q);
    const auto f = verify_family(11, roots);
    EXPECT_TRUE(f.prime_length);
    EXPECT_EQ(f.per_root.size(), 10u);
    EXPECT_EQ(f.per_pair.size(), 45u);
    EXPECT_EQ(f.compliant_pair_count, 45u);
    EXPECT_TRUE(f.all_passed());
    for (const auto& pr : f.per_pair) {
        EXPECT_TRUE(pr.coprime_ok);
        EXPECT_LT(pr.root_a, pr.root_b);
    }
}

TEST(VerifyFamily, PssRootsFlagGcdNinePair) {
    const auto f = verify_family(63, {25, 29, 34});
    EXPECT_FALSE(f.prime_length);
    ASSERT_EQ(f.per_pair.size(), 3u);
    // Lexicographic order: (25,29), (25,34), (29,34).
    EXPECT_EQ(f.per_pair[0].root_a, 25);
    EXPECT_EQ(f.per_pair[0].root_b, 29);
    EXPECT_TRUE(f.per_pair[0].coprime_ok);
    EXPECT_TRUE(f.per_pair[0].report.passed);
    EXPECT_EQ(f.per_pair[1].root_a, 25);
    EXPECT_EQ(f.per_pair[1].root_b, 34);
    EXPECT_FALSE(f.per_pair[1].coprime_ok);
    EXPECT_FALSE(f.per_pair[1].report.passed);
    EXPECT_TRUE(f.per_pair[2].coprime_ok);
    EXPECT_TRUE(f.per_pair[2].report.passed);
    EXPECT_EQ(f.compliant_pair_count, 2u);
    EXPECT_FALSE(f.all_passed());
    for (const auto& rr : f.per_root) {
        for (const auto& r : rr.reports) EXPECT_TRUE(r.passed);
    }
}

TEST(VerifyFamily, SingleRootHasNoPairs) {
    const auto f = verify_family(5, {1});
    EXPECT_EQ(f.per_root.size(), 1u);
    EXPECT_TRUE(f.per_pair.empty());
    EXPECT_EQ(f.compliant_pair_count, 0u);
}

TEST(VerifyFamily, PropagatesInvalidRoot) {
    EXPECT_THROW(verify_family(11, {0, 3}), SequenceError);
    EXPECT_THROW(verify_family(10, {1}), SequenceError);
}

TEST(VerifyFamily, DftClosureOptional) {
    const auto f = verify_family(7, {1, 2}, kExactTolerance, true);
    ASSERT_EQ(f.per_root[0].reports.size(), 3u);
    EXPECT_EQ(f.per_root[0].reports[2].property_id, PropertyId::DftClosure);
}

TEST(VerifyFamily, CompliantPairCountForPrimes) {
    for (int N : {5, 7, 13, 31}) {
        std::vector<int> roots;
        for (int q = 1; q < N; ++q) roots.push_back(q);
        const auto f = verify_family(N, roots);
        EXPECT_EQ(f.compliant_pair_count, static_cast<std::size_t>((N - 1) * (N - 2) / 2));
    }
}

TEST(Reports, ConsistencyAndMonotonicity) {
    const std::vector<ComplexSequence> inputs{extended12(1), extended12(4), zc_generate({34, 63}),
                                              zc_generate({2, 13}),
                                              ComplexSequence({1.0, Complex(0.0, 0.5), -1.0})};
    for (const auto& x : inputs) {
        bool passed_before = false;
        for (double tol : {0.0, 1e-12, 1e-9, 1e-6, 1e-3, 0.1, 0.5, 1.0, 2.0}) {
            const auto a = verify_constant_amplitude(x, tol);
            const auto z = verify_zero_autocorrelation(x, tol);
            expect_consistent(a);
            expect_consistent(z);
            EXPECT_EQ(a.tolerance_used, tol);
            if (passed_before) EXPECT_TRUE(z.passed);
            passed_before = z.passed;
        }
    }
}
