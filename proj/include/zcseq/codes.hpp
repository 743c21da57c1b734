// Binary comparison codes: LFSR m-sequences, Gold codes, Walsh-Hadamard rows
// and an iid random +/-1 baseline, plus correlation statistics over families.
//
// Bits map to chips as 0 -> +1, 1 -> -1.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "zcseq/sequence.hpp"

namespace zcseq {

class BinarySequence {
public:
    /// Every chip must be exactly +1 or -1 (InvalidChip otherwise).
    explicit BinarySequence(std::vector<int> chips);

    static BinarySequence from_bits(std::span<const std::uint8_t> bits);

    std::size_t size() const noexcept { return chips_.size(); }
    int operator[](std::size_t n) const { return chips_[n]; }
    std::span<const int> chips() const noexcept { return chips_; }

    ComplexSequence to_complex() const;
    BinarySequence shifted(std::int64_t m) const;  // chip[(n + m) mod N]

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    std::vector<int> chips_;
};

/// Fibonacci LFSR for the characteristic polynomial x^m + sum_{k in taps} x^k.
/// taps lists the exponents below the degree and must include 0 for the
/// constant term, e.g. x^3 + x + 1 -> degree 3, taps {1, 0}. The recurrence is
/// a[n + m] = XOR_{k in taps} a[n + k] with a[0..m-1] = initial_state.
struct LfsrSpec {
    int degree = 0;
    std::vector<int> taps;
    std::vector<std::uint8_t> initial_state;

    /// All-ones seed.
    static LfsrSpec primitive(int degree, std::vector<int> taps);
};

/// Default primitive polynomials, degrees 2..10.
LfsrSpec default_lfsr(int degree);

/// The two polynomials of a Gold preferred pair. Supported degrees: 5, 7.
std::pair<LfsrSpec, LfsrSpec> preferred_pair(int degree);

/// One period (2^m - 1 chips). Throws NotPrimitive when the measured period
/// is shorter, InvalidSeed for an all-zero seed.
BinarySequence m_sequence(const LfsrSpec& spec);

/// m_sequence(a) * m_sequence(b) cyclically shifted by `shift`.
BinarySequence gold_code(const LfsrSpec& spec_a, const LfsrSpec& spec_b, std::int64_t shift);

/// All N Gold codes of a pair, shifts 0..N-1.
std::vector<BinarySequence> gold_family(const LfsrSpec& spec_a, const LfsrSpec& spec_b);

/// Rows of the order-N Sylvester Hadamard matrix. Throws InvalidOrder unless N is a power of two.
std::vector<BinarySequence> walsh_codes(int order);

/// iid equiprobable +/-1 chips, one bit per 64-bit draw from mt19937_64.
/// Deterministic across platforms for a given seed.
class RandomChipSource {
public:
    explicit RandomChipSource(std::uint64_t seed);
    BinarySequence next(std::size_t length);

private:
    std::mt19937_64 engine_;
};

enum class StatsMode { AutoNonzeroShift, CrossAllShifts };

/// Statistics of |normalized correlation| over a selected index set.
struct CorrelationStats {
    double mean_abs = 0.0;
    double mean_square = 0.0;
    double max_abs = 0.0;
    std::size_t sample_count = 0;
};

/// AutoNonzeroShift: every member, every shift 1..N-1.
/// CrossAllShifts: every unordered distinct pair, every shift 0..N-1.
CorrelationStats family_correlation_stats(std::span<const ComplexSequence> family, StatsMode mode);

struct RandomPairStats {
    CorrelationStats cross;            // all shifts of every trial pair
    CorrelationStats autocorrelation;  // nonzero shifts of every generated sequence
    double fraction_max_above = 0.0;   // trials whose max cross |R| exceeds threshold
};

/// Monte-Carlo over `trials` independent random +/-1 pairs of the given length.
RandomPairStats random_pair_stats(std::size_t length, std::size_t trials, std::uint64_t seed,
                                  double threshold);

}  // namespace zcseq
