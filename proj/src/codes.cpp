#include "zcseq/codes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zcseq/correlation.hpp"

namespace zcseq {

BinarySequence::BinarySequence(std::vector<int> chips) : chips_(std::move(chips)) {
    if (chips_.empty()) throw SequenceError(ErrorCode::EmptySequence, "binary sequence is empty");
    for (std::size_t n = 0; n < chips_.size(); ++n) {
        if (chips_[n] != 1 && chips_[n] != -1) {
            throw SequenceError(ErrorCode::InvalidChip,
                                "chip " + std::to_string(n) + " is not +1 or -1");
        }
    }
}

BinarySequence BinarySequence::from_bits(std::span<const std::uint8_t> bits) {
    std::vector<int> chips(bits.size());
    for (std::size_t n = 0; n < bits.size(); ++n) chips[n] = bits[n] ? -1 : 1;
    return BinarySequence(std::move(chips));
}

ComplexSequence BinarySequence::to_complex() const {
    std::vector<Complex> out(chips_.size());
    for (std::size_t n = 0; n < chips_.size(); ++n) out[n] = Complex(chips_[n], 0.0);
    return ComplexSequence(std::move(out));
}

BinarySequence BinarySequence::shifted(std::int64_t m) const {
    const auto N = static_cast<std::int64_t>(chips_.size());
    const std::int64_t offset = ((m % N) + N) % N;
    std::vector<int> out(chips_.size());
    for (std::int64_t n = 0; n < N; ++n) out[n] = chips_[(n + offset) % N];
    return BinarySequence(std::move(out));
}

LfsrSpec LfsrSpec::primitive(int degree, std::vector<int> taps) {
    LfsrSpec spec;
    spec.degree = degree;
    spec.taps = std::move(taps);
    spec.initial_state.assign(static_cast<std::size_t>(std::max(degree, 0)), 1);
    return spec;
}

LfsrSpec default_lfsr(int degree) {
    switch (degree) {
        case 2: return LfsrSpec::primitive(2, {1, 0});
        case 3: return LfsrSpec::primitive(3, {1, 0});
        case 4: return LfsrSpec::primitive(4, {1, 0});
        case 5: return LfsrSpec::primitive(5, {2, 0});
        case 6: return LfsrSpec::primitive(6, {1, 0});
        case 7: return LfsrSpec::primitive(7, {3, 0});
        case 8: return LfsrSpec::primitive(8, {4, 3, 2, 0});
        case 9: return LfsrSpec::primitive(9, {4, 0});
        case 10: return LfsrSpec::primitive(10, {3, 0});
        default:
            throw SequenceError(ErrorCode::InvalidOrder,
                                "no default polynomial for degree " + std::to_string(degree));
    }
}

std::pair<LfsrSpec, LfsrSpec> preferred_pair(int degree) {
    switch (degree) {
        case 5: return {LfsrSpec::primitive(5, {2, 0}), LfsrSpec::primitive(5, {4, 3, 2, 0})};
        case 7: return {LfsrSpec::primitive(7, {3, 0}), LfsrSpec::primitive(7, {3, 2, 1, 0})};
        default:
            throw SequenceError(ErrorCode::InvalidOrder,
                                "no preferred pair for degree " + std::to_string(degree));
    }
}

BinarySequence m_sequence(const LfsrSpec& spec) {
    if (spec.degree < 2 || spec.degree > 24) {
        throw SequenceError(ErrorCode::InvalidOrder, "LFSR degree must be in 2..24");
    }
    const auto m = static_cast<std::size_t>(spec.degree);
    if (spec.initial_state.size() != m) {
        throw SequenceError(ErrorCode::InvalidSeed, "seed length must equal the LFSR degree");
    }
    if (std::all_of(spec.initial_state.begin(), spec.initial_state.end(),
                    [](std::uint8_t b) { return b == 0; })) {
        throw SequenceError(ErrorCode::InvalidSeed, "LFSR seed must not be all zero");
    }
    for (int t : spec.taps) {
        if (t < 0 || t >= spec.degree) {
            throw SequenceError(ErrorCode::NotPrimitive,
                                "tap exponent " + std::to_string(t) + " outside 0..degree-1");
        }
    }

    const std::size_t period = (std::size_t{1} << m) - 1;
    std::vector<std::uint8_t> bits(spec.initial_state.begin(), spec.initial_state.end());
    bits.reserve(period + m);
    // Generate one full period plus m extra bits; the register state after
    // `period` steps must equal the seed, and no earlier state may repeat it.
    for (std::size_t n = 0; n < period; ++n) {
        std::uint8_t next = 0;
        for (int t : spec.taps) next ^= bits[n + static_cast<std::size_t>(t)];
        bits.push_back(next & 1u);
    }
    for (std::size_t p = 1; p <= period; ++p) {
        if (std::equal(bits.begin() + static_cast<std::ptrdiff_t>(p),
                       bits.begin() + static_cast<std::ptrdiff_t>(p + m), bits.begin())) {
            if (p != period) {
                throw SequenceError(ErrorCode::NotPrimitive,
                                    "LFSR period " + std::to_string(p) + " is shorter than 2^" +
                                        std::to_string(m) + " - 1");
            }
            break;
        }
        if (p == period) {
            throw SequenceError(ErrorCode::NotPrimitive, "LFSR state never returns to the seed");
        }
    }
    bits.resize(period);
    return BinarySequence::from_bits(bits);
}

BinarySequence gold_code(const LfsrSpec& spec_a, const LfsrSpec& spec_b, std::int64_t shift) {
    if (spec_a.degree != spec_b.degree) {
        throw SequenceError(ErrorCode::DegreeMismatch, "Gold code polynomials differ in degree");
    }
    const auto a = m_sequence(spec_a);
    const auto b = m_sequence(spec_b).shifted(shift);
    std::vector<int> chips(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) chips[n] = a[n] * b[n];
    return BinarySequence(std::move(chips));
}

std::vector<BinarySequence> gold_family(const LfsrSpec& spec_a, const LfsrSpec& spec_b) {
    if (spec_a.degree != spec_b.degree) {
        throw SequenceError(ErrorCode::DegreeMismatch, "Gold code polynomials differ in degree");
    }
    const auto a = m_sequence(spec_a);
    const auto b = m_sequence(spec_b);
    std::vector<BinarySequence> family;
    family.reserve(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        std::vector<int> chips(a.size());
        for (std::size_t n = 0; n < a.size(); ++n) chips[n] = a[n] * b[(n + s) % a.size()];
        family.emplace_back(std::move(chips));
    }
    return family;
}

std::vector<BinarySequence> walsh_codes(int order) {
    if (order < 1 || (order & (order - 1)) != 0) {
        throw SequenceError(ErrorCode::InvalidOrder,
                            "Walsh order must be a power of two (got " + std::to_string(order) + ")");
    }
    std::vector<std::vector<int>> h{{1}};
    for (int size = 1; size < order; size *= 2) {
        std::vector<std::vector<int>> next(static_cast<std::size_t>(2 * size));
        for (int i = 0; i < size; ++i) {
            auto& top = next[static_cast<std::size_t>(i)];
            auto& bottom = next[static_cast<std::size_t>(i + size)];
            top = h[static_cast<std::size_t>(i)];
            top.insert(top.end(), h[static_cast<std::size_t>(i)].begin(), h[static_cast<std::size_t>(i)].end());
            bottom = h[static_cast<std::size_t>(i)];
            for (int v : h[static_cast<std::size_t>(i)]) bottom.push_back(-v);
        }
        h = std::move(next);
    }
    std::vector<BinarySequence> rows;
    rows.reserve(h.size());
    for (auto& row : h) rows.emplace_back(std::move(row));
    return rows;
}

RandomChipSource::RandomChipSource(std::uint64_t seed) : engine_(seed) {}

BinarySequence RandomChipSource::next(std::size_t length) {
    std::vector<int> chips(length);
    for (auto& c : chips) c = (engine_() >> 63) ? -1 : 1;
    return BinarySequence(std::move(chips));
}

namespace {

struct StatsAccumulator {
    double sum_abs = 0.0;
    double sum_square = 0.0;
    double max_abs = 0.0;
    std::size_t count = 0;

    void add(double magnitude) {
        sum_abs += magnitude;
        sum_square += magnitude * magnitude;
        max_abs = std::max(max_abs, magnitude);
        ++count;
    }

    CorrelationStats finish() const {
        if (count == 0) {
            throw SequenceError(ErrorCode::InsufficientFamily, "no correlation values selected");
        }
        const auto n = static_cast<double>(count);
        // Summation roundoff can push a flat profile's mean a few ulps above the max.
        return {std::min(sum_abs / n, max_abs), std::min(sum_square / n, max_abs * max_abs), max_abs, count};
    }
};

}  // namespace

CorrelationStats family_correlation_stats(std::span<const ComplexSequence> family, StatsMode mode) {
    if (family.empty()) throw SequenceError(ErrorCode::InsufficientFamily, "family is empty");
    const std::size_t N = family.front().size();
    for (const auto& s : family) {
        if (s.size() != N) throw SequenceError(ErrorCode::LengthMismatch, "family lengths differ");
    }

    StatsAccumulator acc;
    if (mode == StatsMode::AutoNonzeroShift) {
        for (const auto& s : family) {
            const auto profile = cyclic_autocorrelation(s, true);
            for (std::size_t tau = 1; tau < N; ++tau) acc.add(std::abs(profile.values[tau]));
        }
    } else {
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                const auto profile = cyclic_cross_correlation(family[i], family[j], true);
                for (const auto& v : profile.values) acc.add(std::abs(v));
            }
        }
    }
    return acc.finish();
}

RandomPairStats random_pair_stats(std::size_t length, std::size_t trials, std::uint64_t seed,
                                  double threshold) {
    if (trials == 0) throw SequenceError(ErrorCode::InsufficientFamily, "at least one trial required");
    RandomChipSource source(seed);
    StatsAccumulator cross;
    StatsAccumulator autocorr;
    std::size_t above = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto a = source.next(length).to_complex();
        const auto b = source.next(length).to_complex();
        double trial_max = 0.0;
        for (const auto& v : cyclic_cross_correlation(a, b, true).values) {
            const double m = std::abs(v);
            cross.add(m);
            trial_max = std::max(trial_max, m);
        }
        if (trial_max > threshold) ++above;
        for (const auto* s : {&a, &b}) {
            const auto profile = cyclic_autocorrelation(*s, true);
            for (std::size_t tau = 1; tau < length; ++tau) autocorr.add(std::abs(profile.values[tau]));
        }
    }
    RandomPairStats stats;
    stats.cross = cross.finish();
    stats.autocorrelation = autocorr.finish();
    stats.fraction_max_above = static_cast<double>(above) / static_cast<double>(trials);
    return stats;
}

}  // namespace zcseq
