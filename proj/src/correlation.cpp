#include "zcseq/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "zcseq/fft.hpp"

namespace zcseq {

namespace {

void require_same_length(const ComplexSequence& x, const ComplexSequence& y) {
    if (x.size() != y.size()) {
        throw SequenceError(ErrorCode::LengthMismatch,
                            "sequence lengths differ (" + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()) + ")");
    }
}

inline Complex mul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

const DftPlan& cached_plan(std::size_t length) {
    thread_local std::unordered_map<std::size_t, DftPlan> plans;
    auto it = plans.find(length);
    if (it == plans.end()) it = plans.emplace(length, DftPlan(length)).first;
    return it->second;
}

}  // namespace

std::vector<double> CorrelationProfile::magnitudes() const {
    std::vector<double> mag(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) mag[i] = std::abs(values[i]);
    return mag;
}

CorrelationProfile cyclic_cross_correlation(const ComplexSequence& x, const ComplexSequence& y,
                                            bool normalized) {
    require_same_length(x, y);
    const std::size_t N = x.size();
    const auto xs = x.samples();
    const auto ys = y.samples();

    CorrelationProfile profile;
    profile.normalized = normalized;
    profile.values.resize(N);
    for (std::size_t tau = 0; tau < N; ++tau) {
        Complex acc{};
        // Split at the wrap point instead of taking (n + tau) % N per term.
        const std::size_t head = N - tau;
        for (std::size_t n = 0; n < head; ++n) acc += std::conj(xs[n]) * ys[n + tau];
        for (std::size_t n = head; n < N; ++n) acc += std::conj(xs[n]) * ys[n - head];
        profile.values[tau] = normalized ? acc / static_cast<double>(N) : acc;
    }
    return profile;
}

CorrelationProfile cyclic_autocorrelation(const ComplexSequence& x, bool normalized) {
    return cyclic_cross_correlation(x, x, normalized);
}

CorrelationProfile fft_cyclic_cross_correlation(const ComplexSequence& x, const ComplexSequence& y,
                                                bool normalized) {
    require_same_length(x, y);
    const std::size_t N = x.size();

    // Power-of-two lengths correlate cyclically in place. Anything else goes
    // through a zero-padded linear correlation of length M >= 2N - 1, folded
    // back onto N lags: R[t] = c[t] + c[t - N].
    std::size_t M = N;
    if (!is_power_of_two(N)) {
        M = 1;
        while (M < 2 * N - 1) M <<= 1;
    }
    const DftPlan& plan = cached_plan(M);

    std::vector<Complex> a(M, Complex{});
    std::vector<Complex> b(M, Complex{});
    std::copy(x.begin(), x.end(), a.begin());
    std::copy(y.begin(), y.end(), b.begin());
    const auto X = plan.forward(a);
    auto Y = plan.forward(b);
    for (std::size_t k = 0; k < M; ++k) Y[k] = mul(std::conj(X[k]), Y[k]);
    const auto c = plan.backward(Y);

    const double scale = (normalized ? 1.0 / static_cast<double>(N) : 1.0) /
                         static_cast<double>(M);
    std::vector<Complex> r(N);
    r[0] = c[0] * scale;
    for (std::size_t t = 1; t < N; ++t) r[t] = (M == N ? c[t] : c[t] + c[M - N + t]) * scale;
    return {std::move(r), normalized};
}

CorrelationProfile cross_correlation(const ComplexSequence& x, const ComplexSequence& y,
                                     bool normalized, CorrelationEngine engine) {
    return engine == CorrelationEngine::Direct ? cyclic_cross_correlation(x, y, normalized)
                                               : fft_cyclic_cross_correlation(x, y, normalized);
}

ComplexSequence dft(const ComplexSequence& x) {
    const DftPlan plan(x.size());
    auto out = plan.forward(x.samples());
    const double scale = 1.0 / std::sqrt(static_cast<double>(x.size()));
    for (auto& v : out) v *= scale;
    return ComplexSequence(std::move(out));
}

ComplexSequence idft(const ComplexSequence& x) {
    const DftPlan plan(x.size());
    auto out = plan.backward(x.samples());
    const double scale = 1.0 / std::sqrt(static_cast<double>(x.size()));
    for (auto& v : out) v *= scale;
    return ComplexSequence(std::move(out));
}

double papr(const ComplexSequence& x) {
    double peak = 0.0;
    double total = 0.0;
    for (const auto& s : x) {
        const double p = std::norm(s);
        peak = std::max(peak, p);
        total += p;
    }
    if (total == 0.0) throw SequenceError(ErrorCode::ZeroEnergy, "PAPR of an all-zero sequence");
    return peak / (total / static_cast<double>(x.size()));
}

ComplexSequence apply_frequency_offset(const ComplexSequence& x, double epsilon) {
    std::vector<Complex> out(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        // Only the fractional part of epsilon*n matters; reducing it first
        // keeps epsilon = 1 an exact identity.
        double cycles = epsilon * static_cast<double>(n);
        cycles -= std::floor(cycles);
        out[n] = x[n] * std::polar(1.0, 2.0 * std::numbers::pi * cycles);
    }
    return ComplexSequence(std::move(out));
}

}  // namespace zcseq
