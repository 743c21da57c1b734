#include "zcseq/sequence.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace zcseq {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidLength: return "InvalidLength";
        case ErrorCode::InvalidRoot: return "InvalidRoot";
        case ErrorCode::EmptySequence: return "EmptySequence";
        case ErrorCode::NonFiniteSample: return "NonFiniteSample";
        case ErrorCode::NoPrimeExists: return "NoPrimeExists";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ZeroEnergy: return "ZeroEnergy";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::InvalidSeed: return "InvalidSeed";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::InvalidChip: return "InvalidChip";
        case ErrorCode::InsufficientFamily: return "InsufficientFamily";
        case ErrorCode::InvalidPreset: return "InvalidPreset";
        case ErrorCode::InvalidStep: return "InvalidStep";
    }
    return "Unknown";
}

ComplexSequence::ComplexSequence(std::vector<Complex> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) {
        throw SequenceError(ErrorCode::EmptySequence, "sequence must contain at least one sample");
    }
    for (std::size_t n = 0; n < samples_.size(); ++n) {
        if (!std::isfinite(samples_[n].real()) || !std::isfinite(samples_[n].imag())) {
            throw SequenceError(ErrorCode::NonFiniteSample,
                                "sample " + std::to_string(n) + " is not finite");
        }
    }
}

ComplexSequence::ComplexSequence(std::initializer_list<Complex> samples)
    : ComplexSequence(std::vector<Complex>(samples)) {}

double ComplexSequence::energy() const noexcept {
    double e = 0.0;
    for (const auto& s : samples_) e += std::norm(s);
    return e;
}

ComplexSequence ComplexSequence::conj() const {
    std::vector<Complex> out(samples_.size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = std::conj(samples_[n]);
    return ComplexSequence(std::move(out));
}

void ZcParams::validate() const {
    if (length < 3 || length % 2 == 0) {
        throw SequenceError(ErrorCode::InvalidLength,
                            "length must be odd and >= 3 (got " + std::to_string(length) + ")");
    }
    if (root < 1 || root > length - 1) {
        throw SequenceError(ErrorCode::InvalidRoot,
                            "root must be in 1.." + std::to_string(length - 1) + " (got " +
                                std::to_string(root) + ")");
    }
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_coprime(std::int64_t a, std::int64_t b) { return std::gcd(a, b) == 1; }

std::int64_t largest_prime_leq(std::int64_t n) {
    if (n < 2) {
        throw SequenceError(ErrorCode::NoPrimeExists,
                            "no prime <= " + std::to_string(n));
    }
    while (!is_prime(n)) --n;
    return n;
}

std::int64_t smallest_prime_geq(std::int64_t n) {
    if (n < 2) n = 2;
    while (!is_prime(n)) ++n;
    return n;
}

ExtensionSpec ExtensionSpec::make(int target_length, ExtensionMethod method) {
    if (target_length < 3) {
        throw SequenceError(ErrorCode::InvalidLength,
                            "target length must be >= 3 (got " + std::to_string(target_length) + ")");
    }
    ExtensionSpec spec;
    spec.target_length = target_length;
    spec.method = method;
    spec.base_length = static_cast<int>(method == ExtensionMethod::CyclicExtend
                                            ? largest_prime_leq(target_length)
                                            : smallest_prime_geq(target_length));
    return spec;
}

void ExtensionSpec::validate() const {
    if (target_length < 3) {
        throw SequenceError(ErrorCode::InvalidLength, "target length must be >= 3");
    }
    const auto expected = method == ExtensionMethod::CyclicExtend ? largest_prime_leq(target_length)
                                                                  : smallest_prime_geq(target_length);
    if (base_length != expected) {
        throw SequenceError(ErrorCode::InvalidLength,
                            "base length " + std::to_string(base_length) +
                                " is inconsistent with target " + std::to_string(target_length));
    }
}

namespace {

// -q*n*(n+1) reduced modulo 2N into (-N, N].
int phase_numerator(std::int64_t q, std::int64_t n, std::int64_t N) {
    const std::int64_t two_n = 2 * N;
    const std::int64_t r = (q % two_n) * ((n * (n + 1)) % two_n) % two_n;
    return static_cast<int>(r >= N ? two_n - r : -r);
}

Complex unit_phasor(int numerator, int N) {
    return std::polar(1.0, std::numbers::pi * numerator / N);
}

ComplexSequence from_numerators(const std::vector<int>& k, int N) {
    std::vector<Complex> out(k.size());
    for (std::size_t n = 0; n < k.size(); ++n) out[n] = unit_phasor(k[n], N);
    return ComplexSequence(std::move(out));
}

}  // namespace

std::vector<int> zc_phase_numerators(const ZcParams& params) {
    params.validate();
    std::vector<int> k(static_cast<std::size_t>(params.length));
    for (int n = 0; n < params.length; ++n) k[n] = phase_numerator(params.root, n, params.length);
    return k;
}

ComplexSequence zc_generate(const ZcParams& params) {
    return from_numerators(zc_phase_numerators(params), params.length);
}

ComplexSequence cyclic_shift(const ComplexSequence& x, std::int64_t m) {
    const auto N = static_cast<std::int64_t>(x.size());
    const std::int64_t offset = ((m % N) + N) % N;
    std::vector<Complex> out(x.size());
    for (std::int64_t n = 0; n < N; ++n) out[n] = x[(n + offset) % N];
    return ComplexSequence(std::move(out));
}

ZcParams conjugate_root(const ZcParams& params) {
    params.validate();
    return {params.length - params.root, params.length};
}

std::vector<int> zc_extended_phase_numerators(int root, const ExtensionSpec& spec) {
    spec.validate();
    const auto base = zc_phase_numerators({root, spec.base_length});
    std::vector<int> k(static_cast<std::size_t>(spec.target_length));
    for (int n = 0; n < spec.target_length; ++n) k[n] = base[n % spec.base_length];
    return k;
}

ComplexSequence zc_extended(int root, const ExtensionSpec& spec) {
    return from_numerators(zc_extended_phase_numerators(root, spec), spec.base_length);
}

}  // namespace zcseq
