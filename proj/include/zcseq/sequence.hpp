// Zadoff-Chu sequence construction: pure prime/odd-length sequences, cyclic
// shifts, conjugate roots and arbitrary-length extended/truncated variants.
//
//   s_q[n] = exp(-j*pi*q*n*(n+1)/N),  n = 0..N-1
//
// Phases are reduced in exact integer arithmetic (modulo 2N) before the
// trigonometric evaluation, so long sequences (PRACH N=839) do not lose
// precision to large angle arguments.

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "zcseq/errors.hpp"

namespace zcseq {

using Complex = std::complex<double>;

/// Finite, nonempty sequence of complex samples with no NaN/inf components.
class ComplexSequence {
public:
    explicit ComplexSequence(std::vector<Complex> samples);
    ComplexSequence(std::initializer_list<Complex> samples);

    std::size_t size() const noexcept { return samples_.size(); }
    const Complex& operator[](std::size_t n) const { return samples_[n]; }
    std::span<const Complex> samples() const noexcept { return samples_; }
    auto begin() const noexcept { return samples_.begin(); }
    auto end() const noexcept { return samples_.end(); }

    double energy() const noexcept;
    ComplexSequence conj() const;

private:
    std::vector<Complex> samples_;
};

/// Root q and length N of one pure ZC sequence.
struct ZcParams {
    int root = 1;
    int length = 3;

    /// Throws InvalidLength (even or < 3) or InvalidRoot (outside 1..N-1).
    void validate() const;

    friend bool operator==(const ZcParams&, const ZcParams&) = default;
};

enum class ExtensionMethod { CyclicExtend, Truncate };

struct ExtensionSpec {
    int target_length = 0;
    ExtensionMethod method = ExtensionMethod::CyclicExtend;
    int base_length = 0;  // prime length of the underlying ZC sequence

    /// Derives the base prime: largest prime <= target for CyclicExtend,
    /// smallest prime >= target for Truncate.
    static ExtensionSpec make(int target_length, ExtensionMethod method);

    void validate() const;
};

bool is_prime(std::int64_t n);
bool is_coprime(std::int64_t a, std::int64_t b);
std::int64_t largest_prime_leq(std::int64_t n);
std::int64_t smallest_prime_geq(std::int64_t n);

/// Phase numerators k[n] in (-N, N] with s_q[n] = exp(j*pi*k[n]/N).
std::vector<int> zc_phase_numerators(const ZcParams& params);

ComplexSequence zc_generate(const ZcParams& params);

/// output[n] = x[(n + m) mod N]; any integer m.
ComplexSequence cyclic_shift(const ComplexSequence& x, std::int64_t m);

/// (N - q, N); its sequence is the elementwise conjugate of the input's.
ZcParams conjugate_root(const ZcParams& params);

/// Phase numerators over base_length for an extended/truncated sequence.
std::vector<int> zc_extended_phase_numerators(int root, const ExtensionSpec& spec);

/// Root is validated against spec.base_length, not the target length.
ComplexSequence zc_extended(int root, const ExtensionSpec& spec);

}  // namespace zcseq
