// Cyclic (periodic) correlation, unitary DFT, PAPR and a carrier frequency
// offset model.
//
//   R_xy[tau] = sum_n conj(x[n]) * y[(n + tau) mod N],   tau = 0..N-1
//
// The first argument is the conjugated one. Normalized profiles divide by N.

#pragma once

#include <vector>

#include "zcseq/sequence.hpp"

namespace zcseq {

struct CorrelationProfile {
    std::vector<Complex> values;  // indexed by shift tau
    bool normalized = false;

    std::size_t size() const noexcept { return values.size(); }
    std::vector<double> magnitudes() const;
};

enum class CorrelationEngine { Direct, Fft };

/// Direct O(N^2) sum. This is the reference the FFT engine is tested against.
CorrelationProfile cyclic_cross_correlation(const ComplexSequence& x, const ComplexSequence& y,
                                            bool normalized);
CorrelationProfile cyclic_autocorrelation(const ComplexSequence& x, bool normalized);

/// IDFT(conj(DFT(x)) * DFT(y)); valid for every N including primes.
CorrelationProfile fft_cyclic_cross_correlation(const ComplexSequence& x, const ComplexSequence& y,
                                                bool normalized);

CorrelationProfile cross_correlation(const ComplexSequence& x, const ComplexSequence& y,
                                     bool normalized, CorrelationEngine engine);

/// Unitary convention: both directions scale by 1/sqrt(N).
ComplexSequence dft(const ComplexSequence& x);
ComplexSequence idft(const ComplexSequence& x);

/// max |x|^2 / mean |x|^2. Throws ZeroEnergy for an all-zero input.
double papr(const ComplexSequence& x);

/// output[n] = x[n] * exp(j*2*pi*epsilon*n), epsilon in cycles per sample.
ComplexSequence apply_frequency_offset(const ComplexSequence& x, double epsilon);

}  // namespace zcseq
