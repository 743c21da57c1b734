#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zcseq/sequence.hpp"

namespace zcseq {

/// Unnormalized DFT of arbitrary length N.
///
/// Power-of-two lengths run an iterative radix-2 transform. Every other length
/// (prime ZC lengths in particular) goes through Bluestein's chirp-z
/// re-expression as a power-of-two circular convolution of size >= 2N-1.
/// A plan is immutable after construction and may be shared across threads.
class DftPlan {
public:
    explicit DftPlan(std::size_t length);

    std::size_t size() const noexcept { return n_; }

    /// X[k] = sum_n x[n] exp(-j*2*pi*n*k/N)
    std::vector<Complex> forward(std::span<const Complex> x) const;
    /// x[n] = sum_k X[k] exp(+j*2*pi*n*k/N), no 1/N factor
    std::vector<Complex> backward(std::span<const Complex> x) const;

private:
    std::vector<Complex> bluestein(std::span<const Complex> x) const;

    std::size_t n_;
    std::size_t m_ = 0;                  // padded power-of-two size (Bluestein only)
    std::vector<Complex> chirp_;         // exp(-j*pi*n^2/N), n < N
    std::vector<Complex> chirp_kernel_;  // FFT of the conjugated, wrapped chirp
    std::vector<Complex> twiddles_;
};

/// In-place radix-2 FFT; size must be a power of two. inverse skips the 1/N.
void fft_radix2(std::span<Complex> data, bool inverse);

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace zcseq
