#include "zcseq/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace zcseq {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

namespace {

// Plain product; std::complex operator* carries NaN/inf recovery that blocks
// vectorization in the inner loops.
inline Complex mul(Complex a, Complex b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

// tw[k] = exp(-j*2*pi*k/M), k < M/2
std::vector<Complex> make_twiddles(std::size_t m) {
    std::vector<Complex> tw(m / 2);
    for (std::size_t k = 0; k < tw.size(); ++k) {
        tw[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
    }
    return tw;
}

void radix2_with_table(std::span<Complex> data, std::span<const Complex> tw, bool inverse) {
    const std::size_t n = data.size();
    if (n <= 1) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t k = 0; k < half; ++k) {
            const Complex w = inverse ? std::conj(tw[k * stride]) : tw[k * stride];
            for (std::size_t i = k; i < n; i += len) {
                const Complex u = data[i];
                const Complex v = mul(data[i + half], w);
                data[i] = u + v;
                data[i + half] = u - v;
            }
        }
    }
}

}  // namespace

void fft_radix2(std::span<Complex> data, bool inverse) {
    if (!is_power_of_two(data.size())) {
        throw SequenceError(ErrorCode::InvalidLength, "radix-2 FFT needs a power-of-two length");
    }
    const auto tw = make_twiddles(data.size());
    radix2_with_table(data, tw, inverse);
}

DftPlan::DftPlan(std::size_t length) : n_(length) {
    if (n_ == 0) throw SequenceError(ErrorCode::EmptySequence, "DFT length must be >= 1");
    if (is_power_of_two(n_)) {
        twiddles_ = make_twiddles(n_);
        return;
    }

    m_ = 1;
    while (m_ < 2 * n_ - 1) m_ <<= 1;

    // n^2 mod 2N keeps the chirp angle exact for large n.
    const auto N = static_cast<std::int64_t>(n_);
    chirp_.resize(n_);
    for (std::int64_t n = 0; n < N; ++n) {
        const std::int64_t r = (n * n) % (2 * N);
        chirp_[n] = std::polar(1.0, -std::numbers::pi * static_cast<double>(r) / static_cast<double>(N));
    }

    chirp_kernel_.assign(m_, Complex{});
    chirp_kernel_[0] = std::conj(chirp_[0]);
    for (std::size_t n = 1; n < n_; ++n) {
        chirp_kernel_[n] = std::conj(chirp_[n]);
        chirp_kernel_[m_ - n] = std::conj(chirp_[n]);
    }
    twiddles_ = make_twiddles(m_);
    radix2_with_table(chirp_kernel_, twiddles_, false);
}

std::vector<Complex> DftPlan::bluestein(std::span<const Complex> x) const {
    std::vector<Complex> a(m_, Complex{});
    for (std::size_t n = 0; n < n_; ++n) a[n] = mul(x[n], chirp_[n]);
    radix2_with_table(a, twiddles_, false);
    for (std::size_t k = 0; k < m_; ++k) a[k] = mul(a[k], chirp_kernel_[k]);
    radix2_with_table(a, twiddles_, true);

    const double scale = 1.0 / static_cast<double>(m_);
    std::vector<Complex> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = mul(a[k], chirp_[k]) * scale;
    return out;
}

std::vector<Complex> DftPlan::forward(std::span<const Complex> x) const {
    if (x.size() != n_) {
        throw SequenceError(ErrorCode::LengthMismatch, "input length does not match DFT plan");
    }
    if (m_ == 0) {
        std::vector<Complex> out(x.begin(), x.end());
        radix2_with_table(out, twiddles_, false);
        return out;
    }
    return bluestein(x);
}

std::vector<Complex> DftPlan::backward(std::span<const Complex> x) const {
    // conj(DFT(conj(x))) flips the exponent sign.
    std::vector<Complex> tmp(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) tmp[n] = std::conj(x[n]);
    auto out = forward(tmp);
    for (auto& v : out) v = std::conj(v);
    return out;
}

}  // namespace zcseq
