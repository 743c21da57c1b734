// Test-only reference computations. Each one follows the textbook definition
// directly (long double, naive indexing) and shares no code with the library.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using LComplex = std::complex<long double>;
using Complex = std::complex<double>;

inline std::vector<Complex> zc(int q, int N) {
    std::vector<Complex> out(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) {
        const long double angle = -std::numbers::pi_v<long double> * q * n * (n + 1) / N;
        out[n] = Complex(static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle)));
    }
    return out;
}

inline std::vector<Complex> naive_dft(const std::vector<Complex>& x, int sign) {
    const std::size_t N = x.size();
    std::vector<Complex> out(N);
    for (std::size_t k = 0; k < N; ++k) {
        LComplex acc{};
        for (std::size_t n = 0; n < N; ++n) {
            const auto nk = static_cast<long double>((n * k) % N);
            const long double angle = sign * 2.0L * std::numbers::pi_v<long double> * nk / N;
            acc += LComplex(x[n].real(), x[n].imag()) * LComplex(std::cos(angle), std::sin(angle));
        }
        out[k] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    }
    return out;
}

inline std::vector<Complex> naive_correlation(const std::vector<Complex>& x, const std::vector<Complex>& y,
                                              bool normalized) {
    const std::size_t N = x.size();
    std::vector<Complex> out(N);
    for (std::size_t tau = 0; tau < N; ++tau) {
        LComplex acc{};
        for (std::size_t n = 0; n < N; ++n) {
            const auto& a = x[n];
            const auto& b = y[(n + tau) % N];
            acc += std::conj(LComplex(a.real(), a.imag())) * LComplex(b.real(), b.imag());
        }
        if (normalized) acc /= static_cast<long double>(N);
        out[tau] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    }
    return out;
}

inline std::vector<bool> sieve(int limit) {
    std::vector<bool> prime(static_cast<std::size_t>(limit + 1), true);
    prime[0] = false;
    if (limit >= 1) prime[1] = false;
    for (int p = 2; p * p <= limit; ++p) {
        if (!prime[p]) continue;
        for (int m = p * p; m <= limit; m += p) prime[m] = false;
    }
    return prime;
}

inline std::vector<int> primes_up_to(int limit) {
    const auto s = sieve(limit);
    std::vector<int> out;
    for (int n = 2; n <= limit; ++n) {
        if (s[n]) out.push_back(n);
    }
    return out;
}

inline int gcd_by_enumeration(int a, int b) {
    int g = 1;
    for (int d = 1; d <= std::min(a, b); ++d) {
        if (a % d == 0 && b % d == 0) g = d;
    }
    return g;
}

inline std::vector<Complex> random_complex(std::mt19937_64& rng, std::size_t N) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> out(N);
    for (auto& v : out) v = Complex(u(rng), u(rng));
    return out;
}

}  // namespace oracle
