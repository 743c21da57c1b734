#include "zcseq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "zcseq/correlation.hpp"

namespace zcseq {

const char* to_string(PropertyId id) {
    switch (id) {
        case PropertyId::ConstantAmplitude: return "ConstantAmplitude";
        case PropertyId::ZeroAutocorrelation: return "ZeroAutocorrelation";
        case PropertyId::FixedCrossCorrelation: return "FixedCrossCorrelation";
        case PropertyId::DftClosure: return "DftClosure";
    }
    return "Unknown";
}

namespace {

PropertyReport finish(PropertyId id, double deviation, std::size_t location, double tol) {
    PropertyReport r;
    r.property_id = id;
    r.worst_deviation = deviation;
    r.worst_location = location;
    r.tolerance_used = tol;
    r.passed = deviation <= tol;
    return r;
}

struct Worst {
    double value = 0.0;
    std::size_t location = 0;

    void offer(double v, std::size_t at) {
        if (v > value) {
            value = v;
            location = at;
        }
    }
};

Worst amplitude_deviation(std::span<const Complex> x) {
    Worst w;
    for (std::size_t n = 0; n < x.size(); ++n) w.offer(std::abs(std::abs(x[n]) - 1.0), n);
    return w;
}

}  // namespace

bool FamilyReport::all_passed() const {
    for (const auto& root : per_root) {
        for (const auto& r : root.reports) {
            if (!r.passed) return false;
        }
    }
    return std::all_of(per_pair.begin(), per_pair.end(),
                       [](const PairReport& p) { return p.report.passed; });
}

PropertyReport verify_constant_amplitude(const ComplexSequence& x, double tol) {
    const auto w = amplitude_deviation(x.samples());
    return finish(PropertyId::ConstantAmplitude, w.value, w.location, tol);
}

PropertyReport verify_zero_autocorrelation(const ComplexSequence& x, double tol) {
    const auto profile = cyclic_autocorrelation(x, true);
    Worst w;
    for (std::size_t tau = 1; tau < profile.size(); ++tau) w.offer(std::abs(profile.values[tau]), tau);
    return finish(PropertyId::ZeroAutocorrelation, w.value, w.location, tol);
}

PropertyReport verify_cross_correlation_level(const ComplexSequence& x, const ComplexSequence& y,
                                              double tol) {
    const auto profile = cyclic_cross_correlation(x, y, true);
    const double level = 1.0 / std::sqrt(static_cast<double>(x.size()));
    Worst w;
    for (std::size_t tau = 0; tau < profile.size(); ++tau) {
        w.offer(std::abs(std::abs(profile.values[tau]) - level), tau);
    }
    return finish(PropertyId::FixedCrossCorrelation, w.value, w.location, tol);
}

PropertyReport verify_dft_closure(const ZcParams& params, double tol) {
    const auto spectrum = dft(zc_generate(params));
    const auto X = spectrum.samples();
    const int N = params.length;
    const auto amp = amplitude_deviation(X);

    double best = std::numeric_limits<double>::infinity();
    std::size_t best_location = 0;
    int best_root = 0;
    int best_shift = 0;
    for (int q = 1; q < N; ++q) {
        const auto candidate = zc_generate({q, N});
        for (int m = 0; m < N; ++m) {
            const Complex c = X[0] / candidate[static_cast<std::size_t>(m)];
            double residual = 0.0;
            std::size_t location = 0;
            for (int k = 0; k < N && residual < best; ++k) {
                const double e = std::abs(X[k] - c * candidate[static_cast<std::size_t>((k + m) % N)]);
                if (e > residual) {
                    residual = e;
                    location = static_cast<std::size_t>(k);
                }
            }
            if (residual < best) {
                best = residual;
                best_location = location;
                best_root = q;
                best_shift = m;
            }
        }
    }

    auto report = amp.value >= best ? finish(PropertyId::DftClosure, amp.value, amp.location, tol)
                                    : finish(PropertyId::DftClosure, best, best_location, tol);
    report.matched_root = best_root;
    report.matched_shift = best_shift;
    return report;
}

FamilyReport verify_family(int length, const std::vector<int>& roots, double tol,
                           bool include_dft_closure) {
    std::vector<int> unique_roots = roots;
    std::sort(unique_roots.begin(), unique_roots.end());
    unique_roots.erase(std::unique(unique_roots.begin(), unique_roots.end()), unique_roots.end());

    FamilyReport family;
    family.length = length;
    family.prime_length = is_prime(length);

    std::vector<ComplexSequence> sequences;
    sequences.reserve(unique_roots.size());
    for (int q : unique_roots) {
        const ZcParams params{q, length};
        sequences.push_back(zc_generate(params));
        RootReport rr;
        rr.root = q;
        rr.reports.push_back(verify_constant_amplitude(sequences.back(), tol));
        rr.reports.push_back(verify_zero_autocorrelation(sequences.back(), tol));
        if (include_dft_closure) rr.reports.push_back(verify_dft_closure(params, tol));
        family.per_root.push_back(std::move(rr));
    }

    for (std::size_t i = 0; i < unique_roots.size(); ++i) {
        for (std::size_t j = i + 1; j < unique_roots.size(); ++j) {
            PairReport pr;
            pr.root_a = unique_roots[i];
            pr.root_b = unique_roots[j];
            pr.report = verify_cross_correlation_level(sequences[i], sequences[j], tol);
            pr.coprime_ok = is_coprime(std::abs(pr.root_a - pr.root_b), length);
            if (pr.report.passed) ++family.compliant_pair_count;
            family.per_pair.push_back(pr);
        }
    }
    return family;
}

}  // namespace zcseq
