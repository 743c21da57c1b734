// Machine-checkable reports for the CAZAC property set of ZC sequences:
// constant amplitude, zero cyclic autocorrelation, flat cross-correlation at
// 1/sqrt(N), and closure of the family under the DFT.
//
// Every deviation is an infinity norm over samples or shifts, and a report
// passes iff worst_deviation <= tolerance_used.

#pragma once

#include <optional>
#include <vector>

#include "zcseq/sequence.hpp"

namespace zcseq {

inline constexpr double kExactTolerance = 1e-9;
inline constexpr double kDemonstrationTolerance = 1e-3;

enum class PropertyId { ConstantAmplitude, ZeroAutocorrelation, FixedCrossCorrelation, DftClosure };

const char* to_string(PropertyId id);

struct PropertyReport {
    PropertyId property_id = PropertyId::ConstantAmplitude;
    bool passed = false;
    double worst_deviation = 0.0;
    std::size_t worst_location = 0;  // sample index or shift, depending on the property
    double tolerance_used = 0.0;

    // DftClosure only: the ZC root and cyclic shift the transform matched best.
    std::optional<int> matched_root;
    std::optional<int> matched_shift;
};

struct RootReport {
    int root = 0;
    std::vector<PropertyReport> reports;
};

struct PairReport {
    int root_a = 0;
    int root_b = 0;
    PropertyReport report;
    bool coprime_ok = false;  // gcd(|root_a - root_b|, N) == 1
};

struct FamilyReport {
    int length = 0;
    bool prime_length = false;
    std::vector<RootReport> per_root;
    std::vector<PairReport> per_pair;  // lexicographic by (root_a, root_b), root_a < root_b
    std::size_t compliant_pair_count = 0;

    bool all_passed() const;
};

PropertyReport verify_constant_amplitude(const ComplexSequence& x, double tol = kExactTolerance);
PropertyReport verify_zero_autocorrelation(const ComplexSequence& x, double tol = kExactTolerance);
PropertyReport verify_cross_correlation_level(const ComplexSequence& x, const ComplexSequence& y,
                                              double tol = kExactTolerance);

/// Searches every root q' and cyclic shift m for a unit-modulus c with
/// dft(s_q) = c * s_q'[(k + m) mod N]. worst_deviation is the larger of the
/// amplitude error and the best fit residual.
PropertyReport verify_dft_closure(const ZcParams& params, double tol = kExactTolerance);

/// Per root: amplitude and autocorrelation (plus DFT closure when requested).
/// Per unordered distinct pair: cross-correlation level.
FamilyReport verify_family(int length, const std::vector<int>& roots, double tol = kExactTolerance,
                           bool include_dft_closure = false);

}  // namespace zcseq
