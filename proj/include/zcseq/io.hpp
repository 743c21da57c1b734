// CSV/JSON serialization for sequences, correlation profiles and reports.
//
// Sequence CSV:  header "n,re,im", one row per sample.
// Profile CSV:   header "shift,re,im,mag", one row per shift.
// Reals are printed with 17 significant digits so every double round-trips.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "zcseq/codes.hpp"
#include "zcseq/correlation.hpp"
#include "zcseq/verify.hpp"

namespace zcseq::io {

std::string format_real(double v);

void write_sequence_csv(std::ostream& out, const ComplexSequence& x);
ComplexSequence read_sequence_csv(std::istream& in);
ComplexSequence read_sequence_csv_file(const std::string& path);

void write_profile_csv(std::ostream& out, const CorrelationProfile& profile);
CorrelationProfile read_profile_csv(std::istream& in, bool normalized);

void write_chip_rows(std::ostream& out, std::span<const BinarySequence> codes);

nlohmann::json to_json(const ComplexSequence& x);
nlohmann::json to_json(const CorrelationProfile& profile);
nlohmann::json to_json(const PropertyReport& report);
nlohmann::json to_json(const FamilyReport& report);
nlohmann::json to_json(const CorrelationStats& stats);

/// Thrown for malformed input files; the CLI maps it to a usage error.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zcseq::io
