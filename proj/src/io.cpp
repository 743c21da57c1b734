#include "zcseq/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace zcseq::io {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    return fields;
}

double parse_real(const std::string& text, std::size_t line_no) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
        throw FormatError("line " + std::to_string(line_no) + ": '" + text + "' is not a number");
    }
    return v;
}

long parse_index(const std::string& text, std::size_t line_no) {
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw FormatError("line " + std::to_string(line_no) + ": '" + text + "' is not an integer");
    }
    return v;
}

// Reads the header line and returns data rows split into fields.
std::vector<std::vector<std::string>> read_table(std::istream& in, const std::string& header,
                                                 std::size_t columns) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) break;
    }
    if (trim(line) != header) {
        throw FormatError("expected header '" + header + "', got '" + trim(line) + "'");
    }
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != columns) {
            throw FormatError("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(columns) + " columns");
        }
        fields.push_back(std::to_string(line_no));
        rows.push_back(std::move(fields));
    }
    if (rows.empty()) throw FormatError("no data rows");
    return rows;
}

}  // namespace

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_sequence_csv(std::ostream& out, const ComplexSequence& x) {
    out << "n,re,im\n";
    for (std::size_t n = 0; n < x.size(); ++n) {
        out << n << ',' << format_real(x[n].real()) << ',' << format_real(x[n].imag()) << '\n';
    }
}

ComplexSequence read_sequence_csv(std::istream& in) {
    const auto rows = read_table(in, "n,re,im", 3);
    std::vector<Complex> samples;
    samples.reserve(rows.size());
    for (const auto& row : rows) {
        const auto line_no = std::stoul(row[3]);
        if (parse_index(row[0], line_no) != static_cast<long>(samples.size())) {
            throw FormatError("line " + row[3] + ": sample index out of sequence");
        }
        samples.emplace_back(parse_real(row[1], line_no), parse_real(row[2], line_no));
    }
    return ComplexSequence(std::move(samples));
}

ComplexSequence read_sequence_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    try {
        return read_sequence_csv(in);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_profile_csv(std::ostream& out, const CorrelationProfile& profile) {
    out << "shift,re,im,mag\n";
    for (std::size_t tau = 0; tau < profile.size(); ++tau) {
        const auto& v = profile.values[tau];
        out << tau << ',' << format_real(v.real()) << ',' << format_real(v.imag()) << ','
            << format_real(std::abs(v)) << '\n';
    }
}

CorrelationProfile read_profile_csv(std::istream& in, bool normalized) {
    const auto rows = read_table(in, "shift,re,im,mag", 4);
    CorrelationProfile profile;
    profile.normalized = normalized;
    for (const auto& row : rows) {
        const auto line_no = std::stoul(row[4]);
        if (parse_index(row[0], line_no) != static_cast<long>(profile.values.size())) {
            throw FormatError("line " + row[4] + ": shift out of sequence");
        }
        profile.values.emplace_back(parse_real(row[1], line_no), parse_real(row[2], line_no));
    }
    return profile;
}

void write_chip_rows(std::ostream& out, std::span<const BinarySequence> codes) {
    for (const auto& code : codes) {
        for (std::size_t n = 0; n < code.size(); ++n) {
            if (n) out << ',';
            out << code[n];
        }
        out << '\n';
    }
}

nlohmann::json to_json(const ComplexSequence& x) {
    auto samples = nlohmann::json::array();
    for (const auto& s : x) samples.push_back({s.real(), s.imag()});
    return {{"length", x.size()}, {"samples", std::move(samples)}};
}

nlohmann::json to_json(const CorrelationProfile& profile) {
    auto values = nlohmann::json::array();
    for (std::size_t tau = 0; tau < profile.size(); ++tau) {
        const auto& v = profile.values[tau];
        values.push_back({{"shift", tau}, {"re", v.real()}, {"im", v.imag()}, {"mag", std::abs(v)}});
    }
    return {{"length", profile.size()}, {"normalized", profile.normalized}, {"values", std::move(values)}};
}

nlohmann::json to_json(const PropertyReport& report) {
    nlohmann::json j{{"property", to_string(report.property_id)},
                     {"passed", report.passed},
                     {"worst_deviation", report.worst_deviation},
                     {"worst_location", report.worst_location},
                     {"tolerance_used", report.tolerance_used}};
    if (report.matched_root) j["matched_root"] = *report.matched_root;
    if (report.matched_shift) j["matched_shift"] = *report.matched_shift;
    return j;
}

nlohmann::json to_json(const FamilyReport& report) {
    auto roots = nlohmann::json::array();
    for (const auto& rr : report.per_root) {
        auto reports = nlohmann::json::array();
        for (const auto& r : rr.reports) reports.push_back(to_json(r));
        roots.push_back({{"root", rr.root}, {"reports", std::move(reports)}});
    }
    auto pairs = nlohmann::json::array();
    for (const auto& pr : report.per_pair) {
        pairs.push_back({{"roots", {pr.root_a, pr.root_b}},
                         {"coprime_ok", pr.coprime_ok},
                         {"report", to_json(pr.report)}});
    }
    nlohmann::json j{{"length", report.length},
                     {"prime_length", report.prime_length},
                     {"per_root", std::move(roots)},
                     {"per_pair", std::move(pairs)},
                     {"compliant_pair_count", report.compliant_pair_count},
                     {"all_passed", report.all_passed()}};
    if (!report.prime_length) {
        j["warning"] = "length is not prime; cross-correlation level holds only for coprime root differences";
    }
    return j;
}

nlohmann::json to_json(const CorrelationStats& stats) {
    return {{"mean_abs", stats.mean_abs},
            {"mean_square", stats.mean_square},
            {"max_abs", stats.max_abs},
            {"sample_count", stats.sample_count}};
}

}  // namespace zcseq::io
