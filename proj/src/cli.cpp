#include "zcseq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "zcseq/codes.hpp"
#include "zcseq/correlation.hpp"
#include "zcseq/io.hpp"
#include "zcseq/presets.hpp"
#include "zcseq/sequence.hpp"
#include "zcseq/verify.hpp"

namespace zcseq::cli {

namespace {

// Raised for inconsistent flags; reported like a parse error.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenOptions {
    std::optional<int> root;
    std::optional<int> length;
    std::optional<int> extend_to;
    std::optional<int> truncate_to;
    std::optional<std::string> preset;
    std::int64_t shift = 0;
    std::string format = "csv";
};

struct CorrOptions {
    std::string input_a;
    std::optional<std::string> input_b;
    bool normalized = false;
    std::string engine = "direct";
    std::string format = "csv";
};

struct VerifyOptions {
    std::optional<int> family_length;
    std::vector<int> roots;
    std::optional<std::string> file;
    double tolerance = kExactTolerance;
    bool dft_closure = false;
};

struct CompareOptions {
    std::vector<std::string> families;
    int length = 0;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::string format = "csv";
};

struct CodesOptions {
    std::string kind;
    int length = 0;
    std::optional<int> index;
    std::int64_t shift = 0;
    std::size_t count = 1;
    std::uint64_t seed = 1;
    std::string format = "chips";
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, sep)) parts.push_back(part);
    return parts;
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(what + " '" + text + "' is not an integer");
}

// "<name>:<root>[:<shift>]"
PresetId parse_preset_fields(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() < 2 || parts.size() > 3) {
        throw UsageError("preset must look like <name>:<root>[:<shift>], got '" + spec + "'");
    }
    const auto kind = parse_preset_name(parts[0]);
    if (!kind) {
        throw UsageError("unknown preset '" + parts[0] +
                         "' (expected pss, prach-long, prach-short, pucch or srs)");
    }
    PresetId id{*kind, parse_int(parts[1], "preset root"), 0};
    if (parts.size() == 3) id.cyclic_shift = parse_int(parts[2], "preset shift");
    return id;
}

// Either "preset:<name>:<root>[:<shift>]" or a path to a sequence CSV file.
ComplexSequence load_input(const std::string& input) {
    constexpr std::string_view prefix = "preset:";
    if (input.rfind(prefix, 0) == 0) {
        return preset_sequence(parse_preset_fields(input.substr(prefix.size())));
    }
    return io::read_sequence_csv_file(input);
}

void emit_sequence(std::ostream& out, const ComplexSequence& x, const std::string& format) {
    if (format == "json") {
        out << io::to_json(x).dump(2) << '\n';
    } else {
        io::write_sequence_csv(out, x);
    }
}

int cmd_gen(const GenOptions& opt, std::ostream& out) {
    if (opt.extend_to && opt.truncate_to) {
        throw UsageError("--extend-to and --truncate-to are mutually exclusive");
    }
    ComplexSequence seq = [&] {
        if (opt.preset) {
            if (opt.root || opt.length || opt.extend_to || opt.truncate_to) {
                throw UsageError("--preset cannot be combined with --root/--length/--extend-to/--truncate-to");
            }
            return preset_sequence(parse_preset_fields(*opt.preset));
        }
        if (!opt.root) throw UsageError("--root is required");
        if (opt.extend_to || opt.truncate_to) {
            if (opt.length) {
                throw UsageError("--length cannot be combined with --extend-to/--truncate-to; "
                                 "the base prime is derived from the target length");
            }
            const auto spec = opt.extend_to
                                  ? ExtensionSpec::make(*opt.extend_to, ExtensionMethod::CyclicExtend)
                                  : ExtensionSpec::make(*opt.truncate_to, ExtensionMethod::Truncate);
            return zc_extended(*opt.root, spec);
        }
        if (!opt.length) throw UsageError("--length (or --extend-to/--truncate-to) is required");
        if (*opt.length % 2 == 0) throw UsageError("length must be odd");
        return zc_generate({*opt.root, *opt.length});
    }();
    if (opt.shift != 0) seq = cyclic_shift(seq, opt.shift);
    emit_sequence(out, seq, opt.format);
    return kSuccess;
}

int cmd_corr(const CorrOptions& opt, std::ostream& out) {
    const auto a = load_input(opt.input_a);
    const auto b = opt.input_b ? load_input(*opt.input_b) : a;
    const auto engine = opt.engine == "fft" ? CorrelationEngine::Fft : CorrelationEngine::Direct;
    const auto profile = cross_correlation(a, b, opt.normalized, engine);
    if (opt.format == "json") {
        auto j = io::to_json(profile);
        j["engine"] = opt.engine;
        j["kind"] = opt.input_b ? "cross" : "auto";
        out << j.dump(2) << '\n';
    } else {
        io::write_profile_csv(out, profile);
    }
    return kSuccess;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    if (opt.family_length.has_value() == opt.file.has_value()) {
        throw UsageError("exactly one of --zc-family or --file is required");
    }
    if (opt.tolerance < 0.0 || !std::isfinite(opt.tolerance)) {
        throw UsageError("--tol must be a finite non-negative number");
    }

    nlohmann::json doc;
    bool passed = true;
    if (opt.family_length) {
        const int N = *opt.family_length;
        ZcParams{1, N}.validate();
        std::vector<int> roots = opt.roots;
        if (roots.empty()) {
            for (int q = 1; q < N; ++q) roots.push_back(q);
        }
        const auto family = verify_family(N, roots, opt.tolerance, opt.dft_closure);
        doc = io::to_json(family);
        if (opt.dft_closure) doc["dft_convention"] = "unitary, 1/sqrt(N) in both directions";
        passed = family.all_passed();
    } else {
        if (!opt.roots.empty() || opt.dft_closure) {
            throw UsageError("--roots and --dft-closure apply only to --zc-family");
        }
        const auto seq = io::read_sequence_csv_file(*opt.file);
        auto reports = nlohmann::json::array();
        for (const auto& r : {verify_constant_amplitude(seq, opt.tolerance),
                              verify_zero_autocorrelation(seq, opt.tolerance)}) {
            passed = passed && r.passed;
            reports.push_back(io::to_json(r));
        }
        doc = {{"source", *opt.file}, {"length", seq.size()}, {"reports", std::move(reports)},
               {"all_passed", passed}};
    }
    out << doc.dump(2) << '\n';
    return passed ? kSuccess : kVerificationFailed;
}

struct FamilyStatsRow {
    std::string family;
    std::string mode;
    CorrelationStats stats;
    std::optional<double> fraction_above;
};

std::optional<int> mersenne_degree(int length) {
    for (int m = 2; m <= 24; ++m) {
        if ((1 << m) - 1 == length) return m;
    }
    return std::nullopt;
}

// Reciprocal polynomial: x^m p(1/x). Primitive iff p is.
LfsrSpec reciprocal(const LfsrSpec& spec) {
    std::vector<int> taps;
    for (int t : spec.taps) {
        if (t != 0) taps.push_back(spec.degree - t);
    }
    taps.push_back(0);
    std::sort(taps.rbegin(), taps.rend());
    return LfsrSpec::primitive(spec.degree, std::move(taps));
}

std::vector<ComplexSequence> as_complex(const std::vector<BinarySequence>& codes) {
    std::vector<ComplexSequence> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(c.to_complex());
    return out;
}

void add_family_rows(std::vector<FamilyStatsRow>& rows, const std::string& name,
                     const std::vector<ComplexSequence>& family) {
    rows.push_back({name, "auto-nonzero-shift",
                    family_correlation_stats(family, StatsMode::AutoNonzeroShift), std::nullopt});
    if (family.size() >= 2) {
        rows.push_back({name, "cross-all-shifts",
                        family_correlation_stats(family, StatsMode::CrossAllShifts), std::nullopt});
    }
}

int cmd_compare(const CompareOptions& opt, std::ostream& out) {
    const int N = opt.length;
    if (N < 2) throw UsageError("--length must be >= 2");
    std::vector<FamilyStatsRow> rows;
    for (const auto& name : opt.families) {
        if (name == "zc") {
            if (N < 3 || N % 2 == 0) throw UsageError("zc family needs an odd length >= 3 (got " + std::to_string(N) + ")");
            std::vector<ComplexSequence> family;
            for (int q = 1; q < N; ++q) family.push_back(zc_generate({q, N}));
            add_family_rows(rows, name, family);
        } else if (name == "random-pn") {
            if (opt.trials == 0) throw UsageError("--trials must be >= 1");
            const double level = 1.0 / std::sqrt(static_cast<double>(N));
            const auto stats = random_pair_stats(static_cast<std::size_t>(N), opt.trials, opt.seed, level);
            rows.push_back({name, "auto-nonzero-shift", stats.autocorrelation, std::nullopt});
            rows.push_back({name, "cross-all-shifts", stats.cross, stats.fraction_max_above});
        } else if (name == "m-seq" || name == "gold") {
            const auto m = mersenne_degree(N);
            if (!m) throw UsageError(name + " family needs length 2^m - 1 (got " + std::to_string(N) + ")");
            if (name == "m-seq") {
                const auto base = default_lfsr(*m);
                std::vector<BinarySequence> codes{m_sequence(base)};
                const auto other = m_sequence(reciprocal(base));
                if (!(other == codes.front())) codes.push_back(other);
                add_family_rows(rows, name, as_complex(codes));
            } else {
                if (*m != 5 && *m != 7) throw UsageError("gold family is available for lengths 31 and 127");
                const auto [a, b] = preferred_pair(*m);
                add_family_rows(rows, name, as_complex(gold_family(a, b)));
            }
        } else if (name == "walsh") {
            if ((N & (N - 1)) != 0) throw UsageError("walsh family needs a power-of-two length (got " + std::to_string(N) + ")");
            add_family_rows(rows, name, as_complex(walsh_codes(N)));
        } else {
            throw UsageError("unknown family '" + name + "' (expected zc, random-pn, m-seq, gold or walsh)");
        }
    }

    if (opt.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& row : rows) {
            auto j = io::to_json(row.stats);
            j["family"] = row.family;
            j["mode"] = row.mode;
            if (row.fraction_above) j["trial_max_above_level"] = *row.fraction_above;
            arr.push_back(std::move(j));
        }
        out << nlohmann::json{{"length", N}, {"trials", opt.trials}, {"seed", opt.seed}, {"rows", std::move(arr)}}.dump(2)
            << '\n';
    } else {
        out << "family,mode,mean_abs,mean_square,max_abs,sample_count,trial_max_above_level\n";
        for (const auto& row : rows) {
            out << row.family << ',' << row.mode << ',' << io::format_real(row.stats.mean_abs) << ','
                << io::format_real(row.stats.mean_square) << ',' << io::format_real(row.stats.max_abs) << ','
                << row.stats.sample_count << ','
                << (row.fraction_above ? io::format_real(*row.fraction_above) : std::string{}) << '\n';
        }
    }
    return kSuccess;
}

int cmd_codes(const CodesOptions& opt, std::ostream& out) {
    std::vector<BinarySequence> codes;
    if (opt.kind == "m-seq" || opt.kind == "gold") {
        const auto m = mersenne_degree(opt.length);
        if (!m) throw UsageError(opt.kind + " needs length 2^m - 1 (got " + std::to_string(opt.length) + ")");
        if (opt.kind == "m-seq") {
            codes.push_back(m_sequence(default_lfsr(*m)));
        } else {
            if (*m != 5 && *m != 7) throw UsageError("gold codes are available for lengths 31 and 127");
            const auto [a, b] = preferred_pair(*m);
            codes = gold_family(a, b);
        }
    } else if (opt.kind == "walsh") {
        codes = walsh_codes(opt.length);
    } else if (opt.kind == "random-pn") {
        if (opt.length < 1) throw UsageError("--length must be >= 1");
        RandomChipSource source(opt.seed);
        for (std::size_t i = 0; i < opt.count; ++i) codes.push_back(source.next(static_cast<std::size_t>(opt.length)));
    } else {
        throw UsageError("unknown code kind '" + opt.kind + "' (expected m-seq, gold, walsh or random-pn)");
    }

    if (opt.index) {
        if (*opt.index < 0 || static_cast<std::size_t>(*opt.index) >= codes.size()) {
            throw UsageError("--index out of range (family has " + std::to_string(codes.size()) + " codes)");
        }
        codes = {codes[static_cast<std::size_t>(*opt.index)]};
    }
    if (opt.shift != 0) {
        for (auto& c : codes) c = c.shifted(opt.shift);
    }

    if (opt.format == "csv") {
        if (codes.size() != 1) throw UsageError("--format csv emits one sequence; select it with --index");
        io::write_sequence_csv(out, codes.front().to_complex());
    } else if (opt.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& c : codes) arr.push_back(std::vector<int>(c.chips().begin(), c.chips().end()));
        out << nlohmann::json{{"kind", opt.kind}, {"length", opt.length}, {"codes", std::move(arr)}}.dump(2) << '\n';
    } else {
        io::write_chip_rows(out, codes);
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zadoff-Chu and spreading-code sequence toolkit", "zcseq"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a ZC, extended/truncated ZC or preset sequence");
    gen_cmd->add_option("--root", gen.root, "Root index q");
    gen_cmd->add_option("--length", gen.length, "Odd length N_zc");
    gen_cmd->add_option("--extend-to", gen.extend_to, "Cyclically extend a prime-length sequence to this length");
    gen_cmd->add_option("--truncate-to", gen.truncate_to, "Truncate a prime-length sequence to this length");
    gen_cmd->add_option("--preset", gen.preset, "Preset <name>:<root>[:<shift>]");
    gen_cmd->add_option("--shift", gen.shift, "Cyclic shift applied last");
    gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"csv", "json"}));

    CorrOptions corr;
    auto* corr_cmd = app.add_subcommand("corr", "Cyclic auto- or cross-correlation profile");
    corr_cmd->add_option("-a,--input-a", corr.input_a, "Sequence CSV file or preset:<name>:<root>[:<shift>]")
        ->required();
    corr_cmd->add_option("-b,--input-b", corr.input_b, "Second input; autocorrelation when omitted");
    corr_cmd->add_flag("--normalized", corr.normalized, "Divide by the sequence length");
    corr_cmd->add_option("--engine", corr.engine)->check(CLI::IsMember({"direct", "fft"}));
    corr_cmd->add_option("--format", corr.format)->check(CLI::IsMember({"csv", "json"}));

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "CAZAC property report (JSON); exit 1 if any check fails");
    verify_cmd->add_option("--zc-family", verify.family_length, "Verify the ZC family of this length");
    verify_cmd->add_option("--roots", verify.roots, "Comma-separated subset of roots")->delimiter(',');
    verify_cmd->add_option("--file", verify.file, "Verify a sequence CSV file");
    verify_cmd->add_option("--tol", verify.tolerance, "Tolerance for every check");
    verify_cmd->add_flag("--dft-closure", verify.dft_closure, "Also check DFT closure per root");
    std::string verify_format = "json";
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"json"}));

    CompareOptions compare;
    auto* compare_cmd = app.add_subcommand("compare", "Correlation statistics of code families");
    compare_cmd->add_option("--families", compare.families, "zc, random-pn, m-seq, gold, walsh")
        ->delimiter(',')
        ->required();
    compare_cmd->add_option("--length", compare.length)->required();
    compare_cmd->add_option("--trials", compare.trials, "Random pairs for random-pn");
    compare_cmd->add_option("--seed", compare.seed);
    compare_cmd->add_option("--format", compare.format)->check(CLI::IsMember({"csv", "json"}));

    CodesOptions codes;
    auto* codes_cmd = app.add_subcommand("codes", "Emit binary comparison codes");
    codes_cmd->add_option("--kind", codes.kind, "m-seq, gold, walsh or random-pn")->required();
    codes_cmd->add_option("--length", codes.length)->required();
    codes_cmd->add_option("--index", codes.index, "Select one code of the family");
    codes_cmd->add_option("--shift", codes.shift);
    codes_cmd->add_option("--count", codes.count, "Number of random-pn sequences");
    codes_cmd->add_option("--seed", codes.seed);
    codes_cmd->add_option("--format", codes.format)->check(CLI::IsMember({"chips", "csv", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    // Payload is buffered so a failing command never leaves partial output.
    std::ostringstream payload;
    try {
        int code = kSuccess;
        if (*gen_cmd) code = cmd_gen(gen, payload);
        else if (*corr_cmd) code = cmd_corr(corr, payload);
        else if (*verify_cmd) code = cmd_verify(verify, payload);
        else if (*compare_cmd) code = cmd_compare(compare, payload);
        else if (*codes_cmd) code = cmd_codes(codes, payload);
        out << payload.str();
        return code;
    } catch (const SequenceError& e) {
        err << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
    } catch (const io::FormatError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsageError;
}

}  // namespace zcseq::cli
