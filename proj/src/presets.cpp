#include "zcseq/presets.hpp"

#include <array>

namespace zcseq {

namespace {

constexpr int kPssLength = 63;
constexpr int kPrachLongLength = 839;
constexpr int kPrachShortLength = 139;
constexpr int kPucchLength = 12;
constexpr int kSrsLength = 36;

}  // namespace

const char* preset_name(PresetKind kind) {
    switch (kind) {
        case PresetKind::LtePss: return "pss";
        case PresetKind::PrachLong: return "prach-long";
        case PresetKind::PrachShort: return "prach-short";
        case PresetKind::PucchBase: return "pucch";
        case PresetKind::SrsBase: return "srs";
    }
    return "unknown";
}

std::optional<PresetKind> parse_preset_name(std::string_view name) {
    for (auto kind : {PresetKind::LtePss, PresetKind::PrachLong, PresetKind::PrachShort,
                      PresetKind::PucchBase, PresetKind::SrsBase}) {
        if (name == preset_name(kind)) return kind;
    }
    return std::nullopt;
}

int preset_length(PresetKind kind) {
    switch (kind) {
        case PresetKind::LtePss: return kPssLength;
        case PresetKind::PrachLong: return kPrachLongLength;
        case PresetKind::PrachShort: return kPrachShortLength;
        case PresetKind::PucchBase: return kPucchLength;
        case PresetKind::SrsBase: return kSrsLength;
    }
    return 0;
}

void PresetId::validate() const {
    bool ok = false;
    switch (kind) {
        case PresetKind::LtePss: ok = root == 25 || root == 29 || root == 34; break;
        case PresetKind::PrachLong: ok = root >= 1 && root <= kPrachLongLength - 1; break;
        case PresetKind::PrachShort: ok = root >= 1 && root <= kPrachShortLength - 1; break;
        case PresetKind::PucchBase: ok = root >= 1 && root <= 10; break;
        case PresetKind::SrsBase: ok = root >= 1 && root <= 30; break;
    }
    if (!ok) {
        throw SequenceError(ErrorCode::InvalidPreset, std::string("root ") + std::to_string(root) +
                                                          " is not valid for preset " + preset_name(kind));
    }
}

ComplexSequence preset_sequence(const PresetId& id) {
    id.validate();
    auto base = [&]() {
        switch (id.kind) {
            case PresetKind::LtePss: return zc_generate({id.root, kPssLength});
            case PresetKind::PrachLong: return zc_generate({id.root, kPrachLongLength});
            case PresetKind::PrachShort: return zc_generate({id.root, kPrachShortLength});
            case PresetKind::PucchBase:
                return zc_extended(id.root, ExtensionSpec::make(kPucchLength, ExtensionMethod::CyclicExtend));
            case PresetKind::SrsBase:
                return zc_extended(id.root, ExtensionSpec::make(kSrsLength, ExtensionMethod::CyclicExtend));
        }
        throw SequenceError(ErrorCode::InvalidPreset, "unknown preset");
    }();
    return id.cyclic_shift == 0 ? base : cyclic_shift(base, id.cyclic_shift);
}

std::vector<ComplexSequence> prach_shift_family(int root, bool long_preamble, int shift_step) {
    const PresetId id{long_preamble ? PresetKind::PrachLong : PresetKind::PrachShort, root, 0};
    const int N = preset_length(id.kind);
    if (shift_step < 1 || shift_step > N) {
        throw SequenceError(ErrorCode::InvalidStep,
                            "shift step must be in 1.." + std::to_string(N) + " (got " +
                                std::to_string(shift_step) + ")");
    }
    const auto base = preset_sequence(id);
    std::vector<ComplexSequence> family;
    for (int k = 0; k < N / shift_step; ++k) family.push_back(cyclic_shift(base, static_cast<std::int64_t>(k) * shift_step));
    return family;
}

}  // namespace zcseq
