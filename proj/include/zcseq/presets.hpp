#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zcseq/sequence.hpp"

namespace zcseq {

/// LTE/NR parameterizations of ZC sequences (time-domain vectors only).
///   LtePss      N=63, root in {25, 29, 34}
///   PrachLong   N=839
///   PrachShort  N=139
///   PucchBase   N=11 cyclically extended to 12
///   SrsBase     N=31 cyclically extended to 36
enum class PresetKind { LtePss, PrachLong, PrachShort, PucchBase, SrsBase };

struct PresetId {
    PresetKind kind = PresetKind::LtePss;
    int root = 29;
    int cyclic_shift = 0;

    /// Throws InvalidPreset when the root is outside the preset's range.
    void validate() const;
};

const char* preset_name(PresetKind kind);
std::optional<PresetKind> parse_preset_name(std::string_view name);

/// Length of the sequence a preset produces.
int preset_length(PresetKind kind);

ComplexSequence preset_sequence(const PresetId& id);

/// floor(N / shift_step) cyclic shifts k * shift_step of a PRACH root sequence.
std::vector<ComplexSequence> prach_shift_family(int root, bool long_preamble, int shift_step);

}  // namespace zcseq
