#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chipfire/chip_count.hpp"

namespace chipfire {

enum class SequenceId { total_firings, nonzero_rows, longest_row, minimal_row_sums };

/// Published reference prefix of a sequence. `known[k]` is the term at index offset + k.
struct SequenceTable {
    SequenceId id;
    std::string_view name;
    unsigned offset;
    std::vector<ChipCount> known;
    std::string_view source;
};

std::span<const SequenceTable> sequence_tables();
const SequenceTable& sequence_table(SequenceId id);

std::string_view to_string(SequenceId id);
std::optional<SequenceId> parse_sequence_id(std::string_view name);

/// Terms offset..upto, computed from the configuration itself (empty when upto < offset).
/// total-firings is computed through the moment route and cross-checked against the
/// direct sum; a disagreement throws ConsistencyError.
std::vector<ChipCount> generate(SequenceId id, unsigned upto);

/// nonzero-rows(n) / 2 for n = 1..upto. Throws ConsistencyError on an odd count.
std::vector<ChipCount> half_nonzero_rows(unsigned upto);

}  // namespace chipfire
