#include "chipfire/sequences.hpp"

#include <array>
#include <exception>
#include <stdexcept>
#include <string>

#include "chipfire/stable.hpp"
#include "chipfire/structure.hpp"

namespace chipfire {

namespace {

std::vector<ChipCount> values(std::initializer_list<std::uint64_t> v) { return {v.begin(), v.end()}; }

const std::array<SequenceTable, 4>& tables() {
    static const std::array<SequenceTable, 4> t{{
        {SequenceId::total_firings, "total-firings", 0,
         values({0, 1, 5, 15, 52, 163, 458, 1359, 4296, 12890, 38570}), "OEIS A389565"},
        {SequenceId::nonzero_rows, "nonzero-rows", 0,
         values({1, 2, 4, 6, 10, 16, 24, 38, 60, 92, 144, 226, 362, 570, 906, 1430}), "OEIS A390129"},
        {SequenceId::longest_row, "longest-row", 0,
         values({1, 2, 3, 4, 5, 6, 7, 8, 10, 13, 15, 19, 24, 30, 37, 46, 58, 73}), "OEIS A390355"},
        {SequenceId::minimal_row_sums, "minimal-row-sums", 1, values({2, 4, 8, 12, 18, 24, 32, 40, 50}),
         "OEIS A007590"},
    }};
    return t;
}

ChipCount term(SequenceId id, unsigned index) {
    switch (id) {
        case SequenceId::total_firings: {
            const ChipCount via_moment = total_firings_via_moment(index);
            const ChipCount via_sum = total_firings_via_sum(index);
            if (via_moment != via_sum) {
                throw ConsistencyError("T(" + std::to_string(index) + "): moment route gives " +
                                       via_moment.to_string() + ", firing sum gives " + via_sum.to_string());
            }
            return via_moment;
        }
        case SequenceId::nonzero_rows: return for_each_row(index, [](const Row&) {});
        case SequenceId::longest_row: return longest_row(index).length;
        case SequenceId::minimal_row_sums: return minimal_row_sum(index);
    }
    throw std::invalid_argument("unknown sequence");
}

}  // namespace

std::span<const SequenceTable> sequence_tables() { return tables(); }

const SequenceTable& sequence_table(SequenceId id) {
    for (const auto& t : tables())
        if (t.id == id) return t;
    throw std::invalid_argument("unknown sequence");
}

std::string_view to_string(SequenceId id) { return sequence_table(id).name; }

std::optional<SequenceId> parse_sequence_id(std::string_view name) {
    for (const auto& t : tables())
        if (t.name == name) return t.id;
    return std::nullopt;
}

std::vector<ChipCount> generate(SequenceId id, unsigned upto) {
    const unsigned offset = sequence_table(id).offset;
    if (upto < offset) return {};
    std::vector<ChipCount> out(upto - offset + 1);
    std::vector<std::exception_ptr> errors(out.size());
    const auto count = static_cast<std::ptrdiff_t>(out.size());
    // Large indices dominate, so hand them out first.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = count - 1; i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            out[k] = term(id, offset + static_cast<unsigned>(k));
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<ChipCount> half_nonzero_rows(unsigned upto) {
    if (upto < 1) throw std::invalid_argument("half sequence starts at n=1");
    const auto full = generate(SequenceId::nonzero_rows, upto);
    std::vector<ChipCount> half;
    for (unsigned n = 1; n <= upto; ++n) {
        if (full[n].is_odd()) {
            throw ConsistencyError("nonzero row count " + full[n].to_string() + " is odd for n=" + std::to_string(n));
        }
        half.push_back(full[n].half());
    }
    return half;
}

}  // namespace chipfire
