#include <gtest/gtest.h>

#include "chipfire/sequences.hpp"

using namespace chipfire;

namespace {

std::vector<ChipCount> counts(std::initializer_list<std::uint64_t> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Sequences, GeneratedTermsMatchPublishedPrefixes) {
    for (const auto& t : sequence_tables()) {
        const unsigned upto = t.offset + static_cast<unsigned>(t.known.size()) - 1;
        EXPECT_EQ(generate(t.id, upto), t.known) << t.name;
    }
}

TEST(Sequences, GoldenValues) {
    EXPECT_EQ(generate(SequenceId::total_firings, 10), counts({0, 1, 5, 15, 52, 163, 458, 1359, 4296, 12890, 38570}));
    EXPECT_EQ(generate(SequenceId::nonzero_rows, 17),
              counts({1, 2, 4, 6, 10, 16, 24, 38, 60, 92, 144, 226, 362, 570, 906, 1430, 2272, 3600}));
    EXPECT_EQ(generate(SequenceId::longest_row, 17),
              counts({1, 2, 3, 4, 5, 6, 7, 8, 10, 13, 15, 19, 24, 30, 37, 46, 58, 73}));
    EXPECT_EQ(generate(SequenceId::minimal_row_sums, 9), counts({2, 4, 8, 12, 18, 24, 32, 40, 50}));
}

TEST(Sequences, OffsetsAndEmptyRanges) {
    EXPECT_TRUE(generate(SequenceId::minimal_row_sums, 0).empty());
    EXPECT_EQ(generate(SequenceId::total_firings, 0), counts({0}));
}

TEST(Sequences, HalfRowCounts) {
    // Exact halves of the row counts; the thirteenth term is 570 / 2 = 285.
    EXPECT_EQ(half_nonzero_rows(15), counts({1, 2, 3, 5, 8, 12, 19, 30, 46, 72, 113, 181, 285, 453, 715}));
}

TEST(Sequences, Names) {
    for (const auto& t : sequence_tables()) {
        EXPECT_EQ(parse_sequence_id(t.name), t.id);
        EXPECT_EQ(to_string(t.id), t.name);
        EXPECT_FALSE(t.source.empty());
    }
    EXPECT_FALSE(parse_sequence_id("fibonacci").has_value());
}
