#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/oracle.hpp"

namespace chipfire::verify {

enum class Status { pass, fail, skipped, info };

std::string_view to_string(Status s);

struct CheckResult {
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

struct Options {
    /// Property names to run; empty runs everything.
    std::vector<std::string> properties;
    std::size_t oracle_trials = 3;
    std::uint64_t seed = 1;
    unsigned oracle_max_n = oracle::kDefaultMaxN;
    unsigned minimal_descent_max_j = 64;
};

struct Report {
    unsigned n = 0;
    std::vector<CheckResult> results;

    /// False iff some check failed. Info (conjecture) and skipped results never fail a report.
    bool passed() const;
    const CheckResult* find(std::string_view name) const;
};

/// Every property name understood by Options::properties, in report order.
std::span<const std::string_view> property_names();
bool is_property(std::string_view name);

/// Streams the configuration for 2^n chips once and evaluates the selected properties.
Report verify_n(unsigned n, const Options& options = {});

/// verify_n for first..last, evaluated concurrently; results are in order of n.
std::vector<Report> verify_range(unsigned first, unsigned last, const Options& options = {});

/// R(j) fires into R(j - 1) for 2 <= j <= max_j.
CheckResult check_minimal_descent(unsigned max_j);

/// Confluence across strategies, arrivals equal F, firings equal floor(F / 2), stable chips equal F mod 2.
CheckResult check_oracle(unsigned n, std::size_t trials, std::uint64_t seed,
                         unsigned max_n = oracle::kDefaultMaxN);

}  // namespace chipfire::verify
