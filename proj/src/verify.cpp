#include "chipfire/verify.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <map>
#include <optional>
#include <sstream>

#include "chipfire/difftable.hpp"
#include "chipfire/stable.hpp"
#include "chipfire/structure.hpp"

namespace chipfire::verify {

namespace {

constexpr std::array<std::string_view, 25> kProperties = {
    "symmetry",      "contiguity",     "accounting", "monotone",         "even-diagonal",
    "parity",        "first-stable-row", "distance", "moment",           "pascal",
    "lengths",       "rows-1a",        "diagonal-decay", "bound",        "bottom-minimal",
    "minimal-descent", "antisymmetry", "diff-signs", "max-decay",        "unimodal",
    "propagation",   "telescoping",    "segmentation", "oracle",         "conjecture",
};

/// First failure wins; later ones are counted but not described.
struct Tracker {
    std::string name;
    bool enabled = true;
    std::optional<std::string> failure;
    std::uint64_t failures = 0;
    std::string note;

    void fail(const std::string& msg) {
        ++failures;
        if (!failure) failure = msg;
    }
    template <typename Fn>
    void expect(bool ok, Fn&& describe) {
        if (!ok) fail(describe());
    }
};

std::string row_str(const Row& r) {
    std::ostringstream os;
    os << "row " << r.index << " [";
    for (std::size_t k = 0; k < r.values.size(); ++k) os << (k ? "," : "") << r.values[k];
    os << "]";
    return os.str();
}

std::string at_str(std::uint64_t row, std::uint64_t y) {
    return "row " + std::to_string(row) + " y=" + std::to_string(y);
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::skipped: return "SKIP";
        case Status::info: return "INFO";
    }
    return "?";
}

bool Report::passed() const {
    return std::none_of(results.begin(), results.end(), [](const auto& r) { return r.status == Status::fail; });
}

const CheckResult* Report::find(std::string_view name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

std::span<const std::string_view> property_names() { return kProperties; }

bool is_property(std::string_view name) {
    return std::find(kProperties.begin(), kProperties.end(), name) != kProperties.end();
}

CheckResult check_minimal_descent(unsigned max_j) {
    for (unsigned j = 2; j <= max_j; ++j) {
        const MinimalRow rj = minimal_row(j);
        const Row next = next_row(Row{j, 0, rj.values});
        if (next.values != minimal_row(j - 1).values) {
            return {"minimal-descent", Status::fail, "R(" + std::to_string(j) + ") fires into " + row_str(next)};
        }
    }
    return {"minimal-descent", Status::pass, "R(j) -> R(j-1) for 2 <= j <= " + std::to_string(max_j)};
}

CheckResult check_oracle(unsigned n, std::size_t trials, std::uint64_t seed, unsigned max_n) {
    CheckResult res{"oracle", Status::pass, {}};
    if (n > max_n) {
        res.status = Status::skipped;
        res.detail = "n above oracle limit " + std::to_string(max_n);
        return res;
    }
    if (trials < 2) {
        res.status = Status::skipped;
        res.detail = "fewer than two oracle trials requested";
        return res;
    }
    const auto confluence = oracle::confluence_check(n, trials, seed);
    if (!confluence.pass) {
        res.status = Status::fail;
        res.detail = "confluence: " + confluence.detail;
        return res;
    }

    const auto rows = collect_rows(n);
    ChipCount firings_total;
    for (const auto& r : rows) firings_total += kernels::totals_serial(r.values).firings;
    if (ChipCount(confluence.moves) != firings_total) {
        res.status = Status::fail;
        res.detail = "oracle moves " + std::to_string(confluence.moves) + " != sum floor(F/2) " +
                     firings_total.to_string();
        return res;
    }

    const auto state = oracle::simulate(n, oracle::Strategy::random(seed));
    const auto arrived = oracle::arrivals(state);
    auto F = [&](std::uint64_t x, std::uint64_t y) -> ChipCount {
        const auto i = x + y;
        return i < rows.size() ? rows[i].at_y(y) : ChipCount{};
    };
    std::uint64_t cells = 0;
    const std::size_t w = std::max(arrived.width(), state.chips.width());
    const std::size_t h = std::max(arrived.height(), state.chips.height());
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            const ChipCount f = F(x, y);
            std::string what;
            if (arrived.at(x, y) != f) {
                what = "arrivals " + arrived.at(x, y).to_string() + " != F " + f.to_string();
            } else if (ChipCount(state.firings.at(x, y)) != f.half()) {
                what = "firings " + std::to_string(state.firings.at(x, y)) + " != floor(F/2)";
            } else if (state.chips.at(x, y) != ChipCount(f.is_odd() ? 1 : 0)) {
                what = "stable chips " + state.chips.at(x, y).to_string() + " != F mod 2";
            }
            if (!what.empty()) {
                res.status = Status::fail;
                res.detail = "(" + std::to_string(x) + "," + std::to_string(y) + "): " + what;
                return res;
            }
            if (!f.is_zero()) ++cells;
        }
    }
    // Every nonzero F cell must have been inside the oracle grid.
    std::uint64_t nonzero = 0;
    for (const auto& r : rows) nonzero += r.size();
    if (cells != nonzero) {
        res.status = Status::fail;
        res.detail = "oracle grid misses nonzero F cells";
        return res;
    }
    res.detail = std::to_string(confluence.runs) + " orders agree, " + std::to_string(confluence.moves) +
                 " moves, arrivals match F on " + std::to_string(cells) + " vertices";
    return res;
}

Report verify_n(unsigned n, const Options& options) {
    auto wanted = [&](std::string_view name) {
        return options.properties.empty() ||
               std::find(options.properties.begin(), options.properties.end(), name) != options.properties.end();
    };

    std::map<std::string_view, Tracker> t;
    for (auto name : kProperties) {
        Tracker tr;
        tr.name = std::string(name);
        tr.enabled = wanted(name);
        t[name] = std::move(tr);
    }
    auto on = [&](std::string_view name) -> Tracker* {
        auto& tr = t.at(name);
        return tr.enabled ? &tr : nullptr;
    };

    const ChipCount chips = ChipCount::pow2(n);
    const ChipCount bound = row_bound(n);

    // Rolling state across rows.
    std::optional<DiffRow> prev_diff;
    ChipCount prev_diff_max;
    std::optional<std::uint64_t> first_odd_row;
    std::optional<std::uint64_t> last_odd_row;
    std::uint64_t marked = 0;
    ChipCount firing_sum;
    ChipCount expected_sum;  // sum(row i) predicted from row i-1
    std::uint64_t odd_total = 0;
    std::vector<std::pair<std::uint64_t, std::size_t>> pending_1a;  // (row, length) awaiting row + 2
    std::uint64_t rows_1a = 0;
    // F(x,x) on the most recent even row with a nonzero centre, awaiting row + 2.
    bool has_centre = false;
    std::uint64_t centre_row = 0;
    ChipCount centre_value;
    SegmentationBuilder seg(n);
    std::uint64_t chain_start = 0;
    bool chain_minimal = true;
    std::size_t prev_len = 0;
    DistanceAccumulator dist;
    Row last_row;

    DiffTableStream stream(n);
    while (const DiffRow* d = stream.next()) {
        const Row& r = *stream.source();
        const std::uint64_t i = r.index;
        const std::size_t len = r.size();
        const auto totals = kernels::totals_serial(r.values);

        if (auto* c = on("symmetry")) {
            bool palindrome = 2 * r.y_min + (len - 1) == i;  // y_min + y_max == x + y
            for (std::size_t k = 0; k < len / 2; ++k) palindrome = palindrome && r.values[k] == r.values[len - 1 - k];
            c->expect(palindrome, [&] { return row_str(r) + " is not symmetric about y=x"; });
        }
        if (auto* c = on("contiguity")) {
            c->expect(std::none_of(r.values.begin(), r.values.end(), [](ChipCount v) { return v.is_zero(); }),
                      [&] { return row_str(r) + " has an interior zero"; });
        }
        if (auto* c = on("accounting")) {
            if (i > 0) c->expect(totals.sum == expected_sum, [&] { return row_str(r) + " breaks chip accounting"; });
        }
        expected_sum = totals.sum - ChipCount(totals.odd);
        odd_total += totals.odd;
        firing_sum += totals.firings;

        if (auto* c = on("monotone")) {
            for (std::size_t k = 0; k + 1 < len; ++k) {
                const LatticePoint left = r.point(k), right = r.point(k + 1);
                const ChipCount a = r.values[k], b = r.values[k + 1];
                if (right.y <= right.x) {  // rising half: b = F(x, y), a = F(x + 1, y - 1)
                    const ChipCount need = right.y < right.x ? 2 : 1;
                    c->expect(b >= a + need, [&] { return at_str(i, right.y) + " rises by less than " + need.to_string(); });
                } else if (left.y >= left.x) {
                    const ChipCount need = left.y > left.x ? 2 : 1;
                    c->expect(a >= b + need, [&] { return at_str(i, left.y) + " falls by less than " + need.to_string(); });
                }
            }
        }
        if (i % 2 == 0 && n >= 1) {
            const ChipCount centre = r.at_y(i / 2);
            if (auto* c = on("even-diagonal")) {
                c->expect(!centre.is_odd(), [&] { return "F(x,x) odd at " + at_str(i, i / 2); });
            }
            if (auto* c = on("diagonal-decay")) {
                if (has_centre && centre_row + 2 == i) {
                    const ChipCount before = centre_value;
                    c->expect(centre + 2 <= before,
                              [&] { return "F(x,x) drops from " + before.to_string() + " to " + centre.to_string() + " at row " + std::to_string(i); });
                }
                has_centre = false;
                if (!centre.is_zero()) {
                    has_centre = true;
                    centre_row = i;
                    centre_value = centre;
                }
            }
        }

        // Stable configuration.
        if (totals.odd > 0) {
            if (!first_odd_row) first_odd_row = i;
            last_odd_row = i;
        }
        marked += totals.odd;
        if (auto* c = on("parity")) {
            if (n >= 1 && i % 2 == 0) {
                c->expect(!r.at_y(i / 2).is_odd(), [&] { return "chip on the diagonal at " + at_str(i, i / 2); });
            }
        }
        dist.add(r);

        if (auto* c = on("pascal")) {
            if (i <= n) c->expect(r == pascal_row(n, static_cast<unsigned>(i)), [&] { return row_str(r) + " is not the scaled Pascal row"; });
        }
        if (auto* c = on("lengths")) {
            if (i == 0) c->expect(len == 1, [&] { return std::string("row 0 has length ") + std::to_string(len); });
            if (i > 0) {
                c->expect(len + 1 == prev_len || len == prev_len + 1,
                          [&] { return "length step " + std::to_string(prev_len) + " -> " + std::to_string(len) + " at row " + std::to_string(i); });
                c->expect(len % 2 != prev_len % 2, [&] { return "length parity repeats at row " + std::to_string(i); });
            }
        }
        if (auto* c = on("rows-1a")) {
            while (!pending_1a.empty() && pending_1a.front().first + 2 == i) {
                const auto [row, want] = pending_1a.front();
                pending_1a.erase(pending_1a.begin());
                c->expect(len == want && r.values.front() == ChipCount(1),
                          [&, row = row] { return "row " + std::to_string(row) + " starts 1,a but two rows later " + row_str(r) + " does not keep its length and lead 1"; });
            }
            if (len >= 2 && r.values[0] == ChipCount(1) && r.values[1] >= ChipCount(4) && r.values[1] <= ChipCount(7)) {
                pending_1a.emplace_back(i, len);
                ++rows_1a;
            }
        }
        if (auto* c = on("bound")) {
            c->expect(ChipCount(i) <= bound, [&] { return "row " + std::to_string(i) + " exceeds bound " + bound.to_string(); });
        }

        seg.push(len);
        if (i == 0 || len + 1 != prev_len) {
            chain_start = i;
            chain_minimal = true;
        }
        chain_minimal = chain_minimal && is_minimal(r);
        prev_len = len;

        // Difference table row i + 1, built from row i.
        if (auto* c = on("antisymmetry")) {
            const auto m = d->size();
            for (std::size_t k = 0; k < m; ++k) {
                c->expect(d->values[k] == -d->values[m - 1 - k], [&] { return "F' not antisymmetric at " + at_str(d->index, d->y_min + k); });
            }
        }
        if (auto* c = on("diff-signs")) {
            for (std::size_t k = 0; k < d->size(); ++k) {
                const std::uint64_t y = d->y_min + k;
                const std::uint64_t x = d->index - y;
                const int s = d->values[k].sign();
                c->expect(!(y < x && s < 0) && !(y > x && s > 0), [&] { return "F' has the wrong sign at " + at_str(d->index, y); });
            }
        }
        const ChipCount dmax = row_max_abs(*d);
        if (auto* c = on("max-decay")) {
            // rows i > 1 of F' for n > 2
            if (n > 2 && prev_diff && prev_diff->index > 1) {
                c->expect(dmax <= prev_diff_max, [&] { return "max |F'| rises from " + prev_diff_max.to_string() + " to " + dmax.to_string() + " at row " + std::to_string(d->index); });
            }
        }
        if (auto* c = on("unimodal")) {
            c->expect(unimodal_check(*d), [&] { return "left half of F' row " + std::to_string(d->index) + " is not unimodal"; });
        }
        if (auto* c = on("propagation"); c && prev_diff && !prev_diff->empty()) {
            const DiffRow& p = *prev_diff;
            auto below = [&](std::uint64_t y) -> ChipDelta {
                if (d->empty() || y < d->y_min || y >= d->y_min + d->size()) return ChipDelta{};
                return d->values[y - d->y_min];
            };
            for (std::size_t k = 0; k + 2 < p.size(); ++k) {
                const ChipDelta d1 = p.values[k], d2 = p.values[k + 1], d3 = p.values[k + 2];
                const std::uint64_t y = p.y_min + k;
                const ChipDelta e1 = below(y + 1), e2 = below(y + 2);
                if (d1 <= d2 && d2 <= d3) c->expect(e1 <= e2, [&] { return "rising triple not propagated at " + at_str(p.index, y); });
                if (d1 >= d2 && d2 >= d3) c->expect(e1 >= e2, [&] { return "falling triple not propagated at " + at_str(p.index, y); });
            }
        }
        if (auto* c = on("telescoping")) {
            ChipDelta acc;
            for (std::size_t k = 0; k < d->size(); ++k) {
                acc += d->values[k];
                const ChipDelta want = k < len ? ChipDelta::from_raw(static_cast<i128>(r.values[k].raw())) : ChipDelta{};
                c->expect(acc == want, [&] { return "prefix sums of F' row " + std::to_string(d->index) + " do not rebuild F"; });
            }
        }
        prev_diff = *d;
        prev_diff_max = dmax;

        last_row = r;
    }
    const std::uint64_t rows = seg.finish().total_rows;
    const std::uint64_t last_index = rows - 1;

    // End-of-stream checks.
    if (auto* c = on("accounting")) {
        c->expect(ChipCount(odd_total) == chips, [&] { return "odd entries total " + std::to_string(odd_total) + ", expected 2^n"; });
        c->expect(expected_sum.is_zero(), [&] { return std::string("chips forwarded past the last row"); });
    }
    if (auto* c = on("diagonal-decay")) {
        if (has_centre) c->expect(ChipCount(2) <= centre_value, [&] { return std::string("last centre below 2"); });
    }
    if (auto* c = on("rows-1a")) {
        c->expect(pending_1a.empty(), [&] { return "row " + std::to_string(pending_1a.front().first) + " starts 1,a but row +2 does not exist"; });
        c->note = std::to_string(rows_1a) + " rows start with 1,a (4<=a<=7)";
    }
    if (auto* c = on("parity")) {
        c->expect(ChipCount(marked) == chips, [&] { return std::to_string(marked) + " stable chips, expected 2^n"; });
        if (n >= 1) {
            c->expect(last_odd_row == last_index, [&] { return std::string("last stable row is not the last row of F"); });
            c->expect(last_row.values == std::vector<ChipCount>{1, 1}, [&] { return "last row is " + row_str(last_row); });
        }
        c->note = std::to_string(marked) + " stable chips";
    }
    if (auto* c = on("first-stable-row")) {
        c->expect(first_odd_row == n, [&] { return "first stable row is " + (first_odd_row ? std::to_string(*first_odd_row) : std::string("none")); });
    }
    const DistanceDistribution dd = dist.finish(n);
    if (auto* c = on("distance")) {
        for (std::int64_t k = 1; k <= dd.half_width; ++k) {
            c->expect(dd.at(k) == dd.at(-k), [&] { return "D(" + std::to_string(k) + ") != D(-" + std::to_string(k) + ")"; });
        }
        if (n >= 1) c->expect(dd.at(0).is_zero(), [&] { return std::string("D(0) != 0"); });
        c->expect(dd.total() == chips, [&] { return "sum D = " + dd.total().to_string(); });
    }
    if (auto* c = on("moment")) {
        const ChipCount moment = second_raw_moment(dd);
        c->expect(!moment.is_odd() && moment.half() == firing_sum,
                  [&] { return "moment " + moment.to_string() + " vs 2 * firing sum " + firing_sum.to_string(); });
        c->note = "T(" + std::to_string(n) + ") = " + firing_sum.to_string();
    }
    if (auto* c = on("lengths")) {
        if (n >= 1) c->expect(rows % 2 == 0, [&] { return std::to_string(rows) + " nonzero rows is odd"; });
        c->note = std::to_string(rows) + " nonzero rows";
    }
    if (auto* c = on("bottom-minimal")) {
        c->expect(chain_minimal, [&] { return "bottom triangle from row " + std::to_string(chain_start) + " has a non-minimal row"; });
    }
    std::optional<Segmentation> segmentation;
    if (auto* c = on("segmentation")) {
        try {
            segmentation = seg.finish();
            c->note = "top " + std::to_string(segmentation->top_triangle.size()) + ", mid " +
                      std::to_string(segmentation->midsection.size()) + ", rectangle " +
                      std::to_string(segmentation->rectangle.size()) + ", bottom " +
                      std::to_string(segmentation->bottom_triangle.size());
        } catch (const std::exception& e) {
            c->fail(e.what());
        }
    }

    Report report{n, {}};
    for (auto name : kProperties) {
        const Tracker& tr = t.at(name);
        if (!tr.enabled) continue;
        CheckResult res{tr.name, Status::pass, tr.note};
        if (name == "minimal-descent") {
            res = check_minimal_descent(options.minimal_descent_max_j);
        } else if (name == "oracle") {
            res = check_oracle(n, options.oracle_trials, options.seed, options.oracle_max_n);
        } else if (name == "conjecture") {
            if (n < 2) {
                res = {tr.name, Status::skipped, "needs n >= 2"};
            } else {
                const Segmentation s = seg.finish();
                const bool holds = s.raw_bottom_height + 1 == s.longest_length;
                res = {tr.name, Status::info,
                       std::string(holds ? "holds" : "does not hold") + ": bottom triangle " +
                           std::to_string(s.raw_bottom_height) + " rows, longest row " +
                           std::to_string(s.longest_length)};
            }
        } else if (n == 0 && (name == "even-diagonal" || name == "diagonal-decay" || name == "bottom-minimal")) {
            res = {tr.name, Status::skipped, "needs n >= 1"};
        } else if (n <= 2 && name == "max-decay") {
            res = {tr.name, Status::skipped, "needs n > 2"};
        } else if (tr.failure) {
            res.status = Status::fail;
            res.detail = *tr.failure + (tr.failures > 1 ? " (+" + std::to_string(tr.failures - 1) + " more)" : "");
        }
        report.results.push_back(std::move(res));
    }
    return report;
}

std::vector<Report> verify_range(unsigned first, unsigned last, const Options& options) {
    if (last < first) return {};
    std::vector<Report> out(last - first + 1);
    std::vector<std::exception_ptr> errors(out.size());
    const auto count = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = count - 1; k >= 0; --k) {
        const auto idx = static_cast<std::size_t>(k);
        try {
            out[idx] = verify_n(first + static_cast<unsigned>(idx), options);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace chipfire::verify
