#include "chipfire/cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chipfire/core.hpp"
#include "chipfire/difftable.hpp"
#include "chipfire/error.hpp"
#include "chipfire/io/cache.hpp"
#include "chipfire/io/svg.hpp"
#include "chipfire/io/table_io.hpp"
#include "chipfire/sequences.hpp"
#include "chipfire/stable.hpp"
#include "chipfire/structure.hpp"
#include "chipfire/verify.hpp"

namespace chipfire::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Writes to the caller's stream, or to a temp file that replaces --out on commit.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (path.empty()) return;
        target_ = path;
        tmp_ = target_;
        tmp_ += ".tmp";
        file_.open(tmp_, std::ios::binary | std::ios::trunc);
        if (!file_) throw std::ios_base::failure("cannot open " + tmp_.string() + " for writing");
    }
    Sink(const Sink&) = delete;
    Sink& operator=(const Sink&) = delete;
    ~Sink() {
        if (file_.is_open()) {
            file_.close();
            std::error_code ec;
            fs::remove(tmp_, ec);
        }
    }

    std::ostream& os() { return target_.empty() ? fallback_ : file_; }

    void commit() {
        if (target_.empty()) {
            fallback_.flush();
            return;
        }
        if (!file_.flush()) throw std::ios_base::failure("failed writing " + tmp_.string());
        file_.close();
        fs::rename(tmp_, target_);
    }

private:
    std::ostream& fallback_;
    fs::path target_;
    fs::path tmp_;
    std::ofstream file_;
};

json count_json(ChipCount v) {
    if (v.fits_u64()) return v.to_u64();
    return v.to_string();
}

json delta_json(ChipDelta d) {
    const ChipCount mag = d.abs();
    if (mag.fits_u64() && mag.to_u64() <= static_cast<std::uint64_t>(INT64_MAX)) {
        const auto m = static_cast<std::int64_t>(mag.to_u64());
        return d.sign() < 0 ? -m : m;
    }
    return d.to_string();
}

io::Format require_format(const std::string& s) {
    if (auto f = io::parse_format(s)) return *f;
    throw UsageError("unknown format '" + s + "' (expected csv or json)");
}

struct Common {
    unsigned n = 0;
    std::string format = "csv";
    std::string out;
    bool header = false;
    std::uint64_t max_rows = 0;  // 0: unlimited
    std::string cache_dir;
};

void add_n(CLI::App* cmd, unsigned& n) {
    cmd->add_option("--n", n, "exponent: start from 2^n chips at the origin")
        ->check(CLI::Range(0u, static_cast<unsigned>(kMaxExponent)));
}

void add_output(CLI::App* cmd, Common& c, bool rows) {
    cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", c.out, "write to this file instead of stdout");
    cmd->add_flag("--header", c.header, "emit a CSV header line");
    if (rows) cmd->add_option("--max-rows", c.max_rows, "stop after this many rows (0: all)");
}

bool row_limit_hit(const Common& c, std::uint64_t emitted) { return c.max_rows != 0 && emitted >= c.max_rows; }

// ---- table -----------------------------------------------------------------

int cmd_table(const Common& c, std::ostream& out, std::ostream& err) {
    const io::Format fmt = require_format(c.format);
    std::vector<Row> rows;
    bool truncated = false;

    if (auto dir = io::RowCache::resolve_dir(c.cache_dir.empty() ? std::nullopt : std::optional(c.cache_dir))) {
        io::RowCache::Source src{};
        rows = io::RowCache(*dir).get_or_compute(c.n, &src);
        if (src == io::RowCache::Source::recomputed_corrupt) {
            err << "note: cache entry " << io::RowCache(*dir).path_for(c.n).string() << " was unreadable; recomputed\n";
        }
        if (c.max_rows != 0 && rows.size() > c.max_rows) {
            rows.resize(c.max_rows);
            truncated = true;
        }
    } else if (fmt == io::Format::csv) {
        // Stream straight through: the full table is never held in memory.
        Sink sink(c.out, out);
        if (c.header) sink.os() << "index,y_min,values\n";
        ConfigStream stream(c.n);
        std::uint64_t emitted = 0;
        while (const Row* r = stream.next()) {
            if (row_limit_hit(c, emitted)) {
                truncated = true;
                break;
            }
            io::write_row_csv(sink.os(), *r);
            ++emitted;
        }
        sink.commit();
        if (truncated) err << "note: output truncated to " << c.max_rows << " rows\n";
        return kExitPass;
    } else {
        ConfigStream stream(c.n);
        while (const Row* r = stream.next()) {
            if (row_limit_hit(c, rows.size())) {
                truncated = true;
                break;
            }
            rows.push_back(*r);
        }
    }

    Sink sink(c.out, out);
    if (fmt == io::Format::csv) {
        io::write_rows_csv(sink.os(), rows, c.header);
    } else {
        sink.os() << io::rows_to_json(c.n, rows, 2) << '\n';
    }
    sink.commit();
    if (truncated) err << "note: output truncated to " << c.max_rows << " rows\n";
    return kExitPass;
}

// ---- stable ----------------------------------------------------------------

int cmd_stable(const Common& c, std::ostream& out) {
    const io::Format fmt = require_format(c.format);
    Sink sink(c.out, out);
    std::ostream& os = sink.os();
    ConfigStream stream(c.n);
    std::uint64_t emitted = 0;
    std::uint64_t chips = 0;
    json rows = json::array();
    if (fmt == io::Format::csv && c.header) os << "index,y_min,bits\n";
    while (const Row* r = stream.next()) {
        if (row_limit_hit(c, emitted)) break;
        const BitPattern bits = stable_row(*r);
        for (bool b : bits) chips += b ? 1 : 0;
        if (fmt == io::Format::csv) {
            os << r->index << ',' << r->y_min << ',' << to_string(bits) << '\n';
        } else {
            rows.push_back({{"index", r->index}, {"y_min", r->y_min}, {"bits", to_string(bits)}});
        }
        ++emitted;
    }
    if (fmt == io::Format::json) {
        const json doc = {{"n", c.n}, {"chip_count", chips}, {"row_count", emitted}, {"rows", std::move(rows)}};
        os << doc.dump(2) << '\n';
    }
    sink.commit();
    return kExitPass;
}

// ---- distance --------------------------------------------------------------

int cmd_distance(const Common& c, std::ostream& out) {
    const io::Format fmt = require_format(c.format);
    const DistanceDistribution d = distance_distribution(c.n);
    Sink sink(c.out, out);
    if (fmt == io::Format::csv) {
        if (c.header) sink.os() << "distance,count\n";
        for (std::int64_t i = -d.half_width; i <= d.half_width; ++i) sink.os() << i << ',' << d.at(i) << '\n';
    } else {
        json counts = json::array();
        for (auto v : d.counts) counts.push_back(count_json(v));
        const json doc = {{"n", c.n},
                          {"half_width", d.half_width},
                          {"total", count_json(d.total())},
                          {"second_moment", count_json(second_raw_moment(d))},
                          {"counts", std::move(counts)}};
        sink.os() << doc.dump(2) << '\n';
    }
    sink.commit();
    return kExitPass;
}

// ---- firings ---------------------------------------------------------------

int cmd_firings(const Common& c, std::ostream& out, std::ostream& err) {
    const io::Format fmt = require_format(c.format);
    const ChipCount via_sum = total_firings_via_sum(c.n);
    const ChipCount via_moment = total_firings_via_moment(c.n);
    if (via_sum != via_moment) {
        err << "error: total firings disagree: sum of floor(F/2) = " << via_sum << ", half second moment = "
            << via_moment << '\n';
        return kExitInvariantFailure;
    }
    Sink sink(c.out, out);
    if (fmt == io::Format::csv) {
        if (c.header) sink.os() << "n,total_firings\n";
        sink.os() << c.n << ',' << via_sum << '\n';
    } else {
        const json doc = {{"n", c.n}, {"total_firings", count_json(via_sum)}};
        sink.os() << doc.dump(2) << '\n';
    }
    sink.commit();
    return kExitPass;
}

// ---- diff ------------------------------------------------------------------

int cmd_diff(const Common& c, bool signs, std::ostream& out) {
    const io::Format fmt = require_format(c.format);
    Sink sink(c.out, out);
    std::ostream& os = sink.os();
    DiffTableStream stream(c.n);
    std::uint64_t emitted = 0;
    json rows = json::array();
    if (fmt == io::Format::csv && c.header) os << (signs ? "index,y_min,signs\n" : "index,y_min,values\n");
    while (const DiffRow* d = stream.next()) {
        if (row_limit_hit(c, emitted)) break;
        if (fmt == io::Format::csv) {
            os << d->index << ',' << d->y_min;
            if (signs) {
                os << ',' << to_string(sign_row(*d));
            } else {
                for (auto v : d->values) os << ',' << v;
            }
            os << '\n';
        } else {
            json entry = {{"index", d->index}, {"y_min", d->y_min}};
            if (signs) {
                entry["signs"] = to_string(sign_row(*d));
            } else {
                json values = json::array();
                for (auto v : d->values) values.push_back(delta_json(v));
                entry["values"] = std::move(values);
            }
            rows.push_back(std::move(entry));
        }
        ++emitted;
    }
    if (fmt == io::Format::json) {
        const json doc = {{"n", c.n}, {"row_count", emitted}, {"rows", std::move(rows)}};
        os << doc.dump(2) << '\n';
    }
    sink.commit();
    return kExitPass;
}

// ---- segment ---------------------------------------------------------------

int cmd_segment(const Common& c, std::ostream& out) {
    const io::Format fmt = require_format(c.format);
    const Segmentation s = segment(c.n);
    const std::pair<std::string_view, RowRange> blocks[] = {
        {"top_triangle", s.top_triangle},
        {"midsection", s.midsection},
        {"rectangle", s.rectangle},
        {"bottom_triangle", s.bottom_triangle},
    };
    Sink sink(c.out, out);
    if (fmt == io::Format::csv) {
        if (c.header) sink.os() << "block,begin,end,rows\n";
        for (const auto& [name, r] : blocks) sink.os() << name << ',' << r.begin << ',' << r.end << ',' << r.size() << '\n';
    } else {
        json doc = {{"n", c.n},
                    {"total_rows", s.total_rows},
                    {"longest_length", s.longest_length},
                    {"first_longest_row", s.first_longest_row},
                    {"raw_bottom_height", s.raw_bottom_height}};
        for (const auto& [name, r] : blocks) doc[std::string(name)] = {{"begin", r.begin}, {"end", r.end}, {"rows", r.size()}};
        if (c.n >= 2) {
            const bool holds = s.raw_bottom_height + 1 == s.longest_length;
            doc["conjecture"] = {{"holds", holds}, {"triangle_rows", s.raw_bottom_height}};
        }
        sink.os() << doc.dump(2) << '\n';
    }
    sink.commit();
    return kExitPass;
}

// ---- sequences -------------------------------------------------------------

int cmd_sequences(const std::string& name, unsigned upto, const Common& c, std::ostream& out, std::ostream& err) {
    const io::Format fmt = require_format(c.format);
    const auto id = parse_sequence_id(name);
    if (!id) {
        std::string known;
        for (const auto& t : sequence_tables()) known += (known.empty() ? "" : ", ") + std::string(t.name);
        throw UsageError("unknown sequence '" + name + "' (expected one of: " + known + ")");
    }
    const SequenceTable& table = sequence_table(*id);
    const std::vector<ChipCount> values = generate(*id, upto);

    int status = kExitPass;
    for (std::size_t k = 0; k < values.size() && k < table.known.size(); ++k) {
        if (values[k] != table.known[k]) {
            err << "error: " << table.name << '(' << table.offset + k << ") = " << values[k] << " but " << table.source
                << " lists " << table.known[k] << '\n';
            status = kExitInvariantFailure;
        }
    }

    Sink sink(c.out, out);
    if (fmt == io::Format::csv) {
        if (c.header) sink.os() << "index," << table.name << '\n';
        for (std::size_t k = 0; k < values.size(); ++k) sink.os() << table.offset + k << ',' << values[k] << '\n';
    } else {
        json arr = json::array();
        for (auto v : values) arr.push_back(count_json(v));
        const json doc = {{"sequence", table.name}, {"offset", table.offset}, {"source", table.source}, {"values", std::move(arr)}};
        sink.os() << doc.dump(2) << '\n';
    }
    sink.commit();
    return status;
}

// ---- verify ----------------------------------------------------------------

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    auto number = [&](std::string_view s) {
        unsigned v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
            throw UsageError("bad n range '" + text + "' (expected N or A..B)");
        }
        return v;
    };
    const auto dots = text.find("..");
    const unsigned a = number(std::string_view(text).substr(0, dots));
    const unsigned b = dots == std::string::npos ? a : number(std::string_view(text).substr(dots + 2));
    if (a > b) throw UsageError("empty n range '" + text + "'");
    if (b > kMaxExponent) throw UsageError("n must be at most " + std::to_string(kMaxExponent));
    return {a, b};
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

int cmd_verify(const std::string& range, const std::string& properties, const verify::Options& base,
               std::ostream& out) {
    const auto [first, last] = parse_range(range);
    verify::Options options = base;
    options.properties = split_csv(properties);
    for (const auto& p : options.properties) {
        if (!verify::is_property(p)) throw UsageError("unknown property '" + p + "'");
    }

    const auto reports = verify::verify_range(first, last, options);
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& report : reports) {
        for (const auto& r : report.results) {
            switch (r.status) {
                case verify::Status::pass: ++passed; break;
                case verify::Status::fail: ++failed; break;
                case verify::Status::skipped: ++skipped; break;
                case verify::Status::info: break;
            }
            out << "n=" << report.n << ' ' << r.name << ' ' << verify::to_string(r.status);
            if (!r.detail.empty()) out << ": " << r.detail;
            out << '\n';
        }
    }
    out << "summary: n=" << first << ".." << last << ", " << passed << " passed, " << failed << " failed, "
        << skipped << " skipped\n";
    return failed == 0 ? kExitPass : kExitInvariantFailure;
}

// ---- render ----------------------------------------------------------------

int cmd_render(const std::string& kind, io::RenderSpec spec, std::ostream& err) {
    const auto k = io::parse_figure_kind(kind);
    if (!k) throw UsageError("unknown figure kind '" + kind + "'");
    spec.kind = *k;
    io::validate(spec);
    io::render_to_file(spec);
    err << "wrote " << spec.output.string() << '\n';
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chip-firing on the directed quadrant lattice, starting from 2^n chips at the origin.", "chipfire"};
    app.require_subcommand(1);

    Common c;
    auto* table = app.add_subcommand("table", "rows of the intermediate configuration F");
    add_n(table, c.n);
    add_output(table, c, true);
    table->add_option("--cache-dir", c.cache_dir, std::string("row cache directory (default: $") + io::kCacheEnv + ")");

    auto* stable = app.add_subcommand("stable", "stable configuration, one bit pattern per row");
    add_n(stable, c.n);
    add_output(stable, c, true);

    auto* distance = app.add_subcommand("distance", "stable chips per distance y - x");
    add_n(distance, c.n);
    add_output(distance, c, false);

    auto* firings = app.add_subcommand("firings", "total number of firings T(n)");
    add_n(firings, c.n);
    add_output(firings, c, false);

    bool signs = false;
    auto* diff = app.add_subcommand("diff", "difference table F'(x,y) = F(x-1,y) - F(x,y-1)");
    add_n(diff, c.n);
    add_output(diff, c, true);
    diff->add_flag("--signs", signs, "print signs of consecutive differences instead of values");

    auto* seg = app.add_subcommand("segment", "top triangle / midsection / rectangle / bottom triangle");
    add_n(seg, c.n);
    add_output(seg, c, false);

    std::string seq_name;
    unsigned upto = 10;
    auto* sequences = app.add_subcommand("sequences", "integer sequences computed from the configuration");
    sequences->add_option("sequence", seq_name, "total-firings, nonzero-rows, longest-row or minimal-row-sums")->required();
    sequences->add_option("--upto", upto, "last index to compute")->check(CLI::Range(0u, static_cast<unsigned>(kMaxExponent)));
    add_output(sequences, c, false);

    std::string range = "0";
    std::string properties;
    verify::Options vopts;
    auto* ver = app.add_subcommand("verify", "check the structural properties for a range of n");
    ver->add_option("--n", range, "N or A..B");
    ver->add_option("--properties", properties, "comma-separated subset of checks (default: all)");
    ver->add_option("--trials", vopts.oracle_trials, "random firing orders per n for the oracle")->check(CLI::Range(2, 1000));
    ver->add_option("--seed", vopts.seed, "seed for the random firing orders");
    ver->add_option("--oracle-max-n", vopts.oracle_max_n, "skip the oracle above this n");
    ver->add_option("--minimal-max-j", vopts.minimal_descent_max_j, "largest j for the minimal-row descent check");

    std::string kind;
    std::string render_out;
    io::RenderSpec spec;
    auto* render = app.add_subcommand("render", "SVG figure");
    render->add_option("--kind", kind, "stable-dots, distance-polyline, row-profiles or diff-signmap")->required();
    add_n(render, spec.n);
    render->add_option("--out", render_out, "output .svg path")->required();
    render->add_option("--width", spec.width, "pixels");
    render->add_option("--height", spec.height, "pixels");
    render->add_option("--radius", spec.dot_radius, "dot radius in pixels");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("chipfire");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*table) return cmd_table(c, out, err);
        if (*stable) return cmd_stable(c, out);
        if (*distance) return cmd_distance(c, out);
        if (*firings) return cmd_firings(c, out, err);
        if (*diff) return cmd_diff(c, signs, out);
        if (*seg) return cmd_segment(c, out);
        if (*sequences) return cmd_sequences(seq_name, upto, c, out, err);
        if (*ver) return cmd_verify(range, properties, vopts, out);
        if (*render) {
            spec.output = render_out;
            return cmd_render(kind, spec, err);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvariantFailure;
    }
    return kExitUsage;
}

}  // namespace chipfire::cli
