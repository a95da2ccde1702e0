#include "chipfire/io/cache.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

namespace chipfire::io {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

class Reader {
public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    std::uint64_t u(int width) {
        if (pos_ + static_cast<std::size_t>(width) > bytes_.size()) throw CorruptCacheError("cache entry truncated");
        std::uint64_t v = 0;
        for (int b = 0; b < width; ++b) {
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + static_cast<std::size_t>(b)])) << (8 * b);
        }
        pos_ += static_cast<std::size_t>(width);
        return v;
    }
    std::size_t remaining() const { return bytes_.size() - pos_; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string encode_rows(unsigned n, const std::vector<Row>& rows, std::uint32_t version) {
    std::string out(kCacheMagic, sizeof kCacheMagic);
    put_u32(out, version);
    put_u32(out, n);
    put_u64(out, rows.size());
    for (const auto& r : rows) {
        put_u64(out, r.index);
        put_u64(out, r.y_min);
        put_u64(out, r.values.size());
        for (auto v : r.values) {
            put_u64(out, static_cast<std::uint64_t>(v.raw()));
            put_u64(out, static_cast<std::uint64_t>(v.raw() >> 64));
        }
    }
    put_u64(out, fnv1a64(out));
    return out;
}

std::vector<Row> decode_rows(std::string_view bytes, unsigned expected_n) {
    if (bytes.size() < sizeof kCacheMagic + 8 + 8 + 8 || std::memcmp(bytes.data(), kCacheMagic, sizeof kCacheMagic) != 0) {
        throw CorruptCacheError("not a row cache file");
    }
    const std::string_view body = bytes.substr(0, bytes.size() - 8);
    Reader trailer(bytes.substr(bytes.size() - 8));
    if (trailer.u(8) != fnv1a64(body)) throw CorruptCacheError("cache checksum mismatch");

    Reader in(body.substr(sizeof kCacheMagic));
    const auto version = static_cast<std::uint32_t>(in.u(4));
    if (version != kCacheFormatVersion) {
        throw CorruptCacheError("cache format version " + std::to_string(version) + " (expected " +
                                std::to_string(kCacheFormatVersion) + ")");
    }
    const auto n = static_cast<unsigned>(in.u(4));
    if (n != expected_n) throw CorruptCacheError("cache entry is for n=" + std::to_string(n));
    const std::uint64_t count = in.u(8);

    std::vector<Row> rows;
    for (std::uint64_t k = 0; k < count; ++k) {
        Row r;
        r.index = in.u(8);
        r.y_min = in.u(8);
        const std::uint64_t len = in.u(8);
        if (len > in.remaining() / 16) throw CorruptCacheError("cache entry truncated");
        r.values.reserve(len);
        for (std::uint64_t j = 0; j < len; ++j) {
            const u128 lo = in.u(8);
            const u128 hi = in.u(8);
            r.values.push_back(ChipCount::from_raw(lo | (hi << 64)));
        }
        rows.push_back(std::move(r));
    }
    if (in.remaining() != 0) throw CorruptCacheError("trailing bytes in cache entry");
    return rows;
}

RowCache::RowCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> RowCache::resolve_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return std::filesystem::path(*flag);
    if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') return std::filesystem::path(env);
    return std::nullopt;
}

std::filesystem::path RowCache::path_for(unsigned n) const {
    return dir_ / ("rows-n" + std::to_string(n) + ".cfr");
}

void RowCache::put(unsigned n, const std::vector<Row>& rows) const {
    std::filesystem::create_directories(dir_);
    const auto target = path_for(n);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::ios_base::failure("cannot write cache file " + tmp.string());
        const std::string bytes = encode_rows(n, rows);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out.flush()) throw std::ios_base::failure("failed writing cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::optional<std::vector<Row>> RowCache::get(unsigned n) const {
    std::ifstream in(path_for(n), std::ios::binary);
    if (!in) return std::nullopt;
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_rows(bytes, n);
}

std::vector<Row> RowCache::get_or_compute(unsigned n, Source* source) const {
    Source how = Source::miss;
    try {
        if (auto rows = get(n)) {
            if (source) *source = Source::hit;
            return *std::move(rows);
        }
    } catch (const CorruptCacheError&) {
        how = Source::recomputed_corrupt;
    }
    auto rows = collect_rows(n);
    put(n, rows);
    if (source) *source = how;
    return rows;
}

}  // namespace chipfire::io
