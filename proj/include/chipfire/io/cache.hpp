#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/core.hpp"

namespace chipfire::io {

/// On-disk row cache format (all integers little-endian):
///
///   header   magic "CFRC" (4 bytes) | u32 format version | u32 n | u64 row count
///   per row  u64 index | u64 y_min | u64 length | length x 128-bit value (low u64, high u64)
///   trailer  u64 FNV-1a 64 checksum of every preceding byte
inline constexpr char kCacheMagic[4] = {'C', 'F', 'R', 'C'};
inline constexpr std::uint32_t kCacheFormatVersion = 1;

/// Environment variable consulted when no cache directory is given explicitly.
inline constexpr const char* kCacheEnv = "CHIPFIRE_CACHE";

std::string encode_rows(unsigned n, const std::vector<Row>& rows, std::uint32_t version = kCacheFormatVersion);

/// Throws CorruptCacheError on bad magic, version mismatch, truncation, or checksum mismatch.
std::vector<Row> decode_rows(std::string_view bytes, unsigned expected_n);

std::uint64_t fnv1a64(std::string_view bytes);

class RowCache {
public:
    explicit RowCache(std::filesystem::path dir);

    /// Explicit directory if given, else $CHIPFIRE_CACHE, else nullopt.
    static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(unsigned n) const;

    /// Writes atomically (temp file then rename). Throws std::ios_base::failure on I/O errors.
    void put(unsigned n, const std::vector<Row>& rows) const;

    /// nullopt on a miss; CorruptCacheError on an unreadable entry.
    std::optional<std::vector<Row>> get(unsigned n) const;

    enum class Source { hit, miss, recomputed_corrupt };

    /// Cached rows, or freshly computed (and stored) rows on a miss or a corrupt entry.
    std::vector<Row> get_or_compute(unsigned n, Source* source = nullptr) const;

private:
    std::filesystem::path dir_;
};

}  // namespace chipfire::io
