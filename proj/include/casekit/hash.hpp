#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace casekit {

/// 64-bit FNV-1a. Used for file checksums, token hashing, and sub-seed
/// derivation; not a cryptographic hash.
constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                std::uint64_t seed = 0xcbf29ce484222325ULL) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Lowercase hex rendering of a 64-bit hash, zero padded to 16 digits.
std::string hash_hex(std::uint64_t h);

/// Checksum of a whole file, as hex. Throws DataError if unreadable.
std::string hash_file(const std::string& path);

/// Deterministic sub-seed: mixes a base seed with a purpose tag and an index.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t n = 0);

}  // namespace casekit
