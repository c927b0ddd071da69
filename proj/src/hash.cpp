#include "casekit/hash.hpp"

#include <fstream>
#include <sstream>

#include "casekit/errors.hpp"

namespace casekit {

std::string hash_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file for hashing: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return hash_hex(fnv1a64(buf.str()));
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t n) {
    std::uint64_t h = fnv1a64(tag);
    for (int i = 0; i < 8; ++i) {
        h ^= (base >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    for (int i = 0; i < 8; ++i) {
        h ^= (n >> (8 * i)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace casekit
