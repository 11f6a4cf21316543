#include "polytc/hashing.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "polytc/errors.hpp"

namespace polytc {

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string hash_bytes(const std::string& bytes) { return "fnv1a64:" + fnv1a64_hex(bytes); }

std::string hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file '" + path + "' for hashing");
    std::ostringstream buf;
    buf << in.rdbuf();
    return hash_bytes(buf.str());
}

}  // namespace polytc
