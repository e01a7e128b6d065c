#pragma once

#include <cstdint>
#include <string>

namespace cohall {

inline std::uint64_t fnv1a64(const std::string& data, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[x & 0xf];
        x >>= 4;
    }
    return s;
}

// 128-bit stable content hash: two independent FNV-1a lanes.
inline std::string stable_hash(const std::string& data) {
    std::uint64_t lo = fnv1a64(data);
    std::uint64_t hi = fnv1a64(data, 0x6c62272e07bb0142ull ^ 0x9e3779b97f4a7c15ull);
    return hex64(hi) + hex64(lo);
}

} // namespace cohall
