#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace srl::utf8 {

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

// Length of the sequence starting at s[i], or 0 if the bytes there are not
// well-formed UTF-8 (overlong encodings, surrogates and out-of-range
// code points all count as malformed).
inline std::size_t sequence_length(std::string_view s, std::size_t i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) return 1;
    if (b0 < 0xC2) return 0;  // continuation byte or overlong lead
    auto cont = [&](std::size_t k) {
        return i + k < s.size() && is_continuation(static_cast<unsigned char>(s[i + k]));
    };
    if (b0 < 0xE0) return cont(1) ? 2 : 0;
    if (b0 < 0xF0) {
        if (!cont(1) || !cont(2)) return 0;
        const auto b1 = static_cast<unsigned char>(s[i + 1]);
        if (b0 == 0xE0 && b1 < 0xA0) return 0;  // overlong
        if (b0 == 0xED && b1 > 0x9F) return 0;  // surrogate
        return 3;
    }
    if (b0 < 0xF5) {
        if (!cont(1) || !cont(2) || !cont(3)) return 0;
        const auto b1 = static_cast<unsigned char>(s[i + 1]);
        if (b0 == 0xF0 && b1 < 0x90) return 0;  // overlong
        if (b0 == 0xF4 && b1 > 0x8F) return 0;  // > U+10FFFF
        return 4;
    }
    return 0;
}

inline bool valid(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t n = sequence_length(s, i);
        if (n == 0) return false;
        i += n;
    }
    return true;
}

// Byte offsets of code point starts, plus a final entry equal to s.size().
// Malformed bytes are stepped over one at a time so the function is total.
inline std::vector<std::size_t> boundaries(std::string_view s) {
    std::vector<std::size_t> out;
    out.reserve(s.size() + 1);
    std::size_t i = 0;
    while (i < s.size()) {
        out.push_back(i);
        const std::size_t n = sequence_length(s, i);
        i += (n == 0) ? 1 : n;
    }
    out.push_back(s.size());
    return out;
}

}  // namespace srl::utf8
