#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cubical {

// A vertex of [1]^n is a subset of {1..n}; coordinate i lives in bit i-1.
using Mask = std::uint32_t;

constexpr int kMaxCubeDim = 24;

constexpr Mask bit(int i) { return Mask{1} << (i - 1); }
constexpr Mask full_mask(int n) { return n == 0 ? 0 : (n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1); }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// d(a, b) = |b \ a|
constexpr int distance(Mask a, Mask b) { return std::popcount(b & ~a); }

// sup a, with sup of the empty set taken to be 0
constexpr int sup(Mask a) { return a == 0 ? 0 : 32 - std::countl_zero(a); }

inline std::vector<int> coords(Mask m) {
    std::vector<int> out;
    for (int i = 1; m != 0; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

inline Mask mask_of(const std::vector<int>& cs) {
    Mask m = 0;
    for (int c : cs) m |= bit(c);
    return m;
}

// "101" means coordinates 1 and 3 are set; coordinate 1 is written first.
inline std::string format_vertex(int n, Mask v) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 1; i <= n; ++i)
        if (v & bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

inline Mask parse_vertex(const std::string& s) {
    require(s.size() <= kMaxCubeDim, "vertex string too long: " + s);
    Mask v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') v |= bit(static_cast<int>(i) + 1);
        else require(s[i] == '0', "bad vertex string: " + s);
    }
    return v;
}

inline std::string format_set(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int c : coords(m)) {
        if (!first) s += ",";
        s += std::to_string(c);
        first = false;
    }
    return s + "}";
}

}  // namespace cubical
