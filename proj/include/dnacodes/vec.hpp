#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

#include "dnacodes/gf4.hpp"

namespace dnacodes {

// Fixed-capacity bit-sliced vectors. 128 coordinates cover every code this
// library builds (catalog groups have order <= 24, composite codes reach
// k*n <= 128, analysis inputs stay below that too).
inline constexpr int kMaxLen = 128;
inline constexpr int kWords = kMaxLen / 64;

namespace detail {

inline std::array<std::uint64_t, kWords> length_mask(int n) {
    std::array<std::uint64_t, kWords> m{};
    for (int w = 0; w < kWords; ++w) {
        int lo = w * 64;
        if (n <= lo)
            m[w] = 0;
        else if (n >= lo + 64)
            m[w] = ~std::uint64_t(0);
        else
            m[w] = (std::uint64_t(1) << (n - lo)) - 1;
    }
    return m;
}

}  // namespace detail

// Vector over GF(2). Coordinate i lives at bit (i % 64) of word (i / 64);
// bits at positions >= n are kept zero by every operation.
struct F2Vec {
    static constexpr int q = 2;

    int n = 0;
    std::array<std::uint64_t, kWords> b{};

    static F2Vec zeros(int n) {
        assert(n >= 0 && n <= kMaxLen);
        F2Vec v;
        v.n = n;
        return v;
    }
    static F2Vec ones(int n) {
        F2Vec v = zeros(n);
        v.b = detail::length_mask(n);
        return v;
    }

    std::uint8_t get(int i) const {
        return (b[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i, std::uint8_t val) {
        std::uint64_t bit = std::uint64_t(1) << (i & 63);
        if (val)
            b[i >> 6] |= bit;
        else
            b[i >> 6] &= ~bit;
    }

    void add_scaled(const F2Vec& o, std::uint8_t s) {
        if (!s) return;
        b[0] ^= o.b[0];
        b[1] ^= o.b[1];
    }
    F2Vec scaled(std::uint8_t s) const {
        F2Vec v = zeros(n);
        if (s) v.b = b;
        return v;
    }
    F2Vec& operator^=(const F2Vec& o) {
        b[0] ^= o.b[0];
        b[1] ^= o.b[1];
        return *this;
    }
    friend F2Vec operator^(F2Vec a, const F2Vec& c) { return a ^= c; }

    int weight() const {
        return std::popcount(b[0]) + std::popcount(b[1]);
    }
    bool is_zero() const { return b[0] == 0 && b[1] == 0; }
    bool even_weight() const { return (weight() & 1) == 0; }

    F2Vec reversed() const {
        F2Vec r = zeros(n);
        for (int i = 0; i < n; ++i)
            if (get(i)) r.set(n - 1 - i, 1);
        return r;
    }

    bool operator==(const F2Vec&) const = default;

    std::string to_string() const {
        std::string s(n, '0');
        for (int i = 0; i < n; ++i) s[i] = get(i) ? '1' : '0';
        return s;
    }
};

// Vector over GF(4), stored as two parallel GF(2) planes: coordinate
// x_i = lo_i + hi_i * w. Addition is plane-wise XOR; Tr applied
// coordinate-wise is the hi plane; GC-weight is popcount(hi).
struct F4Vec {
    static constexpr int q = 4;

    int n = 0;
    std::array<std::uint64_t, kWords> lo{}, hi{};

    static F4Vec zeros(int n) {
        assert(n >= 0 && n <= kMaxLen);
        F4Vec v;
        v.n = n;
        return v;
    }
    static F4Vec ones(int n) {
        F4Vec v = zeros(n);
        v.lo = detail::length_mask(n);
        return v;
    }
    static F4Vec from_binary(const F2Vec& o) {
        F4Vec v = zeros(o.n);
        v.lo = o.b;
        return v;
    }

    std::uint8_t get(int i) const {
        return std::uint8_t(((lo[i >> 6] >> (i & 63)) & 1u) |
                            (((hi[i >> 6] >> (i & 63)) & 1u) << 1));
    }
    void set(int i, std::uint8_t val) {
        std::uint64_t bit = std::uint64_t(1) << (i & 63);
        if (val & 1)
            lo[i >> 6] |= bit;
        else
            lo[i >> 6] &= ~bit;
        if (val & 2)
            hi[i >> 6] |= bit;
        else
            hi[i >> 6] &= ~bit;
    }

    // this += s * o, scalar multiples resolved as plane shuffles:
    //   w  * (lo,hi) = (hi, lo^hi),   w^2 * (lo,hi) = (lo^hi, lo).
    void add_scaled(const F4Vec& o, std::uint8_t s) {
        switch (s) {
            case 0: break;
            case 1:
                lo[0] ^= o.lo[0]; lo[1] ^= o.lo[1];
                hi[0] ^= o.hi[0]; hi[1] ^= o.hi[1];
                break;
            case 2:
                lo[0] ^= o.hi[0]; lo[1] ^= o.hi[1];
                hi[0] ^= o.lo[0] ^ o.hi[0]; hi[1] ^= o.lo[1] ^ o.hi[1];
                break;
            default:
                lo[0] ^= o.lo[0] ^ o.hi[0]; lo[1] ^= o.lo[1] ^ o.hi[1];
                hi[0] ^= o.lo[0]; hi[1] ^= o.lo[1];
                break;
        }
    }
    F4Vec scaled(std::uint8_t s) const {
        F4Vec v = zeros(n);
        v.add_scaled(*this, s);
        return v;
    }
    F4Vec& operator^=(const F4Vec& o) {
        lo[0] ^= o.lo[0]; lo[1] ^= o.lo[1];
        hi[0] ^= o.hi[0]; hi[1] ^= o.hi[1];
        return *this;
    }
    friend F4Vec operator^(F4Vec a, const F4Vec& c) { return a ^= c; }

    int weight() const {
        return std::popcount(lo[0] | hi[0]) + std::popcount(lo[1] | hi[1]);
    }
    int gc_weight() const {
        return std::popcount(hi[0]) + std::popcount(hi[1]);
    }
    bool is_zero() const {
        return (lo[0] | lo[1] | hi[0] | hi[1]) == 0;
    }
    bool is_binary() const { return hi[0] == 0 && hi[1] == 0; }

    F2Vec trace_vec() const {
        F2Vec t = F2Vec::zeros(n);
        t.b = hi;
        return t;
    }
    F2Vec lo_plane() const {
        F2Vec t = F2Vec::zeros(n);
        t.b = lo;
        return t;
    }

    F4Vec reversed() const {
        F4Vec r = zeros(n);
        for (int i = 0; i < n; ++i) {
            std::uint8_t v = get(i);
            if (v) r.set(n - 1 - i, v);
        }
        return r;
    }
    // Watson-Crick complement: x + all-ones.
    F4Vec complemented() const {
        F4Vec r = *this;
        auto m = detail::length_mask(n);
        r.lo[0] ^= m[0];
        r.lo[1] ^= m[1];
        return r;
    }
    F4Vec reverse_complemented() const { return reversed().complemented(); }

    bool operator==(const F4Vec&) const = default;

    std::string to_string() const {
        std::string s(n, '0');
        for (int i = 0; i < n; ++i) s[i] = f4_char(get(i));
        return s;
    }
    static F4Vec from_string(const std::string& s) {
        F4Vec v = zeros(int(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i)
            v.set(int(i), f4_from_char(s[i], i));
        return v;
    }
};

}  // namespace dnacodes
