#pragma once

#include <array>
#include <cstdint>

#include "dnacodes/errors.hpp"

namespace dnacodes {

enum class Field : std::uint8_t { F2, F4 };

inline const char* field_name(Field f) { return f == Field::F2 ? "F2" : "F4"; }

// GF(4) = {0, 1, w, w^2} with w^2 = w + 1, characteristic 2.
//
// Packed scalar encoding on two bits: x = lo + hi*w, value = lo | hi<<1.
//   0 -> 00,  1 -> 01,  w -> 10,  w^2 -> 11.
// Addition is XOR. The trace to GF(2), Tr(x) = x + x^2, is exactly the hi
// bit, which under the DNA correspondence is the {C,G} indicator.
inline constexpr std::uint8_t F4_0 = 0;
inline constexpr std::uint8_t F4_1 = 1;
inline constexpr std::uint8_t F4_W = 2;
inline constexpr std::uint8_t F4_W2 = 3;

inline constexpr std::uint8_t f4_add(std::uint8_t a, std::uint8_t b) {
    return a ^ b;
}

inline constexpr std::uint8_t f4_mul(std::uint8_t a, std::uint8_t b) {
    constexpr std::uint8_t tab[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},  // w*w = w^2, w*w^2 = 1
        {0, 3, 1, 2},
    };
    return tab[a][b];
}

// Multiplicative inverse of a nonzero scalar; inv(w) = w^2.
inline constexpr std::uint8_t f4_inv(std::uint8_t a) {
    constexpr std::uint8_t tab[4] = {0, 1, 3, 2};
    return tab[a];
}

inline constexpr std::uint8_t f4_trace(std::uint8_t a) { return a >> 1; }

// Text form used by the code file format: 'W' denotes w^2.
inline constexpr char f4_char(std::uint8_t a) { return "01wW"[a]; }

inline std::uint8_t f4_from_char(char c, std::size_t offset = 0) {
    switch (c) {
        case '0': return F4_0;
        case '1': return F4_1;
        case 'w': return F4_W;
        case 'W': return F4_W2;
        default: throw BadSymbol(c, offset);
    }
}

}  // namespace dnacodes
