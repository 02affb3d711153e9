#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dnacodes {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(unsigned base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace dnacodes
