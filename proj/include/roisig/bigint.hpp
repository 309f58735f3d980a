#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace roisig {

// Exact unsigned integer for codebook sizes and enumerative ranks.
// Values stay non-negative by construction; arithmetic never rounds.
using BigUint = boost::multiprecision::cpp_int;

// Number of bits in the binary representation (0 for x == 0).
inline int bit_length(const BigUint& x) {
    if (x.is_zero()) return 0;
    return static_cast<int>(boost::multiprecision::msb(x)) + 1;
}

// floor(log2 x), computed on the exact integer. Never goes through
// floating point, so k boundaries at powers of two are exact.
inline int floor_log2(const BigUint& x) {
    if (x <= 0) throw std::domain_error("floor_log2: argument must be positive");
    return bit_length(x) - 1;
}

inline BigUint pow2(int k) {
    return BigUint(1) << k;
}

}  // namespace roisig
