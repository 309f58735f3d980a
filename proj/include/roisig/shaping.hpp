#pragma once

#include <vector>

#include "roisig/bigint.hpp"
#include "roisig/bitframe.hpp"

namespace roisig {

// The low-rate signal: selects which of the two mirrored ones-ratio
// ranges the shaped codeword lands in.
enum class LowRateBit : int { logic0 = 0, logic1 = 1 };

inline LowRateBit low_rate_from_int(int v) {
    return v ? LowRateBit::logic1 : LowRateBit::logic0;
}

// Parameters and cumulative codebook sizes of the flexible distribution
// controller. Immutable after construction; shareable across threads.
struct ShapingCodebook {
    int n = 0;       // codeword length in bits
    int w_max = 0;   // top weight of the logic-0 range, floor(upsilon0*n)
    int k = 0;       // message length, floor(log2 Z)
    BigUint size;    // Z = sum of C(n,m), m = 1..w_max
    BigUint message_space;           // 2^k
    std::vector<BigUint> cumulative; // S_m for m = 1..w_max (S_m = sum_{j<=m} C(n,j))
};

// Requires 1 <= floor(upsilon0*n) < n/2.
ShapingCodebook build_codebook(int n, double upsilon0);

// index-th n-bit word of weight m, ascending lexicographic order.
// Requires 0 <= index < C(n,m).
BitFrame unrank_constant_weight(int n, int m, const BigUint& index);

// Inverse of unrank_constant_weight. Requires weight(word) == m.
BigUint rank_constant_weight(const BitFrame& word, int m);

// Maps a k-bit message into the weight range selected by v. The logic-1
// output is the bitwise complement of the logic-0 one, which realizes the
// mirrored codebook exactly.
BitFrame fdc_encode(const ShapingCodebook& cb, LowRateBit v, const BitFrame& msg);

enum class ShapingStatus {
    ok,
    invalid_weight,    // weight outside both probabilistic ranges
    unused_codeword,   // rank beyond the 2^k messages actually emitted
};

struct FdcDecodeResult {
    ShapingStatus status = ShapingStatus::ok;
    LowRateBit v = LowRateBit::logic0;
    BitFrame message;  // valid only when status == ok
};

// Exact inverse of fdc_encode. Failure statuses signal an uncorrected
// frame error to the caller; they never throw.
FdcDecodeResult fdc_decode(const ShapingCodebook& cb, const BitFrame& word);

// Fixed-weight controller (single weight class); the baseline the
// flexible one is compared against.
int dc_message_length(int n, int m);
BitFrame dc_encode(int n, int m, const BitFrame& msg);

struct DcDecodeResult {
    ShapingStatus status = ShapingStatus::ok;
    BitFrame message;
};
DcDecodeResult dc_decode(int n, int m, const BitFrame& word);

}  // namespace roisig
