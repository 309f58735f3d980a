#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "roisig/bigint.hpp"

namespace roisig {

// Largest supported word length. Keeps the cached binomial rows bounded;
// the shaping analysis never needs more than a few hundred bits.
inline constexpr int kMaxWordLength = 512;

// C(n,m), exact. Throws std::domain_error for m > n or n outside [0, 512].
BigUint binomial(int n, int m);

// Reduced exact fraction.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Rational&) const = default;
};

// Ratio between adjacent weight-class codebook sizes:
// C(n,m) / C(n,m-1) = (n-m+1)/m, for 1 <= m < n/2.
Rational weight_class_ratio(int n, int m);

// Sum of C(n,m) over m in [w_lo, w_hi]; the flexible codebook size.
BigUint fdc_codebook_size(int n, int w_lo, int w_hi);

struct RateLossReport {
    int n = 0;       // code length in bits
    int k = 0;       // information bits, floor(log2 of codebook size)
    double delta = 0.0;  // 1 - k/n
};

// Rate loss of the fixed-weight distribution controller at weight m.
RateLossReport rate_loss_dc(int n, int m);

// Rate loss of the flexible controller over the weight range [1, floor(upsilon0*n)].
RateLossReport rate_loss_fdc(int n, double upsilon0);

// floor(fraction * n) with a guard against binary representation error
// (0.36 * 100 evaluates just below 36 in IEEE doubles).
int weight_from_fraction(int n, double fraction);

struct RateLossRow {
    int n = 0;
    double phi = 0.0;
    double delta_dc = 0.0;
    double delta_fdc = 0.0;
};

// One row per (n, phi) pair. For phi <= 0.5 the flexible range is (0, phi];
// above 0.5 it is the mirrored [phi, 1). Degenerate ranges (floor(phi*n)
// hitting 0 or n) report delta = 1, i.e. a codebook of one word carries
// no information.
std::vector<RateLossRow> rate_loss_table(const std::vector<int>& n_list,
                                         const std::vector<double>& phi_grid);

// CSV with header `n,phi,delta_dc,delta_fdc`; phi printed with 4 digits.
void write_rate_loss_csv(std::ostream& out, const std::vector<RateLossRow>& rows);

}  // namespace roisig
