#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "roisig/bigint.hpp"

namespace roisig {

// Fixed-length binary word. Index 0 is the leftmost bit and the most
// significant one for lexicographic/integer ordering.
class BitFrame {
  public:
    BitFrame() = default;
    explicit BitFrame(std::size_t length) : bits_(length, 0) {}

    static BitFrame from_string(std::string_view text);
    // MSB-first binary expansion of value; requires value < 2^length.
    static BitFrame from_integer(const BigUint& value, std::size_t length);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    std::uint8_t bit(std::size_t i) const { return bits_[i]; }
    void set_bit(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }

    std::size_t weight() const;
    BitFrame complemented() const;
    BigUint to_integer() const;
    std::string to_string() const;

    // Strict lexicographic order within equal lengths (0 < 1).
    bool lex_less(const BitFrame& other) const;

    BitFrame operator^(const BitFrame& other) const;
    bool operator==(const BitFrame&) const = default;

    const std::vector<std::uint8_t>& raw() const { return bits_; }
    std::vector<std::uint8_t>& raw() { return bits_; }

  private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace roisig
