#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "f2b/errors.hpp"

namespace f2b {

// Largest supported dimension: one vector fits one machine word.
inline constexpr int kMaxWidth = 64;

inline constexpr uint64_t width_mask(int width) {
    return width >= 64 ? ~uint64_t{0} : ((uint64_t{1} << width) - 1);
}

/// One element of F_2^n, bit-packed. String position 1 (x_1, the leftmost
/// character) is the most significant of the n payload bits, so the packed
/// word equals the index  x_n + x_{n-1}*2 + ... + x_1*2^{n-1}.
class BitVec {
public:
    constexpr BitVec() = default;  // width-0 placeholder for containers

    BitVec(int width, uint64_t bits) : width_(width), bits_(bits) {
        if (width < 1 || width > kMaxWidth)
            throw std::invalid_argument("BitVec: width must be in [1, 64]");
        if ((bits & ~width_mask(width)) != 0)
            throw std::invalid_argument("BitVec: payload has bits beyond width");
    }

    static BitVec zero(int width) { return BitVec(width, 0); }

    constexpr int width() const noexcept { return width_; }
    constexpr uint64_t bits() const noexcept { return bits_; }
    constexpr bool is_zero() const noexcept { return bits_ == 0; }

    /// Bit at string position pos in [1, width], x_1 leftmost.
    int bit(int pos) const {
        if (pos < 1 || pos > width_)
            throw std::out_of_range("BitVec: bit position out of range");
        return static_cast<int>((bits_ >> (width_ - pos)) & 1u);
    }

    friend constexpr bool operator==(BitVec a, BitVec b) noexcept = default;

    // Orders by width, then by index.
    friend constexpr bool operator<(BitVec a, BitVec b) noexcept {
        return a.width_ != b.width_ ? a.width_ < b.width_ : a.bits_ < b.bits_;
    }

private:
    int width_ = 0;
    uint64_t bits_ = 0;
};

inline void require_same_width(BitVec a, BitVec b, const char* op) {
    if (a.width() != b.width())
        throw std::invalid_argument(std::string(op) + ": width mismatch");
}

/// Pairing sum_i x_i * y_i mod 2. Bilinear; isotropic vectors exist, so this
/// is not an inner product.
inline int dot(BitVec x, BitVec y) {
    require_same_width(x, y, "dot");
    return std::popcount(x.bits() & y.bits()) & 1;
}

/// Componentwise XOR; add(x, x) == 0.
inline BitVec add(BitVec x, BitVec y) {
    require_same_width(x, y, "add");
    return BitVec(x.width(), x.bits() ^ y.bits());
}

inline BitVec operator+(BitVec x, BitVec y) { return add(x, y); }

/// Number of ones.
inline int weight(BitVec x) { return std::popcount(x.bits()); }

inline uint64_t index_of(BitVec x) { return x.bits(); }

inline BitVec vec_of(uint64_t index, int width) {
    if (width < 1 || width > kMaxWidth)
        throw std::invalid_argument("vec_of: width must be in [1, 64]");
    if ((index & ~width_mask(width)) != 0)
        throw std::out_of_range("vec_of: index out of range for width");
    return BitVec(width, index);
}

inline std::string to_string(BitVec x) {
    std::string s(static_cast<size_t>(x.width()), '0');
    for (int i = 1; i <= x.width(); ++i)
        if (x.bit(i)) s[static_cast<size_t>(i) - 1] = '1';
    return s;
}

/// Parses a 0/1 string; the width is the string length.
inline BitVec bitvec_from_string(std::string_view s) {
    if (s.empty() || s.size() > static_cast<size_t>(kMaxWidth))
        throw InputError("vector string must have between 1 and 64 characters");
    uint64_t bits = 0;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw InputError(std::string("non-binary character '") + c + "' in vector string");
        bits = (bits << 1) | static_cast<uint64_t>(c - '0');
    }
    return BitVec(static_cast<int>(s.size()), bits);
}

}  // namespace f2b
