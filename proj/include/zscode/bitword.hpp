#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zscode {

/// Fixed-length binary word, stored MSB-first: bit index 0 is the first
/// (most significant) bit. Data words are at most 64 bits; codewords carry
/// a parity prefix on top, so the type supports lengths up to 128.
class BitWord {
public:
    static constexpr unsigned kMaxLength = 128;

    BitWord() = default;

    /// Word of `length` bits (length <= 64) holding the low bits of `value`.
    BitWord(unsigned length, std::uint64_t value);

    static BitWord zeros(unsigned length);
    static BitWord ones(unsigned length);

    /// Parse an MSB-first 0/1 string, e.g. "00110011".
    static BitWord from_string(std::string_view bits);

    unsigned length() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    /// Bit at MSB-first index i (0 = first bit). Precondition: i < length().
    bool bit(unsigned i) const noexcept {
        return static_cast<unsigned>(bits_ >> (len_ - 1 - i)) & 1u;
    }

    /// Number of ones.
    unsigned weight() const noexcept {
        return static_cast<unsigned>(std::popcount(static_cast<std::uint64_t>(bits_)) +
                                     std::popcount(static_cast<std::uint64_t>(bits_ >> 64)));
    }

    /// v(w): ones minus zeros. Even whenever the length is even.
    int disparity() const noexcept { return 2 * static_cast<int>(weight()) - static_cast<int>(len_); }

    /// Word with the first k bits complemented. Throws std::out_of_range
    /// unless 0 <= k <= length(). Applying the same k twice is the identity.
    BitWord prefix_flipped(unsigned k) const;

    /// Numeric value of the MSB-first bit string. Requires length() <= 64.
    std::uint64_t value64() const;

    /// This word followed by `tail`. Combined length must stay <= 128.
    BitWord concat(const BitWord& tail) const;

    /// Sub-word of `count` bits starting at MSB-first index `pos`.
    BitWord slice(unsigned pos, unsigned count) const;

    std::string to_string() const;

    friend bool operator==(const BitWord& a, const BitWord& b) noexcept {
        return a.len_ == b.len_ && a.bits_ == b.bits_;
    }
    friend bool operator<(const BitWord& a, const BitWord& b) noexcept {
        return a.len_ != b.len_ ? a.len_ < b.len_ : a.bits_ < b.bits_;
    }

private:
    using u128 = unsigned __int128;

    BitWord(unsigned length, u128 raw) : len_(length), bits_(raw) {}

    static u128 low_mask(unsigned nbits) {
        return nbits >= 128 ? ~u128{0} : (u128{1} << nbits) - 1;
    }

    unsigned len_ = 0;
    u128 bits_ = 0; // MSB-first bit i lives at machine bit (len_ - 1 - i)
};

/// [v(w^(0)), v(w^(1)), ..., v(w^(n))]: the disparity of w after flipping
/// its first k bits, for every k. Consecutive entries differ by exactly 2
/// and the ends are negatives of each other, so a walk over an even-length
/// word always passes through zero before k = n.
std::vector<int> disparity_walk(const BitWord& w);

std::ostream& operator<<(std::ostream& os, const BitWord& w);

} // namespace zscode
