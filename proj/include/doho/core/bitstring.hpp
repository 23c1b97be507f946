#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace doho {

/// A fixed-length string over {0,1}; the "huge object" of the testing model.
///
/// Bits are packed little-endian into 64-bit words. Position 0 is the first
/// character of the textual form, so BitString::parse("0101")[1] == true.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t n);

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument on
    /// any other character or on an empty input.
    static BitString parse(std::string_view text);
    static BitString from_words(std::size_t n, std::span<const std::uint64_t> words);

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    bool operator[](std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    /// Bounds-checked read; throws std::out_of_range.
    bool at(std::size_t i) const;
    void set(std::size_t i, bool value) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t popcount() const noexcept;
    /// Number of positions where the two strings differ. Lengths must match.
    std::size_t hamming(const BitString& other) const;

    /// Cyclic shift: result[i] = (*this)[(i + shift) mod n].
    BitString rotated(std::size_t shift) const;
    /// Restriction to the given positions, in the given order.
    BitString restricted(std::span<const std::size_t> positions) const;
    /// This string followed by zeros up to length n.
    BitString padded(std::size_t n) const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;
    /// Shorter strings first, then lexicographic on the textual form.
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept;

    static std::size_t words_for(std::size_t n) noexcept { return (n + 63) / 64; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitStringHash {
    std::size_t operator()(const BitString& s) const noexcept;
};

}  // namespace doho

template <>
struct std::hash<doho::BitString> : doho::BitStringHash {};
