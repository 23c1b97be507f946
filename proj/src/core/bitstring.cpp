#include "doho/core/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace doho {

// Invariant: bits beyond n_ in the last word are always zero, so the
// defaulted operator== and the hash see canonical words.

BitString::BitString(std::size_t n) : n_(n), words_(words_for(n), 0) {}

BitString BitString::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("bit string must be non-empty");
    }
    BitString out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '1') {
            out.set(i, true);
        } else if (c != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1': " +
                                        std::string(text));
        }
    }
    return out;
}

BitString BitString::from_words(std::size_t n, std::span<const std::uint64_t> words) {
    if (words.size() != words_for(n)) {
        throw std::invalid_argument("word count does not match bit length");
    }
    BitString out(n);
    std::copy(words.begin(), words.end(), out.words_.begin());
    if (n % 64 != 0) {
        out.words_.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    }
    return out;
}

bool BitString::at(std::size_t i) const {
    if (i >= n_) {
        throw std::out_of_range("bit position " + std::to_string(i) + " outside [0," +
                                std::to_string(n_) + ")");
    }
    return (*this)[i];
}

std::size_t BitString::popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t BitString::hamming(const BitString& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("hamming distance needs equal lengths");
    }
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(words_[w] ^ other.words_[w]));
    }
    return total;
}

BitString BitString::rotated(std::size_t shift) const {
    BitString out(n_);
    if (n_ == 0) return out;
    shift %= n_;
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t src = i + shift;
        if (src >= n_) src -= n_;
        if ((*this)[src]) out.set(i, true);
    }
    return out;
}

BitString BitString::restricted(std::span<const std::size_t> positions) const {
    BitString out(positions.size());
    for (std::size_t k = 0; k < positions.size(); ++k) {
        if (at(positions[k])) out.set(k, true);
    }
    return out;
}

BitString BitString::padded(std::size_t n) const {
    if (n < n_) {
        throw std::invalid_argument("cannot pad to a shorter length");
    }
    BitString out(n);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    return out;
}

std::string BitString::to_string() const {
    std::string out(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if ((*this)[i]) out[i] = '1';
    }
    return out;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        const std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff != 0) {
            const int bit = std::countr_zero(diff);
            return ((a.words_[w] >> bit) & 1u) ? std::strong_ordering::greater
                                              : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

std::size_t BitStringHash::operator()(const BitString& s) const noexcept {
    // SplitMix-style mixing over the words; stable across platforms.
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
    for (auto w : s.words()) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= h >> 31;
        h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace doho
