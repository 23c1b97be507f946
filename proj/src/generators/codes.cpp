#include "doho/generators/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "doho/core/rng.hpp"

namespace doho {

namespace {

void xor_into(BitString& acc, const BitString& row) {
    auto dst = acc.words();
    const auto src = row.words();
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

LinearCode::LinearCode(std::vector<BitString> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("code: need at least one row");
    if (rows_.size() > kMaxMessageBits) throw std::invalid_argument("code: k must be <= 12");
    n_ = rows_.front().size();
    if (n_ == 0) throw std::invalid_argument("code: empty rows");
    for (const auto& r : rows_) {
        if (r.size() != n_) throw std::invalid_argument("code: rows of different lengths");
    }
    // Gray-code walk over all nonzero messages.
    BitString word(n_);
    std::size_t min_weight = n_;
    const std::uint64_t count = std::uint64_t{1} << k();
    for (std::uint64_t i = 1; i < count; ++i) {
        xor_into(word, rows_[std::countr_zero(i)]);
        const std::size_t w = word.popcount();
        if (w == 0) throw std::invalid_argument("code: encoder is not injective");
        min_weight = std::min(min_weight, w);
    }
    min_distance_ = static_cast<double>(min_weight) / static_cast<double>(n_);
}

BitString LinearCode::encode(std::uint64_t message) const {
    if (message >> k()) throw std::out_of_range("code: message out of range");
    BitString word(n_);
    for (std::size_t r = 0; r < k(); ++r) {
        if ((message >> r) & 1u) xor_into(word, rows_[r]);
    }
    return word;
}

BitString LinearCode::encode(const BitString& message) const {
    if (message.size() != k()) throw std::invalid_argument("code: message length must be k");
    std::uint64_t a = 0;
    for (std::size_t r = 0; r < k(); ++r) a |= std::uint64_t{message[r]} << r;
    return encode(a);
}

std::vector<BitString> LinearCode::codewords() const {
    std::vector<BitString> out;
    out.reserve(std::size_t{1} << k());
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k()); ++a) out.push_back(encode(a));
    return out;
}

LinearCode hadamard_code(std::size_t k) {
    if (k == 0 || k > LinearCode::kMaxMessageBits) {
        throw std::invalid_argument("hadamard_code: need 1 <= k <= 12");
    }
    const std::size_t n = std::size_t{1} << k;
    std::vector<BitString> rows(k, BitString(n));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t x = 0; x < n; ++x) rows[r].set(x, (x >> r) & 1u);
    }
    return LinearCode(std::move(rows));
}

LinearCode random_linear_code(std::size_t k, std::size_t n, std::uint64_t seed,
                              double min_distance, std::size_t attempts) {
    if (k == 0 || k > LinearCode::kMaxMessageBits || n == 0) {
        throw std::invalid_argument("random_linear_code: need 1 <= k <= 12 and n > 0");
    }
    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        std::vector<BitString> rows(k, BitString(n));
        for (auto& r : rows) {
            for (std::size_t i = 0; i < n; ++i) r.set(i, rng.next_u64() & 1u);
        }
        try {
            LinearCode code(std::move(rows));
            if (code.min_distance() >= min_distance) return code;
        } catch (const std::invalid_argument&) {
            // not injective, draw again
        }
    }
    throw std::runtime_error("random_linear_code: distance target not reached");
}

}  // namespace doho
