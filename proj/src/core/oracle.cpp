#include <atomic>
#include <stdexcept>
#include <string>

#include "doho/core/billed_oracle.hpp"
#include "doho/core/oracle.hpp"

namespace doho {

BitString query_restriction(SampleOracle& oracle, const SampleHandle& h,
                            std::span<const std::size_t> positions) {
    BitString out(positions.size());
    for (std::size_t k = 0; k < positions.size(); ++k) {
        if (oracle.query(h, positions[k])) out.set(k, true);
    }
    return out;
}

BitString query_all(SampleOracle& oracle, const SampleHandle& h) {
    const std::size_t n = oracle.n();
    BitString out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (oracle.query(h, i)) out.set(i, true);
    }
    return out;
}

namespace {
std::atomic<std::uint64_t> next_oracle_id{1};
}

BilledOracle::BilledOracle(std::vector<SourcePtr> sources, std::uint64_t seed)
    : n_(0),
      words_per_sample_(0),
      id_(next_oracle_id.fetch_add(1, std::memory_order_relaxed)),
      sources_(std::move(sources)),
      rng_(seed) {
    if (sources_.empty() || sources_.size() > 2) {
        throw std::invalid_argument("an oracle serves one or two distributions");
    }
    for (const auto& s : sources_) {
        if (!s) throw std::invalid_argument("null source");
    }
    n_ = sources_.front()->n();
    for (const auto& s : sources_) {
        if (s->n() != n_) {
            throw std::invalid_argument("all distributions of a tuple must share n");
        }
    }
    words_per_sample_ = BitString::words_for(n_);
    samples_drawn_.assign(sources_.size(), 0);
}

BilledOracle::BilledOracle(SourcePtr source, std::uint64_t seed)
    : BilledOracle(std::vector<SourcePtr>{std::move(source)}, seed) {}

std::vector<SampleHandle> BilledOracle::draw(std::size_t which, std::size_t count) {
    if (which >= sources_.size()) {
        throw std::invalid_argument("no distribution with index " + std::to_string(which));
    }
    if (count == 0) {
        throw std::invalid_argument("draw needs at least one sample");
    }
    const std::size_t first = total_drawn_;
    bits_.resize((first + count) * words_per_sample_, 0);
    queried_.resize((first + count) * words_per_sample_, 0);
    std::vector<SampleHandle> handles;
    handles.reserve(count);
    const auto& source = *sources_[which];
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t index = first + k;
        source.sample_into(rng_, std::span<std::uint64_t>(bits_.data() + index * words_per_sample_,
                                                          words_per_sample_));
        handles.push_back({id_, which, index});
    }
    total_drawn_ += count;
    samples_drawn_[which] += count;
    return handles;
}

bool BilledOracle::query(const SampleHandle& h, std::size_t position) {
    if (h.oracle_id != id_ || h.index >= total_drawn_) {
        throw std::invalid_argument("sample handle was not issued by this oracle");
    }
    if (position >= n_) {
        throw std::out_of_range("query position " + std::to_string(position) + " outside [0," +
                                std::to_string(n_) + ")");
    }
    const std::size_t word = h.index * words_per_sample_ + (position >> 6);
    const std::uint64_t mask = std::uint64_t{1} << (position & 63);
    if ((queried_[word] & mask) == 0) {
        queried_[word] |= mask;
        ++queries_;
    }
    return (bits_[word] & mask) != 0;
}

}  // namespace doho
