#include "doho/testers/graph_iso.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "doho/testers/dpi.hpp"

namespace doho {

namespace {

constexpr std::size_t kMaxVertices = 8;

std::size_t small_vertex_count(std::size_t n) {
    const std::size_t v = vertex_count(n);
    if (v > kMaxVertices) throw std::invalid_argument("graph: at most 8 vertices supported");
    return v;
}

BitString read_all(StringAccess& x) {
    BitString out(x.n());
    for (std::size_t i = 0; i < x.n(); ++i) out.set(i, x.bit(i));
    return out;
}

}  // namespace

std::size_t vertex_count(std::size_t n) {
    const auto v = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (v * v != n || n == 0) {
        throw std::invalid_argument("graph: length " + std::to_string(n) + " is not a square");
    }
    return v;
}

BitString relabel_graph(const BitString& adj, const std::vector<std::size_t>& pi) {
    const std::size_t v = vertex_count(adj.size());
    if (pi.size() != v) throw std::invalid_argument("relabel_graph: permutation size mismatch");
    BitString out(adj.size());
    for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = 0; b < v; ++b) {
            if (adj[a * v + b]) out.set(pi[a] * v + pi[b], true);
        }
    }
    return out;
}

BitString canonical_graph(const BitString& adj) {
    const std::size_t v = small_vertex_count(adj.size());
    std::vector<std::size_t> pi(v);
    std::iota(pi.begin(), pi.end(), 0);
    BitString best = adj;
    do {
        auto candidate = relabel_graph(adj, pi);
        if (candidate < best) best = std::move(candidate);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return best;
}

double iso_distance(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw std::invalid_argument("iso_distance: length mismatch");
    const std::size_t v = small_vertex_count(a.size());
    std::vector<std::size_t> pi(v);
    std::iota(pi.begin(), pi.end(), 0);
    std::size_t best = a.size();
    do {
        best = std::min(best, relabel_graph(a, pi).hamming(b));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return static_cast<double>(best) / static_cast<double>(a.size());
}

bool ExactIsoTester::isomorphic(StringAccess& a, StringAccess& b, double, Rng&) const {
    return canonical_graph(read_all(a)) == canonical_graph(read_all(b));
}

TesterReport graph_iso_dist_tester(SampleOracle& oracle, const GraphIsoTester& iso_tester,
                                   double eps, const TesterConstants& constants,
                                   std::uint64_t seed) {
    if (!(eps > 0)) throw std::invalid_argument("graph_iso: eps must be positive");
    vertex_count(oracle.n());
    const auto t = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::ceil(constants.ideal_samples / eps)));
    Rng rng(seed);
    std::vector<SampleAccess> xs;
    for (const auto& h : oracle.draw(0, t)) xs.emplace_back(oracle, h);
    std::size_t failures = 0;
    nlohmann::json failed = nlohmann::json::array();
    for (std::size_t i = 1; i < t; ++i) {
        if (!iso_tester.isomorphic(xs[0], xs[i], eps / 2, rng)) {
            ++failures;
            failed.push_back(i);
        }
    }
    nlohmann::json trace;
    trace["samples"] = t;
    trace["iso_tester"] = std::string(iso_tester.name());
    trace["failed_pairs"] = failed;
    return finish_report(oracle, failures > 0 ? Verdict::kReject : Verdict::kAccept,
                         tally_queries(xs), std::move(trace));
}

}  // namespace doho
