#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "doho/core/bitstring.hpp"
#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/core/rng.hpp"
#include "doho/testers/constants.hpp"
#include "doho/testers/string_testers.hpp"

namespace doho {

/// Graphs on v vertices are v*v adjacency strings, entry (a, b) at a*v + b.
std::size_t vertex_count(std::size_t n);  ///< throws unless n is a perfect square

/// out[pi(a) v + pi(b)] = adj[a v + b].
BitString relabel_graph(const BitString& adj, const std::vector<std::size_t>& pi);

/// Smallest relabeling of adj under the BitString order (v <= 8).
BitString canonical_graph(const BitString& adj);

/// min over relabelings pi of hamming(relabel(a, pi), b) / n (v <= 8).
double iso_distance(const BitString& a, const BitString& b);

/// Pairwise isomorphism tester for the adjacency strings behind two accessors.
class GraphIsoTester {
public:
    virtual ~GraphIsoTester() = default;
    virtual std::string_view name() const = 0;
    virtual bool isomorphic(StringAccess& a, StringAccess& b, double eps, Rng& rng) const = 0;
};

/// Reads both matrices in full and compares canonical forms. Exact.
class ExactIsoTester final : public GraphIsoTester {
public:
    std::string_view name() const override { return "exact"; }
    bool isomorphic(StringAccess& a, StringAccess& b, double eps, Rng& rng) const override;
};

/// Distributions over isomorphic copies of one graph. Draws t =
/// ceil(C12 / eps) samples (at least 2) and rejects iff some sample i > 1
/// fails iso_tester against sample 1 at proximity eps / 2. Queries: the
/// tester's tally of distinct positions read (t n for ExactIsoTester).
TesterReport graph_iso_dist_tester(SampleOracle& oracle, const GraphIsoTester& iso_tester,
                                   double eps, const TesterConstants& constants = {},
                                   std::uint64_t seed = 0);

}  // namespace doho
