#include <gtest/gtest.h>

#include <cmath>

#include "doho/distances/emd.hpp"
#include "doho/distances/grain_round.hpp"
#include "doho/distances/metric.hpp"
#include "doho/distances/support_distance.hpp"
#include "oracles.hpp"

using namespace doho;
using doho::testing::brute_support_distance;
using doho::testing::brute_transport;
using doho::testing::random_distribution;

namespace {

BitString bs(const char* text) { return BitString::parse(text); }

FiniteDistribution point(const char* s) { return FiniteDistribution::point_mass(bs(s)); }

void expect_plan_valid(const EmdResult& r, const FiniteDistribution& p,
                       const FiniteDistribution& q, GroundMetric g) {
    std::vector<double> rows(p.support_size(), 0.0), cols(q.support_size(), 0.0);
    for (const auto& e : r.plan.entries) {
        EXPECT_GE(e.mass, 0.0);
        rows[e.source] += e.mass;
        cols[e.target] += e.mass;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_NEAR(rows[i], p.atoms()[i].weight, 1e-9);
    for (std::size_t j = 0; j < cols.size(); ++j) EXPECT_NEAR(cols[j], q.atoms()[j].weight, 1e-9);
    EXPECT_NEAR(plan_cost(r.plan, p, q, g), r.value, 1e-9);
}

}  // namespace

TEST(HammingRel, Examples) {
    EXPECT_EQ(hamming_rel(bs("0101"), bs("0101")), 0.0);
    EXPECT_EQ(hamming_rel(bs("0000"), bs("1111")), 1.0);
    EXPECT_EQ(hamming_rel(bs("0101"), bs("0111")), 0.25);
    EXPECT_THROW(hamming_rel(bs("01"), bs("011")), std::invalid_argument);
    EXPECT_EQ(ground_distance(GroundMetric::kInequality, bs("0101"), bs("0111")), 1.0);
    EXPECT_EQ(ground_distance(GroundMetric::kInequality, bs("0101"), bs("0101")), 0.0);
}

TEST(Emd, Examples) {
    Rng rng(3);
    const auto p = random_distribution(rng, 6, 5);
    EXPECT_NEAR(emd(p, p).value, 0.0, 1e-12);
    EXPECT_NEAR(emd(point("00"), point("01")).value, 0.5, 1e-12);
    const auto u = FiniteDistribution::uniform(2, {bs("00"), bs("11")});
    const auto r = emd(u, point("00"));
    EXPECT_NEAR(r.value, 0.5, 1e-12);
    // The only feasible 2x1 plan moves 1/2 from 00 (cost 0) and 1/2 from 11 (cost 1).
    const double brute = brute_transport({0.5, 0.5}, {1.0}, [](std::size_t i, std::size_t) {
        return i == 0 ? 0.0 : 1.0;
    });
    EXPECT_NEAR(r.value, brute, 1e-12);
    expect_plan_valid(r, u, point("00"), GroundMetric::kRelativeHamming);
    EXPECT_THROW(emd(point("00"), point("000")), std::invalid_argument);
}

TEST(Emd, MatchesVertexEnumeration) {
    Rng rng(17);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng.below(6);
        const std::size_t cap = std::min<std::size_t>(4, std::size_t{1} << n);
        const auto p = random_distribution(rng, n, 1 + rng.below(cap));
        const auto q = random_distribution(rng, n, 1 + rng.below(cap));
        for (auto g : {GroundMetric::kRelativeHamming, GroundMetric::kInequality}) {
            const auto r = emd(p, q, g);
            std::vector<double> a, b;
            for (const auto& x : p.atoms()) a.push_back(x.weight);
            for (const auto& y : q.atoms()) b.push_back(y.weight);
            const double ref = brute_transport(a, b, [&](std::size_t i, std::size_t j) {
                return ground_distance(g, p.atoms()[i].string, q.atoms()[j].string);
            });
            ASSERT_NEAR(r.value, ref, 1e-9) << "trial " << t;
            expect_plan_valid(r, p, q, g);
        }
    }
}

TEST(Emd, InequalityEqualsTvAndBoundsHamming) {
    Rng rng(5);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + rng.below(8);
        const std::size_t cap = std::min<std::size_t>(6, std::size_t{1} << n);
        const auto p = random_distribution(rng, n, 1 + rng.below(cap));
        const auto q = random_distribution(rng, n, 1 + rng.below(cap));
        const double t_v = tv(p, q);
        ASSERT_NEAR(emd(p, q, GroundMetric::kInequality).value, t_v, 1e-9);
        ASSERT_LE(emd(p, q).value, t_v + 1e-9);
    }
}

TEST(Emd, MetricProperties) {
    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 + rng.below(7);
        const auto p = random_distribution(rng, n, 1 + rng.below(4));
        const auto q = random_distribution(rng, n, 1 + rng.below(4));
        const auto r = random_distribution(rng, n, 1 + rng.below(4));
        const double pq = emd(p, q).value, qp = emd(q, p).value;
        EXPECT_NEAR(pq, qp, 1e-9);
        EXPECT_LE(emd(p, r).value, pq + emd(q, r).value + 1e-9);
        EXPECT_GE(pq, 0.0);
        EXPECT_LE(pq, 1.0);
    }
}

TEST(Emd, LargerSupportsKeepMarginals) {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_distribution(rng, 40, 30);
        const auto q = random_distribution(rng, 40, 25);
        const auto r = emd(p, q);
        expect_plan_valid(r, p, q, GroundMetric::kRelativeHamming);
        EXPECT_LE(r.value, tv(p, q) + 1e-9);
    }
}

TEST(Tv, Examples) {
    const auto u = FiniteDistribution::uniform(2, {bs("00"), bs("11")});
    EXPECT_EQ(tv(u, u), 0.0);
    EXPECT_NEAR(tv(point("01"), point("10")), 1.0, 1e-12);
    EXPECT_NEAR(tv(u, point("00")), 0.5, 1e-12);
    EXPECT_THROW(tv(u, point("000")), std::invalid_argument);
}

TEST(SupportDistance, Examples) {
    const auto u = FiniteDistribution::uniform(3, {bs("000"), bs("111")});
    EXPECT_EQ(dist_to_support_m(u, 2).value, 0.0);
    const auto one = dist_to_support_m(u, 1);
    EXPECT_NEAR(one.value, 0.5, 1e-12);
    ASSERT_EQ(one.centers.size(), 1u);
    const auto v = FiniteDistribution::uniform(4, {bs("0000"), bs("0001")});
    const auto r = dist_to_support_m(v, 1);
    EXPECT_NEAR(r.value, 0.125, 1e-12);
    // Tie in the last coordinate goes to 0.
    EXPECT_EQ(r.centers.front().to_string(), "0000");
    EXPECT_THROW(dist_to_support_m(v, 0), std::invalid_argument);
    Rng rng(1);
    EXPECT_THROW(dist_to_support_m(random_distribution(rng, 10, 13), 3), std::invalid_argument);
}

TEST(SupportDistance, MatchesCenterEnumerationAndEmd) {
    Rng rng(99);
    for (int t = 0; t < 150; ++t) {
        const std::size_t n = 2 + rng.below(5);
        const std::size_t support = 1 + rng.below(5);
        const auto p = random_distribution(rng, n, std::min<std::size_t>(support, 1u << n));
        const std::size_t m = 1 + rng.below(3);
        const auto r = dist_to_support_m(p, m);
        ASSERT_NEAR(r.value, brute_support_distance(p, m), 1e-9) << "trial " << t;
        // The assignment realises the value: EMD to the induced m-support law.
        std::vector<Atom> q;
        for (std::size_t a = 0; a < p.support_size(); ++a) {
            q.push_back({r.centers[r.cluster_of[a]], p.atoms()[a].weight});
        }
        const auto target = FiniteDistribution::from_weighted(n, q, 1e-9);
        EXPECT_LE(target.support_size(), m);
        EXPECT_NEAR(emd(p, target).value, r.value, 1e-9);
    }
}

TEST(GrainRound, PointMassExample) {
    const auto out = grain_round(point("11111111"), 0);
    EXPECT_EQ(out.support_size(), 1u);
    EXPECT_EQ(out.atoms()[0].string.to_string(), "11111000");
    EXPECT_NEAR(emd(point("11111111"), out).value, 3.0 / 8.0, 1e-12);
}

TEST(GrainRound, FixedPoint) {
    // Weights are multiples of 2^-7 and the last 3 bits are zero already.
    const auto p = FiniteDistribution(8, {{bs("10101000"), 96.0 / 128}, {bs("01010000"), 32.0 / 128}});
    EXPECT_TRUE(grain_round(p, 1) == p);
}

TEST(GrainRound, GrainedAndWithinBound) {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = rng.bernoulli(0.5) ? 8 : 16;
        const std::size_t offset = rng.below(max_grain_offset(n) + 1);
        const auto p = random_distribution(rng, n, 1 + rng.below(6));
        const auto out = grain_round(p, offset);
        for (const auto& a : out.atoms()) {
            const double units = std::ldexp(a.weight, static_cast<int>(n - offset));
            ASSERT_EQ(units, std::floor(units));
        }
        ASSERT_LE(emd(p, out).value, grain_round_bound(n, offset) + 1e-9);
    }
}

TEST(GrainRound, Preconditions) {
    EXPECT_THROW(grain_round(point("111"), 0), std::invalid_argument);
    EXPECT_THROW(grain_round(point("11111111"), max_grain_offset(8) + 1), std::invalid_argument);
    EXPECT_EQ(max_grain_offset(8), 3u);
    EXPECT_EQ(max_grain_offset(16), 3u);
}
