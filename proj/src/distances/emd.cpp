#include "doho/distances/emd.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace doho {

namespace {

constexpr double kPivotTolerance = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TransportPlan solve_transport(std::span<const double> supply, std::span<const double> demand,
                              const std::function<double(std::size_t, std::size_t)>& cost) {
    const std::size_t a = supply.size();
    const std::size_t b = demand.size();
    if (a == 0 || b == 0) throw std::invalid_argument("solve_transport: empty side");

    // Dense residual network: S=0, sources 1..a, sinks a+1..a+b, T=a+b+1.
    const std::size_t v_count = a + b + 2;
    const std::size_t s_node = 0;
    const std::size_t t_node = a + b + 1;
    std::vector<double> cap(v_count * v_count, 0.0);
    std::vector<double> arc_cost(v_count * v_count, 0.0);
    auto at = [v_count](std::size_t u, std::size_t v) { return u * v_count + v; };

    for (std::size_t i = 0; i < a; ++i) cap[at(s_node, 1 + i)] = supply[i];
    for (std::size_t j = 0; j < b; ++j) cap[at(1 + a + j, t_node)] = demand[j];
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            const double c = cost(i, j);
            cap[at(1 + i, 1 + a + j)] = kInf;
            arc_cost[at(1 + i, 1 + a + j)] = c;
            arc_cost[at(1 + a + j, 1 + i)] = -c;
        }
    }

    std::vector<double> potential(v_count, 0.0);
    std::vector<double> dist(v_count);
    std::vector<std::size_t> parent(v_count);
    std::vector<char> done(v_count);
    const std::size_t max_rounds = 64 * v_count * v_count + 64;

    for (std::size_t round = 0;; ++round) {
        if (round > max_rounds) throw std::logic_error("solve_transport: no convergence");
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(done.begin(), done.end(), 0);
        dist[s_node] = 0.0;
        for (;;) {
            std::size_t u = v_count;
            for (std::size_t v = 0; v < v_count; ++v) {
                if (!done[v] && dist[v] < kInf && (u == v_count || dist[v] < dist[u])) u = v;
            }
            if (u == v_count) break;
            done[u] = 1;
            for (std::size_t v = 0; v < v_count; ++v) {
                if (done[v] || cap[at(u, v)] <= kPivotTolerance) continue;
                const double rc =
                    std::max(0.0, arc_cost[at(u, v)] + potential[u] - potential[v]);
                if (dist[u] + rc < dist[v]) {
                    dist[v] = dist[u] + rc;
                    parent[v] = u;
                }
            }
        }
        if (dist[t_node] == kInf) break;

        double reached_max = 0.0;
        for (std::size_t v = 0; v < v_count; ++v) {
            if (dist[v] < kInf) reached_max = std::max(reached_max, dist[v]);
        }
        for (std::size_t v = 0; v < v_count; ++v) {
            potential[v] += dist[v] < kInf ? dist[v] : reached_max;
        }

        double push = kInf;
        for (std::size_t v = t_node; v != s_node; v = parent[v]) {
            push = std::min(push, cap[at(parent[v], v)]);
        }
        for (std::size_t v = t_node; v != s_node; v = parent[v]) {
            const std::size_t u = parent[v];
            if (cap[at(u, v)] != kInf) cap[at(u, v)] -= push;
            if (cap[at(v, u)] != kInf) cap[at(v, u)] += push;
        }
    }

    TransportPlan plan;
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            // Flow on i->j is the residual of the reverse arc.
            const double mass = cap[at(1 + a + j, 1 + i)];
            if (mass > 0.0) {
                plan.entries.push_back({i, j, mass});
                plan.cost += mass * arc_cost[at(1 + i, 1 + a + j)];
            }
        }
    }
    return plan;
}

EmdResult emd(const FiniteDistribution& p, const FiniteDistribution& q, GroundMetric g) {
    if (p.n() != q.n()) throw std::invalid_argument("emd: distributions over different n");
    const auto pa = p.atoms();
    const auto qa = q.atoms();
    std::vector<double> supply, demand;
    for (const auto& x : pa) supply.push_back(x.weight);
    for (const auto& y : qa) demand.push_back(y.weight);
    EmdResult r;
    r.plan = solve_transport(supply, demand, [&](std::size_t i, std::size_t j) {
        return ground_distance(g, pa[i].string, qa[j].string);
    });
    r.value = std::clamp(r.plan.cost, 0.0, 1.0);
    return r;
}

double plan_cost(const TransportPlan& plan, const FiniteDistribution& p,
                 const FiniteDistribution& q, GroundMetric g) {
    double c = 0.0;
    for (const auto& e : plan.entries) {
        c += e.mass * ground_distance(g, p.atoms()[e.source].string, q.atoms()[e.target].string);
    }
    return c;
}

}  // namespace doho
