#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "doho/core/bitstring.hpp"
#include "doho/core/distribution.hpp"

namespace doho {

inline constexpr std::size_t kMaxEnumeratedPerturbBits = 12;
inline constexpr std::size_t kMaxEnumeratedVertices = 7;

/// Explicit perturbation of x* (n <= 12): i.i.d. flips at rate eta
/// conditioned on at most floor(delta n) flips. Each bit then flips with
/// probability at most eta, exactly eta when delta = 1. Throws
/// std::invalid_argument for eta outside [0, 0.5), delta outside [0, 1], or
/// when the conditioning would discard more than half the mass.
FiniteDistribution perturb_dist(const BitString& center, double eta, double delta);

/// Push-forward of a shift law over {0..n-1} (empty = uniform) through
/// j -> x*.rotated(j), i.e. X_i = x*_{(i+j) mod n}.
FiniteDistribution shift_dist(const BitString& center, std::vector<double> law = {});

/// Push-forward of a law over vertex permutations through relabeling
/// (v <= 7). An empty law means uniform over all v! permutations.
FiniteDistribution iso_copies_dist(
    const BitString& adjacency,
    const std::vector<std::pair<std::vector<std::size_t>, double>>& law = {});

/// Adjacency strings of the path 0-1-...-(v-1) and the cycle on v vertices.
BitString path_graph(std::size_t v);
BitString cycle_graph(std::size_t v);

}  // namespace doho
