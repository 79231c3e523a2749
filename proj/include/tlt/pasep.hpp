#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tlt/numeric.hpp"

namespace tlt {

// A word over {particle, empty} of length n, serialized with '1' for a
// particle and '0' for an empty site.
using PasepState = std::string;

// gamma = delta = 0 throughout; rates live in [0,1].
struct PasepParams {
  Rat alpha{1};
  Rat beta{1};
  Rat q{1};
};

struct StateDistribution {
  std::map<PasepState, Rat> probs;
  bool operator==(const StateDistribution&) const = default;
};

// P(s) = #{tableaux of size n+1 whose border interior reads s} / (n+1)!,
// i.e. the projection of the uniform tableau distribution.
StateDistribution tableau_distribution(int n);

// X(s) = 2c(s) - 1 where c(s) is the corner count of the bordered word
// E..s..N; equals the corner count of any tableau projecting to s.
int X_of_state(const PasepState& s);

// Row-stochastic 2^n x 2^n matrix over states indexed by bitmask (site 0 =
// leftmost character, particle bit set). One of the n+1 locations is chosen
// uniformly: the left boundary admits a particle with rate alpha, the right
// boundary releases one with rate beta, an interior pair hops right
// (particle-empty) with rate 1 and left (empty-particle) with rate q;
// leftover mass stays put. Throws InvalidParams if a rate leaves [0,1].
std::vector<std::vector<Rat>> transition_matrix(int n, const PasepParams& params);

// Unique probability vector pi with pi M = pi, by exact Gaussian
// elimination; throws NotIrreducible when the fixed space is degenerate.
StateDistribution stationary(const std::vector<std::vector<Rat>>& m);

// (1/(n+1)!) * sum over size-(n+1) tableaux of (2c(T) - 1); equals (n+2)/3
// exactly whenever the corner-count conjecture holds at n+1.
Rat expected_X(int n);

// Seeded simulation of the chain; occupation frequencies after a burn-in of
// steps/10, as exact counts over the remaining steps.
StateDistribution mc_sample(int n, const PasepParams& params, std::uint64_t steps,
                            std::uint64_t seed);

// Total variation distance between two distributions on the same state set.
Rat total_variation(const StateDistribution& a, const StateDistribution& b);

PasepState index_to_state(int n, unsigned mask);
unsigned state_to_index(const PasepState& s);

}  // namespace tlt
