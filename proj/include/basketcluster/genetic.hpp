#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "basketcluster/model.hpp"
#include "basketcluster/rng.hpp"

namespace bcl {

// Parameters of the integer-encoded evolutionary search.
struct GaConfig {
  std::uint32_t population_size = 500;
  std::uint32_t max_generations = 1000;
  // Share of the population copied unchanged into the next generation.
  // The elite count is ceil(elite_ratio * population_size), at least 1
  // whenever elite_ratio > 0, and must stay below the population size.
  double elite_ratio = 0.1;
  // Per-gene probability of resampling the label uniformly from
  // 1..max_clusters. The draw may repeat the current label, so the
  // effective change rate is mutation_chance * (1 - 1/max_clusters).
  double mutation_chance = 0.01;
  std::int32_t max_clusters = 0;  // required, >= 1
  // Stop after this many consecutive generations without strict
  // improvement of the best cost; 0 disables early stopping.
  std::uint32_t stall_limit = 50;
  std::uint64_t seed = 0;
};

struct GaResult {
  Clustering best;
  double best_cost = 0.0;
  // trace[g] is the best cost seen up to and including generation g
  // (entry 0 covers the random initial population), hence non-increasing.
  std::vector<double> cost_trace;
  std::uint32_t generations_run = 0;
  bool stopped_early = false;
};

// Random population: every gene drawn independently uniform over
// 1..cfg.max_clusters.
std::vector<Clustering> init_population(std::size_t n_products,
                                        const GaConfig& cfg, Rng& rng);

// Rank draw over a population of size n sorted ascending by cost: 0-based
// rank k is chosen with probability (n - k) / (n(n+1)/2).
std::size_t select_rank(std::size_t n, Rng& rng);

// Draws one parent from a population sorted ascending by cost, weighting
// ranks linearly (best rank weight n, worst weight 1).
const Clustering& select_parent(std::span<const Clustering> sorted_population,
                                Rng& rng);

// Deterministic one-point recombination: genes before `cut` (1..n-1) come
// from `prefix`, the rest from `suffix`.
Clustering crossover_at(const Clustering& prefix, const Clustering& suffix,
                        std::size_t cut);

// One-point crossover with random cut and a fair coin deciding which
// parent supplies the prefix. Draw order: cut (skipped for single-gene
// parents), then coin.
Clustering crossover_one_point(const Clustering& a, const Clustering& b,
                               Rng& rng);

// Independently per gene: one uniform [0,1) draw, and when it falls below
// mutation_chance one label draw from 1..n_clusters.
Clustering mutate(Clustering child, double mutation_chance,
                  std::int32_t n_clusters, Rng& rng);

// Full evolutionary minimization of cost(m, .). Each generation sorts the
// population ascending by cost, carries the elite over unchanged and fills
// the remaining slots by select -> crossover -> mutate. Per offspring the
// stream order is: parent A rank, parent B rank, cut, coin, per-gene
// mutation draws; a fixed (matrix, config) pair therefore reproduces the
// result exactly. The incumbent best is tracked outside the population, so
// early stopping can never lose it.
//
// Fitness evaluation is pure and consumes no randomness; eval_threads > 1
// evaluates offspring concurrently with results gathered in slot order,
// which leaves the outcome unchanged.
GaResult run_ga(const BasketMatrix& m, const GaConfig& cfg,
                unsigned eval_threads = 1);

}  // namespace bcl
