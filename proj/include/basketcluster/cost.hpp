#pragma once

#include <cstdint>
#include <span>

#include "basketcluster/model.hpp"

namespace bcl {

// Pair-decision counts of a single basket: d products yield C(d,2)
// unordered product pairs ("decisions"), of which `violating_decisions`
// join two products of the same cluster.
struct BasketCostTerms {
  std::uint64_t basket_size = 0;      // d
  std::uint64_t total_decisions = 0;  // C(d, 2)
  std::uint64_t violating_decisions = 0;
};

// Terms for one basket given as its sorted product-index row. The row must
// reference at least two products and only columns covered by c.
BasketCostTerms basket_terms(std::span<const std::uint32_t> row,
                             const Clustering& c);

// Objective value: the average over baskets of the share of same-cluster
// product pairs, in [0, 1]. 0 means no basket ever holds two products of
// one cluster; 1 means every basket lies entirely inside single clusters.
// Accumulation runs in ascending basket order in double precision, so
// repeated evaluations agree bit for bit.
double cost(const BasketMatrix& m, const Clustering& c);

struct ExhaustiveResult {
  Clustering best;
  double cost = 0.0;
  std::uint64_t enumerated = 0;
};

// Global minimizer of cost() over every label vector in
// {1..n_clusters}^n_products; ties resolve to the lexicographically
// smallest vector. Refuses instances whose enumeration count exceeds
// `budget` (BudgetExceeded names the count). Intended as the ground-truth
// oracle for the heuristic search on small instances.
ExhaustiveResult exhaustive_minimum(const BasketMatrix& m,
                                    std::int32_t n_clusters,
                                    std::uint64_t budget = 10'000'000);

}  // namespace bcl
