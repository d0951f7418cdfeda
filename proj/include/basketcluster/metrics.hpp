#pragma once

#include <cstdint>
#include <vector>

#include "basketcluster/model.hpp"

namespace bcl {

// Pairwise agreement counts between a clustering and the true categories
// over all C(n_P, 2) product pairs.
struct PairCounts {
  std::uint64_t true_positive = 0;  // co-clustered in both partitions
  std::uint64_t true_negative = 0;  // separated in both partitions
  std::uint64_t total_pairs = 0;
};

PairCounts pair_counts(const Clustering& c, const CategoryLabels& r);

// Share of products whose cluster's best-matching category is their own:
// sum over clusters of the largest category intersection, divided by the
// number of products. In (0, 1]; 1 iff every cluster is category-pure.
double purity(const Clustering& c, const CategoryLabels& r);

// purity() with the roles of clusters and categories exchanged.
double reverse_purity(const Clustering& c, const CategoryLabels& r);

// Share of product pairs on which both partitions agree (together in both
// or apart in both). Counted in exact integers; needs n_P >= 2.
double rand_index(const Clustering& c, const CategoryLabels& r);

// Per category k: the share of baskets containing at least two products of
// category k among the baskets containing at least one; 0 for categories
// never purchased. Indexed by category (element 0 = category 1).
std::vector<double> violation_ratios(const BasketMatrix& m,
                                     const CategoryLabels& r);

// Share of all baskets containing two or more products of any single
// category.
double global_violation_ratio(const BasketMatrix& m, const CategoryLabels& r);

// Full statistics of one clustering against one dataset with known
// categories.
EvaluationReport evaluate(const BasketMatrix& m, const Clustering& c,
                          const CategoryLabels& r);

}  // namespace bcl
