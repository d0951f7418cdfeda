#pragma once

#include <cstdint>
#include <vector>

#include "basketcluster/model.hpp"

namespace bcl {

// What the diagonal of the co-occurrence matrix carries: the product's own
// basket frequency, or zero.
enum class DiagMode { kFrequency, kZero };

// Symmetric n_P x n_P joint-frequency features: entry (i, j), i != j, is
// the share of baskets containing both products. Row i is product i's
// feature vector for the classical clustering baselines.
struct CooccurrenceFeatures {
  std::size_t n_products = 0;
  std::vector<double> values;  // row-major, n_products^2
  DiagMode diag = DiagMode::kFrequency;

  double at(std::size_t i, std::size_t j) const {
    return values[i * n_products + j];
  }
};

CooccurrenceFeatures cooccurrence(const BasketMatrix& m,
                                  DiagMode diag = DiagMode::kFrequency);

struct KmeansOptions {
  std::int32_t k = 0;  // required, 1..n_products
  std::uint32_t restarts = 1000;
  std::uint32_t max_iter = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;  // restarts are independent; > 1 runs them in parallel
};

struct KmeansResult {
  Clustering clustering;
  double wcss = 0.0;  // within-cluster sum of squared distances
  std::uint32_t iterations = 0;
  std::vector<double> wcss_trace;  // per Lloyd iteration of the winning run
};

// Lloyd's algorithm on the feature rows with squared Euclidean distance.
// Each restart initializes centroids from k distinct rows; clusters that
// run empty are re-seeded with the point farthest from its centroid. Among
// all restarts the assignment with the lowest WCSS wins, ties going to the
// earliest restart, so the result is deterministic for a fixed seed.
KmeansResult kmeans(const CooccurrenceFeatures& f, const KmeansOptions& opts);

// Single Lloyd run used by kmeans(); exposed for direct testing.
KmeansResult kmeans_single_run(const CooccurrenceFeatures& f, std::int32_t k,
                               std::uint32_t max_iter, std::uint64_t seed);

struct WardResult {
  Clustering clustering;
  // Merge cost of each agglomeration step; non-decreasing.
  std::vector<double> merge_heights;
};

// Agglomerative clustering minimizing the Ward variance increase,
// implemented as the Lance-Williams recurrence on squared Euclidean
// distances and cut at k clusters. Merge ties resolve to the smallest pair
// of cluster indices; output clusters are numbered by their smallest
// member.
WardResult ward(const CooccurrenceFeatures& f, std::int32_t k);

}  // namespace bcl
