#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bcl {

// One receipt line: product `product_id` was seen in basket `basket_id`.
// Both ids are opaque non-empty strings.
struct Record {
  std::string basket_id;
  std::string product_id;
};

// Immutable basket-by-product incidence. Rows are baskets, columns are
// products; a cell is 1 when the product occurs in the basket. Rows are
// stored as sorted product-index lists, which is exactly what the cost
// evaluation iterates; the dense 0/1 view is available through contains().
// Instances never change after construction and are safe to share across
// threads.
class BasketMatrix {
 public:
  // `rows` holds, per basket, the sorted unique product column indices.
  // Every row must reference valid columns and hold at least two products.
  BasketMatrix(std::vector<std::string> product_ids,
               const std::vector<std::vector<std::uint32_t>>& rows,
               std::size_t dropped_baskets = 0);

  std::size_t n_baskets() const { return row_offsets_.size() - 1; }
  std::size_t n_products() const { return product_ids_.size(); }

  // Product column indices of basket b, ascending.
  std::span<const std::uint32_t> row(std::size_t b) const {
    return {items_.data() + row_offsets_[b],
            items_.data() + row_offsets_[b + 1]};
  }
  std::size_t row_size(std::size_t b) const {
    return row_offsets_[b + 1] - row_offsets_[b];
  }
  // The incidence cell a_{b,j}.
  bool contains(std::size_t b, std::uint32_t j) const;

  const std::vector<std::string>& product_ids() const { return product_ids_; }

  // Input baskets discarded for holding fewer than min_items products.
  std::size_t dropped_baskets() const { return dropped_baskets_; }
  std::size_t total_items() const { return items_.size(); }

 private:
  std::vector<std::string> product_ids_;
  std::vector<std::uint64_t> row_offsets_;
  std::vector<std::uint32_t> items_;
  std::size_t dropped_baskets_ = 0;
};

// Assignment of each product to one cluster: labels[j] in 1..max_clusters.
// Not every cluster has to be used. Plain copyable data; this is both the
// genotype of the evolutionary search and the output of every method.
struct Clustering {
  std::vector<std::int32_t> labels;
  std::int32_t max_clusters = 0;

  std::size_t n_clusters_used() const;

  bool operator==(const Clustering&) const = default;
};

// Throws InvalidArgument when max_clusters < 1 or any label falls outside
// 1..max_clusters; the message names the first offending position (1-based).
void validate_clustering(const Clustering& c);

// Ground-truth category of each product, used for evaluation only.
// labels[j] in 1..n_categories, aligned with the matrix column order;
// every category is used by at least one product. category_names, when
// non-empty, has one entry per category.
struct CategoryLabels {
  std::vector<std::int32_t> labels;
  std::int32_t n_categories = 0;
  std::vector<std::string> category_names;
};

void validate_categories(const CategoryLabels& r);

// Evaluation statistics of one clustering against one dataset.
struct EvaluationReport {
  double cost = 0.0;
  double purity = 0.0;
  double reverse_purity = 0.0;
  double rand_index = 0.0;
  std::size_t n_clusters_used = 0;
  std::vector<double> per_category_violation;
  double global_violation = 0.0;
};

// Builds the incidence matrix from raw (basket, product) records.
// Duplicate records collapse to a single occurrence; baskets retaining
// fewer than min_items distinct products are dropped (and counted on the
// result). Rows keep the first-appearance order of basket ids, columns the
// first-appearance order of product ids among surviving baskets. Throws
// InvalidArgument("no usable baskets") when nothing survives.
BasketMatrix build_matrix(std::span<const Record> records,
                          std::size_t min_items = 2);

}  // namespace bcl
