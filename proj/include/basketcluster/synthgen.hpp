#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "basketcluster/model.hpp"

namespace bcl {

// Synthetic shopping-basket scenario. Each basket belongs to one customer
// type: type A picks its categories uniformly from all categories, type B
// only from the first half, type C only from the second half. Every chosen
// category contributes one product, or two distinct ones with probability
// second_product_prob.
struct Scenario {
  std::uint32_t n_categories = 10;
  std::uint32_t products_per_category = 10;
  std::uint32_t n_baskets = 10000;
  std::uint32_t categories_per_basket = 4;
  double second_product_prob = 0.1;
  double share_a = 1.0;
  double share_b = 0.0;
  double share_c = 0.0;
  std::uint64_t seed = 0;
};

struct Dataset {
  BasketMatrix baskets;
  CategoryLabels categories;
};

// Throws InvalidArgument on inconsistent settings (shares not summing to 1,
// categories_per_basket out of range, half-restricted customers requested
// with categories_per_basket beyond half the categories, ...).
void validate_scenario(const Scenario& s);

// Draws the dataset. Products are column-ordered category by category with
// ids "p001", "p002", ...; category names are "c01", "c02", .... The
// returned labels record the generating category of every product. A fixed
// scenario yields the identical dataset on every run.
Dataset generate(const Scenario& s);

// One dataset per probability, seeded with derive_seed(base.seed, index).
std::vector<Dataset> sweep_second_product(const Scenario& base,
                                          std::span<const double> probs);

// One dataset per combined B+C share s, generated with customer mix
// (1-s, s/2, s/2) and seed derive_seed(base.seed, index).
std::vector<Dataset> sweep_customer_mix(const Scenario& base,
                                        std::span<const double> bc_shares);

}  // namespace bcl
