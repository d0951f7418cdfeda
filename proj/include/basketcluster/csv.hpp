#pragma once

#include <string>
#include <vector>

#include "basketcluster/model.hpp"

namespace bcl {

// Receipt file: header "basket_id,product_id", one data row per item
// occurrence, UTF-8. Fields may be quoted; embedded quotes double up.
std::vector<Record> read_records_csv(const std::string& path);
BasketMatrix read_baskets_csv(const std::string& path,
                              std::size_t min_items = 2);

// Writes one row per (basket, product) cell, baskets in row order with
// synthesized basket ids, products in column order.
void write_baskets_csv(const BasketMatrix& m, const std::string& path);

// Category file: header "product_id,category_id". The returned labels are
// aligned to the matrix column order; category indices follow the first
// appearance of each category_id in the file. Every matrix product must be
// covered; products unknown to the matrix are ignored.
CategoryLabels read_categories_csv(const std::string& path,
                                   const BasketMatrix& m);
void write_categories_csv(const CategoryLabels& r, const BasketMatrix& m,
                          const std::string& path);

}  // namespace bcl
