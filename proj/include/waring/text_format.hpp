// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "waring/matrix.hpp"
#include "waring/order.hpp"

namespace waring {

// One of
//   minpoly:c0,c1,...,c_{n-1}     monic, constant term first, leading 1 implied
//   quad:d=<int>,f=<int>          Z[f*omega] in Q(sqrt d); f defaults to 1
//   external:deg=<int>,disc=<int> degree and discriminant only
// Throws kParse on malformed text; construction errors propagate unchanged.
OrderDescriptor parse_order(std::string_view text);

// Rows separated by ';', entries by ',' or whitespace. An entry is an integer
// (the constant coordinate) or a tuple "(c0,c1,...)" with at most `degree`
// coordinates, missing ones read as zero.
MatrixOverOrder parse_matrix(std::string_view text, const MonogenicOrder& order);

// Inverse of parse_matrix: entries with only a constant coordinate print as
// bare integers, others as full tuples.
std::string format_matrix(const MatrixOverOrder& m);

}  // namespace waring
