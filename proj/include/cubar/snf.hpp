#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cubar/sparse.hpp"

namespace cubar {

using BigInt = boost::multiprecision::cpp_int;

/* Ordered invariant factors d_1 | d_2 | ... | d_r of an integer matrix
 * (nonzero diagonal of the Smith normal form, all positive). Empty for
 * the zero matrix. Classical exact pivoting; pivot = smallest nonzero
 * magnitude to limit fill and coefficient growth. */
std::vector<BigInt> smith_normal_form(const SparseMatInt& m);

/* Rank over Z (= number of invariant factors). */
int integer_rank(const SparseMatInt& m);

} // namespace cubar
