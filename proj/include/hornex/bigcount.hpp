#ifndef HORNEX_BIGCOUNT_HPP
#define HORNEX_BIGCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hornex {

/// Unbounded nonnegative model count. Counts over a w-element universe are
/// at most 2^w, so they never fit a fixed-width integer in general.
using BigCount = boost::multiprecision::cpp_int;

BigCount pow2(std::size_t exponent);

std::string to_decimal(const BigCount& n);

/// Row n of Pascal's triangle, truncated to the first `max_len` entries.
std::vector<BigCount> binomial_row(std::size_t n, std::size_t max_len);

}  // namespace hornex

#endif  // HORNEX_BIGCOUNT_HPP
