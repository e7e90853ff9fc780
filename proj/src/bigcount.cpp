#include "hornex/bigcount.hpp"

#include <algorithm>

namespace hornex {

BigCount pow2(std::size_t exponent) {
  BigCount one = 1;
  return one << exponent;
}

std::string to_decimal(const BigCount& n) { return n.str(); }

std::vector<BigCount> binomial_row(std::size_t n, std::size_t max_len) {
  std::size_t len = std::min(n + 1, max_len);
  std::vector<BigCount> row(len);
  if (len == 0) return row;
  row[0] = 1;
  for (std::size_t j = 1; j < len; ++j) {
    row[j] = row[j - 1] * (n - j + 1) / j;
  }
  return row;
}

}  // namespace hornex
