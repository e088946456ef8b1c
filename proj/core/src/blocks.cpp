#include "permprop/blocks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "permprop/bigint.hpp"

namespace permprop {

BlockDecomposition block_decomposition(int n, const std::vector<int>& I) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  BlockDecomposition b;
  b.n = n;
  b.I = I;
  std::sort(b.I.begin(), b.I.end());
  b.I.erase(std::unique(b.I.begin(), b.I.end()), b.I.end());
  for (int i : b.I) {
    if (i < 1 || i > n - 1) {
      throw std::invalid_argument("index " + std::to_string(i) +
                                  " outside 1.." + std::to_string(n - 1));
    }
  }
  size_t next = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (next < b.I.size() && b.I[next] == i) {
      ++next;
    } else {
      b.D.push_back(i);
    }
  }
  int prev = 0;
  for (int d : b.D) {
    b.block_sizes.push_back(d - prev);
    prev = d;
  }
  b.block_sizes.push_back(n - prev);
  return b;
}

std::int64_t dim_unipotent(const BlockDecomposition& b) {
  std::int64_t total = 0;
  for (int size : b.block_sizes) total += choose2(size);
  return total;
}

std::int64_t max_unipotent_dim(int n, int d) {
  if (d < 0 || d > n - 1) {
    throw std::invalid_argument("descent count " + std::to_string(d) +
                                " outside 0.." + std::to_string(n - 1));
  }
  return choose2(static_cast<std::int64_t>(d) + 1);
}

}  // namespace permprop
