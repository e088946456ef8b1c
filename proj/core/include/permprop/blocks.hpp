#ifndef PERMPROP_BLOCKS_HPP
#define PERMPROP_BLOCKS_HPP

#include <cstdint>
#include <vector>

namespace permprop {

/// The composition of {1..n} cut out by D = {1..n-1} \ I, with sentinels
/// d_0 = 0 and d_{k+1} = n. block_sizes has k+1 entries summing to n.
struct BlockDecomposition {
  int n = 0;
  std::vector<int> I;            // sorted subset of 1..n-1
  std::vector<int> D;            // sorted complement
  std::vector<int> block_sizes;  // d_t - d_{t-1} for t = 1..k+1
};

/// Builds the decomposition for I subset of {1..n-1}. Duplicates in I are
/// ignored; an element outside 1..n-1 raises std::invalid_argument.
BlockDecomposition block_decomposition(int n, const std::vector<int>& I);

/// Sum over blocks of C(size, 2).
std::int64_t dim_unipotent(const BlockDecomposition& b);

/// C(d+1, 2): the largest dim_unipotent attainable with n-1-d cut points.
std::int64_t max_unipotent_dim(int n, int d);

}  // namespace permprop

#endif  // PERMPROP_BLOCKS_HPP
