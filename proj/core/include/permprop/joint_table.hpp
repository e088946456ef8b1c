#ifndef PERMPROP_JOINT_TABLE_HPP
#define PERMPROP_JOINT_TABLE_HPP

#include <iosfwd>
#include <vector>

#include "permprop/bigint.hpp"

namespace permprop {

/// counts[k][m] = number of w in S_n with k inversions and m left descents.
/// k ranges over 0..C(n,2), m over 0..n-1.
struct JointCountTable {
  int n = 0;
  std::vector<std::vector<BigInt>> counts;

  int max_inversions() const { return n * (n - 1) / 2; }
  int max_descents() const { return n > 1 ? n - 1 : 0; }
  const BigInt& at(int k, int m) const {
    return counts[static_cast<size_t>(k)][static_cast<size_t>(m)];
  }

  BigInt total() const;

  /// counts[k][m] == counts[C(n,2)-k][n-1-m] (composing with the reversal
  /// complements both statistics).
  bool complement_symmetric() const;

  /// CSV with header "k,m,count"; one row per cell, k-major order.
  void dump_csv(std::ostream& out) const;
  static JointCountTable load_csv(std::istream& in);
};

inline constexpr int kJointTableCap = 30;
inline constexpr int kBruteForceCap = 10;

/// Tallies (inversions, left descents) by direct iteration over S_n.
JointCountTable brute_force_joint_table(int n);

/// Same table by dynamic programming over Lehmer codes c_1..c_n
/// (0 <= c_i <= n-i, sum = inversions, descent at i iff c_i > c_{i+1}),
/// scanning right to left with suffix sums so each state is O(1).
JointCountTable lehmer_dp_joint_table(int n, int cap = kJointTableCap);

/// Rough allocation size of the DP working set, in bytes.
std::size_t joint_table_memory_estimate(int n);

/// Number of proper permutations: sum of counts[k][m] over cells with
/// k - C(m+1, 2) <= n.
BigInt count_proper(const JointCountTable& table);
BigInt count_proper(int n, int cap = kJointTableCap);

}  // namespace permprop

#endif  // PERMPROP_JOINT_TABLE_HPP
