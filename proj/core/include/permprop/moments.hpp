#ifndef PERMPROP_MOMENTS_HPP
#define PERMPROP_MOMENTS_HPP

#include "permprop/bigint.hpp"
#include "permprop/joint_table.hpp"

namespace permprop {

/// Exact rational moments of (L, D, X) over uniform S_n, where L is the
/// inversion number, D the left descent count, and X = L - C(D+1, 2).
struct ExactMoments {
  int n = 0;
  BigRat E_L, E_D, E_D2, E_X, E_X2, Var_X;
};

/// Moments from a joint count table; no floating point anywhere.
ExactMoments exact_moments(const JointCountTable& table);

/// Builds the DP table internally. Requires n >= 2.
ExactMoments exact_moments(int n, int cap = kJointTableCap);

/// Closed form (3n^2 - 7n + 2)/24 for the mean of X; requires n >= 2.
BigRat formula_ex(int n);

/// Closed form (n-1)/2 + (n-2)/3 + (C(n-1,2) - (n-2))/2 for E[D^2];
/// requires n >= 2.
BigRat formula_ed2(int n);

/// min(1, Var(X) / (E[X] - n)^2) when E[X] > n, else 1 (bound vacuous).
BigRat chebyshev_bound(const ExactMoments& moments);
BigRat chebyshev_bound(int n, int cap = kJointTableCap);

}  // namespace permprop

#endif  // PERMPROP_MOMENTS_HPP
