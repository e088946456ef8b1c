#include "permprop/moments.hpp"

#include <stdexcept>
#include <string>

namespace permprop {

ExactMoments exact_moments(const JointCountTable& table) {
  if (table.n < 2) {
    throw std::invalid_argument("moments need degree >= 2, got " +
                                std::to_string(table.n));
  }
  BigInt sum_l = 0, sum_d = 0, sum_d2 = 0, sum_x = 0, sum_x2 = 0;
  for (int k = 0; k <= table.max_inversions(); ++k) {
    for (int m = 0; m <= table.max_descents(); ++m) {
      const BigInt& c = table.at(k, m);
      if (c == 0) continue;
      const std::int64_t x = k - choose2(static_cast<std::int64_t>(m) + 1);
      sum_l += c * k;
      sum_d += c * m;
      sum_d2 += c * (static_cast<std::int64_t>(m) * m);
      sum_x += c * x;
      sum_x2 += c * (x * x);
    }
  }
  const BigInt size = factorial(table.n);
  ExactMoments moments;
  moments.n = table.n;
  moments.E_L = BigRat(sum_l, size);
  moments.E_D = BigRat(sum_d, size);
  moments.E_D2 = BigRat(sum_d2, size);
  moments.E_X = BigRat(sum_x, size);
  moments.E_X2 = BigRat(sum_x2, size);
  moments.Var_X = moments.E_X2 - moments.E_X * moments.E_X;
  return moments;
}

ExactMoments exact_moments(int n, int cap) {
  if (n < 2) {
    throw std::invalid_argument("moments need degree >= 2, got " +
                                std::to_string(n));
  }
  return exact_moments(lehmer_dp_joint_table(n, cap));
}

BigRat formula_ex(int n) {
  if (n < 2) {
    throw std::invalid_argument("formula defined for n >= 2, got " +
                                std::to_string(n));
  }
  return BigRat(3 * static_cast<std::int64_t>(n) * n - 7 * n + 2, 24);
}

BigRat formula_ed2(int n) {
  if (n < 2) {
    throw std::invalid_argument("formula defined for n >= 2, got " +
                                std::to_string(n));
  }
  return BigRat(n - 1, 2) + BigRat(n - 2, 3) +
         BigRat(choose2(n - 1) - (n - 2), 2);
}

BigRat chebyshev_bound(const ExactMoments& moments) {
  const BigRat threshold(moments.n);
  if (moments.E_X <= threshold) return BigRat(1);
  const BigRat gap = moments.E_X - threshold;
  const BigRat bound = moments.Var_X / (gap * gap);
  return bound < 1 ? bound : BigRat(1);
}

BigRat chebyshev_bound(int n, int cap) {
  if (n < 2) return BigRat(1);  // X is identically 0 on S_1
  return chebyshev_bound(exact_moments(n, cap));
}

}  // namespace permprop
