#ifndef PERMPROP_ENUMERATE_HPP
#define PERMPROP_ENUMERATE_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "permprop/errors.hpp"
#include "permprop/permutation.hpp"

namespace permprop {

/// Guard against accidentally iterating more than 12! elements; callers that
/// really mean it pass a larger cap.
inline constexpr int kEnumerationCap = 12;

/// Calls fn(const Permutation&) once per element of S_n in lexicographic
/// order of one-line notation.
template <class F>
void for_each_permutation(int n, F&& fn, int cap = kEnumerationCap) {
  if (n < 1 || n > cap) {
    throw cap_error("degree " + std::to_string(n) +
                    " outside enumeration range 1.." + std::to_string(cap) +
                    " (raise with --cap-override)");
  }
  std::vector<std::int32_t> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    fn(Permutation::unchecked(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace permprop

#endif  // PERMPROP_ENUMERATE_HPP
