#ifndef PERMPROP_PERMUTATION_HPP
#define PERMPROP_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permprop {

/// An element of S_n in one-line notation: word()[i] is w(i+1), values 1..n.
/// Immutable after construction; all interfaces are 1-based.
class Permutation {
 public:
  /// Validates that `one_line` is a bijection on {1..n}; throws
  /// std::invalid_argument naming the first offending value otherwise.
  explicit Permutation(std::vector<std::int32_t> one_line);

  static Permutation identity(int n);

  /// Parses comma- or space-separated 1-based one-line notation,
  /// e.g. "4,5,6,1,2,3" or "4 5 6 1 2 3".
  static Permutation parse(std::string_view text);

  /// Wraps a word that the caller guarantees is already a valid bijection.
  static Permutation unchecked(std::vector<std::int32_t> one_line);

  int degree() const { return static_cast<int>(word_.size()); }

  /// w(i) for 1 <= i <= n.
  std::int32_t operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }

  std::span<const std::int32_t> word() const { return word_; }

  /// Comma-separated one-line notation.
  std::string str() const;

  bool operator==(const Permutation&) const = default;

 private:
  struct unchecked_tag {};
  Permutation(std::vector<std::int32_t> one_line, unchecked_tag)
      : word_(std::move(one_line)) {}

  std::vector<std::int32_t> word_;
};

/// Left descents of w: sorted positions i in 1..n-1 with w^-1(i+1) < w^-1(i).
struct DescentProfile {
  std::vector<std::int32_t> positions;
  int count() const { return static_cast<int>(positions.size()); }
};

Permutation inverse(const Permutation& w);

/// Number of pairs i < j with w(i) > w(j), via merge counting (O(n log n)).
std::int64_t inversion_number(const Permutation& w);

/// Direct O(n^2) pair count; reference implementation kept as a test oracle.
std::int64_t inversion_number_quadratic(const Permutation& w);

DescentProfile left_descent_set(const Permutation& w);

/// Same set computed the long way round: i such that l(s_i w) < l(w).
/// Must agree with left_descent_set; exercised as a cross-check.
DescentProfile left_descent_set_by_length(const Permutation& w);

/// Diagnostic variant that scans prefixes literally:
/// {i : exists j < i with w(j) = i+1}. This is NOT the left descent set
/// (e.g. it is empty for 2 3 1); kept only so the two readings can be
/// compared side by side.
DescentProfile left_descents_prefix_scan(const Permutation& w);

/// l(w) - C(d(w)+1, 2); may be negative.
std::int64_t statistic_x(const Permutation& w);

/// statistic_x(w) <= n.
bool is_proper(const Permutation& w);

namespace detail {

// Allocation-free kernels used by the sampling hot loop. `word` holds a
// bijection of 1..n; scratch buffers are resized as needed.
std::int64_t inversions_merge(std::span<const std::int32_t> word,
                              std::vector<std::int32_t>& buf,
                              std::vector<std::int32_t>& tmp);
int left_descent_count(std::span<const std::int32_t> word,
                       std::vector<std::int32_t>& pos);

}  // namespace detail

}  // namespace permprop

#endif  // PERMPROP_PERMUTATION_HPP
