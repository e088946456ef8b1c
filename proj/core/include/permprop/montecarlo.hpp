#ifndef PERMPROP_MONTECARLO_HPP
#define PERMPROP_MONTECARLO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "permprop/bigint.hpp"
#include "permprop/joint_table.hpp"
#include "permprop/permutation.hpp"
#include "permprop/rng.hpp"

namespace permprop {

/// Streaming accumulator for uniform samples of S_n: exact integer sums of
/// X and X^2 plus the properness hit count. Ratios are converted to decimal
/// only at the reporting boundary.
struct MomentSummary {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  BigInt sum_x;
  BigInt sum_x2;
  std::uint64_t proper_hits = 0;

  BigRat mean_x() const;
  BigRat second_moment_x() const;
  BigRat proper_rate() const;
  /// 64 * E^[X^2] / n^4.
  BigRat ratio_to_n4_over_64() const;
  /// Standard error of the mean via the unbiased sample variance.
  double se_mean() const;
  /// Normal-approximation standard error of the properness rate
  /// (approximation degrades for rates near 0 or 1).
  double se_rate() const;
};

/// Samples are drawn in fixed chunks of this size with per-chunk
/// substreams, so results do not depend on worker count or scheduling.
inline constexpr std::uint64_t kChunkSamples = 1024;

/// Unbiased Fisher-Yates shuffle driven by `rng`; every element of S_n is
/// equally likely. Advances the generator.
Permutation sample_permutation(int n, SplitMix64& rng);

/// Estimates E[X], E[X^2] and Pr[proper] from `samples` uniform draws.
/// threads <= 0 means hardware concurrency. Requires samples >= 2.
MomentSummary estimate_moments(int n, std::uint64_t samples, std::uint64_t seed,
                               int threads = 0);

/// One output row of the sampling experiments: the empirical summary plus
/// whatever exact references exist at this degree.
struct SampleReport {
  MomentSummary summary;
  std::optional<BigRat> formula_ex_value;  // n >= 2
  std::optional<BigRat> exact_rate;        // n within the DP cap
  std::optional<BigRat> chebyshev;         // n within the DP cap
};

SampleReport annotate(const MomentSummary& summary, int table_cap = kJointTableCap);

/// Runs estimate_moments for each degree in ns (must be nonempty and
/// ascending) and annotates with exact values where the DP reaches.
std::vector<SampleReport> decay_experiment(const std::vector<int>& ns,
                                           std::uint64_t samples,
                                           std::uint64_t seed, int threads = 0,
                                           int table_cap = kJointTableCap);

/// CSV columns: n,samples,seed,mean_X,se_mean,formula_EX,m2_X,
/// ratio_to_n4_over_64,proper_rate,se_rate,exact_rate,chebyshev_bound.
void write_montecarlo_csv(std::ostream& out,
                          std::span<const SampleReport> reports);

}  // namespace permprop

#endif  // PERMPROP_MONTECARLO_HPP
