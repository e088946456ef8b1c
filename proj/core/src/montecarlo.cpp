#include "permprop/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "permprop/moments.hpp"

namespace permprop {

BigRat MomentSummary::mean_x() const { return BigRat(sum_x, samples); }

BigRat MomentSummary::second_moment_x() const { return BigRat(sum_x2, samples); }

BigRat MomentSummary::proper_rate() const {
  return BigRat(proper_hits, samples);
}

BigRat MomentSummary::ratio_to_n4_over_64() const {
  const BigInt n4 = BigInt(n) * n * n * n;
  return second_moment_x() * 64 / BigRat(n4);
}

double MomentSummary::se_mean() const {
  // Unbiased sample variance from the exact sums, then a float only here.
  const BigRat var = (BigRat(sum_x2) - BigRat(sum_x * sum_x, samples)) /
                     BigRat(samples - 1);
  return std::sqrt(to_double(var) / static_cast<double>(samples));
}

double MomentSummary::se_rate() const {
  const double p = to_double(proper_rate());
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

Permutation sample_permutation(int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<std::int32_t> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  for (size_t i = word.size() - 1; i > 0; --i) {
    const auto j = static_cast<size_t>(rng.below(i + 1));
    std::swap(word[i], word[j]);
  }
  return Permutation::unchecked(std::move(word));
}

namespace {

struct ChunkTotals {
  __int128 sum_x = 0;
  __int128 sum_x2 = 0;
  std::uint64_t proper_hits = 0;
};

struct Workspace {
  std::vector<std::int32_t> word, pos, buf, tmp;
};

void run_chunk(int n, std::uint64_t seed, std::uint64_t chunk,
               std::uint64_t count, Workspace& ws, ChunkTotals& totals) {
  SplitMix64 rng = substream(seed, chunk);
  ws.word.resize(static_cast<size_t>(n));
  for (std::uint64_t s = 0; s < count; ++s) {
    std::iota(ws.word.begin(), ws.word.end(), 1);
    for (size_t i = ws.word.size() - 1; i > 0; --i) {
      const auto j = static_cast<size_t>(rng.below(i + 1));
      std::swap(ws.word[i], ws.word[j]);
    }
    const std::int64_t inv = detail::inversions_merge(ws.word, ws.buf, ws.tmp);
    const int d = detail::left_descent_count(ws.word, ws.pos);
    const std::int64_t x = inv - choose2(static_cast<std::int64_t>(d) + 1);
    totals.sum_x += x;
    totals.sum_x2 += static_cast<__int128>(x) * x;
    totals.proper_hits += x <= n;
  }
}

BigInt to_bigint(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-v)
                                   : static_cast<unsigned __int128>(v);
  BigInt result = static_cast<std::uint64_t>(mag >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(mag);
  return negative ? -result : result;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

MomentSummary estimate_moments(int n, std::uint64_t samples, std::uint64_t seed,
                               int threads) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (samples < 2) {
    throw std::invalid_argument("need at least 2 samples for a variance");
  }
  const std::uint64_t chunks = (samples + kChunkSamples - 1) / kChunkSamples;
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(resolve_threads(threads), chunks));

  std::vector<ChunkTotals> partials(static_cast<size_t>(workers));
  std::atomic<std::uint64_t> next_chunk{0};
  auto worker_loop = [&](int worker) {
    Workspace ws;
    ChunkTotals local;
    for (;;) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= chunks) break;
      const std::uint64_t begin = chunk * kChunkSamples;
      const std::uint64_t count = std::min(kChunkSamples, samples - begin);
      run_chunk(n, seed, chunk, count, ws, local);
    }
    partials[static_cast<size_t>(worker)] = local;
  };

  if (workers == 1) {
    worker_loop(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker_loop, t);
    for (auto& t : pool) t.join();
  }

  MomentSummary summary;
  summary.n = n;
  summary.samples = samples;
  summary.seed = seed;
  // Exact integer merge: associative, so worker order cannot matter.
  for (const auto& part : partials) {
    summary.sum_x += to_bigint(part.sum_x);
    summary.sum_x2 += to_bigint(part.sum_x2);
    summary.proper_hits += part.proper_hits;
  }
  return summary;
}

SampleReport annotate(const MomentSummary& summary, int table_cap) {
  SampleReport report{summary, std::nullopt, std::nullopt, std::nullopt};
  if (summary.n >= 2) report.formula_ex_value = formula_ex(summary.n);
  if (summary.n <= table_cap) {
    const JointCountTable table = lehmer_dp_joint_table(summary.n, table_cap);
    report.exact_rate = BigRat(count_proper(table), factorial(summary.n));
    if (summary.n >= 2) report.chebyshev = chebyshev_bound(exact_moments(table));
  }
  return report;
}

std::vector<SampleReport> decay_experiment(const std::vector<int>& ns,
                                           std::uint64_t samples,
                                           std::uint64_t seed, int threads,
                                           int table_cap) {
  if (ns.empty()) throw std::invalid_argument("need at least one degree");
  if (!std::is_sorted(ns.begin(), ns.end())) {
    throw std::invalid_argument("degrees must be ascending");
  }
  std::vector<SampleReport> reports;
  reports.reserve(ns.size());
  for (int n : ns) {
    reports.push_back(annotate(estimate_moments(n, samples, seed, threads), table_cap));
  }
  return reports;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

void write_montecarlo_csv(std::ostream& out,
                          std::span<const SampleReport> reports) {
  out << "n,samples,seed,mean_X,se_mean,formula_EX,m2_X,ratio_to_n4_over_64,"
         "proper_rate,se_rate,exact_rate,chebyshev_bound\n";
  for (const auto& report : reports) {
    const MomentSummary& s = report.summary;
    out << s.n << ',' << s.samples << ',' << s.seed << ','
        << decimal_string(s.mean_x(), 9) << ',' << fmt_double(s.se_mean()) << ',';
    if (report.formula_ex_value) out << decimal_string(*report.formula_ex_value, 9);
    out << ',' << decimal_string(s.second_moment_x(), 9) << ','
        << decimal_string(s.ratio_to_n4_over_64(), 9) << ','
        << decimal_string(s.proper_rate(), 9) << ',' << fmt_double(s.se_rate())
        << ',';
    if (report.exact_rate) out << decimal_string(*report.exact_rate, 9);
    out << ',';
    if (report.chebyshev) out << decimal_string(*report.chebyshev, 9);
    out << '\n';
  }
}

}  // namespace permprop
