#ifndef PERMPROP_SPHERICAL_HPP
#define PERMPROP_SPHERICAL_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "permprop/blocks.hpp"
#include "permprop/permutation.hpp"

namespace permprop {

/// A word in the adjacent transpositions s_1..s_{n-1} whose product is some
/// w with letters.size() == l(w) (i.e. a reduced expression for w).
struct ReducedWord {
  int n = 0;
  std::vector<int> letters;
};

struct WordEvaluation {
  Permutation product;
  bool reduced = false;
};

/// Multiplies s_{i_1} s_{i_2} ... s_{i_l} and reports whether the word
/// length equals the product's inversion number.
WordEvaluation evaluate_word(int n, std::span<const int> letters);

/// Letter-usage budgets for the decomposition cut out by D = {1..n-1} \ I:
/// each cut letter d_t may be used at most once, each block's interior
/// letters at most C(size+1, 2) - 1 times with multiplicity.
struct SphericalBudget {
  BlockDecomposition decomposition;
  std::vector<int> d_letter_budget;           // parallel to decomposition.D
  std::vector<std::int64_t> block_budget;     // parallel to block_sizes

  static SphericalBudget make(const BlockDecomposition& decomposition);

  /// Decrements the budget slot for `letter`; false (and no change) when
  /// the slot is exhausted.
  bool try_consume(int letter);
  void restore(int letter);
  std::int64_t total_remaining() const;
};

/// fast may pre-filter on is_proper; verification must not, so that the
/// spherical => proper implication can be tested without circularity.
enum class SearchMode { verification, fast };

/// True iff some reduced word for w fits the budgets of I's decomposition.
/// Requires I to be a subset of J(w) (precondition_error naming the first
/// offending index otherwise).
bool is_i_spherical(const Permutation& w, const std::vector<int>& I,
                    SearchMode mode = SearchMode::verification);

/// The first qualifying reduced word in deterministic search order
/// (candidate descents tried in increasing letter order), or nullopt.
/// A returned word has been re-verified by evaluation and budget replay.
std::optional<ReducedWord> witness_word(
    const Permutation& w, const std::vector<int>& I,
    SearchMode mode = SearchMode::verification);

/// Independent replay: word evaluates to w, is reduced, and fits a fresh
/// budget for I's decomposition.
bool verify_witness(const Permutation& w, const std::vector<int>& I,
                    const ReducedWord& word);

struct SphericalCensusRow {
  Permutation w;
  std::vector<std::int32_t> left_descents;
  std::int64_t ell = 0;
  int d = 0;
  std::int64_t x = 0;
  bool proper = false;
  bool maximally_spherical = false;
  bool some_i_spherical = false;
  std::vector<int> witness;  // empty when no qualifying word exists
};

inline constexpr int kCensusCap = 6;

/// One row per w in S_n, in lexicographic order. maximally_spherical tests
/// I = J(w); some_i_spherical enumerates all subsets I of J(w).
std::vector<SphericalCensusRow> spherical_census(
    int n, int cap = kCensusCap, SearchMode mode = SearchMode::verification);

/// CSV columns: oneline,J,ell,d,X,proper,maximally_spherical,
/// some_I_spherical,witness (letters joined by ';').
void write_census_csv(std::ostream& out,
                      std::span<const SphericalCensusRow> rows);

}  // namespace permprop

#endif  // PERMPROP_SPHERICAL_HPP
