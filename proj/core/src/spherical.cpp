#include "permprop/spherical.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "permprop/bigint.hpp"
#include "permprop/enumerate.hpp"
#include "permprop/errors.hpp"

namespace permprop {

WordEvaluation evaluate_word(int n, std::span<const int> letters) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  for (int letter : letters) {
    if (letter < 1 || letter > n - 1) {
      throw std::invalid_argument("letter " + std::to_string(letter) +
                                  " outside 1.." + std::to_string(n - 1));
    }
  }
  std::vector<std::int32_t> word(static_cast<size_t>(n));
  std::vector<std::int32_t> pos(static_cast<size_t>(n) + 1);
  std::iota(word.begin(), word.end(), 1);
  std::iota(pos.begin(), pos.end(), 0);
  // Left-multiplying by s_i swaps the values i and i+1; build the product
  // right to left so the letters compose in written order.
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int i = *it;
    const std::int32_t p = pos[static_cast<size_t>(i)];
    const std::int32_t q = pos[static_cast<size_t>(i) + 1];
    std::swap(word[static_cast<size_t>(p) - 1], word[static_cast<size_t>(q) - 1]);
    pos[static_cast<size_t>(i)] = q;
    pos[static_cast<size_t>(i) + 1] = p;
  }
  WordEvaluation result{Permutation::unchecked(std::move(word)), false};
  result.reduced =
      inversion_number(result.product) == static_cast<std::int64_t>(letters.size());
  return result;
}

SphericalBudget SphericalBudget::make(const BlockDecomposition& decomposition) {
  SphericalBudget budget;
  budget.decomposition = decomposition;
  budget.d_letter_budget.assign(decomposition.D.size(), 1);
  budget.block_budget.reserve(decomposition.block_sizes.size());
  for (int size : decomposition.block_sizes) {
    budget.block_budget.push_back(choose2(static_cast<std::int64_t>(size) + 1) - 1);
  }
  return budget;
}

namespace {

// letter -> budget slot: cut letters hit their own unit budget, interior
// letters hit the budget of the block containing them.
struct LetterSlots {
  std::vector<bool> is_cut;  // indexed by letter
  std::vector<int> slot;

  explicit LetterSlots(const BlockDecomposition& b)
      : is_cut(static_cast<size_t>(b.n) + 1, false),
        slot(static_cast<size_t>(b.n) + 1, 0) {
    for (size_t t = 0; t < b.D.size(); ++t) {
      is_cut[static_cast<size_t>(b.D[t])] = true;
      slot[static_cast<size_t>(b.D[t])] = static_cast<int>(t);
    }
    int block = 0;
    for (int i = 1; i <= b.n - 1; ++i) {
      if (is_cut[static_cast<size_t>(i)]) {
        ++block;
      } else {
        slot[static_cast<size_t>(i)] = block;
      }
    }
  }
};

}  // namespace

bool SphericalBudget::try_consume(int letter) {
  const LetterSlots slots(decomposition);
  if (slots.is_cut[static_cast<size_t>(letter)]) {
    int& remaining = d_letter_budget[static_cast<size_t>(slots.slot[static_cast<size_t>(letter)])];
    if (remaining == 0) return false;
    --remaining;
    return true;
  }
  std::int64_t& remaining =
      block_budget[static_cast<size_t>(slots.slot[static_cast<size_t>(letter)])];
  if (remaining == 0) return false;
  --remaining;
  return true;
}

void SphericalBudget::restore(int letter) {
  const LetterSlots slots(decomposition);
  if (slots.is_cut[static_cast<size_t>(letter)]) {
    ++d_letter_budget[static_cast<size_t>(slots.slot[static_cast<size_t>(letter)])];
  } else {
    ++block_budget[static_cast<size_t>(slots.slot[static_cast<size_t>(letter)])];
  }
}

std::int64_t SphericalBudget::total_remaining() const {
  std::int64_t total =
      std::accumulate(d_letter_budget.begin(), d_letter_budget.end(), std::int64_t{0});
  return std::accumulate(block_budget.begin(), block_budget.end(), total);
}

namespace {

// Depth-first generation of reduced words: each step peels a left descent
// of the remaining permutation, so every completed word is reduced by
// construction. Failure states are memoized by (permutation, budgets).
class WordSearch {
 public:
  WordSearch(const Permutation& w, const BlockDecomposition& decomposition)
      : n_(w.degree()),
        slots_(decomposition),
        word_(w.word().begin(), w.word().end()),
        pos_(static_cast<size_t>(n_) + 1),
        d_budget_(decomposition.D.size()),
        block_budget_(decomposition.block_sizes.size()) {
    for (int i = 1; i <= n_; ++i) {
      pos_[static_cast<size_t>(word_[static_cast<size_t>(i) - 1])] =
          static_cast<std::int32_t>(i);
    }
    for (size_t t = 0; t < d_budget_.size(); ++t) d_budget_[t] = 1;
    for (size_t t = 0; t < block_budget_.size(); ++t) {
      block_budget_[t] = static_cast<std::int32_t>(
          choose2(static_cast<std::int64_t>(decomposition.block_sizes[t]) + 1) - 1);
    }
    budget_total_ = 0;
    for (auto b : d_budget_) budget_total_ += b;
    for (auto b : block_budget_) budget_total_ += b;
  }

  bool run(std::int64_t length, std::vector<int>* path_out) {
    path_out_ = path_out;
    return search(length);
  }

 private:
  bool search(std::int64_t remaining) {
    if (remaining == 0) return true;
    if (budget_total_ < remaining) return false;
    std::string key = state_key();
    if (failed_.contains(key)) return false;
    for (int i = 1; i <= n_ - 1; ++i) {
      if (pos_[static_cast<size_t>(i) + 1] >= pos_[static_cast<size_t>(i)]) continue;
      std::int32_t* budget = slots_.is_cut[static_cast<size_t>(i)]
                                 ? &d_budget_[static_cast<size_t>(slots_.slot[static_cast<size_t>(i)])]
                                 : &block_budget_[static_cast<size_t>(slots_.slot[static_cast<size_t>(i)])];
      if (*budget == 0) continue;
      --*budget;
      --budget_total_;
      apply_transposition(i);
      if (path_out_) path_out_->push_back(i);
      if (search(remaining - 1)) return true;
      if (path_out_) path_out_->pop_back();
      apply_transposition(i);
      ++*budget;
      ++budget_total_;
    }
    failed_.insert(std::move(key));
    return false;
  }

  // Swap the values i and i+1 in the remaining permutation (self-inverse).
  void apply_transposition(int i) {
    const std::int32_t p = pos_[static_cast<size_t>(i)];
    const std::int32_t q = pos_[static_cast<size_t>(i) + 1];
    std::swap(word_[static_cast<size_t>(p) - 1], word_[static_cast<size_t>(q) - 1]);
    pos_[static_cast<size_t>(i)] = q;
    pos_[static_cast<size_t>(i) + 1] = p;
  }

  std::string state_key() const {
    std::string key;
    key.reserve(word_.size() + d_budget_.size() + 2 * block_budget_.size());
    for (auto v : word_) key.push_back(static_cast<char>(v));
    for (auto b : d_budget_) key.push_back(static_cast<char>(b));
    for (auto b : block_budget_) {
      key.push_back(static_cast<char>(b & 0xff));
      key.push_back(static_cast<char>((b >> 8) & 0xff));
    }
    return key;
  }

  int n_;
  LetterSlots slots_;
  std::vector<std::int32_t> word_, pos_;
  std::vector<std::int32_t> d_budget_, block_budget_;
  std::int64_t budget_total_ = 0;
  std::vector<int>* path_out_ = nullptr;
  std::unordered_set<std::string> failed_;
};

void require_subset_of_left_descents(const Permutation& w,
                                     const std::vector<int>& I) {
  const DescentProfile descents = left_descent_set(w);
  for (int i : I) {
    if (!std::binary_search(descents.positions.begin(),
                            descents.positions.end(), i)) {
      throw precondition_error("index " + std::to_string(i) +
                               " is not a left descent of " + w.str());
    }
  }
}

std::optional<std::vector<int>> search_word(const Permutation& w,
                                            const std::vector<int>& I,
                                            SearchMode mode, bool want_path) {
  require_subset_of_left_descents(w, I);
  if (mode == SearchMode::fast && !is_proper(w)) return std::nullopt;
  const BlockDecomposition decomposition = block_decomposition(w.degree(), I);
  WordSearch search(w, decomposition);
  std::vector<int> path;
  if (search.run(inversion_number(w), want_path ? &path : nullptr)) {
    return path;
  }
  return std::nullopt;
}

}  // namespace

bool is_i_spherical(const Permutation& w, const std::vector<int>& I,
                    SearchMode mode) {
  return search_word(w, I, mode, false).has_value();
}

std::optional<ReducedWord> witness_word(const Permutation& w,
                                        const std::vector<int>& I,
                                        SearchMode mode) {
  auto path = search_word(w, I, mode, true);
  if (!path) return std::nullopt;
  ReducedWord word{w.degree(), std::move(*path)};
  if (!verify_witness(w, I, word)) {
    throw std::logic_error("search produced a word that fails replay");
  }
  return word;
}

bool verify_witness(const Permutation& w, const std::vector<int>& I,
                    const ReducedWord& word) {
  if (word.n != w.degree()) return false;
  const WordEvaluation eval = evaluate_word(word.n, word.letters);
  if (!eval.reduced || !(eval.product == w)) return false;
  if (static_cast<std::int64_t>(word.letters.size()) != inversion_number(w)) {
    return false;
  }
  SphericalBudget budget =
      SphericalBudget::make(block_decomposition(w.degree(), I));
  for (int letter : word.letters) {
    if (!budget.try_consume(letter)) return false;
  }
  return true;
}

std::vector<SphericalCensusRow> spherical_census(int n, int cap,
                                                 SearchMode mode) {
  if (n < 1 || n > cap) {
    throw cap_error("degree " + std::to_string(n) + " outside census range 1.." +
                    std::to_string(cap) + " (raise with --cap-override)");
  }
  std::vector<SphericalCensusRow> rows;
  for_each_permutation(n, [&](const Permutation& w) {
    SphericalCensusRow row{w, {}, 0, 0, 0, false, false, false, {}};
    const DescentProfile descents = left_descent_set(w);
    row.left_descents = descents.positions;
    row.ell = inversion_number(w);
    row.d = descents.count();
    row.x = row.ell - choose2(static_cast<std::int64_t>(row.d) + 1);
    row.proper = row.x <= n;

    std::vector<int> full(descents.positions.begin(), descents.positions.end());
    if (auto maximal = witness_word(w, full, mode)) {
      row.maximally_spherical = true;
      row.some_i_spherical = true;
      row.witness = std::move(maximal->letters);
    } else {
      // Subsets in increasing mask order; the full set was just tested.
      const int d = row.d;
      for (std::uint32_t mask = 0; mask + 1 < (1u << d); ++mask) {
        std::vector<int> subset;
        for (int b = 0; b < d; ++b) {
          if (mask & (1u << b)) subset.push_back(full[static_cast<size_t>(b)]);
        }
        if (auto witness = witness_word(w, subset, mode)) {
          row.some_i_spherical = true;
          row.witness = std::move(witness->letters);
          break;
        }
      }
    }
    rows.push_back(std::move(row));
  });
  return rows;
}

void write_census_csv(std::ostream& out,
                      std::span<const SphericalCensusRow> rows) {
  out << "oneline,J,ell,d,X,proper,maximally_spherical,some_I_spherical,witness\n";
  for (const auto& row : rows) {
    for (int i = 1; i <= row.w.degree(); ++i) {
      if (i > 1) out << ' ';
      out << row.w(i);
    }
    out << ',';
    for (size_t i = 0; i < row.left_descents.size(); ++i) {
      if (i) out << ';';
      out << row.left_descents[i];
    }
    out << ',' << row.ell << ',' << row.d << ',' << row.x << ','
        << (row.proper ? "true" : "false") << ','
        << (row.maximally_spherical ? "true" : "false") << ','
        << (row.some_i_spherical ? "true" : "false") << ',';
    for (size_t i = 0; i < row.witness.size(); ++i) {
      if (i) out << ';';
      out << row.witness[i];
    }
    out << '\n';
  }
}

}  // namespace permprop
