#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <vector>

#include "permprop/bigint.hpp"
#include "permprop/enumerate.hpp"
#include "permprop/errors.hpp"
#include "permprop/permutation.hpp"
#include "permprop/spherical.hpp"

using namespace permprop;

namespace {

std::vector<std::vector<int>> all_subsets(const std::vector<std::int32_t>& set) {
  std::vector<std::vector<int>> subsets;
  const int d = static_cast<int>(set.size());
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < d; ++b) {
      if (mask & (1u << b)) subset.push_back(set[static_cast<size_t>(b)]);
    }
    subsets.push_back(std::move(subset));
  }
  return subsets;
}

}  // namespace

TEST_CASE("word evaluation examples") {
  const std::vector<int> braid{1, 2, 1};
  const auto full = evaluate_word(3, braid);
  CHECK(full.product == Permutation({3, 2, 1}));
  CHECK(full.reduced);

  const std::vector<int> cancel{1, 1};
  const auto squared = evaluate_word(3, cancel);
  CHECK(squared.product == Permutation::identity(3));
  CHECK_FALSE(squared.reduced);

  const auto empty = evaluate_word(3, std::vector<int>{});
  CHECK(empty.product == Permutation::identity(3));
  CHECK(empty.reduced);

  CHECK_THROWS_AS(evaluate_word(3, std::vector<int>{3}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_word(3, std::vector<int>{0}), std::invalid_argument);
}

TEST_CASE("every reduced word of S_4 evaluates back to its permutation") {
  // cross-check evaluate_word against the library's own witness search
  for_each_permutation(4, [&](const Permutation& w) {
    const auto J = left_descent_set(w).positions;
    const std::vector<int> I(J.begin(), J.end());
    if (auto witness = witness_word(w, I)) {
      const auto eval = evaluate_word(4, witness->letters);
      REQUIRE(eval.product == w);
      REQUIRE(eval.reduced);
    }
  });
}

TEST_CASE("budget bookkeeping follows the decomposition") {
  auto budget = SphericalBudget::make(block_decomposition(6, {3}));
  // D = {1,2,4,5}; the one interior letter is 3 with budget C(3,2)-1 = 2
  CHECK(budget.d_letter_budget == std::vector<int>{1, 1, 1, 1});
  CHECK(budget.block_budget == std::vector<std::int64_t>{0, 0, 2, 0, 0});
  CHECK(budget.total_remaining() == 6);

  CHECK(budget.try_consume(3));
  CHECK(budget.try_consume(3));
  CHECK_FALSE(budget.try_consume(3));
  budget.restore(3);
  CHECK(budget.try_consume(3));

  CHECK(budget.try_consume(1));
  CHECK_FALSE(budget.try_consume(1));
  // interior letters of size-1 blocks have no budget at all
  auto unit_blocks = SphericalBudget::make(block_decomposition(4, {}));
  CHECK(unit_blocks.try_consume(2));  // 2 is a cut letter here
  CHECK_FALSE(unit_blocks.try_consume(2));
}

TEST_CASE("sphericality examples") {
  CHECK(is_i_spherical(Permutation({2, 1}), {1}));
  CHECK(is_i_spherical(Permutation({3, 2, 1}), {1, 2}));
  CHECK_FALSE(is_i_spherical(Permutation({4, 5, 6, 1, 2, 3}), {3}));
}

TEST_CASE("the subset precondition is checked and names the offender") {
  const Permutation w({2, 3, 1});  // J(w) = {1}
  CHECK_THROWS_WITH_AS(is_i_spherical(w, {2}), doctest::Contains("2"),
                       precondition_error);
  CHECK_THROWS_AS(witness_word(w, {2}), precondition_error);
}

TEST_CASE("witness examples") {
  const auto braid = witness_word(Permutation({3, 2, 1}), {1, 2});
  REQUIRE(braid.has_value());
  // deterministic search order tries letter 1 first
  CHECK(braid->letters == std::vector<int>{1, 2, 1});

  const auto trivial = witness_word(Permutation::identity(3), {});
  REQUIRE(trivial.has_value());
  CHECK(trivial->letters.empty());

  CHECK_FALSE(witness_word(Permutation({4, 5, 6, 1, 2, 3}), {3}).has_value());
}

TEST_CASE("witnesses replay against a fresh budget") {
  const Permutation w({3, 2, 1});
  const auto witness = witness_word(w, {1, 2});
  REQUIRE(witness.has_value());
  CHECK(verify_witness(w, {1, 2}, *witness));

  ReducedWord corrupted = *witness;
  corrupted.letters.push_back(1);
  CHECK_FALSE(verify_witness(w, {1, 2}, corrupted));
  ReducedWord wrong_target = *witness;
  wrong_target.letters[0] = 2;
  CHECK_FALSE(verify_witness(w, {1, 2}, wrong_target));
}

TEST_CASE("search determinism") {
  const Permutation w({4, 2, 3, 1});
  const auto J = left_descent_set(w).positions;
  const std::vector<int> I(J.begin(), J.end());
  const auto first = witness_word(w, I);
  const auto second = witness_word(w, I);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->letters == second->letters);
}

TEST_CASE("fast mode agrees with verification mode on all of S_5") {
  for_each_permutation(5, [&](const Permutation& w) {
    for (const auto& I : all_subsets(left_descent_set(w).positions)) {
      REQUIRE(is_i_spherical(w, I, SearchMode::fast) ==
              is_i_spherical(w, I, SearchMode::verification));
    }
  });
}

TEST_CASE("spherical implies proper on all of S_5, verification mode") {
  for_each_permutation(5, [&](const Permutation& w) {
    for (const auto& I : all_subsets(left_descent_set(w).positions)) {
      if (is_i_spherical(w, I, SearchMode::verification)) {
        REQUIRE(is_proper(w));
      }
    }
  });
}

TEST_CASE("external claim cross-check: I-spherical implies J(w)-spherical on S_5") {
  // Empirical echo of a companion result; reported here as a check of an
  // external claim, not a gate on this library's own contracts.
  for_each_permutation(5, [&](const Permutation& w) {
    const auto J = left_descent_set(w).positions;
    const std::vector<int> full(J.begin(), J.end());
    for (const auto& I : all_subsets(J)) {
      if (is_i_spherical(w, I)) {
        REQUIRE(is_i_spherical(w, full));
      }
    }
  });
}

TEST_CASE("census rows for tiny degrees") {
  const auto s1 = spherical_census(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].maximally_spherical);
  CHECK(s1[0].some_i_spherical);
  CHECK(s1[0].witness.empty());

  const auto s2 = spherical_census(2);
  REQUIRE(s2.size() == 2);
  for (const auto& row : s2) {
    CHECK(row.maximally_spherical);
  }

  CHECK_THROWS_WITH_AS(spherical_census(7), doctest::Contains("--cap-override"),
                       cap_error);
}

TEST_CASE("census is internally consistent on S_4") {
  const auto rows = spherical_census(4);
  REQUIRE(rows.size() == 24);
  for (const auto& row : rows) {
    if (row.some_i_spherical) CHECK(row.proper);
    if (row.maximally_spherical) CHECK(row.some_i_spherical);
    if (!row.witness.empty() || row.some_i_spherical) {
      // the recorded witness must replay for some subset; maximal rows
      // replay against J(w) itself
      if (row.maximally_spherical) {
        const std::vector<int> I(row.left_descents.begin(),
                                 row.left_descents.end());
        ReducedWord word{4, row.witness};
        CHECK(verify_witness(row.w, I, word));
      }
    }
    CHECK(row.x == row.ell - choose2(row.d + 1));
  }
}

TEST_CASE("census CSV has the documented shape") {
  const auto rows = spherical_census(3);
  std::ostringstream out;
  write_census_csv(out, rows);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "oneline,J,ell,d,X,proper,maximally_spherical,some_I_spherical,witness");
  int count = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++count;
  }
  CHECK(count == 6);
  CHECK(out.str().find("3 2 1,1;2,3,2,0,true,true,true,") != std::string::npos);
}
