#include "permprop/joint_table.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "permprop/enumerate.hpp"
#include "permprop/errors.hpp"
#include "permprop/permutation.hpp"

namespace permprop {

BigInt JointCountTable::total() const {
  BigInt sum = 0;
  for (const auto& row : counts) {
    for (const auto& c : row) sum += c;
  }
  return sum;
}

bool JointCountTable::complement_symmetric() const {
  const int kmax = max_inversions();
  const int mmax = max_descents();
  for (int k = 0; k <= kmax; ++k) {
    for (int m = 0; m <= mmax; ++m) {
      if (at(k, m) != at(kmax - k, mmax - m)) return false;
    }
  }
  return true;
}

void JointCountTable::dump_csv(std::ostream& out) const {
  out << "k,m,count\n";
  for (int k = 0; k <= max_inversions(); ++k) {
    for (int m = 0; m <= max_descents(); ++m) {
      out << k << ',' << m << ',' << at(k, m).str() << '\n';
    }
  }
}

namespace {

JointCountTable load_table_rows(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "k,m,count") {
    throw std::invalid_argument("expected header 'k,m,count'");
  }
  struct Cell {
    int k, m;
    BigInt count;
  };
  std::vector<Cell> cells;
  int max_m = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string k_text, m_text, c_text;
    if (!std::getline(row, k_text, ',') || !std::getline(row, m_text, ',') ||
        !std::getline(row, c_text)) {
      throw std::invalid_argument("malformed table row '" + line + "'");
    }
    Cell cell{std::stoi(k_text), std::stoi(m_text), BigInt(c_text)};
    max_m = std::max(max_m, cell.m);
    cells.push_back(std::move(cell));
  }
  JointCountTable table;
  table.n = max_m + 1;
  table.counts.assign(static_cast<size_t>(table.max_inversions()) + 1,
                      std::vector<BigInt>(static_cast<size_t>(table.max_descents()) + 1));
  for (auto& cell : cells) {
    if (cell.k < 0 || cell.k > table.max_inversions() || cell.m < 0) {
      throw std::invalid_argument("table cell out of range");
    }
    table.counts[static_cast<size_t>(cell.k)][static_cast<size_t>(cell.m)] =
        std::move(cell.count);
  }
  return table;
}

}  // namespace

JointCountTable JointCountTable::load_csv(std::istream& in) {
  return load_table_rows(in);
}

JointCountTable brute_force_joint_table(int n) {
  if (n < 1 || n > kBruteForceCap) {
    throw cap_error("degree " + std::to_string(n) +
                    " outside brute-force range 1.." +
                    std::to_string(kBruteForceCap));
  }
  JointCountTable table;
  table.n = n;
  table.counts.assign(static_cast<size_t>(table.max_inversions()) + 1,
                      std::vector<BigInt>(static_cast<size_t>(table.max_descents()) + 1));
  for_each_permutation(
      n,
      [&](const Permutation& w) {
        const auto k = static_cast<size_t>(inversion_number(w));
        const auto m = static_cast<size_t>(left_descent_set(w).count());
        table.counts[k][m] += 1;
      },
      kBruteForceCap);
  return table;
}

std::size_t joint_table_memory_estimate(int n) {
  const std::size_t cells = static_cast<std::size_t>(n) *
                            (static_cast<std::size_t>(n) * (n - 1) / 2 + 1) *
                            static_cast<std::size_t>(n);
  return 2 * cells * sizeof(BigInt);
}

JointCountTable lehmer_dp_joint_table(int n, int cap) {
  if (n < 1 || n > cap) {
    throw cap_error("degree " + std::to_string(n) + " outside DP range 1.." +
                    std::to_string(cap) + " (raise with --cap-override)");
  }
  if (n >= 20) {
    std::fprintf(stderr, "permprop: joint table n=%d, working set ~%zu MiB\n",
                 n, joint_table_memory_estimate(n) >> 20);
  }

  const int kmax = n * (n - 1) / 2;
  const size_t kdim = static_cast<size_t>(kmax) + 1;
  const size_t mdim = static_cast<size_t>(n);
  const size_t cdim = static_cast<size_t>(n);
  auto idx = [kdim, mdim](size_t c, size_t k, size_t m) {
    return (c * kdim + k) * mdim + m;
  };

  // suffix[c][k][m] = #(ways to fill positions i..n with code value >= c at
  // position i, partial inversions k, partial descents m). Position n first.
  std::vector<BigInt> suffix(cdim * kdim * mdim), layer(cdim * kdim * mdim);
  suffix[idx(0, 0, 0)] = 1;

  for (int i = n - 1; i >= 1; --i) {
    const int c_max = n - i;                        // code value range here
    const int prev_kmax = (n - i) * (n - i - 1) / 2;  // partial sum bound
    const int prev_mmax = n - i - 1;
    for (int c = 0; c <= c_max; ++c) {
      for (int kp = 0; kp <= prev_kmax; ++kp) {
        const size_t k = static_cast<size_t>(kp + c);
        for (int m = 0; m <= prev_mmax + 1; ++m) {
          // c <= next code value: no new descent, same m.
          BigInt value = suffix[idx(static_cast<size_t>(c),
                                    static_cast<size_t>(kp),
                                    static_cast<size_t>(m))];
          if (m > 0) {
            // c > next code value: adds a descent; total minus the suffix
            // gives the strictly-smaller prefix.
            value += suffix[idx(0, static_cast<size_t>(kp),
                                static_cast<size_t>(m) - 1)];
            value -= suffix[idx(static_cast<size_t>(c),
                                static_cast<size_t>(kp),
                                static_cast<size_t>(m) - 1)];
          }
          layer[idx(static_cast<size_t>(c), k, static_cast<size_t>(m))] =
              std::move(value);
        }
      }
    }
    // Turn the raw layer into suffix sums over the code-value dimension.
    const int layer_kmax = prev_kmax + c_max;
    const int layer_mmax = prev_mmax + 1;
    for (int c = c_max - 1; c >= 0; --c) {
      for (int k = 0; k <= layer_kmax; ++k) {
        for (int m = 0; m <= layer_mmax; ++m) {
          layer[idx(static_cast<size_t>(c), static_cast<size_t>(k),
                    static_cast<size_t>(m))] +=
              layer[idx(static_cast<size_t>(c) + 1, static_cast<size_t>(k),
                        static_cast<size_t>(m))];
        }
      }
    }
    std::swap(suffix, layer);
    // Stale cells from two layers back must not leak into the next pass.
    for (auto& v : layer) v = 0;
  }

  JointCountTable table;
  table.n = n;
  table.counts.assign(kdim, std::vector<BigInt>(static_cast<size_t>(table.max_descents()) + 1));
  for (int k = 0; k <= kmax; ++k) {
    for (int m = 0; m <= table.max_descents(); ++m) {
      table.counts[static_cast<size_t>(k)][static_cast<size_t>(m)] =
          suffix[idx(0, static_cast<size_t>(k), static_cast<size_t>(m))];
    }
  }
  return table;
}

BigInt count_proper(const JointCountTable& table) {
  BigInt count = 0;
  for (int k = 0; k <= table.max_inversions(); ++k) {
    for (int m = 0; m <= table.max_descents(); ++m) {
      if (k - choose2(static_cast<std::int64_t>(m) + 1) <= table.n) {
        count += table.at(k, m);
      }
    }
  }
  return count;
}

BigInt count_proper(int n, int cap) {
  return count_proper(lehmer_dp_joint_table(n, cap));
}

}  // namespace permprop
