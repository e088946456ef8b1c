#include "permprop/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permprop/bigint.hpp"

namespace permprop {

namespace {

void validate_word(const std::vector<std::int32_t>& word) {
  const auto n = static_cast<std::int32_t>(word.size());
  if (n < 1) {
    throw std::invalid_argument("permutation must have degree >= 1");
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (std::int32_t v : word) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (seen[static_cast<size_t>(v) - 1]) {
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " appears more than once");
    }
    seen[static_cast<size_t>(v) - 1] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<std::int32_t> one_line)
    : word_(std::move(one_line)) {
  validate_word(word_);
}

Permutation Permutation::identity(int n) {
  std::vector<std::int32_t> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word), unchecked_tag{});
}

Permutation Permutation::unchecked(std::vector<std::int32_t> one_line) {
  return Permutation(std::move(one_line), unchecked_tag{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::int32_t> word;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad token '" + token + "' in permutation");
    }
    if (pos != token.size()) {
      throw std::invalid_argument("bad token '" + token + "' in permutation");
    }
    word.push_back(static_cast<std::int32_t>(v));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  if (word.empty()) {
    throw std::invalid_argument("empty permutation text");
  }
  return Permutation(std::move(word));
}

std::string Permutation::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) out << ',';
    out << word_[i];
  }
  return out.str();
}

Permutation inverse(const Permutation& w) {
  const int n = w.degree();
  std::vector<std::int32_t> inv(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    inv[static_cast<size_t>(w(i)) - 1] = static_cast<std::int32_t>(i);
  }
  return Permutation::unchecked(std::move(inv));
}

namespace detail {

std::int64_t inversions_merge(std::span<const std::int32_t> word,
                              std::vector<std::int32_t>& buf,
                              std::vector<std::int32_t>& tmp) {
  const size_t n = word.size();
  buf.assign(word.begin(), word.end());
  tmp.resize(n);
  std::int64_t inversions = 0;
  // Bottom-up merge sort; each merge counts pairs crossing the midpoint.
  for (size_t width = 1; width < n; width *= 2) {
    for (size_t lo = 0; lo + width < n; lo += 2 * width) {
      const size_t mid = lo + width;
      const size_t hi = std::min(lo + 2 * width, n);
      size_t a = lo, b = mid, out = lo;
      while (a < mid && b < hi) {
        if (buf[a] <= buf[b]) {
          tmp[out++] = buf[a++];
        } else {
          inversions += static_cast<std::int64_t>(mid - a);
          tmp[out++] = buf[b++];
        }
      }
      while (a < mid) tmp[out++] = buf[a++];
      while (b < hi) tmp[out++] = buf[b++];
      std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo),
                tmp.begin() + static_cast<std::ptrdiff_t>(hi),
                buf.begin() + static_cast<std::ptrdiff_t>(lo));
    }
  }
  return inversions;
}

int left_descent_count(std::span<const std::int32_t> word,
                       std::vector<std::int32_t>& pos) {
  const int n = static_cast<int>(word.size());
  pos.resize(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    pos[static_cast<size_t>(word[static_cast<size_t>(i)])] =
        static_cast<std::int32_t>(i);
  }
  int count = 0;
  for (int v = 1; v < n; ++v) {
    count += pos[static_cast<size_t>(v) + 1] < pos[static_cast<size_t>(v)];
  }
  return count;
}

}  // namespace detail

std::int64_t inversion_number(const Permutation& w) {
  std::vector<std::int32_t> buf, tmp;
  return detail::inversions_merge(w.word(), buf, tmp);
}

std::int64_t inversion_number_quadratic(const Permutation& w) {
  const auto word = w.word();
  const size_t n = word.size();
  std::int64_t inversions = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      inversions += word[i] > word[j];
    }
  }
  return inversions;
}

DescentProfile left_descent_set(const Permutation& w) {
  const int n = w.degree();
  std::vector<std::int32_t> pos(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    pos[static_cast<size_t>(w(i))] = static_cast<std::int32_t>(i);
  }
  DescentProfile profile;
  for (int v = 1; v < n; ++v) {
    if (pos[static_cast<size_t>(v) + 1] < pos[static_cast<size_t>(v)]) {
      profile.positions.push_back(static_cast<std::int32_t>(v));
    }
  }
  return profile;
}

DescentProfile left_descent_set_by_length(const Permutation& w) {
  const int n = w.degree();
  const std::int64_t len = inversion_number(w);
  std::vector<std::int32_t> word(w.word().begin(), w.word().end());
  DescentProfile profile;
  for (int i = 1; i < n; ++i) {
    // s_i * w swaps the values i and i+1 in the one-line word.
    for (auto& v : word) {
      if (v == i) {
        v = static_cast<std::int32_t>(i + 1);
      } else if (v == i + 1) {
        v = static_cast<std::int32_t>(i);
      }
    }
    if (inversion_number(Permutation::unchecked(word)) < len) {
      profile.positions.push_back(static_cast<std::int32_t>(i));
    }
    for (auto& v : word) {
      if (v == i) {
        v = static_cast<std::int32_t>(i + 1);
      } else if (v == i + 1) {
        v = static_cast<std::int32_t>(i);
      }
    }
  }
  return profile;
}

DescentProfile left_descents_prefix_scan(const Permutation& w) {
  const int n = w.degree();
  DescentProfile profile;
  for (int i = 1; i < n; ++i) {
    bool found = false;
    for (int j = 1; j < i && !found; ++j) {
      found = w(j) == i + 1;
    }
    if (found) profile.positions.push_back(static_cast<std::int32_t>(i));
  }
  return profile;
}

std::int64_t statistic_x(const Permutation& w) {
  const std::int64_t len = inversion_number(w);
  const int d = left_descent_set(w).count();
  return len - choose2(static_cast<std::int64_t>(d) + 1);
}

bool is_proper(const Permutation& w) {
  return statistic_x(w) <= w.degree();
}

}  // namespace permprop
