#pragma once

// Integer partitions: enumeration, conjugates, hook lengths, 2-cores.

#include "ucm/exact.hpp"

#include <algorithm>
#include <compare>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ucm {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] > 0, "Partition: parts must be positive");
      require(i == 0 || parts_[i] <= parts_[i - 1], "Partition: parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (1^m)
  static Partition column(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), 1)); }
  /// (m)
  static Partition row(int m) { return m == 0 ? Partition() : Partition({m}); }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int size() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }

  /// i-th part, 0-based; zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// m_i: number of parts equal to i.
  int multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

  bool is_column() const { return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; }); }
  bool is_row() const { return parts_.size() <= 1; }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

/// n(p) = sum_j (j - 1) p_j
inline int n_stat(const Partition& p) {
  int total = 0;
  for (std::size_t j = 0; j < p.parts().size(); ++j) total += static_cast<int>(j) * p.parts()[j];
  return total;
}

/// Hook lengths p_i + p'_j - i - j + 1, row by row.
inline std::vector<int> hook_lengths(const Partition& p) {
  const Partition c = conjugate(p);
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j) {
      hooks.push_back(p[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(j)] - i - j - 1);
    }
  }
  return hooks;
}

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> enumerate_partitions(int n) {
  require(n >= 0, "enumerate_partitions: negative size");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    // Find the rightmost part greater than 1.
    int rem = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++rem;
    }
    if (a.empty()) break;
    const int k = --a.back();
    ++rem;
    while (rem > k) {
      a.push_back(k);
      rem -= k;
    }
    if (rem > 0) a.push_back(rem);
  }
  return out;
}

/// z_p = prod_i i^{m_i} m_i!
inline Integer z_coefficient(const Partition& p) {
  Integer z = 1;
  for (int i = 1; i <= p[0]; ++i) {
    const int m = p.multiplicity(i);
    for (int k = 1; k <= m; ++k) z *= Integer(i) * k;
  }
  return z;
}

/// Beta-set {p_i + (l - i)} for l = length.
inline std::vector<int> beta_numbers(const Partition& p, int length) {
  std::vector<int> beta;
  for (int i = 0; i < length; ++i) beta.push_back(p[static_cast<std::size_t>(i)] + length - 1 - i);
  return beta;
}

inline Partition from_beta_numbers(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int length = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) parts.push_back(beta[static_cast<std::size_t>(i)] - (length - 1 - i));
  return Partition(std::move(parts));
}

/// 2-core via the 2-runner abacus: slide every bead down its runner.
inline Partition two_core(const Partition& p) {
  const auto beta = beta_numbers(p, p.length());
  int runner[2] = {0, 0};
  for (int b : beta) ++runner[b % 2];
  std::vector<int> settled;
  for (int r = 0; r < 2; ++r) {
    for (int k = 0; k < runner[r]; ++k) settled.push_back(2 * k + r);
  }
  return from_beta_numbers(std::move(settled));
}

/// Number of dominoes removed to reach the 2-core.
inline int two_weight(const Partition& p) { return (p.size() - two_core(p).size()) / 2; }

/// (number of odd hook lengths, number of even hook lengths)
inline std::pair<int, int> ohl_ehl(const Partition& p) {
  int odd = 0;
  int even = 0;
  for (int h : hook_lengths(p)) (h % 2 ? odd : even)++;
  return {odd, even};
}

}  // namespace ucm
