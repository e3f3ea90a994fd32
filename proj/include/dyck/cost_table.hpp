#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace dyck {

// Threshold-capped edit-cost table: entry (i, j) with 0 <= i <= j <= n holds
// min(ed_D(S[i..j)), cap) where cap = k+1. The cap is absorbing under
// addition, so every table entry fits in [0..cap].
class CostTable {
 public:
  CostTable(int n, int cap)
      : n_(n), cap_(cap), v_(static_cast<std::size_t>(n + 1) * (n + 1), cap) {
    for (int i = 0; i <= n; ++i) v_[idx(i, i)] = 0;
    for (int i = 0; i < n; ++i) v_[idx(i, i + 1)] = std::min(1, cap);
  }

  int n() const { return n_; }
  int cap() const { return cap_; }

  int at(int i, int j) const { return v_[idx(i, j)]; }
  void set(int i, int j, int value) { v_[idx(i, j)] = std::min(value, cap_); }

  // Saturating addition at the table cap.
  int cap_add(int a, int b) const { return std::min(a + b, cap_); }

  friend bool operator==(const CostTable&, const CostTable&) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * (n_ + 1) + static_cast<std::size_t>(j);
  }

  int n_;
  int cap_;
  std::vector<int> v_;
};

}  // namespace dyck
