#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace dyck {

// Sentinel for "no path" in min-plus arithmetic. Strictly larger than any
// finite sum that can occur; absorbing under add_cost.
inline constexpr std::int64_t kInfCost = (std::int64_t{1} << 62);

inline std::int64_t add_cost(std::int64_t a, std::int64_t b) {
  if (a >= kInfCost || b >= kInfCost) return kInfCost;
  return a + b;
}

// Dense row-major integer matrix for min-plus products.
struct MinPlusMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> v;

  MinPlusMatrix() = default;
  MinPlusMatrix(int r, int c, std::int64_t fill = kInfCost)
      : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, fill) {}

  std::int64_t& at(int i, int j) { return v[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return v[static_cast<std::size_t>(i) * cols + j]; }

  friend bool operator==(const MinPlusMatrix&, const MinPlusMatrix&) = default;
};

// Adjacent entries within each column differ by at most one.
inline bool is_column_bd(const MinPlusMatrix& m) {
  for (int i = 0; i + 1 < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (std::abs(m.at(i, j) - m.at(i + 1, j)) > 1) return false;
  return true;
}

// Adjacent entries within each row differ by at most one.
inline bool is_row_bd(const MinPlusMatrix& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j + 1 < m.cols; ++j)
      if (std::abs(m.at(i, j) - m.at(i, j + 1)) > 1) return false;
  return true;
}

}  // namespace dyck
