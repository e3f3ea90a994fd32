#include "dyck/heights.hpp"

#include <algorithm>

namespace dyck {

HeightProfile height_profile(const ParenSeq& s) {
  const int n = s.size();
  HeightProfile p;
  p.heights.resize(static_cast<std::size_t>(n) + 1);
  p.heights[0] = 0;
  for (int i = 0; i < n; ++i) p.heights[i + 1] = p.heights[i] + (s[i].open ? 1 : -1);
  for (int i = 1; i < n; ++i) {
    const int prev = p.heights[i - 1], cur = p.heights[i], next = p.heights[i + 1];
    if (prev > cur && cur < next) p.valleys.push_back(i);
    if (prev < cur && cur > next) p.peaks.push_back(i);
  }
  return p;
}

std::vector<int> midpoint_set(const HeightProfile& p) {
  const int n = p.n();
  std::vector<int> m;
  m.reserve(p.valleys.size() * 3);
  for (int v : p.valleys)
    for (int d = -1; d <= 1; ++d) {
      const int pos = v + d;
      if (pos < 0 || pos > n) continue;
      if (m.empty() || m.back() < pos) m.push_back(pos);
    }
  return m;
}

}  // namespace dyck
