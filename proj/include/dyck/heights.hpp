#pragma once

#include <vector>

#include "dyck/paren.hpp"

namespace dyck {

// Height profile of a sequence: heights[i] is the number of opening minus
// closing parentheses in the prefix of length i, together with the strict
// local extrema of that walk.
struct HeightProfile {
  std::vector<int> heights;  // size n+1, heights[0] == 0
  std::vector<int> valleys;  // positions i in [1..n) with H(i-1) > H(i) < H(i+1)
  std::vector<int> peaks;    // positions i in [1..n) with H(i-1) < H(i) > H(i+1)

  int n() const { return static_cast<int>(heights.size()) - 1; }
};

HeightProfile height_profile(const ParenSeq& s);

// Positions at distance at most one from a valley, clipped to [0..n].
std::vector<int> midpoint_set(const HeightProfile& p);

}  // namespace dyck
