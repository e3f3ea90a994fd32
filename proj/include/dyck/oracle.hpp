#pragma once

#include "dyck/cost_table.hpp"
#include "dyck/matrix.hpp"
#include "dyck/paren.hpp"

namespace dyck {

// Longest input accepted by exhaustive_distance.
inline constexpr int kExhaustiveMaxLength = 14;

// Ground-truth edit cost by branch-and-bound over all deletion/substitution
// scripts, with a stack check for balancedness. Returns min(cost, bound+1).
// Throws for inputs longer than kExhaustiveMaxLength.
int exhaustive_distance(const ParenSeq& s, int bound);

// Full table of min(ed_D(S[i..j)), k+1) by the cubic split recursion.
CostTable dp_cubic(const ParenSeq& s, int k);

// Reference min-plus product; kInfCost absorbs.
MinPlusMatrix minplus_naive(const MinPlusMatrix& a, const MinPlusMatrix& b);

}  // namespace dyck
