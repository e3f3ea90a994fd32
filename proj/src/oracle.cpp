#include "dyck/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyck {

namespace {

// Depth-first search over edit scripts with a fixed edit budget. Substituted
// opening parentheses carry a lazily-chosen type (kWildType): the type only
// matters when a later closing parenthesis matches it, and deferring the
// choice collapses the per-type branching.
class ScriptSearch {
 public:
  explicit ScriptSearch(const ParenSeq& s) : s_(s), n_(s.size()) {}

  bool feasible(int budget) {
    stack_.clear();
    return dfs(0, budget);
  }

 private:
  static constexpr int kWildType = -1;

  bool dfs(int pos, int budget) {
    const int depth = static_cast<int>(stack_.size());
    if (depth > n_ - pos) return false;  // cannot close everything anymore
    if (pos == n_) return depth == 0;
    if (budget < ((n_ - pos - depth) & 1)) return false;  // parity of forced deletions

    const Paren sym = s_[pos];
    bool keep_close_ok = false;
    if (sym.open) {
      stack_.push_back(static_cast<int>(sym.type));
      const bool ok = dfs(pos + 1, budget);
      stack_.pop_back();
      if (ok) return true;
    } else if (depth > 0 && (stack_.back() == kWildType || stack_.back() == static_cast<int>(sym.type))) {
      keep_close_ok = true;
      const int top = stack_.back();
      stack_.pop_back();
      const bool ok = dfs(pos + 1, budget);
      stack_.push_back(top);
      if (ok) return true;
    }
    if (budget == 0) return false;

    if (dfs(pos + 1, budget - 1)) return true;  // delete s[pos]

    stack_.push_back(kWildType);  // substitute with an opening parenthesis
    const bool sub_open_ok = dfs(pos + 1, budget - 1);
    stack_.pop_back();
    if (sub_open_ok) return true;

    // Substitute with the closing parenthesis matching the stack top. Skipped
    // when keeping s[pos] already performed the same pop for free.
    if (depth > 0 && !keep_close_ok) {
      const int top = stack_.back();
      stack_.pop_back();
      const bool ok = dfs(pos + 1, budget - 1);
      stack_.push_back(top);
      if (ok) return true;
    }
    return false;
  }

  const ParenSeq& s_;
  int n_;
  std::vector<int> stack_;
};

}  // namespace

int exhaustive_distance(const ParenSeq& s, int bound) {
  if (s.size() > kExhaustiveMaxLength)
    throw std::invalid_argument("exhaustive_distance: input longer than " +
                                std::to_string(kExhaustiveMaxLength) + " symbols");
  if (bound < 0) throw std::invalid_argument("exhaustive_distance: bound must be non-negative");
  ScriptSearch search(s);
  for (int budget = 0; budget <= bound; ++budget)
    if (search.feasible(budget)) return budget;
  return bound + 1;
}

CostTable dp_cubic(const ParenSeq& s, int k) {
  const int n = s.size();
  CostTable t(n, k + 1);
  for (int len = 2; len <= n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      int best = t.cap_add(pair_cost(s[i], s[j - 1]), t.at(i + 1, j - 1));
      for (int m = i + 1; m < j; ++m) best = std::min(best, t.cap_add(t.at(i, m), t.at(m, j)));
      t.set(i, j, best);
    }
  }
  return t;
}

MinPlusMatrix minplus_naive(const MinPlusMatrix& a, const MinPlusMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("minplus_naive: inner dimensions disagree");
  MinPlusMatrix c(a.rows, b.cols, kInfCost);
  for (int i = 0; i < a.rows; ++i)
    for (int l = 0; l < a.cols; ++l) {
      const std::int64_t al = a.at(i, l);
      if (al >= kInfCost) continue;
      for (int j = 0; j < b.cols; ++j)
        c.at(i, j) = std::min(c.at(i, j), add_cost(al, b.at(l, j)));
    }
  return c;
}

}  // namespace dyck
