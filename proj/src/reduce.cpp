#include "dyck/reduce.hpp"

#include <utility>
#include <vector>

#include "dyck/heights.hpp"

namespace dyck {

ReduceResult reduce_valleys(const ParenSeq& s, int k) {
  std::vector<Paren> residual;
  residual.reserve(static_cast<std::size_t>(s.size()));
  for (const Paren p : s) {
    if (!p.open && !residual.empty() && residual.back().open && residual.back().type == p.type) {
      residual.pop_back();
    } else {
      residual.push_back(p);
    }
  }
  ReduceResult r{ParenSeq(s.alphabet(), std::move(residual)), false};
  const HeightProfile profile = height_profile(r.seq);
  r.rejected = static_cast<long long>(profile.valleys.size()) > 2LL * k;
  return r;
}

}  // namespace dyck
