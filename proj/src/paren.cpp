#include "dyck/paren.hpp"

#include <algorithm>

namespace dyck {

ParenSeq reverse_complement(const ParenSeq& s) {
  std::vector<Paren> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (int i = s.size() - 1; i >= 0; --i) out.push_back(complement(s[i]));
  return ParenSeq(s.alphabet(), std::move(out));
}

}  // namespace dyck
