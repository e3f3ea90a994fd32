#include "dyck/generator.hpp"

#include <utility>
#include <vector>

namespace dyck {

ParenSeq random_dyck(int pairs, std::uint32_t types, SplitMix64& rng) {
  std::vector<Paren> out;
  out.reserve(static_cast<std::size_t>(pairs) * 2);
  // Work items: non-negative value = emit that many pairs, negative value
  // -(t+1) = emit the pending closing parenthesis of type t.
  std::vector<long long> work;
  work.push_back(pairs);
  while (!work.empty()) {
    const long long item = work.back();
    work.pop_back();
    if (item < 0) {
      out.push_back(close_paren(static_cast<std::uint32_t>(-item - 1)));
      continue;
    }
    if (item == 0) continue;
    const int inner = rng.below_int(static_cast<int>(item));
    const std::uint32_t type = static_cast<std::uint32_t>(rng.below(types));
    out.push_back(open_paren(type));
    work.push_back(item - 1 - inner);
    work.push_back(-static_cast<long long>(type) - 1);
    work.push_back(inner);
  }
  return ParenSeq(ParenAlphabet{types}, std::move(out));
}

ParenSeq apply_edits(const ParenSeq& s, int edits, SplitMix64& rng) {
  std::vector<Paren> symbols(s.begin(), s.end());
  const std::uint32_t types = s.alphabet().type_count;
  for (int e = 0; e < edits && !symbols.empty(); ++e) {
    const std::size_t pos = rng.below(symbols.size());
    if (rng.coin()) {
      symbols.erase(symbols.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      // Uniform over the 2t-1 symbols different from the current one.
      const Paren cur = symbols[pos];
      const std::uint64_t alt = rng.below(2ULL * types - 1);
      const std::uint64_t cur_id = 2ULL * cur.type + (cur.open ? 0 : 1);
      const std::uint64_t id = alt < cur_id ? alt : alt + 1;
      symbols[pos] = Paren{static_cast<std::uint32_t>(id / 2), (id % 2) == 0};
    }
  }
  return ParenSeq(s.alphabet(), std::move(symbols));
}

ParenSeq random_sequence(int length, std::uint32_t types, SplitMix64& rng) {
  std::vector<Paren> symbols;
  symbols.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const std::uint64_t id = rng.below(2ULL * types);
    symbols.push_back(Paren{static_cast<std::uint32_t>(id / 2), (id % 2) == 0});
  }
  return ParenSeq(ParenAlphabet{types}, std::move(symbols));
}

}  // namespace dyck
