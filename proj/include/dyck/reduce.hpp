#pragma once

#include "dyck/paren.hpp"

namespace dyck {

struct ReduceResult {
  ParenSeq seq;
  bool rejected = false;
};

// Removes greedily matched pairs (adjacent opening/closing of equal type)
// exhaustively with a stack scan; the residual has the same edit cost as the
// input. Rejects when the residual has more than 2k valleys, which certifies
// that the edit cost exceeds k. Exactly 2k valleys is accepted.
ReduceResult reduce_valleys(const ParenSeq& s, int k);

}  // namespace dyck
