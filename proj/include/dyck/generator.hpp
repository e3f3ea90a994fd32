#pragma once

#include "dyck/paren.hpp"
#include "dyck/rng.hpp"

namespace dyck {

// Random balanced sequence with `pairs` matched pairs over `types` types:
// random tree shape, random type per matched pair.
ParenSeq random_dyck(int pairs, std::uint32_t types, SplitMix64& rng);

// Applies `edits` random single-symbol deletions/substitutions (an even coin
// per edit); the edit cost of the result is at most `edits` above balanced.
ParenSeq apply_edits(const ParenSeq& s, int edits, SplitMix64& rng);

// Arbitrary (not necessarily balanced) random sequence, for stress tests.
ParenSeq random_sequence(int length, std::uint32_t types, SplitMix64& rng);

}  // namespace dyck
