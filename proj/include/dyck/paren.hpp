#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyck {

// A single parenthesis: orientation plus a type id drawn from the alphabet.
struct Paren {
  std::uint32_t type = 0;
  bool open = true;

  friend bool operator==(const Paren&, const Paren&) = default;
};

inline Paren open_paren(std::uint32_t type) { return Paren{type, true}; }
inline Paren close_paren(std::uint32_t type) { return Paren{type, false}; }

// Same type, opposite orientation.
inline Paren complement(Paren p) { return Paren{p.type, !p.open}; }

// Alphabet with `type_count` parenthesis types; symbols are (orientation, type).
struct ParenAlphabet {
  std::uint32_t type_count = 1;

  friend bool operator==(const ParenAlphabet&, const ParenAlphabet&) = default;
};

// An immutable sequence of parentheses over a fixed alphabet.
class ParenSeq {
 public:
  ParenSeq() = default;

  ParenSeq(ParenAlphabet alphabet, std::vector<Paren> symbols)
      : alphabet_(alphabet), symbols_(std::move(symbols)) {
    if (alphabet_.type_count == 0)
      throw std::invalid_argument("ParenSeq: alphabet must have at least one type");
    for (const Paren& p : symbols_)
      if (p.type >= alphabet_.type_count)
        throw std::invalid_argument("ParenSeq: symbol type out of alphabet range");
  }

  const ParenAlphabet& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }
  Paren operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::vector<Paren>& symbols() const { return symbols_; }

  // Substring [i..j) over the same alphabet.
  ParenSeq slice(int i, int j) const {
    return ParenSeq(alphabet_, std::vector<Paren>(symbols_.begin() + i, symbols_.begin() + j));
  }

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  friend bool operator==(const ParenSeq&, const ParenSeq&) = default;

 private:
  ParenAlphabet alphabet_{1};
  std::vector<Paren> symbols_;
};

// Edit cost of the two-symbol string xy: 0 if x opens and y closes the same
// type, 2 if x closes and y opens, 1 otherwise.
inline int pair_cost(Paren x, Paren y) {
  if (x.open && !y.open) return x.type == y.type ? 0 : 1;
  if (!x.open && y.open) return 2;
  return 1;
}

// Reverse the sequence and flip every orientation.
ParenSeq reverse_complement(const ParenSeq& s);

}  // namespace dyck
