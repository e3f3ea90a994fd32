#include "dyck/textio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dyck {
namespace {

constexpr std::string_view kOpenChars = "([{<";
constexpr std::string_view kCloseChars = ")]}>";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

ParenSeq make_seq(std::vector<Paren> symbols) {
  std::uint32_t max_type = 0;
  for (const Paren& p : symbols) max_type = std::max(max_type, p.type);
  return ParenSeq(ParenAlphabet{max_type + 1}, std::move(symbols));
}

}  // namespace

ParenSeq parse_ascii(std::string_view text) {
  std::vector<Paren> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_space(c)) continue;
    if (const auto o = kOpenChars.find(c); o != std::string_view::npos) {
      symbols.push_back(open_paren(static_cast<std::uint32_t>(o)));
    } else if (const auto cl = kCloseChars.find(c); cl != std::string_view::npos) {
      symbols.push_back(close_paren(static_cast<std::uint32_t>(cl)));
    } else {
      throw std::invalid_argument("parse_ascii: unexpected character '" + std::string(1, c) +
                                  "' at offset " + std::to_string(i));
    }
  }
  return make_seq(std::move(symbols));
}

std::string format_ascii(const ParenSeq& s) {
  if (s.alphabet().type_count > 4)
    throw std::invalid_argument("format_ascii: ascii encoding supports at most 4 types");
  std::string out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (const Paren p : s) out += (p.open ? kOpenChars : kCloseChars)[p.type];
  return out;
}

ParenSeq parse_tokens(std::string_view text) {
  std::vector<Paren> symbols;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    const std::string_view word = text.substr(i, j - i);
    if (word.size() < 2 || (word[0] != 'o' && word[0] != 'c'))
      throw std::invalid_argument("parse_tokens: bad token '" + std::string(word) + "'");
    std::uint32_t type = 0;
    for (std::size_t p = 1; p < word.size(); ++p) {
      if (!std::isdigit(static_cast<unsigned char>(word[p])))
        throw std::invalid_argument("parse_tokens: bad token '" + std::string(word) + "'");
      type = type * 10 + static_cast<std::uint32_t>(word[p] - '0');
      if (type > (1u << 20))
        throw std::invalid_argument("parse_tokens: type id too large in '" + std::string(word) + "'");
    }
    symbols.push_back(Paren{type, word[0] == 'o'});
    i = j;
  }
  return make_seq(std::move(symbols));
}

std::string format_tokens(const ParenSeq& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i].open ? 'o' : 'c';
    out += std::to_string(s[i].type);
  }
  return out;
}

}  // namespace dyck
