#pragma once

#include <string>
#include <string_view>

#include "dyck/paren.hpp"

namespace dyck {

// Text encodings used by the command-line front end and bindings.
//
// ascii:  ()[]{}<> map to types 0..3. Whitespace separates symbols and is
//         ignored; any other character is a parse error.
// tokens: whitespace-separated `o<i>` / `c<i>` words for arbitrarily many
//         types, e.g. "o0 o3 c3 c0".
//
// Parsers never skip unrecognized input silently.

ParenSeq parse_ascii(std::string_view text);
std::string format_ascii(const ParenSeq& s);  // requires type_count <= 4

ParenSeq parse_tokens(std::string_view text);
std::string format_tokens(const ParenSeq& s);

}  // namespace dyck
