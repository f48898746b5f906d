#pragma once

#include <string>

#include "cmdegen/catalog.hpp"

namespace cmdegen {

// Grammar (whitespace insignificant):
//   expr := '0' | term ('+' term)*
//   term := [uint '*'] ind
//   ind  := 'I' uint | 'N+' | 'N-' | 'M' uint
// Throws ParseError with a byte offset on syntax errors, and DomainError when
// an id does not belong to the ring.
StableModule parse_module_expr(const SingularitySpec& spec, const std::string& text);

// Same as to_string(StableModule); parse_module_expr inverts it.
inline std::string render(const StableModule& m) { return to_string(m); }

}  // namespace cmdegen
