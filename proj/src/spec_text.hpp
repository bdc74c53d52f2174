#ifndef BRAIDFORGE_SPEC_TEXT_HPP
#define BRAIDFORGE_SPEC_TEXT_HPP

#include <string>
#include <variant>

#include "links.hpp"

namespace braidforge {

using ParsedSpec = std::variant<TLinkSpec, VLinkSpec>;

// Grammar (whitespace insignificant):
//   T[(r,s),(r,s),...]
//   V[(u,~v),...;(r,s),...;(p,q)]
// The ~ marks reversed (overline) exponents and is required in the first V
// section, rejected elsewhere. Throws ParseError for syntax, ValidationError
// for well-formed text describing an invalid spec.
ParsedSpec parse_spec(const std::string& text);

std::string format(const TLinkSpec& t);
std::string format(const VLinkSpec& v);
std::string format(const ParsedSpec& spec);

}  // namespace braidforge

#endif
