#pragma once

#include <map>
#include <string>
#include <string_view>

#include "elco/term.hpp"

namespace elco {

// Textual term syntax: constants in lowercase, variables v<N>, application
// by juxtaposition (left-associative, parenthesized as needed), abstraction
// as \v<N>:type.body.  print -> parse is the identity on normal forms.
std::string print_term(const Term& t);

// `consts` supplies the type of each constant that may appear in the text.
// Variables must be bound by an enclosing abstraction.
Term parse_term(std::string_view text,
                const std::map<std::string, SemType>& consts);

}  // namespace elco
