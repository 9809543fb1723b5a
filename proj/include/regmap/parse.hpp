#pragma once

#include <string_view>

#include "regmap/words.hpp"

namespace regmap {

// Grammar (whitespace insignificant):
//   file    := "gens" ident+ ";" "rels" relator ("," relator)*
//   relator := word
//   word    := factor ("*" factor)*
//   factor  := atom ("^" integer)?
//   atom    := ident | "(" word ")" | "[" word "," word "]"
// Exponent 0 yields the empty word; empty relators are rejected.
Presentation parse_presentation(std::string_view text);

// Parses a single word over the given generator names; the whole input
// must be consumed.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

}  // namespace regmap
