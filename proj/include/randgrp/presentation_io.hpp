#pragma once

#include <iosfwd>
#include <string>

#include "randgrp/presentation.hpp"

namespace randgrp {

// Line-oriented text format, LF line endings:
//   # comment
//   gens <m>
//   rel <word>
//   rel <word>
// Blank lines and comment lines may appear anywhere; `gens` must come
// before the first `rel`.  Throws ParseError with line and column.
Presentation parse_presentation(std::string const& text);
Presentation read_presentation(std::string const& path);

// Canonical form: "gens m" then one "rel" line per relator.
std::string format_presentation(Presentation const& p);
void write_presentation(Presentation const& p, std::string const& path);

}  // namespace randgrp
