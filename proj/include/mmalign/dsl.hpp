#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "mmalign/core.hpp"

namespace mmalign {

// Parses a step-set expression. Grammar (whitespace is ignored everywhere):
//
//   stepset  := 'unit' '(' INT ')'
//             | 'box' '(' INT '..' INT ',' INT ')'
//             | 'natpos' '(' INT ')'
//             | 'halfopen2'
//             | 'prod' '(' base (',' base)* ')'
//             | '{' [ tuple (',' tuple)* ] '}'
//   base     := '[' [ INT (',' INT)* ] ']' | 'nat' | 'natpos' | 'ge' '(' INT ')' | 'odd'
//   tuple    := '(' INT (',' INT)* ')'
//
// The empty explicit set '{}' carries no dimension of its own; it takes
// `dimension` and is rejected when none is given. Throws ParseError naming
// the offending token, or the validation errors of StepSet.
StepSet parse_step_set(std::string_view text, std::optional<std::size_t> dimension = std::nullopt);

// Comma-separated non-negative integers, e.g. "4,5".
LengthTuple parse_lengths(std::string_view text);

}  // namespace mmalign
