#pragma once

#include "mmalign/core.hpp"

namespace mmalign::detail {

// throws DimensionMismatch unless s and l share a dimension
void require_dimension(const StepSet& s, const LengthTuple& l);

}  // namespace mmalign::detail
