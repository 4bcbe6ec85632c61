#pragma once

#include <vector>

#include "tvar/ints.hpp"

namespace tvar {

// Rank over Q of an integer matrix (rows of equal length), computed by
// fraction-free elimination so intermediate values stay integral.
int rank_int_matrix(std::vector<std::vector<Int>> m);

// Determinant of a square integer matrix (fraction-free elimination).
Int det_int_matrix(std::vector<std::vector<Int>> m);

}  // namespace tvar
