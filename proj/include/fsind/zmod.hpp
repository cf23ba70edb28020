#pragma once

// Exact lattice and finite abelian group arithmetic.

#include "fsind/zmod/abelian.hpp"
#include "fsind/zmod/int_matrix.hpp"
#include "fsind/zmod/smith.hpp"
