#pragma once

// Root data with Frobenius action and the sign-detection computations on them.

#include "fsind/rootdata/catalog.hpp"
#include "fsind/rootdata/datum.hpp"
#include "fsind/rootdata/io.hpp"
#include "fsind/rootdata/sign.hpp"
