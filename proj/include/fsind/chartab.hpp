#pragma once

#include "fsind/chartab/analysis.hpp"
#include "fsind/chartab/cyclo.hpp"
#include "fsind/chartab/dixon.hpp"
#include "fsind/chartab/io.hpp"
#include "fsind/chartab/oracle.hpp"
