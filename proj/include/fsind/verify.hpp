#pragma once

#include "fsind/verify/pipeline.hpp"
#include "fsind/verify/report.hpp"
