#pragma once

#include "fsind/embed/group_check.hpp"
#include "fsind/embed/pushout.hpp"
