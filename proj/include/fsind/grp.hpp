#pragma once

#include "fsind/grp/classes.hpp"
#include "fsind/grp/epsilon.hpp"
#include "fsind/grp/field.hpp"
#include "fsind/grp/group.hpp"
