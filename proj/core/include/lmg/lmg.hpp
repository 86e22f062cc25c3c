#pragma once

#include "lmg/asymptotics.hpp"
#include "lmg/cycle.hpp"
#include "lmg/ensemble.hpp"
#include "lmg/errors.hpp"
#include "lmg/model.hpp"
#include "lmg/sweep.hpp"
