#pragma once

#include "spinparity/dirac.hpp"
#include "spinparity/errors.hpp"
#include "spinparity/linalg.hpp"
#include "spinparity/quantifiers.hpp"
#include "spinparity/state.hpp"
#include "spinparity/svg.hpp"
#include "spinparity/sweep.hpp"
#include "spinparity/symmetry.hpp"
#include "spinparity/thermal.hpp"
