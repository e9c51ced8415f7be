#pragma once

#include "twocontour/rational.hpp"
#include "twocontour/core_model.hpp"
#include "twocontour/dynamics.hpp"
#include "twocontour/orbit.hpp"
#include "twocontour/formulas.hpp"
#include "twocontour/spectrum.hpp"
#include "twocontour/theorem_atlas.hpp"
#include "twocontour/phase_sweep.hpp"
#include "twocontour/reporting.hpp"
#include "twocontour/golden.hpp"
