#pragma once

// Umbrella header: exact-rational classification of quantum Hall filling
// factors (spectrum, universal classes, duality, Farey/unimodular chains)
// plus the floating-point fracton thermodynamics engine (distribution
// solver, entropy, fractal index, Rogers dilogarithm, central charges).

#include "fracton/central_charge.hpp"
#include "fracton/dilogarithm.hpp"
#include "fracton/distribution.hpp"
#include "fracton/entropy.hpp"
#include "fracton/errors.hpp"
#include "fracton/farey.hpp"
#include "fracton/fixtures.hpp"
#include "fracton/format.hpp"
#include "fracton/fractal_index.hpp"
#include "fracton/quadrature.hpp"
#include "fracton/rational.hpp"
#include "fracton/spectrum.hpp"
