#pragma once

// Umbrella header for the apfree library: exact arithmetic-patch detection,
// extremal grid solving, avoiding-set constructions, closed-form dimension
// bounds, and empirical dimension estimators.

#include "rational.hpp"
#include "core.hpp"
#include "detect.hpp"
#include "rksolver.hpp"
#include "construct.hpp"
#include "bounds.hpp"
#include "estimate.hpp"
#include "io.hpp"
#include "cache.hpp"
