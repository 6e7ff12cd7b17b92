#pragma once

// Umbrella header for the predictive-dependence library.

#include "analytic.hpp"
#include "binning.hpp"
#include "comparators.hpp"
#include "csv.hpp"
#include "estimator.hpp"
#include "kde.hpp"
#include "sampling.hpp"
#include "stats.hpp"
#include "sweep.hpp"
#include "synth.hpp"
