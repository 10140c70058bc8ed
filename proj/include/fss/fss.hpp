#pragma once

/// @file fss.hpp
/// @brief Everything: parsing, instances, tours, construction, local search,
/// fixed sets, population, solver and reporting.

#include <fss/construction.hpp>
#include <fss/engine.hpp>
#include <fss/fixed_set.hpp>
#include <fss/instance.hpp>
#include <fss/local_search.hpp>
#include <fss/population.hpp>
#include <fss/random.hpp>
#include <fss/report.hpp>
#include <fss/tour.hpp>
#include <fss/tsplib.hpp>
