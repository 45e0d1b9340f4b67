#pragma once

// Exact sinc constants, cube sections, kernel-lattice minima, and
// sum-distinct bounds. Everything lives in namespace siegel.

#include "siegel/cube_sections.hpp"
#include "siegel/errors.hpp"
#include "siegel/kernel_lattice.hpp"
#include "siegel/rational.hpp"
#include "siegel/sigma.hpp"
#include "siegel/sinc_integral.hpp"
#include "siegel/sum_distinct.hpp"
