#pragma once

// Umbrella header for the jumping-rational-curves library.

#include "jrc/boundary.hpp"
#include "jrc/degree.hpp"
#include "jrc/exact.hpp"
#include "jrc/gw.hpp"
#include "jrc/intersection.hpp"
#include "jrc/linalg.hpp"
#include "jrc/overrides.hpp"
#include "jrc/splitting.hpp"
#include "jrc/syzygy.hpp"
