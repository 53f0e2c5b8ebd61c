#pragma once

// Umbrella header.

#include "x5/rational.hpp"
#include "x5/quadnum.hpp"
#include "x5/chern.hpp"
#include "x5/tilt.hpp"
#include "x5/poly2.hpp"
#include "x5/walls.hpp"
#include "x5/destab.hpp"
#include "x5/bounds.hpp"
#include "x5/delpezzo.hpp"
#include "x5/replay.hpp"
