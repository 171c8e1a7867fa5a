#pragma once

// Umbrella header: exact U_5 Hecke matrix for the quaternion algebra
// ramified at 2 and infinity, corank/determinant/Newton-polygon analysis
// of its minors, classical dimensions, and the ghost series comparison.

#include "ghost5/charseries.hpp"
#include "ghost5/corank_reference.hpp"
#include "ghost5/dimensions.hpp"
#include "ghost5/gaussian.hpp"
#include "ghost5/ghost.hpp"
#include "ghost5/hecke.hpp"
#include "ghost5/linalg.hpp"
#include "ghost5/matrix.hpp"
#include "ghost5/newton.hpp"
#include "ghost5/quaternion.hpp"
#include "ghost5/valuation.hpp"
#include "ghost5/weight.hpp"
