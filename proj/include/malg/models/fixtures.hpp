#pragma once

// The bundled example algebras, also shipped as JSON under fixtures/.

#include "malg/models/models.hpp"

#include <string>
#include <utility>
#include <vector>

namespace malg::models::fixtures {

/// States {0, a}; measurements top (identity) and bot (constant 0).
TableModelSpec f1();
/// All theories over atoms p, q: 16 states, 16 measurements.
PropositionalModelSpec t2();
/// Maximal theories over p, q plus the inconsistent one: 5 states.
PropositionalModelSpec t2_maximal();
/// Q^2 with bot, px, py, pd = span{(1,1)}, pdperp = span{(1,-1)}, top.
RayModelSpec r2();
/// Q^3 with the coordinate axes and planes, pd = span{(1,1,0)},
/// pdperp = span{(1,-1,0),(0,0,1)}, pdm = span{(1,-1,0)},
/// pdmperp = span{(1,1,0),(0,0,1)}, bot and top.
RayModelSpec r3();
RayModelSpec r2_full();
RayModelSpec r3_full();

/// Every fixture with its file stem ("f1", "t2", "t2_maximal", ...).
std::vector<std::pair<std::string, ModelSpec>> all();

}  // namespace malg::models::fixtures
