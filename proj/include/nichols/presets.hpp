#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nichols/ydcat.hpp"

namespace nichols {

/// Built-in two-dimensional simple modules over a group with a 3-factor
/// abelian presentation (generators g1, g2, g3):
///
///   W1 = {X1, X2}, deg g1      W4 = {R1, R2}, deg g1g2
///   W2 = {Y1, Y2}, deg g2      W5 = {S1, S2}, deg g1g3
///   W3 = {Z1, Z2}, deg g3      W6 = {T1, T2}, deg g2g3
///
/// V1, V2, V3 carry the tables of W1, W2, W3 and are meant for
/// Z_{m1} x Z_{m2} x Z_{m3} with the sign cocycle.
YDModule preset_module(std::string_view name, const CocyclePtr& phi);

bool is_preset_name(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace nichols
