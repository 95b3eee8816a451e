#pragma once

// REF-1: four Hopf pairs TL, TR, BL, BR and one simple circle Y joined by
// eight arcs into a tree, decorated through the cube group by
// TL = (12), TR = (14), BL = (34), BR = (23), Y = (24).

#include <string>
#include <vector>

#include "sldrep/conditions.hpp"

namespace sldrep::fixtures {

SingularLinkDiagram ref1_diagram();
Decoration ref1_decoration();
/// (TL, TR, BL, BR)
std::vector<std::string> ref1_hopf_order();

/// Two disjoint copies of REF-1 with node ids suffixed "_1" and "_2".
SingularLinkDiagram ref1_double_diagram();

}  // namespace sldrep::fixtures
