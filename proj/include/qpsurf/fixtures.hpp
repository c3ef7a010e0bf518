#pragma once

#include "qpsurf/potential.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {
namespace fixtures {

// disc with 5 marked points, fan triangulation at vertex 1
Triangulation pentagon();
// disc with 6 marked points, inner triangle (1,3,5)
Triangulation hexagon_central();
Triangulation hexagon_fan();
// disc with 7 marked points, fan at vertex 1
Triangulation heptagon_fan();
Triangulation annulus();

QP a2();         // x: 1 -> 2, W = 0
QP kronecker();  // a, b: 1 -> 2, W = 0
QP three_cycle();  // x: 1->2, y: 2->3, z: 3->1, W = xyz
// the local quadrilateral quiver around a mutation vertex:
// a: k->1, b: 1->2, c: 2->k, e: k->3, f: 3->4, g: 4->k, W = bca + efg
QP local_mutation();

Triangulation by_name(const std::string& name);
std::vector<std::string> surface_names();
QP qp_by_name(const std::string& name);
std::vector<std::string> qp_names();

}  // namespace fixtures
}  // namespace qpsurf
