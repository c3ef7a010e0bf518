#include "qpsurf/fixtures.hpp"

namespace qpsurf {
namespace fixtures {

Triangulation pentagon() { return polygon_triangulation(5, {{1, 3}, {1, 4}}); }

Triangulation hexagon_central() {
    return polygon_triangulation(6, {{1, 3}, {3, 5}, {1, 5}});
}

Triangulation hexagon_fan() { return polygon_triangulation(6, {{1, 3}, {1, 4}, {1, 5}}); }

Triangulation heptagon_fan() {
    return polygon_triangulation(7, {{1, 3}, {1, 4}, {1, 5}, {1, 6}});
}

Triangulation annulus() { return annulus_1_1_triangulation(); }

QP a2() {
    Quiver q({"1", "2"}, {{"x", "1", "2"}});
    return QP{q, Potential::zero()};
}

QP kronecker() {
    Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
    return QP{q, Potential::zero()};
}

QP three_cycle() {
    Quiver q({"1", "2", "3"}, {{"x", "1", "2"}, {"y", "2", "3"}, {"z", "3", "1"}});
    Potential w;
    w.add_cycle({"x", "y", "z"}, Rat(1));
    return QP{q, w};
}

QP local_mutation() {
    Quiver q({"1", "2", "3", "4", "k"}, {{"a", "k", "1"},
                                         {"b", "1", "2"},
                                         {"c", "2", "k"},
                                         {"e", "k", "3"},
                                         {"f", "3", "4"},
                                         {"g", "4", "k"}});
    Potential w;
    w.add_cycle({"b", "c", "a"}, Rat(1));
    w.add_cycle({"e", "f", "g"}, Rat(1));
    return QP{q, w};
}

Triangulation by_name(const std::string& name) {
    if (name == "pentagon") return pentagon();
    if (name == "hexagon") return hexagon_central();
    if (name == "hexagon-fan") return hexagon_fan();
    if (name == "heptagon") return heptagon_fan();
    if (name == "annulus") return annulus();
    throw SurfaceError("unknown builtin surface fixture: " + name);
}

std::vector<std::string> surface_names() {
    return {"pentagon", "hexagon", "hexagon-fan", "heptagon", "annulus"};
}

QP qp_by_name(const std::string& name) {
    if (name == "a2") return a2();
    if (name == "kronecker") return kronecker();
    if (name == "three-cycle") return three_cycle();
    if (name == "local-mutation") return local_mutation();
    throw QuiverError("unknown builtin qp fixture: " + name);
}

std::vector<std::string> qp_names() { return {"a2", "kronecker", "three-cycle", "local-mutation"}; }

}  // namespace fixtures
}  // namespace qpsurf
