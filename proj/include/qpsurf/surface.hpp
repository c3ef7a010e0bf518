#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpsurf/potential.hpp"
#include "qpsurf/quiver.hpp"

namespace qpsurf {

struct SurfaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Marked surface: genus plus marked-point counts per boundary component.
struct MarkedSurface {
    int genus = 0;
    std::vector<int> boundaries;

    MarkedSurface(int g, std::vector<int> b);

    int marked_total() const;
    // n = 6g + 3|bd| + |M| - 6
    int arc_count() const;
    // aleph = (2n + |M|) / 3
    int decoration_count() const;
};

enum class FlipDir { Forward, Backward };

// One triangle: three sides in clockwise cyclic order, plus the id of the
// decorating point it contains. Side labels appearing twice across the
// triangulation are arcs (glued pairs); labels appearing once are boundary
// segments.
struct Tri {
    std::array<std::string, 3> sides;
    int dec = 0;
};

struct QuadInfo {
    // Quadrilateral around a flippable arc d, rotated so that the two
    // triangles read (g1, g2, d) and (d, g3, g4).
    std::string g1, g2, g3, g4;
    int triA = 0, triB = 0;  // indices into tris()
    int decA = 0, decB = 0;
};

class Triangulation {
public:
    // empty placeholder; every operation on it throws
    Triangulation() = default;
    explicit Triangulation(std::vector<Tri> tris);

    const std::vector<Tri>& tris() const { return tris_; }
    std::size_t n_triangles() const { return tris_.size(); }

    const std::vector<std::string>& arcs() const { return arcs_; }
    const std::vector<std::string>& boundary_sides() const { return boundary_; }
    bool is_arc(const std::string& side) const;
    std::size_t n_arcs() const { return arcs_.size(); }
    int marked_count() const { return static_cast<int>(boundary_.size()); }

    bool has_self_glued() const;

    // The two (triangle, slot) positions of an arc, in (tri, slot) order.
    std::array<std::pair<int, int>, 2> arc_positions(const std::string& arc) const;
    // Decorations at the two ends of the dual closed arc of `arc`.
    std::array<int, 2> arc_end_decs(const std::string& arc) const;

    bool flippable(const std::string& arc) const;
    QuadInfo quad(const std::string& arc) const;
    Triangulation flip(const std::string& arc, FlipDir dir) const;

    // Quiver with potential of the triangulation: one vertex per arc, one
    // arrow per clockwise angle between arc sides, one 3-cycle per interior
    // triangle.
    QP qp() const;

    // Canonical encoding of the gluing datum under arc relabeling
    // (decorations ignored); node identity in the exchange graph.
    std::string canonical_string() const;

    bool operator==(const Triangulation& o) const { return tris_ == o.tris_; }

private:
    void build_index();

    std::vector<Tri> tris_;
    std::vector<std::string> arcs_;
    std::vector<std::string> boundary_;
    std::map<std::string, std::vector<std::pair<int, int>>> side_loc_;
};

inline bool operator==(const Tri& a, const Tri& b) {
    return a.sides == b.sides && a.dec == b.dec;
}

struct EgNode {
    std::string canon;
    Triangulation tri;
    std::vector<std::pair<std::string, FlipDir>> path_from_seed;
    int depth = 0;
};

struct EgEdge {
    int from = 0;
    int to = 0;
    std::string arc;
};

struct ExchangeGraph {
    std::vector<EgNode> nodes;
    std::vector<EgEdge> edges;
};

// Breadth-first enumeration of the exchange graph (undecorated node
// identity), edges = forward flips labeled by arc id.
ExchangeGraph exchange_graph_bfs(const Triangulation& t0, int depth);

std::string egraph_to_dot(const ExchangeGraph& g);
std::string canonical_hash(const std::string& canonical);

// Triangulations of a convex m-gon (disc with m marked points), vertices
// labeled 1..m clockwise; arcs given as vertex pairs.
Triangulation polygon_triangulation(int m, const std::vector<std::pair<int, int>>& arcs);

Triangulation annulus_1_1_triangulation();

}  // namespace qpsurf
