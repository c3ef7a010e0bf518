#include <doctest.h>

#include <set>

#include "qpsurf/fixtures.hpp"
#include "qpsurf/surface.hpp"

using namespace qpsurf;

TEST_CASE("arc and decoration counts") {
    // disc with m marked points: genus 0, one boundary
    CHECK(MarkedSurface(0, {5}).arc_count() == 2);
    CHECK(MarkedSurface(0, {5}).decoration_count() == 3);
    CHECK(MarkedSurface(0, {6}).arc_count() == 3);
    CHECK(MarkedSurface(0, {6}).decoration_count() == 4);
    CHECK(MarkedSurface(0, {7}).arc_count() == 4);
    CHECK(MarkedSurface(0, {7}).decoration_count() == 5);
    // annulus with 1+1 marked points
    CHECK(MarkedSurface(0, {1, 1}).arc_count() == 2);
    CHECK(MarkedSurface(0, {1, 1}).decoration_count() == 2);
    // genus 1, one boundary, 1 marked point
    CHECK(MarkedSurface(1, {1}).arc_count() == 4);
    // too small
    CHECK_THROWS_AS(MarkedSurface(0, {3}), SurfaceError);
    CHECK_THROWS_AS(MarkedSurface(0, {}), SurfaceError);
    CHECK_THROWS_AS(MarkedSurface(0, {2, 0}), SurfaceError);
}

TEST_CASE("fixture triangulations satisfy the counting identities") {
    struct Row {
        const char* name;
        MarkedSurface s;
    };
    std::vector<Row> rows = {{"pentagon", MarkedSurface(0, {5})},
                             {"hexagon", MarkedSurface(0, {6})},
                             {"hexagon-fan", MarkedSurface(0, {6})},
                             {"heptagon", MarkedSurface(0, {7})},
                             {"annulus", MarkedSurface(0, {1, 1})}};
    for (const Row& row : rows) {
        Triangulation t = fixtures::by_name(row.name);
        CHECK(static_cast<int>(t.n_arcs()) == row.s.arc_count());
        CHECK(static_cast<int>(t.n_triangles()) == row.s.decoration_count());
        CHECK(t.marked_count() == row.s.marked_total());
    }
}

TEST_CASE("qp of the pentagon fan is A2 with zero potential") {
    QP qp = fixtures::pentagon().qp();
    CHECK(qp.quiver.vertices().size() == 2);
    CHECK(qp.quiver.arrows().size() == 1);
    CHECK(qp.potential.is_zero());
}

TEST_CASE("qp of the hexagon central triangulation is the 3-cycle") {
    QP qp = fixtures::hexagon_central().qp();
    CHECK(qp.quiver.vertices().size() == 3);
    CHECK(qp.quiver.arrows().size() == 3);
    REQUIRE(qp.potential.cycles().size() == 1);
    CHECK(qp.potential.cycles().begin()->first.size() == 3);
    // and the three arrows form one oriented triangle
    for (const Arrow& a : qp.quiver.arrows()) {
        bool extends = false;
        for (const Arrow& b : qp.quiver.arrows())
            if (b.src == a.tgt) extends = true;
        CHECK(extends);
    }
}

TEST_CASE("qp of the annulus is the Kronecker quiver") {
    QP qp = fixtures::annulus().qp();
    CHECK(qp.quiver.vertices().size() == 2);
    REQUIRE(qp.quiver.arrows().size() == 2);
    CHECK(qp.quiver.arrows()[0].src == qp.quiver.arrows()[1].src);
    CHECK(qp.quiver.arrows()[0].tgt == qp.quiver.arrows()[1].tgt);
    CHECK(qp.potential.is_zero());
}

TEST_CASE("hexagon fan gives a path quiver with zero potential") {
    QP qp = fixtures::hexagon_fan().qp();
    CHECK(qp.quiver.arrows().size() == 2);
    CHECK(qp.potential.is_zero());
}

TEST_CASE("flip involution at the combinatorial level") {
    for (const std::string& name : fixtures::surface_names()) {
        Triangulation t = fixtures::by_name(name);
        for (const std::string& arc : t.arcs()) {
            if (!t.flippable(arc)) continue;
            CHECK(t.flip(arc, FlipDir::Forward).flip(arc, FlipDir::Backward) == t);
            CHECK(t.flip(arc, FlipDir::Backward).flip(arc, FlipDir::Forward) == t);
            // forward twice returns to the same undecorated triangulation
            Triangulation twice =
                t.flip(arc, FlipDir::Forward).flip(arc, FlipDir::Forward);
            CHECK(twice.canonical_string() == t.canonical_string());
        }
    }
}

TEST_CASE("hexagon central arc flip kills the interior triangle") {
    Triangulation t = fixtures::hexagon_central();
    for (const std::string& arc : t.arcs()) {
        QP qp = t.flip(arc, FlipDir::Forward).qp();
        CHECK(qp.potential.is_zero());
    }
}

TEST_CASE("germ orders list the arc sides of each triangle") {
    for (const std::string& name : fixtures::surface_names()) {
        Triangulation t = fixtures::by_name(name);
        std::size_t germs = 0;
        for (const Tri& tri : t.tris()) {
            int arc_sides = 0;
            for (const auto& s : tri.sides)
                if (t.is_arc(s)) ++arc_sides;
            CHECK(arc_sides <= 3);
            germs += arc_sides;
        }
        CHECK(germs == 2 * t.n_arcs());
    }
}

TEST_CASE("pentagon exchange graph is the 5-cycle") {
    ExchangeGraph g = exchange_graph_bfs(fixtures::pentagon(), 16);
    CHECK(g.nodes.size() == 5);
    // each node flips two ways
    std::map<int, std::set<int>> nbrs;
    for (const EgEdge& e : g.edges) {
        CHECK(e.from != e.to);
        nbrs[e.from].insert(e.to);
        nbrs[e.to].insert(e.from);
    }
    std::set<std::pair<int, int>> undirected;
    for (const EgEdge& e : g.edges)
        undirected.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
    CHECK(undirected.size() == 5);
    for (const auto& [n, s] : nbrs) {
        (void)n;
        CHECK(s.size() == 2);
    }
}

TEST_CASE("hexagon exchange graph has Catalan(4) = 14 nodes") {
    ExchangeGraph g = exchange_graph_bfs(fixtures::hexagon_central(), 16);
    CHECK(g.nodes.size() == 14);
    ExchangeGraph g2 = exchange_graph_bfs(fixtures::hexagon_fan(), 16);
    CHECK(g2.nodes.size() == 14);
}

TEST_CASE("heptagon exchange graph has Catalan(5) = 42 nodes") {
    ExchangeGraph g = exchange_graph_bfs(fixtures::heptagon_fan(), 16);
    CHECK(g.nodes.size() == 42);
}

TEST_CASE("bfs depth bounds") {
    ExchangeGraph g0 = exchange_graph_bfs(fixtures::hexagon_central(), 0);
    CHECK(g0.nodes.size() == 1);
    CHECK(g0.edges.empty());
    ExchangeGraph g1 = exchange_graph_bfs(fixtures::hexagon_central(), 1);
    CHECK(g1.edges.size() <= 3);
    for (const EgNode& n : g1.nodes) CHECK(n.depth <= 1);
    CHECK_THROWS_AS(exchange_graph_bfs(fixtures::pentagon(), -1), SurfaceError);
}

TEST_CASE("five forward flips around the pentagon cycle return to the seed") {
    Triangulation t = fixtures::pentagon();
    std::string canon0 = t.canonical_string();
    Triangulation cur = t;
    std::string last;
    for (int i = 0; i < 5; ++i) {
        // follow the cycle: flip the arc that was not produced by the
        // previous step
        std::string pick;
        for (const std::string& a : cur.arcs())
            if (a != last) pick = a;
        // after the first step, the new diagonal keeps the flipped arc's
        // label, so flip the other one
        last = pick;
        cur = cur.flip(pick, FlipDir::Forward);
    }
    CHECK(cur.canonical_string() == canon0);
}

TEST_CASE("non-flippable arcs are rejected with an explicit error") {
    // a self-glued triangle: the arc a bounds a quadrilateral with itself
    Triangulation t({Tri{{"a", "a", "b"}, 0}, Tri{{"b", "c", "d"}, 1}});
    CHECK(!t.flippable("a"));
    CHECK(t.flippable("b"));
    CHECK_THROWS_AS(t.flip("a", FlipDir::Forward), SurfaceError);
    CHECK_THROWS_AS(t.quad("a"), SurfaceError);
}

TEST_CASE("dot export shape") {
    ExchangeGraph g = exchange_graph_bfs(fixtures::pentagon(), 2);
    std::string dot = egraph_to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
