#include <doctest.h>

#include <algorithm>

#include "qpsurf/fixtures.hpp"
#include "qpsurf/mutation.hpp"

using namespace qpsurf;

TEST_CASE("premutation of A2 at the sink reverses the arrow") {
    QP qp = fixtures::a2();
    PremutationResult r = premutate(qp.quiver, qp.potential, "2");
    CHECK(r.quiver.arrows().size() == 1);
    CHECK(r.quiver.arrows()[0].id == reversed_name("x"));
    CHECK(r.quiver.src(reversed_name("x")) == "2");
    CHECK(r.potential.is_zero());
}

TEST_CASE("premutation of the 3-cycle at 2 matches the worked example") {
    QP qp = fixtures::three_cycle();
    PremutationResult r = premutate(qp.quiver, qp.potential, "2");
    // arrows x', y', [x|y], z
    std::vector<std::string> ids;
    for (const Arrow& a : r.quiver.arrows()) ids.push_back(a.id);
    std::sort(ids.begin(), ids.end());
    std::vector<std::string> want = {composite_name("x", "y"), "x'", "y'", "z"};
    std::sort(want.begin(), want.end());
    CHECK(ids == want);
    // W~ = [xy]z + [xy]y'x'
    Potential wexp;
    wexp.add_cycle({composite_name("x", "y"), "z"}, Rat(1));
    wexp.add_cycle({composite_name("x", "y"), reversed_name("y"), reversed_name("x")}, Rat(1));
    CHECK(r.potential == wexp);
}

TEST_CASE("premutation with a double arrow into k") {
    QP qp = fixtures::kronecker();
    PremutationResult r = premutate(qp.quiver, qp.potential, "2");
    CHECK(r.quiver.arrows().size() == 2);
    for (const Arrow& a : r.quiver.arrows()) {
        CHECK(a.src == "2");
        CHECK(a.tgt == "1");
    }
    CHECK(r.potential.is_zero());
}

TEST_CASE("reduction eliminates the hexagon-style 2-cycle by substitution") {
    QP qp = fixtures::three_cycle();
    PremutationResult pre = premutate(qp.quiver, qp.potential, "2");
    QP red = reduce(pre.quiver, pre.potential);
    CHECK(red.potential.is_zero());
    std::vector<std::string> ids;
    for (const Arrow& a : red.quiver.arrows()) ids.push_back(a.id);
    std::sort(ids.begin(), ids.end());
    CHECK(ids == std::vector<std::string>{"x'", "y'"});
    CHECK(classify_qp(red.quiver, red.potential) == QpClass::Reduced);
}

TEST_CASE("reduce leaves a reduced potential unchanged") {
    QP qp = fixtures::three_cycle();
    QP red = reduce(qp.quiver, qp.potential);
    CHECK(red.quiver == qp.quiver);
    CHECK(red.potential == qp.potential);
}

TEST_CASE("trivial QP reduces to the empty quiver") {
    Quiver q({"1", "2"}, {{"u", "1", "2"}, {"v", "2", "1"}}, true);
    Potential w;
    w.add_cycle({"u", "v"}, Rat(1));
    QP red = reduce(q, w);
    CHECK(red.quiver.arrows().empty());
    CHECK(red.quiver.vertices() == q.vertices());
    CHECK(red.potential.is_zero());
}

TEST_CASE("reduction is independent of the elimination order") {
    // two disjoint 2-cycles with tails: any elimination order agrees
    QP base = fixtures::local_mutation();
    PremutationResult pre = premutate(base.quiver, base.potential, "k");
    std::vector<CycWord> two_cycles;
    for (const auto& [cyc, c] : pre.potential.cycles()) {
        (void)c;
        if (cyc.size() == 2) two_cycles.push_back(cyc);
    }
    REQUIRE(two_cycles.size() == 2);
    QP a = reduce_with_order(pre.quiver, pre.potential, {two_cycles[0], two_cycles[1]});
    QP b = reduce_with_order(pre.quiver, pre.potential, {two_cycles[1], two_cycles[0]});
    CHECK(a.quiver == b.quiver);
    CHECK(a.potential == b.potential);
    CHECK(a.potential == reduce(pre.quiver, pre.potential).potential);
}

TEST_CASE("mutation of the 3-cycle at 2 gives the path quiver") {
    QP qp = fixtures::three_cycle();
    QP m = mutate(qp, "2");
    CHECK(m.potential.is_zero());
    CHECK(m.quiver.arrows().size() == 2);
    CHECK(m.quiver.arrows_between("2", "1").size() == 1);
    CHECK(m.quiver.arrows_between("3", "2").size() == 1);
}

TEST_CASE("mutation of A2 reverses it") {
    QP qp = fixtures::a2();
    QP m = mutate(qp, "2");
    CHECK(m.quiver.arrows().size() == 1);
    CHECK(m.quiver.arrows()[0].src == "2");
    CHECK(m.quiver.arrows()[0].tgt == "1");
}

TEST_CASE("mutating twice at the same vertex returns an isomorphic QP") {
    QP qp = fixtures::three_cycle();
    QP m1 = mutate(qp, "2");
    QP m2 = mutate(m1, "2");
    QpMatch match = qp_equal_up_to_arrow_names(m2, qp);
    CHECK(match.ok);

    QP a2 = fixtures::a2();
    QpMatch match2 = qp_equal_up_to_arrow_names(mutate(mutate(a2, "2"), "2"), a2);
    CHECK(match2.ok);
}

TEST_CASE("mutation output is always reduced on fixtures") {
    for (const std::string& name : {"a2", "kronecker", "three-cycle", "local-mutation"}) {
        QP qp = fixtures::qp_by_name(name);
        for (const std::string& k : qp.quiver.vertices()) {
            QP m = mutate(qp, k);
            CHECK(classify_qp(m.quiver, m.potential) == QpClass::Reduced);
        }
    }
}

TEST_CASE("flip-mutation compatibility on the hexagon, every triangulation and arc") {
    ExchangeGraph g = exchange_graph_bfs(fixtures::hexagon_central(), 16);
    REQUIRE(g.nodes.size() == 14);
    for (const EgNode& n : g.nodes) {
        for (const std::string& arc : n.tri.arcs()) {
            if (!n.tri.flippable(arc)) continue;
            FlipMutationReport rep = check_flip_mutation(n.tri, arc);
            INFO(n.canon, " arc ", arc, ": ", rep.witness);
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("flip-mutation compatibility on pentagon and annulus") {
    for (const char* name : {"pentagon", "annulus"}) {
        ExchangeGraph g = exchange_graph_bfs(fixtures::by_name(name), 16);
        for (const EgNode& n : g.nodes) {
            for (const std::string& arc : n.tri.arcs()) {
                if (!n.tri.flippable(arc)) continue;
                FlipMutationReport rep = check_flip_mutation(n.tri, arc);
                INFO(name, " arc ", arc, ": ", rep.witness);
                CHECK(rep.ok);
            }
        }
    }
}

TEST_CASE("corrupted premutation fails the flip-mutation check with a witness") {
    // the flip at the fan's middle arc creates an interior triangle, so the
    // dropped W~2 term is visible in the mismatching potential
    Triangulation t = fixtures::hexagon_fan();
    std::string arc = "a1_4";
    QP qp = t.qp();
    PremutationResult pre = premutate(qp.quiver, qp.potential, arc);
    // drop W~2
    Potential w1;
    for (const auto& [cyc, c] : pre.potential.cycles()) {
        bool w2term = cyc.size() == 3 && pre.composite_of.count(cyc[0]);
        if (!w2term) w1.add_cycle(cyc, c);
    }
    bool matched;
    try {
        QP lhs = reduce(pre.quiver, w1);
        QP rhs = t.flip(arc, FlipDir::Forward).qp();
        QpMatch m = qp_equal_up_to_arrow_names(lhs, rhs);
        matched = m.ok;
        if (!m.ok) CHECK(!m.witness.empty());
    } catch (const MutationError&) {
        matched = false;
    }
    CHECK(!matched);
}

TEST_CASE("premutation rejects bad inputs") {
    QP qp = fixtures::three_cycle();
    CHECK_THROWS_AS(premutate(qp.quiver, qp.potential, "9"), MutationError);
    Quiver q2({"1", "2"}, {{"u", "1", "2"}, {"v", "2", "1"}}, true);
    Potential wuv;
    wuv.add_cycle({"u", "v"}, Rat(1));
    CHECK_THROWS_AS(premutate(q2, wuv, "1"), MutationError);
}

TEST_CASE("reduce rejects overlapping 2-cycle terms") {
    // u v + u w with both uv and uw 2-cycles sharing u
    Quiver q({"1", "2"}, {{"u", "1", "2"}, {"v", "2", "1"}, {"w", "2", "1"}}, true);
    Potential w;
    w.add_cycle({"u", "v"}, Rat(1));
    w.add_cycle({"u", "w"}, Rat(1));
    CHECK_THROWS_AS(reduce(q, w), MutationError);
}
