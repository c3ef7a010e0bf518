#include "qpsurf/json_io.hpp"

namespace qpsurf {

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertices();
    Json arr = Json::array();
    for (const Arrow& a : q.arrows()) arr.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
    j["arrows"] = arr;
    return j;
}

Quiver quiver_from_json(const Json& j) {
    std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Arrow> arrows;
    for (const Json& a : j.at("arrows"))
        arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<std::string>(),
                          a.at("tgt").get<std::string>()});
    bool allow2 = j.value("allow_two_cycles", false);
    return Quiver(std::move(vs), std::move(arrows), allow2);
}

Json potential_to_json(const Potential& w) {
    Json arr = Json::array();
    for (const auto& [cyc, c] : w.cycles())
        arr.push_back({{"cycle", cyc}, {"coeff", rat_to_string(c)}});
    return arr;
}

Potential potential_from_json(const Json& j) {
    Potential w;
    for (const Json& t : j)
        w.add_cycle(t.at("cycle").get<std::vector<std::string>>(),
                    rat_from_string(t.at("coeff").get<std::string>()));
    return w;
}

Json qp_to_json(const QP& qp) {
    Json j = quiver_to_json(qp.quiver);
    j["potential"] = potential_to_json(qp.potential);
    return j;
}

QP qp_from_json(const Json& j) {
    QP qp;
    qp.quiver = quiver_from_json(j);
    if (j.contains("potential")) qp.potential = potential_from_json(j.at("potential"));
    qp.potential.validate(qp.quiver);
    return qp;
}

Json triangulation_to_json(const Triangulation& t) {
    Json j;
    Json tris = Json::array();
    Json decs = Json::array();
    for (const Tri& tri : t.tris()) {
        tris.push_back({tri.sides[0], tri.sides[1], tri.sides[2]});
        decs.push_back(tri.dec);
    }
    j["triangles"] = tris;
    j["decorations"] = decs;
    Json gluing = Json::array();
    for (const std::string& a : t.arcs()) {
        auto pos = t.arc_positions(a);
        gluing.push_back({pos[0].first, pos[0].second, pos[1].first, pos[1].second});
    }
    j["gluing"] = gluing;
    j["boundary"] = t.boundary_sides();
    return j;
}

Triangulation triangulation_from_json(const Json& j) {
    std::vector<Tri> tris;
    const Json& tt = j.at("triangles");
    for (std::size_t i = 0; i < tt.size(); ++i) {
        Tri tri;
        for (int s = 0; s < 3; ++s) tri.sides[s] = tt[i][s].get<std::string>();
        tri.dec = static_cast<int>(i);
        if (j.contains("decorations")) tri.dec = j.at("decorations")[i].get<int>();
        tris.push_back(tri);
    }
    Triangulation t(std::move(tris));
    if (j.contains("gluing")) {
        for (const Json& g : j.at("gluing")) {
            int t1 = g[0].get<int>(), s1 = g[1].get<int>();
            int t2 = g[2].get<int>(), s2 = g[3].get<int>();
            const auto& a = t.tris().at(t1).sides.at(s1);
            const auto& b = t.tris().at(t2).sides.at(s2);
            if (a != b) throw SurfaceError("gluing entry does not match side labels");
        }
    }
    return t;
}

Json egraph_to_json(const ExchangeGraph& g) {
    Json j;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        Json n;
        n["id"] = i;
        n["hash"] = canonical_hash(g.nodes[i].canon);
        n["arcs"] = g.nodes[i].tri.arcs();
        n["depth"] = g.nodes[i].depth;
        nodes.push_back(n);
    }
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const EgEdge& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"arc", e.arc}});
    j["edges"] = edges;
    return j;
}

Json ext_table_to_json(const ExtTable& t) {
    Json j;
    Json basis = Json::array();
    for (const ExtBasisElt& e : t.basis()) basis.push_back(e.to_string());
    j["basis"] = basis;
    j["dims"] = t.graded_dims();
    Json prods = Json::array();
    const int n = static_cast<int>(t.basis().size());
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g)
            if (auto r = t.compose(f, g)) prods.push_back({f, g, *r});
    j["products"] = prods;
    return j;
}

Json transport_to_json(const TransportMap& t) {
    Json j;
    Json arcs = Json::array();
    for (const auto& [a, img] : t.arc_map) {
        Json w = Json::array();
        for (const TwistGen& g : img.word) w.push_back({{"arc", g.arc}, {"sign", g.sign}});
        arcs.push_back({{"arc", a}, {"word", w}, {"target", img.arc}, {"shift", img.shift}});
    }
    j["arcs"] = arcs;
    Json germs = Json::array();
    for (const auto& [g, h] : t.germ_map)
        germs.push_back({{"arc", g.arc}, {"dec", g.dec}, {"to_arc", h.arc}, {"to_dec", h.dec}});
    j["germs"] = germs;
    j["identity"] = t.is_identity();
    return j;
}

Json charge_to_json(const CentralCharge& z) {
    Json j;
    for (const auto& [v, zv] : z.z) j[v] = {rat_to_string(zv.re), rat_to_string(zv.im)};
    return j;
}

CentralCharge charge_from_json(const Json& j) {
    CentralCharge z;
    for (auto it = j.begin(); it != j.end(); ++it) {
        GaussRat g;
        g.re = rat_from_string((*it)[0].get<std::string>());
        g.im = rat_from_string((*it)[1].get<std::string>());
        z.z[it.key()] = g;
    }
    return z;
}

}  // namespace qpsurf
