#include "qpsurf/surface.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <sstream>

namespace qpsurf {

MarkedSurface::MarkedSurface(int g, std::vector<int> b) : genus(g), boundaries(std::move(b)) {
    if (genus < 0) throw SurfaceError("negative genus");
    if (boundaries.empty()) throw SurfaceError("at least one boundary component required");
    for (int m : boundaries)
        if (m < 1) throw SurfaceError("every boundary component needs a marked point");
    if (arc_count() < 1) throw SurfaceError("n = 6g+3|bd|+|M|-6 must be at least 1");
}

int MarkedSurface::marked_total() const {
    int m = 0;
    for (int b : boundaries) m += b;
    return m;
}

int MarkedSurface::arc_count() const {
    return 6 * genus + 3 * static_cast<int>(boundaries.size()) + marked_total() - 6;
}

int MarkedSurface::decoration_count() const {
    int num = 2 * arc_count() + marked_total();
    return num / 3;
}

namespace {

std::array<std::string, 3> rotate_sides(const std::array<std::string, 3>& s, int r) {
    return {s[r % 3], s[(r + 1) % 3], s[(r + 2) % 3]};
}

std::array<std::string, 3> min_rotation(const std::array<std::string, 3>& s) {
    auto best = s;
    for (int r = 1; r < 3; ++r) {
        auto cand = rotate_sides(s, r);
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace

Triangulation::Triangulation(std::vector<Tri> tris) : tris_(std::move(tris)) {
    if (tris_.empty()) throw SurfaceError("empty triangulation");
    for (Tri& t : tris_) t.sides = min_rotation(t.sides);
    std::set<int> decs;
    for (const Tri& t : tris_)
        if (!decs.insert(t.dec).second) throw SurfaceError("duplicate decoration id");
    build_index();
}

void Triangulation::build_index() {
    side_loc_.clear();
    arcs_.clear();
    boundary_.clear();
    for (int ti = 0; ti < static_cast<int>(tris_.size()); ++ti)
        for (int s = 0; s < 3; ++s) side_loc_[tris_[ti].sides[s]].push_back({ti, s});
    for (const auto& [label, locs] : side_loc_) {
        if (locs.size() == 1)
            boundary_.push_back(label);
        else if (locs.size() == 2)
            arcs_.push_back(label);
        else
            throw SurfaceError("side label " + label + " used " + std::to_string(locs.size()) +
                               " times");
    }
}

bool Triangulation::is_arc(const std::string& side) const {
    auto it = side_loc_.find(side);
    return it != side_loc_.end() && it->second.size() == 2;
}

bool Triangulation::has_self_glued() const {
    for (const Tri& t : tris_)
        if (t.sides[0] == t.sides[1] || t.sides[1] == t.sides[2] || t.sides[0] == t.sides[2])
            return true;
    return false;
}

std::array<std::pair<int, int>, 2> Triangulation::arc_positions(const std::string& arc) const {
    auto it = side_loc_.find(arc);
    if (it == side_loc_.end() || it->second.size() != 2)
        throw SurfaceError("not an arc: " + arc);
    return {it->second[0], it->second[1]};
}

std::array<int, 2> Triangulation::arc_end_decs(const std::string& arc) const {
    auto pos = arc_positions(arc);
    return {tris_[pos[0].first].dec, tris_[pos[1].first].dec};
}

bool Triangulation::flippable(const std::string& arc) const {
    if (!is_arc(arc)) return false;
    auto pos = arc_positions(arc);
    return pos[0].first != pos[1].first;
}

QuadInfo Triangulation::quad(const std::string& arc) const {
    if (!flippable(arc))
        throw SurfaceError("arc " + arc + " is not flippable (self-glued quadrilateral)");
    auto pos = arc_positions(arc);
    const auto [ta, ia] = pos[0];
    const auto [tb, ib] = pos[1];
    QuadInfo q;
    q.triA = ta;
    q.triB = tb;
    q.decA = tris_[ta].dec;
    q.decB = tris_[tb].dec;
    // A reads (g1, g2, d), B reads (d, g3, g4)
    q.g1 = tris_[ta].sides[(ia + 1) % 3];
    q.g2 = tris_[ta].sides[(ia + 2) % 3];
    q.g3 = tris_[tb].sides[(ib + 1) % 3];
    q.g4 = tris_[tb].sides[(ib + 2) % 3];
    return q;
}

Triangulation Triangulation::flip(const std::string& arc, FlipDir dir) const {
    QuadInfo q = quad(arc);
    std::vector<Tri> out = tris_;
    if (dir == FlipDir::Forward) {
        out[q.triB] = Tri{{q.g2, q.g3, arc}, q.decB};
        out[q.triA] = Tri{{arc, q.g4, q.g1}, q.decA};
    } else {
        out[q.triB] = Tri{{q.g4, q.g1, arc}, q.decB};
        out[q.triA] = Tri{{arc, q.g2, q.g3}, q.decA};
    }
    return Triangulation(std::move(out));
}

QP Triangulation::qp() const {
    if (has_self_glued())
        throw SurfaceError("self-glued triangle: quiver with potential not defined in v1");
    std::vector<std::string> vertices = arcs_;
    std::vector<Arrow> arrows;
    Potential w;
    for (const Tri& t : tris_) {
        std::array<std::string, 3> arrow_of_slot = {"", "", ""};
        for (int s = 0; s < 3; ++s) {
            const std::string& a = t.sides[s];
            const std::string& b = t.sides[(s + 1) % 3];
            if (is_arc(a) && is_arc(b)) {
                std::string id = a + ">" + b + "@" + std::to_string(t.dec);
                arrow_of_slot[s] = id;
                arrows.push_back({id, a, b});
            }
        }
        if (!arrow_of_slot[0].empty() && !arrow_of_slot[1].empty() && !arrow_of_slot[2].empty())
            w.add_cycle({arrow_of_slot[0], arrow_of_slot[1], arrow_of_slot[2]}, Rat(1));
    }
    return QP{Quiver(std::move(vertices), std::move(arrows)), std::move(w)};
}

std::string Triangulation::canonical_string() const {
    std::string best;
    const int nt = static_cast<int>(tris_.size());
    for (int start = 0; start < nt; ++start) {
        for (int rot = 0; rot < 3; ++rot) {
            std::map<std::string, int> arc_id;
            std::vector<int> entry_rot(nt, -1);
            std::vector<int> order;
            std::deque<int> queue;
            std::vector<bool> seen(nt, false);
            entry_rot[start] = rot;
            seen[start] = true;
            queue.push_back(start);
            std::ostringstream os;
            while (!queue.empty()) {
                int ti = queue.front();
                queue.pop_front();
                order.push_back(ti);
                const Tri& t = tris_[ti];
                for (int s = 0; s < 3; ++s) {
                    int slot = (entry_rot[ti] + s) % 3;
                    const std::string& label = t.sides[slot];
                    if (is_arc(label)) {
                        auto it = arc_id.find(label);
                        int id;
                        if (it == arc_id.end()) {
                            id = static_cast<int>(arc_id.size());
                            arc_id.emplace(label, id);
                        } else {
                            id = it->second;
                        }
                        os << "A" << id << ";";
                        auto pos = arc_positions(label);
                        for (auto [tj, sj] : pos) {
                            if (!seen[tj]) {
                                seen[tj] = true;
                                entry_rot[tj] = sj;
                                queue.push_back(tj);
                            }
                        }
                    } else {
                        os << "B" << label << ";";
                    }
                }
                os << "|";
            }
            if (order.size() != tris_.size())
                throw SurfaceError("triangulation is not connected");
            std::string enc = os.str();
            if (best.empty() || enc < best) best = enc;
        }
    }
    return best;
}

ExchangeGraph exchange_graph_bfs(const Triangulation& t0, int depth) {
    if (depth < 0) throw SurfaceError("depth must be >= 0");
    ExchangeGraph g;
    std::map<std::string, int> id_of;
    g.nodes.push_back(EgNode{t0.canonical_string(), t0, {}, 0});
    id_of[g.nodes[0].canon] = 0;
    std::size_t head = 0;
    while (head < g.nodes.size()) {
        const int cur = static_cast<int>(head);
        ++head;
        if (g.nodes[cur].depth >= depth) continue;
        const Triangulation tri = g.nodes[cur].tri;
        for (const std::string& arc : tri.arcs()) {
            if (!tri.flippable(arc)) continue;
            Triangulation next = tri.flip(arc, FlipDir::Forward);
            std::string canon = next.canonical_string();
            auto it = id_of.find(canon);
            int to;
            if (it == id_of.end()) {
                to = static_cast<int>(g.nodes.size());
                auto path = g.nodes[cur].path_from_seed;
                path.push_back({arc, FlipDir::Forward});
                g.nodes.push_back(EgNode{canon, next, path, g.nodes[cur].depth + 1});
                id_of.emplace(canon, to);
            } else {
                to = it->second;
            }
            g.edges.push_back(EgEdge{cur, to, arc});
        }
    }
    return g;
}

std::string canonical_hash(const std::string& canon) {
    // FNV-1a, rendered as 16 hex digits; stable node names for exports
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string egraph_to_dot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "digraph exchange {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << canonical_hash(g.nodes[i].canon) << "\"];\n";
    for (const EgEdge& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.arc << "\"];\n";
    os << "}\n";
    return os.str();
}

Triangulation polygon_triangulation(int m, const std::vector<std::pair<int, int>>& chords) {
    if (m < 4) throw SurfaceError("polygon needs at least 4 marked points for an arc");
    std::set<std::pair<int, int>> edges;
    auto norm = [](int u, int v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); };
    for (int i = 1; i <= m; ++i) edges.insert(norm(i, i % m + 1));
    std::set<std::pair<int, int>> chordset;
    for (auto [u, v] : chords) {
        auto e = norm(u, v);
        if (u < 1 || v < 1 || u > m || v > m || u == v)
            throw SurfaceError("bad chord");
        if (edges.count(e)) throw SurfaceError("chord duplicates a boundary edge or chord");
        edges.insert(e);
        chordset.insert(e);
    }
    if (static_cast<int>(chords.size()) != m - 3)
        throw SurfaceError("polygon triangulation needs exactly m-3 chords");
    auto label = [&](int u, int v) {
        auto e = norm(u, v);
        std::string pre = chordset.count(e) ? "a" : "b";
        return pre + std::to_string(e.first) + "_" + std::to_string(e.second);
    };
    std::vector<Tri> tris;
    int dec = 0;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v)
            for (int w = v + 1; w <= m; ++w)
                if (edges.count(norm(u, v)) && edges.count(norm(v, w)) && edges.count(norm(u, w)))
                    tris.push_back(Tri{{label(u, v), label(v, w), label(w, u)}, dec++});
    if (static_cast<int>(tris.size()) != m - 2)
        throw SurfaceError("chords do not triangulate the polygon");
    return Triangulation(std::move(tris));
}

Triangulation annulus_1_1_triangulation() {
    return Triangulation({Tri{{"b1", "a1", "a2"}, 0}, Tri{{"a2", "b2", "a1"}, 1}});
}

}  // namespace qpsurf
