#include "qpsurf/path_expr.hpp"

#include <sstream>

namespace qpsurf {

GenTable::GenTable(std::vector<std::string> vertices, std::vector<GenInfo> gens)
    : vertices_(std::move(vertices)) {
    for (const auto& v : vertices_) vset_[v] = 1;
    for (auto& g : gens) {
        if (!vset_.count(g.src) || !vset_.count(g.tgt))
            throw PathError("generator " + g.id + " references unknown vertex");
        order_.push_back(g.id);
        if (!gens_.emplace(g.id, g).second)
            throw PathError("duplicate generator id: " + g.id);
    }
}

GenTable GenTable::from_quiver(const Quiver& q) {
    std::vector<GenInfo> gens;
    for (const Arrow& a : q.arrows()) gens.push_back({a.id, a.src, a.tgt, 0});
    return GenTable(q.vertices(), std::move(gens));
}

const GenInfo& GenTable::gen(const std::string& g) const {
    auto it = gens_.find(g);
    if (it == gens_.end()) throw PathError("unknown generator: " + g);
    return it->second;
}

Path trivial_path(const std::string& v) { return Path{v, {}}; }
Path gen_path(const std::string& g) { return Path{"", {g}}; }
Path make_path(const std::vector<std::string>& gens) { return Path{"", gens}; }

const std::string& path_src(const GenTable& t, const Path& p) {
    return p.trivial() ? p.vertex : t.gen(p.gens.front()).src;
}

const std::string& path_tgt(const GenTable& t, const Path& p) {
    return p.trivial() ? p.vertex : t.gen(p.gens.back()).tgt;
}

int path_degree(const GenTable& t, const Path& p) {
    int d = 0;
    for (const auto& g : p.gens) d += t.gen(g).degree;
    return d;
}

void validate_path(const GenTable& t, const Path& p) {
    if (p.trivial()) {
        if (!t.has_vertex(p.vertex)) throw PathError("trivial path at unknown vertex " + p.vertex);
        return;
    }
    for (std::size_t i = 0; i < p.gens.size(); ++i) {
        const GenInfo& g = t.gen(p.gens[i]);
        if (i + 1 < p.gens.size() && g.tgt != t.gen(p.gens[i + 1]).src)
            throw PathError("non-composable path at " + g.id + "," + p.gens[i + 1]);
    }
}

PathExpr PathExpr::of(const Path& p, const Rat& c) {
    PathExpr e;
    e.add_term(p, c);
    return e;
}

void PathExpr::add_term(const Path& p, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PathExpr PathExpr::operator-() const { return scaled(Rat(-1)); }

PathExpr PathExpr::operator+(const PathExpr& o) const {
    PathExpr r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

PathExpr PathExpr::operator-(const PathExpr& o) const {
    PathExpr r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
}

PathExpr PathExpr::scaled(const Rat& c) const {
    PathExpr r;
    if (c == 0) return r;
    for (const auto& [p, q] : terms_) r.terms_.emplace(p, c * q);
    return r;
}

std::string PathExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << rat_to_string(c) << "*";
        if (p.trivial()) {
            os << "e_" << p.vertex;
        } else {
            for (std::size_t i = 0; i < p.gens.size(); ++i) {
                if (i) os << ".";
                os << p.gens[i];
            }
        }
    }
    return os.str();
}

PathExpr mul(const GenTable& t, const Path& a, const Path& b, const Rat& c) {
    if (path_tgt(t, a) != path_src(t, b)) return PathExpr();
    Path p;
    if (a.trivial() && b.trivial()) {
        p = a;
    } else {
        p.gens = a.gens;
        p.gens.insert(p.gens.end(), b.gens.begin(), b.gens.end());
    }
    return PathExpr::of(p, c);
}

PathExpr mul(const GenTable& t, const PathExpr& a, const PathExpr& b) {
    PathExpr r;
    for (const auto& [pa, ca] : a.terms()) {
        validate_path(t, pa);
        for (const auto& [pb, cb] : b.terms()) {
            validate_path(t, pb);
            PathExpr prod = mul(t, pa, pb, ca * cb);
            for (const auto& [p, c] : prod.terms()) r.add_term(p, c);
        }
    }
    return r;
}

void validate_expr(const GenTable& t, const PathExpr& e) {
    for (const auto& [p, c] : e.terms()) {
        (void)c;
        validate_path(t, p);
    }
}

bool expr_homogeneous(const GenTable& t, const PathExpr& e) {
    bool have = false;
    int d = 0;
    for (const auto& [p, c] : e.terms()) {
        (void)c;
        int pd = path_degree(t, p);
        if (!have) {
            d = pd;
            have = true;
        } else if (pd != d) {
            return false;
        }
    }
    return true;
}

int expr_degree(const GenTable& t, const PathExpr& e) {
    if (e.is_zero()) return 0;
    if (!expr_homogeneous(t, e)) throw PathError("expression not homogeneous: " + e.to_string());
    return path_degree(t, e.terms().begin()->first);
}

}  // namespace qpsurf
