#include "qpsurf/ginzburg.hpp"

namespace qpsurf {

std::string star_name(const std::string& arrow) { return arrow + "*"; }
std::string estar_name(const std::string& vertex) { return "e*(" + vertex + ")"; }

GinzburgPresentation GinzburgPresentation::make(const QP& qp) {
    qp.potential.validate(qp.quiver);
    GinzburgPresentation g;
    g.qp_ = qp;
    std::vector<GenInfo> gens;
    for (const Arrow& a : qp.quiver.arrows()) gens.push_back({a.id, a.src, a.tgt, 0});
    for (const Arrow& a : qp.quiver.arrows())
        gens.push_back({star_name(a.id), a.tgt, a.src, -1});
    for (const std::string& v : qp.quiver.vertices())
        gens.push_back({estar_name(v), v, v, -2});
    g.table_ = GenTable(qp.quiver.vertices(), std::move(gens));

    for (const Arrow& a : qp.quiver.arrows()) g.rules_[a.id] = PathExpr::zero();
    for (const Arrow& a : qp.quiver.arrows())
        g.rules_[star_name(a.id)] = cyclic_derivative(qp.quiver, qp.potential, a.id);
    for (const std::string& v : qp.quiver.vertices()) {
        PathExpr e;
        for (const Arrow& a : qp.quiver.arrows()) {
            if (a.src == v) e.add_term(make_path({a.id, star_name(a.id)}), Rat(1));
            if (a.tgt == v) e.add_term(make_path({star_name(a.id), a.id}), Rat(-1));
        }
        g.rules_[estar_name(v)] = e;
    }
    return g;
}

const PathExpr& GinzburgPresentation::rule(const std::string& gen) const {
    auto it = rules_.find(gen);
    if (it == rules_.end()) throw PathError("no differential rule for generator " + gen);
    return it->second;
}

PathExpr GinzburgPresentation::diff(const PathExpr& e) const {
    PathExpr out;
    for (const auto& [p, c] : e.terms()) {
        if (p.trivial()) continue;
        int prefix_deg = 0;
        for (std::size_t i = 0; i < p.gens.size(); ++i) {
            const PathExpr& dg = rule(p.gens[i]);
            if (!dg.is_zero()) {
                Rat sign = (prefix_deg % 2 == 0) ? Rat(1) : Rat(-1);
                // prefix . d(g_i) . suffix
                PathExpr term = dg;
                if (i > 0) {
                    Path prefix;
                    prefix.gens.assign(p.gens.begin(), p.gens.begin() + i);
                    term = mul(table_, PathExpr::of(prefix), term);
                }
                if (i + 1 < p.gens.size()) {
                    Path suffix;
                    suffix.gens.assign(p.gens.begin() + i + 1, p.gens.end());
                    term = mul(table_, term, PathExpr::of(suffix));
                }
                out = out + term.scaled(c * sign);
            }
            prefix_deg += table_.gen(p.gens[i]).degree;
        }
    }
    return out;
}

GinzburgPresentation GinzburgPresentation::with_rule(const std::string& gen,
                                                     PathExpr value) const {
    GinzburgPresentation g = *this;
    g.rule(gen);  // throws if unknown
    g.rules_[gen] = std::move(value);
    return g;
}

D2Report check_d_squared(const GinzburgPresentation& g) {
    D2Report rep;
    for (const std::string& id : g.table().gen_order()) {
        D2Case c;
        c.generator = id;
        const PathExpr& d1 = g.rule(id);
        bool deg_ok = true;
        if (!d1.is_zero())
            deg_ok = expr_homogeneous(g.table(), d1) &&
                     expr_degree(g.table(), d1) == g.table().gen(id).degree + 1;
        PathExpr d2 = g.diff(d1);
        c.ok = deg_ok && d2.is_zero();
        if (!deg_ok)
            c.residual = "degree bookkeeping violated on d(" + id + ")";
        else if (!d2.is_zero())
            c.residual = d2.to_string();
        rep.ok = rep.ok && c.ok;
        rep.cases.push_back(std::move(c));
    }
    return rep;
}

}  // namespace qpsurf
