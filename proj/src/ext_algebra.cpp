#include "qpsurf/ext_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "qpsurf/ginzburg.hpp"

namespace qpsurf {

bool ExtBasisElt::operator<(const ExtBasisElt& o) const {
    auto key = [](const ExtBasisElt& e) {
        return std::make_tuple(e.degree(), static_cast<int>(e.kind), e.arc, e.dec, e.src, e.tgt,
                               e.span);
    };
    return key(*this) < key(o);
}

std::string ExtBasisElt::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Id: os << "id(" << arc << ")"; break;
        case Kind::Cy: os << "cy(" << arc << ")"; break;
        case Kind::Angle:
            os << "ang(" << dec << ";" << src << "->" << tgt << ";s" << span << ")";
            break;
    }
    return os.str();
}

ExtTable ExtTable::of(const Triangulation& t) {
    if (t.has_self_glued())
        throw ExtError("self-glued triangles are unsupported by the Ext table (v1)");
    ExtTable tab(t);
    for (const std::string& arc : t.arcs()) {
        ExtBasisElt id;
        id.kind = ExtBasisElt::Kind::Id;
        id.arc = arc;
        tab.basis_.push_back(id);
        ExtBasisElt cy;
        cy.kind = ExtBasisElt::Kind::Cy;
        cy.arc = arc;
        tab.basis_.push_back(cy);
    }
    for (const Tri& tri : t.tris()) {
        std::vector<std::pair<std::string, int>> germs;
        for (int s = 0; s < 3; ++s)
            if (t.is_arc(tri.sides[s])) germs.push_back({tri.sides[s], s});
        for (const auto& [a, sa] : germs) {
            for (const auto& [b, sb] : germs) {
                if (a == b) continue;
                ExtBasisElt e;
                e.kind = ExtBasisElt::Kind::Angle;
                e.dec = tri.dec;
                e.src = a;
                e.tgt = b;
                e.span = ((sb - sa) % 3 + 3) % 3;
                tab.basis_.push_back(e);
            }
        }
    }
    std::sort(tab.basis_.begin(), tab.basis_.end());
    // products
    const int n = static_cast<int>(tab.basis_.size());
    for (int f = 0; f < n; ++f) {
        for (int g = 0; g < n; ++g) {
            const ExtBasisElt& F = tab.basis_[f];
            const ExtBasisElt& G = tab.basis_[g];
            std::optional<ExtBasisElt> r;
            if (F.kind == ExtBasisElt::Kind::Id) {
                if (F.arc == G.target_arc()) r = G;
            } else if (G.kind == ExtBasisElt::Kind::Id) {
                if (G.arc == F.source_arc()) r = F;
            } else if (F.kind == ExtBasisElt::Kind::Angle &&
                       G.kind == ExtBasisElt::Kind::Angle) {
                if (F.dec == G.dec && G.tgt == F.src) {
                    int s = F.span + G.span;
                    if (s <= 2) {
                        ExtBasisElt e;
                        e.kind = ExtBasisElt::Kind::Angle;
                        e.dec = F.dec;
                        e.src = G.src;
                        e.tgt = F.tgt;
                        e.span = s;
                        r = e;
                    } else if (s == 3) {
                        if (F.tgt != G.src)
                            throw ExtError("full-turn composition not closing up");
                        ExtBasisElt e;
                        e.kind = ExtBasisElt::Kind::Cy;
                        e.arc = G.src;
                        r = e;
                    }
                }
            }
            // cy times anything of positive degree (and conversely) vanishes
            if (r) {
                auto it = std::find(tab.basis_.begin(), tab.basis_.end(), *r);
                if (it == tab.basis_.end()) throw ExtError("product fell outside the basis");
                tab.prod_[{f, g}] = static_cast<int>(it - tab.basis_.begin());
            }
        }
    }
    return tab;
}

int ExtTable::index_of(const ExtBasisElt& e) const {
    auto it = std::find(basis_.begin(), basis_.end(), e);
    if (it == basis_.end()) throw ExtError("basis element not found: " + e.to_string());
    return static_cast<int>(it - basis_.begin());
}

std::optional<int> ExtTable::find(const ExtBasisElt& e) const {
    auto it = std::find(basis_.begin(), basis_.end(), e);
    if (it == basis_.end()) return std::nullopt;
    return static_cast<int>(it - basis_.begin());
}

std::optional<int> ExtTable::compose(int f, int g) const {
    auto it = prod_.find({f, g});
    if (it == prod_.end()) return std::nullopt;
    return it->second;
}

std::array<int, 4> ExtTable::graded_dims() const {
    std::array<int, 4> d{0, 0, 0, 0};
    for (const ExtBasisElt& e : basis_) d[e.degree()] += 1;
    return d;
}

int ExtTable::germ_slot(const std::string& arc, int dec) const {
    for (const Tri& tri : tri_.tris()) {
        if (tri.dec != dec) continue;
        for (int s = 0; s < 3; ++s)
            if (tri.sides[s] == arc) return s;
    }
    throw ExtError("no germ of " + arc + " at decoration " + std::to_string(dec));
}

int ExtTable::span_between(const std::string& arc_from, const std::string& arc_to,
                           int dec) const {
    int a = germ_slot(arc_from, dec);
    int b = germ_slot(arc_to, dec);
    return ((b - a) % 3 + 3) % 3;
}

std::vector<std::pair<std::string, int>> ExtTable::germs_at(int dec) const {
    for (const Tri& tri : tri_.tris()) {
        if (tri.dec != dec) continue;
        std::vector<std::pair<std::string, int>> out;
        for (int s = 0; s < 3; ++s)
            if (tri_.is_arc(tri.sides[s])) out.push_back({tri.sides[s], s});
        return out;
    }
    throw ExtError("unknown decoration " + std::to_string(dec));
}

ExtCheckReport check_ext_table(const ExtTable& t) {
    ExtCheckReport rep;
    const int n = static_cast<int>(t.basis().size());
    // degrees add on nonzero products
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g)
            if (auto r = t.compose(f, g)) {
                if (t.basis()[*r].degree() != t.basis()[f].degree() + t.basis()[g].degree())
                    rep.problems.push_back("degree additivity fails at " +
                                           t.basis()[f].to_string() + " o " +
                                           t.basis()[g].to_string());
            }
    // associativity on all triples
    for (int f = 0; f < n; ++f) {
        for (int g = 0; g < n; ++g) {
            for (int h = 0; h < n; ++h) {
                auto gh = t.compose(g, h);
                auto fg = t.compose(f, g);
                auto left = gh ? t.compose(f, *gh) : std::nullopt;
                auto right = fg ? t.compose(*fg, h) : std::nullopt;
                if (left != right) {
                    rep.problems.push_back(
                        "associativity fails: (" + t.basis()[f].to_string() + " o " +
                        t.basis()[g].to_string() + ") o " + t.basis()[h].to_string());
                }
            }
        }
    }
    // unit laws
    for (int f = 0; f < n; ++f) {
        const ExtBasisElt& F = t.basis()[f];
        ExtBasisElt src_id;
        src_id.kind = ExtBasisElt::Kind::Id;
        src_id.arc = F.source_arc();
        ExtBasisElt tgt_id;
        tgt_id.kind = ExtBasisElt::Kind::Id;
        tgt_id.arc = F.target_arc();
        auto r1 = t.compose(f, t.index_of(src_id));
        auto r2 = t.compose(t.index_of(tgt_id), f);
        if (!r1 || *r1 != f || !r2 || *r2 != f)
            rep.problems.push_back("unit law fails at " + F.to_string());
    }
    // CY pairing nondegeneracy in degrees 1/2 and 0/3
    for (int f = 0; f < n; ++f) {
        const ExtBasisElt& F = t.basis()[f];
        if (F.degree() != 1 && F.degree() != 2) continue;
        bool paired = false;
        for (int g = 0; g < n && !paired; ++g) {
            if (t.basis()[g].degree() != 3 - F.degree()) continue;
            auto r = t.compose(g, f);
            if (r && t.basis()[*r].kind == ExtBasisElt::Kind::Cy) paired = true;
        }
        if (!paired) rep.problems.push_back("no CY pairing partner for " + F.to_string());
    }
    // graded dimensions against the quiver
    QP qp = t.tri().qp();
    std::array<int, 4> want{static_cast<int>(t.tri().n_arcs()),
                            static_cast<int>(qp.quiver.arrows().size()),
                            static_cast<int>(qp.quiver.arrows().size()),
                            static_cast<int>(t.tri().n_arcs())};
    if (t.graded_dims() != want) rep.problems.push_back("graded dimensions mismatch");
    rep.ok = rep.problems.empty();
    return rep;
}

PiDictionary pi_dictionary(const Triangulation& t, const ExtTable& table) {
    PiDictionary d;
    QP qp = t.qp();
    auto put = [&](const std::string& gen, const ExtBasisElt& e) {
        int idx = table.index_of(e);
        if (!d.gen_to_basis.emplace(gen, idx).second)
            throw ExtError("duplicate dictionary entry for " + gen);
        if (!d.basis_to_gen.emplace(idx, gen).second)
            throw ExtError("dictionary not injective at " + e.to_string());
    };
    for (const std::string& v : qp.quiver.vertices()) {
        ExtBasisElt id;
        id.kind = ExtBasisElt::Kind::Id;
        id.arc = v;
        put(v, id);
        ExtBasisElt cy;
        cy.kind = ExtBasisElt::Kind::Cy;
        cy.arc = v;
        put(estar_name(v), cy);
    }
    for (const Arrow& a : qp.quiver.arrows()) {
        // arrow ids carry the decoration: src>tgt@dec
        auto at = a.id.rfind('@');
        int dec = std::stoi(a.id.substr(at + 1));
        ExtBasisElt ang;
        ang.kind = ExtBasisElt::Kind::Angle;
        ang.dec = dec;
        ang.src = a.src;
        ang.tgt = a.tgt;
        ang.span = 1;
        put(a.id, ang);
        ExtBasisElt ang2;
        ang2.kind = ExtBasisElt::Kind::Angle;
        ang2.dec = dec;
        ang2.src = a.tgt;
        ang2.tgt = a.src;
        ang2.span = 2;
        put(star_name(a.id), ang2);
    }
    if (d.gen_to_basis.size() != table.basis().size())
        throw ExtError("dictionary is not a bijection");
    return d;
}

}  // namespace qpsurf
