#include "qpsurf/transport.hpp"

#include <algorithm>
#include <sstream>

#include "qpsurf/ktheory.hpp"

namespace qpsurf {

TwistWord reduce_word(TwistWord w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].arc == w[i + 1].arc && w[i].sign + w[i + 1].sign == 0) {
                w.erase(w.begin() + i, w.begin() + i + 2);
                changed = true;
                break;
            }
        }
    }
    return w;
}

TwistWord invert_word(const TwistWord& w) {
    TwistWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->arc, -it->sign});
    return out;
}

std::string word_to_string(const TwistWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (const TwistGen& g : w) os << "B(" << g.arc << ")^" << g.sign << " ";
    return os.str();
}

TransportMap TransportMap::identity(const Triangulation& t) {
    TransportMap m;
    m.src = t;
    m.tgt = t;
    for (const std::string& a : t.arcs()) {
        m.arc_map[a] = ArcImage{{}, a, 0};
        for (int d : t.arc_end_decs(a)) m.germ_map[{a, d}] = {a, d};
    }
    return m;
}

bool TransportMap::is_identity() const {
    if (!(src == tgt)) return false;
    for (const auto& [a, img] : arc_map)
        if (!img.word.empty() || img.arc != a || img.shift != 0) return false;
    for (const auto& [g, h] : germ_map)
        if (!(g == h)) return false;
    return true;
}

bool TransportMap::operator==(const TransportMap& o) const {
    return src == o.src && tgt == o.tgt && arc_map == o.arc_map && germ_map == o.germ_map;
}

const ArcImage& TransportMap::image_of(const std::string& arc) const {
    auto it = arc_map.find(arc);
    if (it == arc_map.end()) throw TransportError("no image for arc " + arc);
    return it->second;
}

TransportMap flip_transport(const Triangulation& t, const std::string& k) {
    QuadInfo q = t.quad(k);
    Triangulation t2 = t.flip(k, FlipDir::Forward);
    if (t.has_self_glued() || t2.has_self_glued())
        throw TransportError("transports across self-glued triangulations are unsupported (v1)");
    TransportMap m;
    m.src = t2;
    m.tgt = t;

    std::map<std::string, std::vector<int>> twisted;  // arc -> t-decs its moved germs left
    if (t.is_arc(q.g2)) twisted[q.g2].push_back(q.decA);
    if (t.is_arc(q.g4)) twisted[q.g4].push_back(q.decB);

    for (const std::string& a : t2.arcs()) {
        ArcImage img;
        img.arc = a;
        if (a == k) img.shift = 1;
        if (twisted.count(a)) img.word = {TwistGen{k, 1}};
        m.arc_map[a] = img;
    }
    for (const std::string& a : t2.arcs()) {
        for (int d : t2.arc_end_decs(a)) {
            GermKey srcg{a, d};
            GermKey tgtg{a, d};
            auto tw = twisted.find(a);
            if (tw != twisted.end()) {
                if (tw->second.size() == 2) {
                    // both quad positions carry this arc: its two germs swap
                    // between the quad decorations
                    if (d != q.decA && d != q.decB)
                        throw TransportError("twisted germ away from the quad");
                    tgtg = GermKey{a, d == q.decA ? q.decB : q.decA};
                } else {
                    int from = tw->second.front();
                    int moved_to = (from == q.decA) ? q.decB : q.decA;
                    if (d == moved_to) tgtg = GermKey{a, from};
                }
            }
            if (m.germ_map.count(srcg))
                throw TransportError("duplicate germ key " + a + "@" + std::to_string(d));
            m.germ_map[srcg] = tgtg;
        }
    }
    // sanity: total bijection onto the germs of t
    std::map<GermKey, int> seen;
    for (const auto& [g, h] : m.germ_map) {
        (void)g;
        if (seen[h]++) throw TransportError("germ map not injective");
    }
    std::size_t t_germs = 0;
    for (const std::string& a : t.arcs()) t_germs += t.arc_end_decs(a).size();
    if (seen.size() != m.germ_map.size() || m.germ_map.size() != t_germs)
        throw TransportError("germ map not a bijection");
    return m;
}

TransportMap invert_flip_transport(const TransportMap& f) {
    TransportMap m;
    m.src = f.tgt;
    m.tgt = f.src;
    for (const auto& [a, img] : f.arc_map) {
        ArcImage inv;
        inv.arc = a;  // flip transports fix arc names
        inv.shift = -img.shift;
        // rename the twisting arcs through the (name-preserving) inverse
        inv.word = invert_word(img.word);
        m.arc_map[img.arc] = inv;
    }
    for (const auto& [g, h] : f.germ_map) m.germ_map[h] = g;
    return m;
}

namespace {

TwistWord rewrite_word(const TransportMap& through, const TwistWord& w) {
    TwistWord out;
    for (const TwistGen& g : w) {
        const ArcImage& img = through.image_of(g.arc);
        // Phi_{X[s]} = Phi_X, so the shift is irrelevant to the letter.
        for (const TwistGen& u : img.word) out.push_back(u);
        out.push_back(TwistGen{img.arc, g.sign});
        TwistWord winv = invert_word(img.word);
        for (const TwistGen& u : winv) out.push_back(u);
    }
    return reduce_word(out);
}

}  // namespace

TransportMap compose(const TransportMap& a, const TransportMap& b) {
    if (!(b.tgt == a.src)) throw TransportError("transport composition endpoint mismatch");
    TransportMap m;
    m.src = b.src;
    m.tgt = a.tgt;
    for (const auto& [x, bi] : b.arc_map) {
        const ArcImage& ai = a.image_of(bi.arc);
        ArcImage out;
        out.arc = ai.arc;
        out.shift = ai.shift + bi.shift;
        TwistWord w = ai.word;
        TwistWord rb = rewrite_word(a, bi.word);
        w.insert(w.end(), rb.begin(), rb.end());
        out.word = reduce_word(w);
        m.arc_map[x] = out;
    }
    for (const auto& [g, h] : b.germ_map) {
        auto it = a.germ_map.find(h);
        if (it == a.germ_map.end()) throw TransportError("germ chain broken");
        m.germ_map[g] = it->second;
    }
    return m;
}

TransportMap path_transport(const Triangulation& t0,
                            const std::vector<std::pair<std::string, FlipDir>>& path) {
    TransportMap acc = TransportMap::identity(t0);
    Triangulation cur = t0;
    for (const auto& [arc, dir] : path) {
        if (dir == FlipDir::Forward) {
            TransportMap step = flip_transport(cur, arc);
            cur = step.src;
            acc = compose(acc, step);
        } else {
            Triangulation next = cur.flip(arc, FlipDir::Backward);
            TransportMap fwd = flip_transport(next, arc);
            if (!(fwd.src == cur))
                throw TransportError("backward flip does not invert the forward flip");
            TransportMap step = invert_flip_transport(fwd);
            cur = next;
            acc = compose(acc, step);
        }
    }
    return acc;
}

std::vector<BasisMapEntry> coherent_basis_map(const TransportMap& t, const ExtTable& src_table,
                                              const ExtTable& tgt_table) {
    std::vector<BasisMapEntry> out;
    for (int i = 0; i < static_cast<int>(src_table.basis().size()); ++i) {
        const ExtBasisElt& e = src_table.basis()[i];
        BasisMapEntry entry;
        entry.src_index = i;
        if (e.kind != ExtBasisElt::Kind::Angle) {
            const ArcImage& img = t.image_of(e.arc);
            if (!img.word.empty()) {
                entry.note = "twisted";
            } else {
                ExtBasisElt f = e;
                f.arc = img.arc;
                entry.tgt_index = tgt_table.index_of(f);
            }
            out.push_back(entry);
            continue;
        }
        const ArcImage& si = t.image_of(e.src);
        const ArcImage& ti = t.image_of(e.tgt);
        if (!si.word.empty() || !ti.word.empty()) {
            entry.note = "twisted";
            out.push_back(entry);
            continue;
        }
        auto gs = t.germ_map.find({e.src, e.dec});
        auto gt = t.germ_map.find({e.tgt, e.dec});
        if (gs == t.germ_map.end() || gt == t.germ_map.end())
            throw TransportError("missing germ image");
        if (gs->second.dec != gt->second.dec) {
            entry.note = "split";
            out.push_back(entry);
            continue;
        }
        ExtBasisElt f;
        f.kind = ExtBasisElt::Kind::Angle;
        f.dec = gs->second.dec;
        f.src = gs->second.arc;
        f.tgt = gt->second.arc;
        f.span = tgt_table.span_between(f.src, f.tgt, f.dec);
        entry.tgt_index = tgt_table.index_of(f);
        out.push_back(entry);
    }
    return out;
}

TransportCheck check_transport(const TransportMap& t) {
    TransportCheck rep;
    ExtTable st = ExtTable::of(t.src);
    ExtTable tt = ExtTable::of(t.tgt);
    auto bmap = coherent_basis_map(t, st, tt);
    // shift-corrected span rule on coherent angles
    for (const auto& e : bmap) {
        if (!e.tgt_index) continue;
        const ExtBasisElt& a = st.basis()[e.src_index];
        const ExtBasisElt& b = tt.basis()[*e.tgt_index];
        if (a.kind != ExtBasisElt::Kind::Angle) {
            if (a.degree() != b.degree())
                rep.problems.push_back("degree shifts on " + a.to_string());
            continue;
        }
        int ssrc = t.image_of(a.src).shift;
        int stgt = t.image_of(a.tgt).shift;
        if (b.span != a.span + stgt - ssrc)
            rep.problems.push_back("span rule fails: " + a.to_string() + " -> " +
                                   b.to_string());
    }
    // multiplicativity on fully coherent products
    const int n = static_cast<int>(st.basis().size());
    std::map<int, std::optional<int>> img;
    for (const auto& e : bmap) img[e.src_index] = e.tgt_index;
    for (int f = 0; f < n; ++f) {
        for (int g = 0; g < n; ++g) {
            auto fg = st.compose(f, g);
            if (!img[f] || !img[g]) continue;
            auto tfg = tt.compose(*img[f], *img[g]);
            if (fg && img[*fg]) {
                if (!tfg || *tfg != *img[*fg])
                    rep.problems.push_back("coherent product mismatch at " +
                                           st.basis()[f].to_string() + " o " +
                                           st.basis()[g].to_string());
            } else if (!fg) {
                if (tfg)
                    rep.problems.push_back("zero product becomes nonzero at " +
                                           st.basis()[f].to_string() + " o " +
                                           st.basis()[g].to_string());
            }
        }
    }
    rep.ok = rep.problems.empty();
    return rep;
}

std::vector<std::vector<long long>> transport_k0_matrix(const TransportMap& t) {
    K0Lattice lat = K0Lattice::of(t.tgt.qp().quiver);
    std::vector<std::string> src_arcs = t.src.arcs();
    IntMat m(lat.rank(), IntVec(src_arcs.size(), 0));
    for (std::size_t c = 0; c < src_arcs.size(); ++c) {
        const ArcImage& img = t.image_of(src_arcs[c]);
        IntVec v(lat.rank(), 0);
        v[lat.index_of(img.arc)] = 1;
        TwistWordK w;
        for (const TwistGen& g : img.word) w.push_back({g.arc, g.sign});
        v = apply_word(lat, w, v);
        long long sgn = (((img.shift % 2) + 2) % 2 == 0) ? 1 : -1;
        for (int r = 0; r < lat.rank(); ++r) m[r][c] = sgn * v[r];
    }
    return m;
}

}  // namespace qpsurf
