#include "qpsurf/mutation.hpp"

#include <algorithm>
#include <functional>

namespace qpsurf {

std::string reversed_name(const std::string& arrow) { return arrow + "'"; }

std::string composite_name(const std::string& a, const std::string& b) {
    return "[" + a + "|" + b + "]";
}

PremutationResult premutate(const Quiver& q, const Potential& w, const std::string& k) {
    if (!q.has_vertex(k)) throw MutationError("unknown vertex: " + k);
    if (classify_qp(q, w) != QpClass::Reduced)
        throw MutationError("pre-mutation requires a reduced QP");
    if (q.has_two_cycle())
        throw MutationError("pre-mutation requires a 2-cycle-free quiver");
    w.validate(q);

    PremutationResult r;
    std::vector<Arrow> arrows;
    // Step 1: an arrow [a|b] for every composition through k.
    for (const std::string& a : q.arrows_to(k)) {
        for (const std::string& b : q.arrows_from(k)) {
            std::string id = composite_name(a, b);
            arrows.push_back({id, q.src(a), q.tgt(b)});
            r.composite_of[id] = {a, b};
        }
    }
    // Step 2: reverse arrows incident to k, keep the rest.
    for (const Arrow& a : q.arrows()) {
        if (a.src == k || a.tgt == k) {
            std::string id = reversed_name(a.id);
            arrows.push_back({id, a.tgt, a.src});
            r.reversal_of[id] = a.id;
        } else {
            arrows.push_back(a);
        }
    }
    r.quiver = Quiver(q.vertices(), std::move(arrows), /*allow_two_cycles=*/true);

    // W~1: replace each composition a.b through k by [a|b].
    Potential w1;
    for (const auto& [cyc, c] : w.cycles()) {
        CycWord out;
        std::size_t i = 0;
        const std::size_t m = cyc.size();
        // A cycle visiting k uses a consecutive pair (a, b); rotate so that
        // the cycle does not begin in the middle of such a pair.
        std::size_t start = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (q.tgt(cyc[(j + m - 1) % m]) == k) continue;
            start = j;
            break;
        }
        while (i < m) {
            const std::string& a = cyc[(start + i) % m];
            if (q.tgt(a) == k) {
                const std::string& b = cyc[(start + i + 1) % m];
                out.push_back(composite_name(a, b));
                i += 2;
            } else {
                out.push_back(a);
                i += 1;
            }
        }
        w1.add_cycle(out, c);
    }
    // W~2: the 3-cycles [a|b] b' a'.
    Potential w2;
    for (const std::string& a : q.arrows_to(k))
        for (const std::string& b : q.arrows_from(k))
            w2.add_cycle({composite_name(a, b), reversed_name(b), reversed_name(a)}, Rat(1));
    r.potential = w1 + w2;
    r.potential.validate(r.quiver);
    return r;
}

namespace {

struct SplitTerm {
    // a cycle containing u exactly once, rotated so u is first; rest is the
    // remainder path
    std::vector<std::string> rest;
    Rat coeff;
};

// Decompose w = c*uv + uA + vB + C for the 2-cycle (u,v); throws when the
// term shape is outside the supported class.
void split_for_two_cycle(const Potential& w, const CycWord& uv, std::vector<SplitTerm>& A,
                         std::vector<SplitTerm>& B, Potential& C) {
    const std::string& u = uv[0];
    const std::string& v = uv[1];
    for (const auto& [cyc, c] : w.cycles()) {
        if (cyc == uv) continue;
        int cu = 0, cv = 0;
        for (const auto& x : cyc) {
            cu += (x == u);
            cv += (x == v);
        }
        if (cu == 0 && cv == 0) {
            C.add_cycle(cyc, c);
            continue;
        }
        if (cyc.size() == 2)
            throw MutationError("2-cycle sharing an arrow with another 2-cycle term: unsupported");
        if (cu + cv != 1)
            throw MutationError("2-cycle arrows occur multiply in one term: unsupported");
        const std::string& needle = cu ? u : v;
        CycWord rot = cyc;
        while (rot[0] != needle) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        SplitTerm t;
        t.rest.assign(rot.begin() + 1, rot.end());
        t.coeff = c;
        (cu ? A : B).push_back(t);
    }
}

QP eliminate(const Quiver& q, const Potential& w, const CycWord& uv) {
    auto it = w.cycles().find(uv);
    if (it == w.cycles().end()) throw MutationError("2-cycle term vanished");
    const Rat c = it->second;
    std::vector<SplitTerm> A, B;
    Potential C;
    split_for_two_cycle(w, uv, A, B, C);
    Potential out = C;
    for (const SplitTerm& b : B) {
        for (const SplitTerm& a : A) {
            CycWord cyc = b.rest;
            cyc.insert(cyc.end(), a.rest.begin(), a.rest.end());
            out.add_cycle(cyc, -b.coeff * a.coeff / c);
        }
    }
    std::vector<Arrow> arrows;
    for (const Arrow& ar : q.arrows())
        if (ar.id != uv[0] && ar.id != uv[1]) arrows.push_back(ar);
    Quiver nq(q.vertices(), std::move(arrows), /*allow_two_cycles=*/true);
    out.validate(nq);
    return QP{std::move(nq), std::move(out)};
}

std::vector<CycWord> two_cycle_terms(const Potential& w) {
    std::vector<CycWord> out;
    for (const auto& [cyc, c] : w.cycles()) {
        (void)c;
        if (cyc.size() == 2) out.push_back(cyc);
    }
    return out;
}

}  // namespace

QP reduce(const Quiver& q, const Potential& w) {
    QP cur{q, w};
    for (;;) {
        auto terms = two_cycle_terms(cur.potential);
        if (terms.empty()) break;
        cur = eliminate(cur.quiver, cur.potential, terms.front());
    }
    return cur;
}

QP reduce_with_order(const Quiver& q, const Potential& w, const std::vector<CycWord>& order) {
    QP cur{q, w};
    for (const CycWord& uv : order) cur = eliminate(cur.quiver, cur.potential, canonical_rotation(uv));
    if (!two_cycle_terms(cur.potential).empty())
        throw MutationError("elimination order did not reach a reduced potential");
    return cur;
}

QP mutate(const Quiver& q, const Potential& w, const std::string& k) {
    PremutationResult pre = premutate(q, w, k);
    return reduce(pre.quiver, pre.potential);
}

namespace {

bool try_match(const QP& a, const QP& b,
               const std::vector<std::vector<std::string>>& groups_a,
               const std::vector<std::vector<std::string>>& groups_b, std::size_t gi,
               std::map<std::string, std::string>& assign) {
    if (gi == groups_a.size()) {
        Potential renamed;
        for (const auto& [cyc, c] : a.potential.cycles()) {
            CycWord out;
            for (const auto& x : cyc) out.push_back(assign.at(x));
            renamed.add_cycle(out, c);
        }
        return renamed == b.potential;
    }
    std::vector<std::string> perm = groups_b[gi];
    std::sort(perm.begin(), perm.end());
    do {
        for (std::size_t i = 0; i < perm.size(); ++i) assign[groups_a[gi][i]] = perm[i];
        if (try_match(a, b, groups_a, groups_b, gi + 1, assign)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& x : groups_a[gi]) assign.erase(x);
    return false;
}

}  // namespace

QpMatch qp_equal_up_to_arrow_names(const QP& a, const QP& b) {
    QpMatch m;
    if (a.quiver.vertices() != b.quiver.vertices()) {
        m.witness = "vertex sets differ";
        return m;
    }
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> ga, gb;
    for (const Arrow& ar : a.quiver.arrows()) ga[{ar.src, ar.tgt}].push_back(ar.id);
    for (const Arrow& ar : b.quiver.arrows()) gb[{ar.src, ar.tgt}].push_back(ar.id);
    if (ga.size() != gb.size()) {
        m.witness = "arrow (src,tgt) classes differ";
        return m;
    }
    std::vector<std::vector<std::string>> groups_a, groups_b;
    for (const auto& [key, ids] : ga) {
        auto it = gb.find(key);
        if (it == gb.end() || it->second.size() != ids.size()) {
            m.witness = "arrow multiplicity differs at " + key.first + "->" + key.second;
            return m;
        }
        groups_a.push_back(ids);
        groups_b.push_back(it->second);
    }
    std::map<std::string, std::string> assign;
    if (try_match(a, b, groups_a, groups_b, 0, assign)) {
        m.ok = true;
        m.arrow_map = assign;
    } else {
        m.witness = "no arrow bijection matches the potentials: " + a.potential.to_string() +
                    " vs " + b.potential.to_string();
    }
    return m;
}

FlipMutationReport check_flip_mutation(const Triangulation& t, const std::string& k) {
    FlipMutationReport rep;
    rep.arc = k;
    QP lhs = mutate(t.qp(), k);
    QP rhs = t.flip(k, FlipDir::Forward).qp();
    QpMatch m = qp_equal_up_to_arrow_names(lhs, rhs);
    rep.ok = m.ok;
    rep.witness = m.witness;
    return rep;
}

}  // namespace qpsurf
