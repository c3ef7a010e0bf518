#include "qpsurf/potential.hpp"

#include <algorithm>
#include <sstream>

namespace qpsurf {

CycWord canonical_rotation(const CycWord& w) {
    if (w.empty()) throw PathError("empty cycle");
    CycWord best = w;
    CycWord cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

std::string qpclass_name(QpClass c) {
    switch (c) {
        case QpClass::Trivial: return "trivial";
        case QpClass::Reduced: return "reduced";
        case QpClass::Mixed: return "mixed";
    }
    return "?";
}

void Potential::add_cycle(const CycWord& w, const Rat& c) {
    if (c == 0) return;
    CycWord k = canonical_rotation(w);
    auto it = cycles_.find(k);
    if (it == cycles_.end()) {
        cycles_.emplace(std::move(k), c);
    } else {
        it->second += c;
        if (it->second == 0) cycles_.erase(it);
    }
}

Potential Potential::operator+(const Potential& o) const {
    Potential r = *this;
    for (const auto& [w, c] : o.cycles_) r.add_cycle(w, c);
    return r;
}

Potential Potential::operator-(const Potential& o) const {
    Potential r = *this;
    for (const auto& [w, c] : o.cycles_) r.add_cycle(w, -c);
    return r;
}

Potential Potential::scaled(const Rat& c) const {
    Potential r;
    if (c == 0) return r;
    for (const auto& [w, q] : cycles_) r.cycles_.emplace(w, c * q);
    return r;
}

void Potential::validate(const Quiver& q) const {
    for (const auto& [w, c] : cycles_) {
        (void)c;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Arrow& a = q.arrow(w[i]);
            const Arrow& b = q.arrow(w[(i + 1) % w.size()]);
            if (a.tgt != b.src)
                throw PathError("potential key is not a cycle at " + a.id + "," + b.id);
        }
        if (w != canonical_rotation(w)) throw PathError("potential key not canonical");
    }
}

std::string Potential::to_string() const {
    if (cycles_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : cycles_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << rat_to_string(c) << "*";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ".";
            os << w[i];
        }
    }
    return os.str();
}

PathExpr cyclic_derivative(const Quiver& q, const Potential& w, const std::string& arrow) {
    return cyclic_derivative_word(q, w, {arrow});
}

PathExpr cyclic_derivative_word(const Quiver& q, const Potential& w,
                                const std::vector<std::string>& word) {
    for (const auto& a : word) q.arrow(a);  // unknown arrow -> throws
    PathExpr out;
    const std::size_t r = word.size();
    for (const auto& [cyc, coeff] : w.cycles()) {
        const std::size_t m = cyc.size();
        if (r > m) continue;
        for (std::size_t i = 0; i < m; ++i) {
            bool match = true;
            for (std::size_t j = 0; j < r; ++j) {
                if (cyc[(i + j) % m] != word[j]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            Path rem;
            if (m == r) {
                rem = trivial_path(q.arrow(cyc[i]).src);
            } else {
                for (std::size_t j = r; j < m; ++j) rem.gens.push_back(cyc[(i + j) % m]);
            }
            out.add_term(rem, coeff);
        }
    }
    return out;
}

QpClass classify_qp(const Quiver& q, const Potential& w) {
    bool any_two_cycle = false;
    bool any_other = false;
    std::map<std::string, char> covered;
    for (const auto& [cyc, c] : w.cycles()) {
        (void)c;
        if (cyc.size() == 2) {
            any_two_cycle = true;
            covered[cyc[0]] = 1;
            covered[cyc[1]] = 1;
        } else {
            any_other = true;
        }
    }
    if (!any_two_cycle) return QpClass::Reduced;
    if (!any_other && covered.size() == q.arrows().size()) return QpClass::Trivial;
    return QpClass::Mixed;
}

PathExpr potential_expr(const GenTable& t, const Potential& w) {
    PathExpr out;
    for (const auto& [cyc, c] : w.cycles()) {
        Path p = make_path(cyc);
        validate_path(t, p);
        out.add_term(p, c);
    }
    return out;
}

}  // namespace qpsurf
