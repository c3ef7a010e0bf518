#include "qpsurf/ktheory.hpp"

#include <algorithm>

namespace qpsurf {

IntMat identity_matrix(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
    const int n = static_cast<int>(a.size());
    const int p = static_cast<int>(b.size());
    const int q = p ? static_cast<int>(b[0].size()) : 0;
    IntMat out(n, IntVec(q, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < p; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < q; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

long long det3x3_or_general(const IntMat& m) {
    // Bareiss fraction-free elimination over a copy.
    IntMat a = m;
    const int n = static_cast<int>(a.size());
    long long prev = 1;
    long long sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n ? sign * a[n - 1][n - 1] : 1;
}

K0Lattice K0Lattice::of(const Quiver& q) {
    K0Lattice l;
    l.basis_ = q.vertices();
    std::sort(l.basis_.begin(), l.basis_.end());
    const int n = l.rank();
    l.chi_ = IntMat(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long aij = static_cast<long long>(q.arrows_between(l.basis_[i], l.basis_[j]).size());
            long long aji = static_cast<long long>(q.arrows_between(l.basis_[j], l.basis_[i]).size());
            l.chi_[i][j] = aji - aij;
        }
    return l;
}

int K0Lattice::index_of(const std::string& v) const {
    auto it = std::find(basis_.begin(), basis_.end(), v);
    if (it == basis_.end()) throw KError("unknown class: " + v);
    return static_cast<int>(it - basis_.begin());
}

IntVec K0Lattice::twist_class(int i, const IntVec& x, int sign) const {
    if (i < 0 || i >= rank()) throw KError("bad vertex index");
    long long pairing = 0;
    for (int j = 0; j < rank(); ++j) pairing += chi_[i][j] * x[j];
    IntVec out = x;
    out[i] -= sign * pairing;
    return out;
}

IntMat K0Lattice::twist_matrix(int i, int sign) const {
    IntMat m = identity_matrix(rank());
    for (int j = 0; j < rank(); ++j) m[i][j] -= sign * chi_[i][j];
    return m;
}

bool K0Lattice::preserves_chi(const IntMat& m) const {
    // chi(Mx, My) = chi(x, y): M^T chi M = chi
    const int n = rank();
    IntMat mt(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mt[i][j] = m[j][i];
    return matmul(matmul(mt, chi_), m) == chi_;
}

TwistWordK reduce_twist_word(TwistWordK w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i].vertex == w[i + 1].vertex && w[i].exp + w[i + 1].exp == 0) {
                w.erase(w.begin() + i, w.begin() + i + 2);
                changed = true;
                break;
            }
        }
    }
    return w;
}

IntVec apply_word(const K0Lattice& l, const TwistWordK& w, const IntVec& x) {
    IntVec cur = x;
    for (const TwistStep& s : w) cur = l.twist_class(l.index_of(s.vertex), cur, s.exp);
    return cur;
}

IntMat word_matrix(const K0Lattice& l, const TwistWordK& w) {
    IntMat m = identity_matrix(l.rank());
    for (const TwistStep& s : w)
        m = matmul(l.twist_matrix(l.index_of(s.vertex), s.exp), m);
    return m;
}

BraidReport braid_relation_check(const Quiver& q, const K0Lattice& l, const std::string& i,
                                 const std::string& j) {
    if (i == j) throw KError("braid check needs distinct vertices");
    BraidReport rep;
    long long aij = static_cast<long long>(q.arrows_between(i, j).size());
    long long aji = static_cast<long long>(q.arrows_between(j, i).size());
    IntMat mi = l.twist_matrix(l.index_of(i));
    IntMat mj = l.twist_matrix(l.index_of(j));
    IntMat iji = matmul(mi, matmul(mj, mi));
    IntMat jij = matmul(mj, matmul(mi, mj));
    IntMat ij = matmul(mi, mj);
    IntMat ji = matmul(mj, mi);
    if (aij + aji == 1) {
        rep.relation = "braid";
        rep.holds = iji == jij;
        rep.detail = rep.holds ? "phi_i phi_j phi_i = phi_j phi_i phi_j" : "braid relation fails";
    } else if (aij + aji == 0) {
        rep.relation = "commute";
        rep.holds = ij == ji;
        rep.detail = rep.holds ? "phi_i phi_j = phi_j phi_i" : "commutation fails";
    } else {
        rep.relation = "other";
        bool braid = iji == jij;
        bool comm = ij == ji;
        rep.holds = false;
        rep.detail = std::string("multiplicity ") + std::to_string(aij + aji) +
                     (braid ? "; braid holds" : "; braid fails") +
                     (comm ? "; commute holds" : "; commute fails");
    }
    return rep;
}

bool phase_in_upper_window(const GaussRat& z) {
    if (z.im > 0) return true;
    return z.im == 0 && z.re < 0;
}

Rat CentralCharge::mass_squared(const std::string& v) const {
    auto it = z.find(v);
    if (it == z.end()) throw KError("no charge for " + v);
    return it->second.re * it->second.re + it->second.im * it->second.im;
}

void CentralCharge::validate_simple_phases() const {
    for (const auto& [v, zv] : z) {
        if (zv.re == 0 && zv.im == 0) throw KError("zero central charge at " + v);
        if (!phase_in_upper_window(zv))
            throw KError("phase of simple " + v + " is outside (0,1]");
    }
}

GaussRat charge_of_class(const K0Lattice& l, const CentralCharge& zc, const IntVec& cls) {
    GaussRat out{Rat(0), Rat(0)};
    for (int i = 0; i < l.rank(); ++i) {
        auto it = zc.z.find(l.basis()[i]);
        if (it == zc.z.end()) throw KError("charge missing for " + l.basis()[i]);
        out.re += Rat(static_cast<long>(cls[i])) * it->second.re;
        out.im += Rat(static_cast<long>(cls[i])) * it->second.im;
    }
    return out;
}

CentralCharge twist_charge(const K0Lattice& l, const TwistWordK& w, const CentralCharge& zc) {
    // Z' = Z o M(w)^{-1}; the inverse matrix is the matrix of the inverse word.
    TwistWordK winv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) winv.push_back({it->vertex, -it->exp});
    IntMat minv = word_matrix(l, winv);
    CentralCharge out;
    for (int i = 0; i < l.rank(); ++i) {
        IntVec col(l.rank(), 0);
        for (int r = 0; r < l.rank(); ++r) col[r] = minv[r][i];
        out.z[l.basis()[i]] = charge_of_class(l, zc, col);
    }
    return out;
}

}  // namespace qpsurf
