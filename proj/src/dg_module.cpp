#include "qpsurf/dg_module.hpp"

#include <algorithm>
#include <sstream>

namespace qpsurf {

namespace {
const PathExpr kZero;
}

const PathExpr& PathMatrix::at(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

void PathMatrix::set(int r, int c, PathExpr e) {
    if (r < 0 || r >= static_cast<int>(rows_.size()) || c < 0 ||
        c >= static_cast<int>(cols_.size()))
        throw DgError("matrix index out of range");
    if (e.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(e);
}

void PathMatrix::add(int r, int c, const PathExpr& e) { set(r, c, at(r, c) + e); }

PathMatrix PathMatrix::operator+(const PathMatrix& o) const {
    if (!(rows_ == o.rows_) || !(cols_ == o.cols_)) throw DgError("matrix shape mismatch");
    PathMatrix out(rows_, cols_);
    out.entries_ = entries_;
    for (const auto& [rc, e] : o.entries_) {
        auto it = out.entries_.find(rc);
        if (it == out.entries_.end()) {
            out.entries_.emplace(rc, e);
        } else {
            it->second = it->second + e;
            if (it->second.is_zero()) out.entries_.erase(it);
        }
    }
    return out;
}

PathMatrix PathMatrix::operator-(const PathMatrix& o) const { return *this + o.scaled(Rat(-1)); }

PathMatrix PathMatrix::scaled(const Rat& c) const {
    PathMatrix out(rows_, cols_);
    if (c == 0) return out;
    for (const auto& [rc, e] : entries_) out.entries_.emplace(rc, e.scaled(c));
    return out;
}

bool PathMatrix::operator==(const PathMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::string PathMatrix::to_string() const {
    std::ostringstream os;
    for (const auto& [rc, e] : entries_)
        os << "(" << rows_[rc.first].label << " <- " << cols_[rc.second].label
           << "): " << e.to_string() << "\n";
    return os.str();
}

PathMatrix matmul(const GinzburgPresentation& g, const PathMatrix& a, const PathMatrix& b) {
    if (!(a.cols() == b.rows())) throw DgError("matmul shape mismatch");
    PathMatrix out(a.rows(), b.cols());
    for (const auto& [rc_a, ea] : a.entries()) {
        for (int c = 0; c < static_cast<int>(b.cols().size()); ++c) {
            const PathExpr& eb = b.at(rc_a.second, c);
            if (eb.is_zero()) continue;
            PathExpr prod = mul(g.table(), ea, eb);
            if (!prod.is_zero()) out.add(rc_a.first, c, prod);
        }
    }
    return out;
}

PathMatrix matdiff(const GinzburgPresentation& g, const PathMatrix& m) {
    PathMatrix out(m.rows(), m.cols());
    for (const auto& [rc, e] : m.entries()) {
        PathExpr de = g.diff(e);
        if (!de.is_zero()) out.set(rc.first, rc.second, std::move(de));
    }
    return out;
}

PathMatrix reshape(const PathMatrix& m, std::vector<DgGen> rows, std::vector<DgGen> cols) {
    if (rows.size() != m.rows().size() || cols.size() != m.cols().size())
        throw DgError("reshape size mismatch");
    PathMatrix out(std::move(rows), std::move(cols));
    for (const auto& [rc, e] : m.entries()) out.set(rc.first, rc.second, e);
    return out;
}

int DgModulePresentation::gen_index(const std::string& label) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].label == label) return static_cast<int>(i);
    throw DgError("unknown generator label: " + label);
}

DgModulePresentation free_module(const std::string& vertex, int degree,
                                 const std::string& label) {
    DgModulePresentation m;
    m.gens = {DgGen{vertex, degree, label}};
    m.D = PathMatrix(m.gens, m.gens);
    return m;
}

DgModulePresentation shift(const DgModulePresentation& m, int s) {
    DgModulePresentation out;
    out.gens = m.gens;
    for (DgGen& g : out.gens) g.degree -= s;
    out.D = PathMatrix(out.gens, out.gens);
    Rat sign = (((s % 2) + 2) % 2 == 0) ? Rat(1) : Rat(-1);
    for (const auto& [rc, e] : m.D.entries()) out.D.set(rc.first, rc.second, e.scaled(sign));
    return out;
}

void validate_matrix_shape(const GinzburgPresentation& g, const PathMatrix& m, int map_degree,
                           std::vector<std::string>* problems) {
    for (const auto& [rc, e] : m.entries()) {
        const DgGen& gr = m.rows()[rc.first];
        const DgGen& gc = m.cols()[rc.second];
        validate_expr(g.table(), e);
        int want = map_degree + gc.degree - gr.degree;
        for (const auto& [p, c] : e.terms()) {
            (void)c;
            if (path_src(g.table(), p) != gr.vertex || path_tgt(g.table(), p) != gc.vertex) {
                if (problems)
                    problems->push_back("entry (" + gr.label + "," + gc.label +
                                        ") has wrong endpoints: " + e.to_string());
                break;
            }
            if (path_degree(g.table(), p) != want) {
                if (problems)
                    problems->push_back("entry (" + gr.label + "," + gc.label + ") degree " +
                                        std::to_string(path_degree(g.table(), p)) + " != " +
                                        std::to_string(want));
                break;
            }
        }
    }
}

PresentationCheck check_presentation(const GinzburgPresentation& g,
                                     const DgModulePresentation& m) {
    PresentationCheck out;
    if (!(m.D.rows() == m.gens) || !(m.D.cols() == m.gens)) {
        out.ok = false;
        out.problems.push_back("differential not square on the generators");
        return out;
    }
    for (const auto& [rc, e] : m.D.entries()) {
        (void)e;
        if (rc.first <= rc.second) {
            out.ok = false;
            out.problems.push_back("differential not strictly lower triangular at (" +
                                   std::to_string(rc.first) + "," + std::to_string(rc.second) +
                                   ")");
        }
    }
    validate_matrix_shape(g, m.D, 1, &out.problems);
    // Maurer-Cartan: D^2 + diag((-1)^{deg g_r}) dD = 0.
    PathMatrix d2 = matmul(g, m.D, m.D);
    PathMatrix dd = matdiff(g, m.D);
    PathMatrix mc = d2;
    for (const auto& [rc, e] : dd.entries()) {
        Rat sign = (((m.gens[rc.first].degree % 2) + 2) % 2 == 0) ? Rat(1) : Rat(-1);
        mc.add(rc.first, rc.second, e.scaled(sign));
    }
    if (!mc.is_zero()) {
        out.ok = false;
        out.problems.push_back("Maurer-Cartan identity fails:\n" + mc.to_string());
    }
    out.ok = out.ok && out.problems.empty();
    return out;
}

ChainMap make_map(const DgModulePresentation& src, const DgModulePresentation& tgt,
                  int degree) {
    ChainMap f;
    f.src = &src;
    f.tgt = &tgt;
    f.degree = degree;
    f.F = PathMatrix(tgt.gens, src.gens);
    return f;
}

PathMatrix hom_delta(const GinzburgPresentation& g, const ChainMap& f) {
    PathMatrix out = matmul(g, f.tgt->D, f.F);
    PathMatrix df = matdiff(g, f.F);
    for (const auto& [rc, e] : df.entries()) {
        Rat sign = (((f.tgt->gens[rc.first].degree % 2) + 2) % 2 == 0) ? Rat(1) : Rat(-1);
        out.add(rc.first, rc.second, e.scaled(sign));
    }
    Rat fsign = (((f.degree % 2) + 2) % 2 == 0) ? Rat(1) : Rat(-1);
    out = out - matmul(g, f.F, f.src->D).scaled(fsign);
    return out;
}

MapCheck check_chain_map(const GinzburgPresentation& g, const ChainMap& f) {
    MapCheck out;
    std::vector<std::string> problems;
    validate_matrix_shape(g, f.F, f.degree, &problems);
    if (!problems.empty()) {
        out.ok = false;
        out.residual = problems.front();
        return out;
    }
    PathMatrix d = hom_delta(g, f);
    out.ok = d.is_zero();
    if (!out.ok) out.residual = d.to_string();
    return out;
}

MapCheck check_null_homotopy(const GinzburgPresentation& g, const ChainMap& f,
                             const ChainMap& h, const PathMatrix& theta) {
    if (f.src != h.src && !(f.src->gens == h.src->gens)) throw DgError("homotopy shape mismatch");
    ChainMap th;
    th.src = f.src;
    th.tgt = f.tgt;
    th.degree = f.degree - 1;
    th.F = theta;
    PathMatrix lhs = f.F - h.F;
    PathMatrix rhs = hom_delta(g, th);
    MapCheck out;
    out.ok = lhs == rhs;
    if (!out.ok) out.residual = (lhs - rhs).to_string();
    return out;
}

PathMatrix compose(const GinzburgPresentation& g, const ChainMap& f, const ChainMap& h) {
    return matmul(g, f.F, h.F);
}

namespace {

void enumerate_paths(const GenTable& t, const std::string& from, const std::string& to,
                     int degree, int max_len, Path cur, const std::string& at,
                     std::vector<Path>& out) {
    if (at == to && path_degree(t, cur) == degree) {
        Path p = cur;
        if (p.gens.empty()) p.vertex = from;
        out.push_back(p);
    }
    if (static_cast<int>(cur.gens.size()) >= max_len) return;
    for (const std::string& gid : t.gen_order()) {
        const GenInfo& gi = t.gen(gid);
        if (gi.src != at) continue;
        Path next = cur;
        next.gens.push_back(gid);
        enumerate_paths(t, from, to, degree, max_len, next, gi.tgt, out);
    }
}

}  // namespace

std::optional<PathMatrix> solve_homotopy(const GinzburgPresentation& g,
                                         const DgModulePresentation& src,
                                         const DgModulePresentation& tgt, int theta_degree,
                                         const PathMatrix& rhs, int max_len) {
    // Unknowns: candidate paths per (row, col) slot of theta.
    struct Var {
        int r, c;
        Path p;
    };
    std::vector<Var> vars;
    for (int r = 0; r < static_cast<int>(tgt.gens.size()); ++r) {
        for (int c = 0; c < static_cast<int>(src.gens.size()); ++c) {
            int want = theta_degree + src.gens[c].degree - tgt.gens[r].degree;
            std::vector<Path> cands;
            enumerate_paths(g.table(), tgt.gens[r].vertex, src.gens[c].vertex, want, max_len,
                            Path{tgt.gens[r].vertex, {}}, tgt.gens[r].vertex, cands);
            for (const Path& p : cands) vars.push_back({r, c, p});
        }
    }
    // Row space of the linear system: coefficients of delta(theta) - rhs.
    using Key = std::tuple<int, int, Path>;
    std::map<Key, std::map<int, Rat>> rows;  // equation -> var -> coeff
    std::map<Key, Rat> target;
    for (const auto& [rc, e] : rhs.entries())
        for (const auto& [p, c] : e.terms()) target[{rc.first, rc.second, p}] = c;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        ChainMap th = make_map(src, tgt, theta_degree);
        th.F.set(vars[v].r, vars[v].c, PathExpr::of(vars[v].p));
        PathMatrix d = hom_delta(g, th);
        for (const auto& [rc, e] : d.entries())
            for (const auto& [p, c] : e.terms())
                rows[{rc.first, rc.second, p}][static_cast<int>(v)] = c;
    }
    for (const auto& [k, c] : target) {
        (void)c;
        rows[k];  // make sure every target coordinate appears
    }
    // Gaussian elimination.
    std::vector<std::map<int, Rat>> mat;
    std::vector<Rat> b;
    for (const auto& [k, row] : rows) {
        mat.push_back(row);
        auto it = target.find(k);
        b.push_back(it == target.end() ? Rat(0) : it->second);
    }
    std::vector<Rat> sol(vars.size(), Rat(0));
    std::vector<int> pivot_of_row;
    std::size_t rrow = 0;
    for (std::size_t col = 0; col < vars.size() && rrow < mat.size(); ++col) {
        std::size_t sel = rrow;
        while (sel < mat.size() && (mat[sel].find(static_cast<int>(col)) == mat[sel].end() ||
                                    mat[sel][static_cast<int>(col)] == 0))
            ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[sel], mat[rrow]);
        std::swap(b[sel], b[rrow]);
        Rat piv = mat[rrow][static_cast<int>(col)];
        for (std::size_t r2 = 0; r2 < mat.size(); ++r2) {
            if (r2 == rrow) continue;
            auto it = mat[r2].find(static_cast<int>(col));
            if (it == mat[r2].end() || it->second == 0) continue;
            Rat f = it->second / piv;
            for (const auto& [cc, vv] : mat[rrow]) {
                mat[r2][cc] -= f * vv;
                if (mat[r2][cc] == 0) mat[r2].erase(cc);
            }
            b[r2] -= f * b[rrow];
        }
        pivot_of_row.push_back(static_cast<int>(col));
        ++rrow;
    }
    for (std::size_t r2 = rrow; r2 < mat.size(); ++r2)
        if (b[r2] != 0) return std::nullopt;  // inconsistent
    for (std::size_t r2 = 0; r2 < rrow; ++r2)
        sol[pivot_of_row[r2]] = b[r2] / mat[r2][pivot_of_row[r2]];
    PathMatrix theta(tgt.gens, src.gens);
    for (std::size_t v = 0; v < vars.size(); ++v)
        if (sol[v] != 0) theta.add(vars[v].r, vars[v].c, PathExpr::of(vars[v].p, sol[v]));
    return theta;
}

}  // namespace qpsurf
