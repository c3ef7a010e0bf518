#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpsurf/ginzburg.hpp"

namespace qpsurf {

struct DgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One generator of a semifree dg module: a shifted projective e_v Gamma
// placed in the given (co)homological degree.
struct DgGen {
    std::string vertex;
    int degree = 0;
    std::string label;

    bool operator==(const DgGen& o) const {
        return vertex == o.vertex && degree == o.degree && label == o.label;
    }
};

// Sparse matrix with PathExpr entries between generator lists. The entry at
// (r, c) is a combination of paths from gens_row[r].vertex to
// gens_col[c].vertex; it describes the g_r-component of the image of g_c.
class PathMatrix {
public:
    PathMatrix() = default;
    PathMatrix(std::vector<DgGen> rows, std::vector<DgGen> cols)
        : rows_(std::move(rows)), cols_(std::move(cols)) {}

    const std::vector<DgGen>& rows() const { return rows_; }
    const std::vector<DgGen>& cols() const { return cols_; }

    const PathExpr& at(int r, int c) const;
    void set(int r, int c, PathExpr e);
    void add(int r, int c, const PathExpr& e);
    const std::map<std::pair<int, int>, PathExpr>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    PathMatrix operator+(const PathMatrix& o) const;
    PathMatrix operator-(const PathMatrix& o) const;
    PathMatrix scaled(const Rat& c) const;
    bool operator==(const PathMatrix& o) const;

    std::string to_string() const;

private:
    std::vector<DgGen> rows_, cols_;
    std::map<std::pair<int, int>, PathExpr> entries_;
};

PathMatrix matmul(const GinzburgPresentation& g, const PathMatrix& a, const PathMatrix& b);
// entrywise differential
PathMatrix matdiff(const GinzburgPresentation& g, const PathMatrix& m);
// same entries over new row/column generator lists (shifting a chain map)
PathMatrix reshape(const PathMatrix& m, std::vector<DgGen> rows, std::vector<DgGen> cols);

// A semifree dg module presentation: generators plus a strictly
// lower-triangular differential matrix.
struct DgModulePresentation {
    std::vector<DgGen> gens;
    PathMatrix D;  // square on gens

    int gen_index(const std::string& label) const;
};

// free module e_v Gamma shifted to the given degree
DgModulePresentation free_module(const std::string& vertex, int degree, const std::string& label);

// Degree shift M[s]: generator degrees drop by s, the differential picks up
// the sign (-1)^s.
DgModulePresentation shift(const DgModulePresentation& m, int s);

struct PresentationCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

// Structural invariants plus the matrix Maurer-Cartan identity
//   (D^2)_{rc} + (-1)^{deg g_r} d(D_{rc}) = 0.
PresentationCheck check_presentation(const GinzburgPresentation& g,
                                     const DgModulePresentation& m);

// Degree-d map of presentations, stored as a matrix: columns over the
// source generators, rows over the target generators.
struct ChainMap {
    const DgModulePresentation* src = nullptr;
    const DgModulePresentation* tgt = nullptr;
    int degree = 0;
    PathMatrix F;
};

ChainMap make_map(const DgModulePresentation& src, const DgModulePresentation& tgt, int degree);

// Hom-complex differential:
//   delta(F) = D_tgt F + diag((-1)^{deg g_tgt}) dF - (-1)^{|F|} F D_src.
PathMatrix hom_delta(const GinzburgPresentation& g, const ChainMap& f);

struct MapCheck {
    bool ok = true;
    std::string residual;
};

MapCheck check_chain_map(const GinzburgPresentation& g, const ChainMap& f);

// f - g = delta(theta), all shapes identical; theta has degree |f| - 1.
MapCheck check_null_homotopy(const GinzburgPresentation& g, const ChainMap& f,
                             const ChainMap& h, const PathMatrix& theta);

PathMatrix compose(const GinzburgPresentation& g, const ChainMap& f, const ChainMap& h);

// Entry degree/vertex validation shared by differentials and chain maps.
void validate_matrix_shape(const GinzburgPresentation& g, const PathMatrix& m, int map_degree,
                           std::vector<std::string>* problems);

// Regression-only solver: look for theta with delta(theta) = rhs, entries
// spanned by paths of length <= max_len. Returns nullopt when the bounded
// search has no solution.
std::optional<PathMatrix> solve_homotopy(const GinzburgPresentation& g,
                                         const DgModulePresentation& src,
                                         const DgModulePresentation& tgt, int theta_degree,
                                         const PathMatrix& rhs, int max_len);

}  // namespace qpsurf
