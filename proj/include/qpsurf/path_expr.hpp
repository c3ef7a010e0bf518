#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpsurf/quiver.hpp"
#include "qpsurf/rational.hpp"

namespace qpsurf {

struct PathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metadata for path generators. A plain quiver gives degree-0 generators;
// the Ginzburg doubled quiver adds a* in degree -1 and e_i* in degree -2.
struct GenInfo {
    std::string id;
    std::string src;
    std::string tgt;
    int degree = 0;
};

class GenTable {
public:
    GenTable() = default;
    GenTable(std::vector<std::string> vertices, std::vector<GenInfo> gens);

    static GenTable from_quiver(const Quiver& q);

    bool has_vertex(const std::string& v) const { return vset_.count(v) != 0; }
    bool has_gen(const std::string& g) const { return gens_.count(g) != 0; }
    const GenInfo& gen(const std::string& g) const;
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::string>& gen_order() const { return order_; }

private:
    std::vector<std::string> vertices_;
    std::vector<std::string> order_;
    std::map<std::string, GenInfo> gens_;
    std::map<std::string, char> vset_;
};

// A path: either the trivial path at a vertex, or a composable sequence of
// generators. Composition pq means first p, then q.
struct Path {
    std::string vertex;              // set iff gens empty
    std::vector<std::string> gens;

    bool trivial() const { return gens.empty(); }
    bool operator<(const Path& o) const {
        if (trivial() != o.trivial()) return trivial();
        if (trivial()) return vertex < o.vertex;
        return gens < o.gens;
    }
    bool operator==(const Path& o) const {
        return vertex == o.vertex && gens == o.gens;
    }
};

Path trivial_path(const std::string& v);
Path gen_path(const std::string& g);
Path make_path(const std::vector<std::string>& gens);

const std::string& path_src(const GenTable& t, const Path& p);
const std::string& path_tgt(const GenTable& t, const Path& p);
int path_degree(const GenTable& t, const Path& p);
void validate_path(const GenTable& t, const Path& p);

// Finite linear combination of paths with nonzero rational coefficients.
class PathExpr {
public:
    PathExpr() = default;

    static PathExpr zero() { return PathExpr(); }
    static PathExpr of(const Path& p, const Rat& c = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<Path, Rat>& terms() const { return terms_; }

    void add_term(const Path& p, const Rat& c);

    PathExpr operator-() const;
    PathExpr operator+(const PathExpr& o) const;
    PathExpr operator-(const PathExpr& o) const;
    PathExpr scaled(const Rat& c) const;

    bool operator==(const PathExpr& o) const { return terms_ == o.terms_; }
    bool operator!=(const PathExpr& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::map<Path, Rat> terms_;
};

// Bilinear concatenation product; non-composable path pairs contribute zero.
PathExpr mul(const GenTable& t, const PathExpr& a, const PathExpr& b);
PathExpr mul(const GenTable& t, const Path& a, const Path& b, const Rat& c);

// Every path composable and over the table; throws otherwise.
void validate_expr(const GenTable& t, const PathExpr& e);

// Degree of a homogeneous expression (throws if mixed); 0 for the zero expr.
int expr_degree(const GenTable& t, const PathExpr& e);
bool expr_homogeneous(const GenTable& t, const PathExpr& e);

}  // namespace qpsurf
