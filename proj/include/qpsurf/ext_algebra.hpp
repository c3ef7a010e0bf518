#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpsurf/surface.hpp"

namespace qpsurf {

struct ExtError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Basis element of the Ext algebra of a triangulation's heart: per dual arc
// the identity (degree 0) and the full-turn element (degree 3), plus one
// angle per ordered pair of germs at a decoration, graded by its clockwise
// corner span.
struct ExtBasisElt {
    enum class Kind { Id, Angle, Cy };
    Kind kind = Kind::Id;
    std::string arc;            // Id / Cy
    int dec = -1;               // Angle
    std::string src, tgt;       // Angle: dual arcs of the two germs
    int span = 0;               // Angle: 1 or 2

    int degree() const {
        return kind == Kind::Id ? 0 : (kind == Kind::Cy ? 3 : span);
    }
    const std::string& source_arc() const { return kind == Kind::Angle ? src : arc; }
    const std::string& target_arc() const { return kind == Kind::Angle ? tgt : arc; }

    bool operator==(const ExtBasisElt& o) const {
        return kind == o.kind && arc == o.arc && dec == o.dec && src == o.src &&
               tgt == o.tgt && span == o.span;
    }
    bool operator<(const ExtBasisElt& o) const;
    std::string to_string() const;
};

class ExtTable {
public:
    // Builds the full table; refuses self-glued triangles.
    static ExtTable of(const Triangulation& t);

    const Triangulation& tri() const { return tri_; }
    const std::vector<ExtBasisElt>& basis() const { return basis_; }
    int index_of(const ExtBasisElt& e) const;
    std::optional<int> find(const ExtBasisElt& e) const;

    // f after g ("first g then f"); nullopt means the zero product.
    std::optional<int> compose(int f, int g) const;

    std::array<int, 4> graded_dims() const;

    // slot of a germ in the cyclic side order of its decoration's triangle
    int germ_slot(const std::string& arc, int dec) const;
    // clockwise corner span between two germs at one decoration
    int span_between(const std::string& arc_from, const std::string& arc_to, int dec) const;
    std::vector<std::pair<std::string, int>> germs_at(int dec) const;  // (arc, slot)

private:
    explicit ExtTable(Triangulation t) : tri_(std::move(t)) {}
    Triangulation tri_;
    std::vector<ExtBasisElt> basis_;
    std::map<std::pair<int, int>, int> prod_;
};

struct ExtCheckReport {
    bool ok = true;
    std::vector<std::string> problems;
};

// associativity on all triples, unit laws, graded dimensions against the
// quiver, CY degree-pairing nondegeneracy
ExtCheckReport check_ext_table(const ExtTable& t);

// e_i / arrows / stars / e_i* of the doubled quiver of qp(t) matched with
// the basis.
struct PiDictionary {
    std::map<std::string, int> gen_to_basis;
    std::map<int, std::string> basis_to_gen;
};

PiDictionary pi_dictionary(const Triangulation& t, const ExtTable& table);

}  // namespace qpsurf
