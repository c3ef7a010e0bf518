#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpsurf/path_expr.hpp"
#include "qpsurf/quiver.hpp"

namespace qpsurf {

// A cycle stored in its canonical rotation (lexicographically minimal
// arrow-id sequence).
using CycWord = std::vector<std::string>;

CycWord canonical_rotation(const CycWord& w);

enum class QpClass { Trivial, Reduced, Mixed };

std::string qpclass_name(QpClass c);

// A potential: linear combination of cycles, keys cyclically normalized.
class Potential {
public:
    Potential() = default;

    static Potential zero() { return Potential(); }

    bool is_zero() const { return cycles_.empty(); }
    const std::map<CycWord, Rat>& cycles() const { return cycles_; }

    void add_cycle(const CycWord& w, const Rat& c);

    Potential operator+(const Potential& o) const;
    Potential operator-(const Potential& o) const;
    Potential scaled(const Rat& c) const;

    bool operator==(const Potential& o) const { return cycles_ == o.cycles_; }
    bool operator!=(const Potential& o) const { return !(*this == o); }

    // Every key a cycle over q (composable, closing up).
    void validate(const Quiver& q) const;

    std::string to_string() const;

private:
    std::map<CycWord, Rat> cycles_;
};

// Cyclic derivative with respect to an arrow: for each cycle c.a1..am and
// occurrence ai = a, contributes c * a_{i+1}..a_m a_1..a_{i-1}.
PathExpr cyclic_derivative(const Quiver& q, const Potential& w, const std::string& arrow);

// Higher derivative with respect to a consecutive word of arrows: for each
// cyclic occurrence of the word, the rotated remainder path.
PathExpr cyclic_derivative_word(const Quiver& q, const Potential& w,
                                const std::vector<std::string>& word);

QpClass classify_qp(const Quiver& q, const Potential& w);

// The potential as a plain path expression (each cycle read as a path from
// its canonical rotation).
PathExpr potential_expr(const GenTable& t, const Potential& w);

struct QP {
    Quiver quiver;
    Potential potential;
};

}  // namespace qpsurf
