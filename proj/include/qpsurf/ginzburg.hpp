#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpsurf/potential.hpp"

namespace qpsurf {

std::string star_name(const std::string& arrow);
std::string estar_name(const std::string& vertex);

// The Ginzburg dg algebra of a QP as a presentation: the doubled graded
// quiver (a: 0, a*: -1, e_i*: -2) with the differential rule table
//   d a = 0,  d a* = d_a W,  d e_i* = sum_a [a, a*] restricted to i.
// d^2 = 0 is checked, not assumed.
class GinzburgPresentation {
public:
    static GinzburgPresentation make(const QP& qp);

    const QP& base() const { return qp_; }
    const GenTable& table() const { return table_; }

    const PathExpr& rule(const std::string& gen) const;

    // Leibniz extension of the rule table.
    PathExpr diff(const PathExpr& e) const;

    // test hook: replace one rule (negative controls)
    GinzburgPresentation with_rule(const std::string& gen, PathExpr value) const;

private:
    QP qp_;
    GenTable table_;
    std::map<std::string, PathExpr> rules_;
};

struct D2Case {
    std::string generator;
    bool ok = false;
    std::string residual;
};

struct D2Report {
    bool ok = true;
    std::vector<D2Case> cases;
};

// Expands d^2 on every generator via the Leibniz rule and asserts exact
// zero; also checks deg(d x) = deg(x) + 1.
D2Report check_d_squared(const GinzburgPresentation& g);

}  // namespace qpsurf
