#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpsurf/potential.hpp"
#include "qpsurf/quiver.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

struct MutationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PremutationResult {
    Quiver quiver;  // 2-cycles permitted
    Potential potential;
    // bookkeeping for the new arrows
    std::map<std::string, std::pair<std::string, std::string>> composite_of;  // [a|b] -> (a,b)
    std::map<std::string, std::string> reversal_of;                           // a' -> a
};

std::string reversed_name(const std::string& arrow);
std::string composite_name(const std::string& a, const std::string& b);

// DWZ pre-mutation at k (Steps 1-2 plus the new potential W~ = W~1 + W~2).
PremutationResult premutate(const Quiver& q, const Potential& w, const std::string& k);

// Canonical elimination of 2-cycle terms by the substitution rule:
// for a term c*uv with w = c*uv + uA + vB + C, delete u,v and replace w by
// C - (1/c) BA; repeated until reduced. Requires the surface-class shape
// (the 2-cycle's arrows appear in no other 2-cycle term).
QP reduce(const Quiver& q, const Potential& w);

// reduce with an explicit elimination order of 2-cycle keys (for the
// confluence tests).
QP reduce_with_order(const Quiver& q, const Potential& w,
                     const std::vector<CycWord>& order);

QP mutate(const Quiver& q, const Potential& w, const std::string& k);
inline QP mutate(const QP& qp, const std::string& k) {
    return mutate(qp.quiver, qp.potential, k);
}

// Does some arrow bijection (respecting endpoints under the identity vertex
// map) carry (a.potential) to (b.potential) exactly?
struct QpMatch {
    bool ok = false;
    std::map<std::string, std::string> arrow_map;
    std::string witness;  // first mismatching term on failure
};
QpMatch qp_equal_up_to_arrow_names(const QP& a, const QP& b);

struct FlipMutationReport {
    bool ok = false;
    std::string arc;
    std::string witness;
};

// mutate(qp_of(t), k) versus qp_of(flip(t, k, forward)) under the identity
// arc labeling.
FlipMutationReport check_flip_mutation(const Triangulation& t, const std::string& k);

}  // namespace qpsurf
