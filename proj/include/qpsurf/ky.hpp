#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpsurf/dg_module.hpp"
#include "qpsurf/mutation.hpp"

namespace qpsurf {

// The direct summand P~_i of the forward mutation of Gamma at k:
// P~_k = P_k[1] (+) sum over rho: t(rho)=k of a copy of P_{s(rho)}, with the
// arrow rho in the lower-left block; P~_i = P_i otherwise.
DgModulePresentation mu_sharp(const GinzburgPresentation& g, const std::string& k);

// Generator-to-matrix table for the dg-algebra map
//   f: Gamma~ -> End(mu_sharp_k(Gamma)),
// one matrix per generator of the doubled premutated quiver, transcribed
// case by case (left multiplications and the displayed block matrices).
struct KYMorphismTable {
    std::string k;
    PremutationResult pre;
    std::map<std::string, DgModulePresentation> summands;  // vertex -> P~_vertex
    struct Entry {
        std::string src_vertex;  // arrow R: src -> tgt in the premutated quiver
        std::string tgt_vertex;
        int degree = 0;
        PathMatrix F;  // map P~_tgt -> P~_src (rows over P~_src, cols over P~_tgt)
    };
    std::map<std::string, Entry> entries;
};

KYMorphismTable ky_table(const GinzburgPresentation& g, const std::string& k);

// f extended multiplicatively to a path expression with endpoints u -> v;
// returns the matrix P~_v -> P~_u.
PathMatrix ky_apply(const GinzburgPresentation& base, const KYMorphismTable& t,
                    const PathExpr& e, const std::string& u, const std::string& v);

struct DgHomCase {
    std::string generator;
    bool ok = false;
    std::string residual;
};

struct DgHomReport {
    bool ok = true;
    std::vector<DgHomCase> cases;
};

// Verifies f(d~ x) = delta(f(x)) for every generator x of the premutated
// doubled quiver.
DgHomReport check_dg_homomorphism(const GinzburgPresentation& g, const std::string& k);

// negative-control hook: same check with one table entry scaled
DgHomReport check_dg_homomorphism_perturbed(const GinzburgPresentation& g, const std::string& k,
                                            const std::string& generator, const Rat& scale);

}  // namespace qpsurf
