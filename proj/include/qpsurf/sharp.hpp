#pragma once

#include <string>
#include <vector>

#include "qpsurf/dg_module.hpp"

namespace qpsurf {

// Cofibrant resolution pS_i: P_i[3] (+) P_{s(rho)}[2] per incoming rho (+)
// P_{t(tau)}[1] per outgoing tau (+) P_i, with the displayed 4-block
// differential (rho, -tau*, -d_{rho tau}W, e_i*, rho*, tau).
DgModulePresentation simple_resolution(const GinzburgPresentation& g, const std::string& i);

// The augmentation pS_i -> S_i is a chain map iff the bottom row of the
// differential has no trivial-path terms.
bool augmentation_is_chain_map(const DgModulePresentation& res, const std::string& i);

// The two resolutions related by one mutation step at k, with the
// quasi-isomorphism phi between them: big = F(pS~_i), sharp = pS#_i
// (for i = k: big = F(pS~_k), sharp = pS_k[1]).
struct SharpBundle {
    std::string i, k;
    DgModulePresentation big;
    DgModulePresentation sharp;
    PathMatrix phi;  // rows over sharp.gens, cols over big.gens, degree 0
};

SharpBundle sharp_bundle(const GinzburgPresentation& g, const std::string& k,
                         const std::string& i);

struct SharpCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

// d^2 for both presentations plus chain-map-ness of phi.
SharpCheck check_sharp_bundle(const GinzburgPresentation& g, const SharpBundle& b);

// The commutative-square identities for the lifted morphisms between
// resolutions: the a' case needs the explicit degree -1 homotopy theta, the
// other three differences vanish identically.
struct HomotopySquareReport {
    std::string which;  // aprime | aprimestar | bprime | bprimestar
    std::string arrow;
    bool lift_src_ok = false;   // transcribed lift on the big side is a chain map
    bool lift_tgt_ok = false;   // transcribed sharp-side lift is a chain map
    bool square_ok = false;     // difference zero or equal to delta(theta)
    std::string residual;
};

HomotopySquareReport check_square_aprime(const GinzburgPresentation& g, const std::string& k,
                                         const std::string& a);
HomotopySquareReport check_square_aprimestar(const GinzburgPresentation& g, const std::string& k,
                                             const std::string& a);
HomotopySquareReport check_square_bprime(const GinzburgPresentation& g, const std::string& k,
                                         const std::string& b);
HomotopySquareReport check_square_bprimestar(const GinzburgPresentation& g, const std::string& k,
                                             const std::string& b);

}  // namespace qpsurf
