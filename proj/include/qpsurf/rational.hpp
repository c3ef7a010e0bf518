#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qpsurf {

// Exact rational coefficients. All identities verified by this project are
// exact; no floating point is used anywhere in the core.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();  // "p/q" or "p"
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

}  // namespace qpsurf
