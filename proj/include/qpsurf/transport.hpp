#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpsurf/ext_algebra.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One braid-twist letter along a dual arc; words compose left to right
// (first letter applied first).
struct TwistGen {
    std::string arc;
    int sign = 1;
    bool operator==(const TwistGen& o) const { return arc == o.arc && sign == o.sign; }
};

using TwistWord = std::vector<TwistGen>;

TwistWord reduce_word(TwistWord w);
TwistWord invert_word(const TwistWord& w);
std::string word_to_string(const TwistWord& w);

// Image of a source spherical-object label in the target world: the target
// arc, twisted by the word, shifted by the offset.
struct ArcImage {
    TwistWord word;
    std::string arc;
    int shift = 0;
    bool operator==(const ArcImage& o) const {
        return word == o.word && arc == o.arc && shift == o.shift;
    }
};

struct GermKey {
    std::string arc;
    int dec = -1;
    bool operator<(const GermKey& o) const {
        return arc != o.arc ? arc < o.arc : dec < o.dec;
    }
    bool operator==(const GermKey& o) const { return arc == o.arc && dec == o.dec; }
};

// Basis relabeling induced by Keller-Yang transport across flips: per dual
// arc a twist-word name plus shift, and the underlying germ correspondence.
class TransportMap {
public:
    Triangulation src;
    Triangulation tgt;
    std::map<std::string, ArcImage> arc_map;
    std::map<GermKey, GermKey> germ_map;

    static TransportMap identity(const Triangulation& t);
    bool is_identity() const;
    bool operator==(const TransportMap& o) const;

    const ArcImage& image_of(const std::string& arc) const;
};

// Transport of one forward flip: E(flip(t, k)) -> E(t).
TransportMap flip_transport(const Triangulation& t, const std::string& k);

// inverse of a single forward-flip transport: E(t) -> E(flip(t, k))
TransportMap invert_flip_transport(const TransportMap& f);

// a o b (first b): source of a must be the target ... b: E(C)->E(B),
// a: E(B)->E(A); result E(C)->E(A).
TransportMap compose(const TransportMap& a, const TransportMap& b);

// Composite of flip transports along a path of flips from t0; backward
// flips contribute inverted transports. Result maps E(end) -> E(t0).
TransportMap path_transport(const Triangulation& t0,
                            const std::vector<std::pair<std::string, FlipDir>>& path);

// The coherent part of the induced basis map: entries exist when both germs
// land untwisted at a common target decoration. Incoherent slots (twisted
// arcs, cone-touching angles) are reported as nullopt.
struct BasisMapEntry {
    int src_index = -1;
    std::optional<int> tgt_index;
    std::string note;  // "twisted" / "split" for incoherent entries
};

std::vector<BasisMapEntry> coherent_basis_map(const TransportMap& t, const ExtTable& src_table,
                                              const ExtTable& tgt_table);

struct TransportCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

// Internal consistency of one transport: germ map bijective; coherent
// angles satisfy the shift-corrected span rule; coherent products match.
TransportCheck check_transport(const TransportMap& t);

// K0 shadow: integer matrix, columns over source arcs (sorted), rows over
// target arcs (sorted), via Euler-form transvections of the target QP and
// the sign (-1)^shift.
std::vector<std::vector<long long>> transport_k0_matrix(const TransportMap& t);

}  // namespace qpsurf
