#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpsurf {

struct QuiverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string id;
    std::string src;
    std::string tgt;
};

// A finite quiver with ordered vertex/arrow lists. Construction rejects
// loops always, and oriented 2-cycles unless allow_two_cycles is set
// (pre-mutation output needs them).
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
           bool allow_two_cycles = false);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(const std::string& v) const { return vidx_.count(v) != 0; }
    bool has_arrow(const std::string& a) const { return aidx_.count(a) != 0; }
    const Arrow& arrow(const std::string& id) const;
    const std::string& src(const std::string& a) const { return arrow(a).src; }
    const std::string& tgt(const std::string& a) const { return arrow(a).tgt; }

    std::vector<std::string> arrows_from(const std::string& v) const;
    std::vector<std::string> arrows_to(const std::string& v) const;
    // arrows i->j
    std::vector<std::string> arrows_between(const std::string& i, const std::string& j) const;

    bool has_two_cycle() const;

    bool operator==(const Quiver& o) const {
        return vertices_ == o.vertices_ && ids_equal(o);
    }

private:
    bool ids_equal(const Quiver& o) const;

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t> vidx_;
    std::map<std::string, std::size_t> aidx_;
};

}  // namespace qpsurf
