#include "qpsurf/quiver.hpp"

#include <set>

namespace qpsurf {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
               bool allow_two_cycles)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vidx_.emplace(vertices_[i], i).second)
            throw QuiverError("duplicate vertex id: " + vertices_[i]);
    }
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (!aidx_.emplace(a.id, i).second)
            throw QuiverError("duplicate arrow id: " + a.id);
        if (!vidx_.count(a.src) || !vidx_.count(a.tgt))
            throw QuiverError("arrow " + a.id + " references unknown vertex");
        if (a.src == a.tgt)
            throw QuiverError("loop at vertex " + a.src + " (arrow " + a.id + ")");
    }
    if (!allow_two_cycles && has_two_cycle())
        throw QuiverError("oriented 2-cycle present");
}

const Arrow& Quiver::arrow(const std::string& id) const {
    auto it = aidx_.find(id);
    if (it == aidx_.end()) throw QuiverError("unknown arrow id: " + id);
    return arrows_[it->second];
}

std::vector<std::string> Quiver::arrows_from(const std::string& v) const {
    std::vector<std::string> out;
    for (const Arrow& a : arrows_)
        if (a.src == v) out.push_back(a.id);
    return out;
}

std::vector<std::string> Quiver::arrows_to(const std::string& v) const {
    std::vector<std::string> out;
    for (const Arrow& a : arrows_)
        if (a.tgt == v) out.push_back(a.id);
    return out;
}

std::vector<std::string> Quiver::arrows_between(const std::string& i, const std::string& j) const {
    std::vector<std::string> out;
    for (const Arrow& a : arrows_)
        if (a.src == i && a.tgt == j) out.push_back(a.id);
    return out;
}

bool Quiver::has_two_cycle() const {
    std::set<std::pair<std::string, std::string>> pairs;
    for (const Arrow& a : arrows_) pairs.insert({a.src, a.tgt});
    for (const Arrow& a : arrows_)
        if (pairs.count({a.tgt, a.src})) return true;
    return false;
}

bool Quiver::ids_equal(const Quiver& o) const {
    if (arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (arrows_[i].id != o.arrows_[i].id || arrows_[i].src != o.arrows_[i].src ||
            arrows_[i].tgt != o.arrows_[i].tgt)
            return false;
    }
    return true;
}

}  // namespace qpsurf
