#include "hsober/map.hpp"

namespace hsober {

SpaceMap::SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> assignment)
    : src_(std::move(source)), tgt_(std::move(target)), f_(std::move(assignment)) {
    if (f_.size() != src_.size()) throw Error(ErrorKind::InvariantViolation, "assignment has wrong length");
    for (auto y : f_)
        if (y >= tgt_.size()) throw Error(ErrorKind::InvariantViolation, "assignment leaves the target");
    for (std::size_t x = 0; x < src_.size(); ++x)
        src_.up(x).for_each([&](std::size_t z) {
            if (!tgt_.leq(f_[x], f_[z]))
                throw Error(ErrorKind::NotContinuous, "map is not monotone",
                            {{"pair", {src_.label(x), src_.label(z)}}});
        });
}

SpaceMap SpaceMap::identity(const FiniteSpace& X) {
    std::vector<std::size_t> a(X.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
    return SpaceMap(X, X, std::move(a));
}

SpaceMap SpaceMap::constant(const FiniteSpace& X, const FiniteSpace& Y, std::size_t y) {
    return SpaceMap(X, Y, std::vector<std::size_t>(X.size(), y));
}

Bits SpaceMap::image(const Bits& a) const {
    Bits r(tgt_.size());
    a.for_each([&](std::size_t x) { r.set(f_[x]); });
    return r;
}

Bits SpaceMap::preimage(const Bits& b) const {
    Bits r(src_.size());
    for (std::size_t x = 0; x < f_.size(); ++x)
        if (b.test(f_[x])) r.set(x);
    return r;
}

bool SpaceMap::is_injective() const {
    Bits seen(tgt_.size());
    for (auto y : f_) {
        if (seen.test(y)) return false;
        seen.set(y);
    }
    return true;
}

bool SpaceMap::is_order_embedding() const {
    for (std::size_t x = 0; x < f_.size(); ++x)
        for (std::size_t z = 0; z < f_.size(); ++z)
            if (src_.leq(x, z) != tgt_.leq(f_[x], f_[z])) return false;
    return true;
}

bool SpaceMap::is_topological_embedding() const {
    if (!is_injective()) return false;
    // Opens are unions of principal up-sets and preimages commute with
    // unions, so it suffices that each up x is the preimage of up f(x).
    for (std::size_t x = 0; x < f_.size(); ++x)
        if (preimage(tgt_.up(f_[x])) != src_.up(x)) return false;
    return true;
}

bool SpaceMap::is_identity() const {
    if (src_.id() != tgt_.id()) return false;
    for (std::size_t x = 0; x < f_.size(); ++x)
        if (f_[x] != x) return false;
    return true;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
    if (f.target().id() != g.source().id())
        throw Error(ErrorKind::EndpointMismatch, "maps do not compose");
    std::vector<std::size_t> a(f.source().size());
    for (std::size_t x = 0; x < a.size(); ++x) a[x] = g(f(x));
    return SpaceMap(f.source(), g.target(), std::move(a));
}

nlohmann::json map_to_json(const SpaceMap& f) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t x = 0; x < f.source().size(); ++x) j[f.source().label(x)] = f.target().label(f(x));
    return j;
}

}  // namespace hsober
