#pragma once

#include <vector>

#include "hsober/space.hpp"

namespace hsober {

/// A continuous map between finite spaces. On finite spaces continuity is
/// monotonicity for the specialization orders; the constructor checks it
/// and throws NotContinuous otherwise.
class SpaceMap {
public:
    SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> assignment);

    static SpaceMap identity(const FiniteSpace& X);
    static SpaceMap constant(const FiniteSpace& X, const FiniteSpace& Y, std::size_t y);

    const FiniteSpace& source() const { return src_; }
    const FiniteSpace& target() const { return tgt_; }
    const std::vector<std::size_t>& assignment() const { return f_; }
    std::size_t operator()(std::size_t x) const { return f_[x]; }

    Bits image(const Bits& a) const;
    Bits preimage(const Bits& b) const;

    bool is_injective() const;
    bool is_order_embedding() const;
    /// Every open set of the source is the preimage of an open set of the target.
    bool is_topological_embedding() const;
    bool is_identity() const;

    /// Same endpoints (by space id) and same assignment.
    friend bool operator==(const SpaceMap& a, const SpaceMap& b) {
        return a.src_.id() == b.src_.id() && a.tgt_.id() == b.tgt_.id() && a.f_ == b.f_;
    }

private:
    FiniteSpace src_, tgt_;
    std::vector<std::size_t> f_;
};

/// g after f. Throws EndpointMismatch unless target(f) is source(g).
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

nlohmann::json map_to_json(const SpaceMap& f);

}  // namespace hsober
