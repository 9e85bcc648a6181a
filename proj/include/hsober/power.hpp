#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "hsober/map.hpp"
#include "hsober/space.hpp"

namespace hsober {

/// The Smyth power space: nonempty up-sets of the base under reverse
/// inclusion, with the upper Vietoris topology. Carrier members are ordered
/// by (size, lex) and labeled "K#i".
class SmythSpace {
public:
    static SmythSpace build(const FiniteSpace& base, const Caps& caps = default_caps());

    const FiniteSpace& base() const { return base_; }
    const FiniteSpace& as_space() const { return space_; }
    const std::vector<Bits>& carrier() const { return carrier_; }
    std::size_t size() const { return carrier_.size(); }
    const Bits& member(std::size_t i) const { return carrier_[i]; }

    std::optional<std::size_t> index_of(const Bits& k) const;
    /// Throws PreconditionViolated when k is not a member of K(base).
    std::size_t require_index(const Bits& k) const;
    /// The family as a subset of the carrier.
    Bits family_bits(const std::vector<CompactSat>& family) const;
    Bits family_bits_raw(const std::vector<Bits>& family) const;
    std::vector<Bits> members_of(const Bits& family) const;

    /// Box U: carrier members contained in U.
    Bits box(const Bits& u) const;
    /// Diamond A: carrier members meeting A.
    Bits diamond(const Bits& a) const;

    /// Labeling table "K#i" -> member labels.
    nlohmann::json labeling() const;

private:
    FiniteSpace base_;
    FiniteSpace space_;
    std::vector<Bits> carrier_;
    std::unordered_map<Bits, std::size_t, BitsHash> index_;
};

SmythSpace smyth(const FiniteSpace& X, const Caps& caps = default_caps());

/// x maps to up x; injectivity and both embedding properties are asserted.
SpaceMap xi_embed(const SmythSpace& PX);

/// K maps to up f(K). Asserts continuity and the naturality square with xi.
SpaceMap smyth_map(const SpaceMap& f, const SmythSpace& PX, const SmythSpace& PY);

/// Extensional identity and composition laws for P_S on the given maps.
bool smyth_functor_laws(const SpaceMap& f, const SpaceMap& g, const SmythSpace& PX, const SmythSpace& PY,
                        const SmythSpace& PZ);

struct SmythUnion {
    SmythSpace inner;  ///< P_S(X)
    SmythSpace outer;  ///< P_S(P_S(X))
    SpaceMap map;      ///< union, outer -> inner
};
SmythUnion smyth_union(const FiniteSpace& X, const Caps& caps = default_caps());

enum class HoareFamily { all_closed, irr_closed };

/// A Hoare power space over a family of nonempty closed sets ordered by
/// inclusion (the specialization order of the lower Vietoris topology).
/// Carrier members are ordered by (size, lex) and labeled "A#i".
class HoareSpace {
public:
    static HoareSpace build(const FiniteSpace& base, std::vector<Bits> family, const Caps& caps = default_caps());

    const FiniteSpace& base() const { return base_; }
    const FiniteSpace& as_space() const { return space_; }
    const std::vector<Bits>& carrier() const { return carrier_; }
    std::size_t size() const { return carrier_.size(); }
    const Bits& member(std::size_t i) const { return carrier_[i]; }
    std::optional<std::size_t> index_of(const Bits& a) const;
    /// Diamond U: members meeting U.
    Bits diamond(const Bits& u) const;
    bool contains_point_closures() const;
    nlohmann::json labeling() const;

private:
    FiniteSpace base_;
    FiniteSpace space_;
    std::vector<Bits> carrier_;
    std::unordered_map<Bits, std::size_t, BitsHash> index_;
};

HoareSpace hoare(const FiniteSpace& X, HoareFamily which, const Caps& caps = default_caps());
HoareSpace hoare_custom(const FiniteSpace& X, const std::vector<ClosedSet>& family, const Caps& caps = default_caps());

/// x maps to down x. Requires every point closure in the carrier.
SpaceMap eta_embed(const HoareSpace& HX);

/// A maps to cl f(A); the result must lie in the target family.
SpaceMap hoare_map(const SpaceMap& f, const HoareSpace& HX, const HoareSpace& HY);

bool hoare_functor_laws(const SpaceMap& f, const SpaceMap& g, const HoareSpace& HX, const HoareSpace& HY,
                        const HoareSpace& HZ);

/// A filter of the open-set lattice (Scott-open filters coincide with
/// filters on a finite lattice). Members are sorted by (size, lex).
struct OpenFilter {
    std::uint64_t space_id = 0;
    std::vector<Bits> members;
    friend bool operator==(const OpenFilter& a, const OpenFilter& b) {
        return a.space_id == b.space_id && a.members == b.members;
    }
};

std::vector<OpenFilter> open_filters(const FiniteSpace& X, const Caps& caps = default_caps());
OpenFilter phi(const FiniteSpace& X, const CompactSat& k, const Caps& caps = default_caps());
/// Union of phi(K) over the family; NotAFilter (with the failing pair) when
/// the union is not closed under intersection.
OpenFilter filter_of_family(const FiniteSpace& X, const std::vector<CompactSat>& family,
                            const Caps& caps = default_caps());
bool is_filter(const FiniteSpace& X, const std::vector<Bits>& opens_family);

struct HofmannMisloveReport {
    std::size_t compacts = 0;
    std::size_t filters = 0;
    bool injective = false;
    bool surjective = false;
    bool inverse_is_intersection = false;
    bool bijective() const { return injective && surjective && inverse_is_intersection; }
};
HofmannMisloveReport hofmann_mislove(const FiniteSpace& X, const Caps& caps = default_caps());

enum class FamilyOp { intersection, sup_in_K, closure_intersection_check, four_way_equivalence };

struct FamilyResult {
    std::optional<Bits> set;         ///< intersection / sup
    bool value = true;               ///< check outcome
    std::vector<bool> conditions;    ///< four-way evaluation
};
FamilyResult family_calculus(const FiniteSpace& X, const std::vector<CompactSat>& family, FamilyOp which,
                             const Caps& caps = default_caps());

/// The four equivalent filtration conditions for a family (indices of the
/// Smyth carrier), evaluated independently.
std::vector<bool> many_meets_conditions(const SmythSpace& PX, const Bits& family, const Caps& caps = default_caps());

/// Irreducibility transfer: A irreducible in X, xi(A) irreducible in the Smyth
/// space, and the diamond set of A irreducible there; returned in that order.
std::vector<bool> irreducibility_transfer(const SmythSpace& PX, const Bits& a);

}  // namespace hsober
