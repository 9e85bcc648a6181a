#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsober/map.hpp"
#include "hsober/power.hpp"
#include "hsober/systems.hpp"

namespace hsober {

/// Finite product with the componentwise order. Points are labeled
/// "(x,y,...)" and enumerated in lexicographic order of coordinates.
struct Product {
    FiniteSpace space;
    std::vector<FiniteSpace> factors;
    std::vector<SpaceMap> projections;
    std::vector<std::vector<std::size_t>> coords;  ///< coordinates of each point
    std::size_t index_of(const std::vector<std::size_t>& coord) const;
};

/// Also checks, on every irreducible subset when the carrier is small and on
/// a deterministic sample otherwise, that the closure of an irreducible set is
/// the product of the closures of its projections, and that a rectangle is
/// irreducible exactly when its sides are.
Product product(const std::vector<FiniteSpace>& spaces, const Caps& caps = default_caps());

/// Every monotone map, in lexicographic order of assignments.
std::vector<SpaceMap> continuous_maps(const FiniteSpace& X, const FiniteSpace& Y, const Caps& caps = default_caps());

/// Continuous maps under the pointwise order, labeled "[f(x0),f(x1),...]".
struct FunctionSpace {
    FiniteSpace space;
    std::vector<SpaceMap> maps;
};
FunctionSpace function_space(const FiniteSpace& X, const FiniteSpace& Y, const Caps& caps = default_caps());

/// The agreement set of two parallel maps. Finite spaces cannot be empty, so
/// an empty equalizer carries no subspace and no inclusion.
struct Equalizer {
    Bits agreement;
    std::optional<FiniteSpace> space;
    std::optional<SpaceMap> inclusion;
    bool empty() const { return !space.has_value(); }
};
Equalizer equalizer(const SpaceMap& f, const SpaceMap& g);

/// r after s is the identity of Y. When it is, asserts that every checked
/// property of X carries over to Y, including the Smyth-level retraction.
bool retract_verify(const SpaceMap& r, const SpaceMap& s, const Caps& caps = default_caps());

enum class ReflectionKind { sobrification, h_sobrification, super_h_sobrification };
const char* to_string(ReflectionKind k);
ReflectionKind parse_reflection_kind(const std::string& s);

/// Hoare space over the closed sets determined by the reflection kind, with
/// unit x -> down x.
struct Reflection {
    ReflectionKind kind = ReflectionKind::sobrification;
    SubsetSystemId system;
    FiniteSpace base;
    HoareSpace hoare;
    FiniteSpace reflected;
    SpaceMap unit;
    std::vector<std::size_t> homeomorphism;  ///< reflected -> base
    nlohmann::json carrier_labeling() const;
    nlohmann::json to_json() const;
};

/// The closed sets the reflection is built from.
std::vector<Bits> reflection_family(const FiniteSpace& X, const SubsetSystemId& H, ReflectionKind kind);
Reflection reflect(const FiniteSpace& X, const SubsetSystemId& H, ReflectionKind kind,
                   const Caps& caps = default_caps());

struct UniversalReport {
    std::size_t targets = 0;
    std::size_t maps = 0;
    std::size_t factorizations = 0;
    bool factor = true;     ///< f* after the unit is f, and f* is continuous
    bool unique = true;     ///< exactly one continuous factorization
    nlohmann::json counterexample;
    bool holds() const { return factor && unique; }
    nlohmann::json to_json() const;
};
UniversalReport universal_property_verify(const Reflection& R, std::size_t target_bound,
                                          const Caps& caps = default_caps());

/// A -> cl f(A). Asserts the square with the units commutes.
SpaceMap reflection_functor(const SpaceMap& f, const Reflection& RX, const Reflection& RY);
/// Identity and composition laws for g after f.
bool reflection_functor_laws(const SpaceMap& f, const SpaceMap& g, const Reflection& RX, const Reflection& RY,
                             const Reflection& RZ);

struct ProductPreservation {
    std::vector<std::size_t> homeomorphism;  ///< (X x Y)^h -> X^h x Y^h
    std::size_t decompositions = 0;          ///< closed sets split as products
    nlohmann::json to_json() const;
};
/// Throws NoHomeomorphism when no homeomorphism exists.
ProductPreservation product_preservation(const FiniteSpace& X, const FiniteSpace& Y, const SubsetSystemId& H,
                                         ReflectionKind kind, const Caps& caps = default_caps());

std::optional<SpaceMap> homeomorphic(const FiniteSpace& X, const FiniteSpace& Y);

}  // namespace hsober
