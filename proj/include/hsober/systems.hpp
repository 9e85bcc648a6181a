#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hsober/map.hpp"
#include "hsober/power.hpp"
#include "hsober/space.hpp"

namespace hsober {

enum class BaseSystem { S, C, Cw, D, Dw, R, Rw };
enum class Derivation { d, R, D };

/// A subset system: one of the seven base tags, optionally derived once
/// (H^d, H^R, H^D). The omega tags keep their own names but agree with
/// their base on finite carriers.
struct SubsetSystemId {
    BaseSystem base = BaseSystem::D;
    std::optional<Derivation> derived;

    /// Accepts "S", "C", "Cw", "D", "Dw", "R", "Rw" and "X^d", "X^R", "X^D".
    /// A second derivation raises UnsupportedDepth.
    static SubsetSystemId parse(const std::string& text);
    std::string name() const;
    bool is_derived() const { return derived.has_value(); }

    friend bool operator==(const SubsetSystemId& a, const SubsetSystemId& b) {
        return a.base == b.base && a.derived == b.derived;
    }
};

/// The seven base tags in hierarchy order S, Cw, C, Dw, D, Rw, R.
const std::vector<SubsetSystemId>& base_systems();
/// Every base tag followed by its three derivations.
const std::vector<SubsetSystemId>& all_systems();

bool h_member(const SubsetSystemId& H, const FiniteSpace& X, const PointSet& a);
bool h_member_bits(const SubsetSystemId& H, const FiniteSpace& X, const Bits& a);

/// Closures of H-sets, H_c(X), sorted by (size, lex). For a closed C the
/// maximal points generate the same closure and lie in H whenever some
/// generator does; on antichains every tag is inherited by nonempty subsets,
/// so a pruned antichain walk enumerates H_c exactly.
std::vector<Bits> h_closed_sets(const SubsetSystemId& H, const FiniteSpace& X);
/// The same family from a scan over every nonempty subset (cross-oracle).
std::vector<Bits> h_closed_sets_bruteforce(const SubsetSystemId& H, const FiniteSpace& X,
                                           const Caps& caps = default_caps());
/// Every H-set of X by a scan over all nonempty subsets.
std::vector<Bits> h_sets_bruteforce(const SubsetSystemId& H, const FiniteSpace& X,
                                    const Caps& caps = default_caps());

/// H-sets of a poset, exhaustively when their number is within `budget`,
/// otherwise every singleton and pair plus a seeded sample. `exhaustive`
/// reports which case applied.
struct HSetSample {
    std::vector<Bits> sets;
    bool exhaustive = true;
};
HSetSample h_sets_sample(const SubsetSystemId& H, const FiniteSpace& P, std::size_t budget, std::uint64_t seed);

/// Membership of a family of compact saturated sets in H(P_S(X)). Each tag
/// depends only on the order the family inherits from the Smyth space
/// (directedness and chains are intrinsic; an irreducible subset of a finite
/// poset contains the top of its closure), so the test runs on that induced
/// subposet without building P_S(X).
bool h_family_member(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<CompactSat>& family,
                     const Caps& caps = default_caps());
bool h_family_member_bits(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<Bits>& family);
bool h_family_member(const SubsetSystemId& H, const SmythSpace& PX, const Bits& family);

bool meets_all(const FiniteSpace& X, const std::vector<CompactSat>& family, const ClosedSet& c);
bool meets_all_bits(const std::vector<Bits>& family, const Bits& c);
/// Minimal members of M(family), exhaustive over closed sets.
std::vector<ClosedSet> m_family(const FiniteSpace& X, const std::vector<CompactSat>& family,
                                const Caps& caps = default_caps());
/// Greedy descent from c, removing maximal points in index order.
ClosedSet rudin_minimal(const FiniteSpace& X, const std::vector<CompactSat>& family, const ClosedSet& c);
Bits rudin_minimal_bits(const FiniteSpace& X, const std::vector<Bits>& family, Bits c);
/// A closed member of M(family) is minimal iff dropping any one maximal point
/// leaves M (every proper closed subset sits inside such a drop).
bool is_minimal_in_m(const FiniteSpace& X, const std::vector<Bits>& family, const Bits& c);

struct RudinWitness {
    std::vector<CompactSat> family;
    ClosedSet minimal_set;
};
/// For A in the derived system: an H-admissible family whose m-set contains cl A.
std::optional<RudinWitness> witness_for(const SubsetSystemId& H, const FiniteSpace& X, const PointSet& a,
                                        const Caps& caps = default_caps());
bool check_witness(const SubsetSystemId& H, const FiniteSpace& X, const RudinWitness& w,
                   const Caps& caps = default_caps());

bool property_m_instance(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<CompactSat>& family,
                         const ClosedSet& a, const Caps& caps = default_caps());

struct QOutcome {
    bool holds = false;
    std::optional<Bits> generator;  ///< an H-set whose closure is the witness
    std::optional<Bits> closed;     ///< the closed H-set inside A meeting every member
};
QOutcome property_q_outcome(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<CompactSat>& family,
                            const ClosedSet& a, const Caps& caps = default_caps());
bool property_q_instance(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<CompactSat>& family,
                         const ClosedSet& a, const Caps& caps = default_caps());

/// Supremum of a in X, when it exists.
std::optional<std::size_t> supremum(const FiniteSpace& X, const Bits& a);
bool scott_h_open(const SubsetSystemId& H, const FiniteSpace& X, const PointSet& u, const Caps& caps = default_caps());
bool scott_h_continuous(const SubsetSystemId& H, const SpaceMap& f, const Caps& caps = default_caps());

/// A property M / Q instance: a space, an admissible family and a closed set
/// meeting every member.
struct RudinInstance {
    FiniteSpace space;
    std::vector<Bits> family;
    Bits closed;
    nlohmann::json to_json() const;
};

struct HarnessReport {
    std::string property;
    std::string system;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::optional<RudinInstance> counterexample;  ///< minimized
    nlohmann::json to_json() const;
};

/// Random admissible instance for H with at most max_points points.
RudinInstance random_rudin_instance(const SubsetSystemId& H, std::mt19937_64& rng, std::size_t max_points,
                                    const Caps& caps = default_caps());
/// Shrinks a failing instance by dropping points and family members while
/// it stays admissible and failing.
RudinInstance minimize_instance(const SubsetSystemId& H, RudinInstance inst,
                                const std::function<bool(const RudinInstance&)>& fails,
                                const Caps& caps = default_caps());
HarnessReport property_m_harness(const SubsetSystemId& H, std::uint64_t seed, std::size_t count,
                                 std::size_t max_points, const Caps& caps = default_caps());
HarnessReport property_q_harness(const SubsetSystemId& H, std::uint64_t seed, std::size_t count,
                                 std::size_t max_points, const Caps& caps = default_caps());

}  // namespace hsober
