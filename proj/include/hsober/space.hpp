#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsober/bits.hpp"
#include "hsober/caps.hpp"
#include "hsober/error.hpp"

namespace hsober {

/// A finite T0 space, held as its specialization poset. The topology is the
/// family of all up-sets; upper, Scott and Alexandroff topologies coincide
/// on a finite carrier, so no other representation is kept.
///
/// Values are immutable and cheap to copy (shared storage). Every space built
/// by a factory gets a fresh id; copies share it.
class FiniteSpace {
public:
    FiniteSpace();

    /// `up[i]` lists every j with i <= j. Fails with NotT0 when the relation
    /// is not antisymmetric; reflexivity and transitivity are checked too.
    static FiniteSpace from_order(std::vector<std::string> labels, std::vector<Bits> up);
    /// Reflexive-transitive closure of the declared pairs (a, b) meaning a <= b.
    static FiniteSpace from_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
    /// Validates the family as a topology equal to the up-sets of its
    /// specialization order.
    static FiniteSpace from_opens(std::vector<std::string> labels, const std::vector<Bits>& opens);

    std::uint64_t id() const { return p_->id; }
    std::size_t size() const { return p_->labels.size(); }
    const std::string& label(std::size_t i) const { return p_->labels[i]; }
    const std::vector<std::string>& labels() const { return p_->labels; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    bool leq(std::size_t i, std::size_t j) const { return p_->up[i].test(j); }
    const Bits& up(std::size_t i) const { return p_->up[i]; }
    const Bits& down(std::size_t i) const { return p_->down[i]; }

    Bits none() const { return Bits(size()); }
    Bits all() const { return Bits::full(size()); }
    Bits single(std::size_t i) const { return Bits::single(size(), i); }

    Bits up_of(const Bits& a) const;
    Bits down_of(const Bits& a) const;
    Bits upper_bounds(const Bits& a) const;
    Bits lower_bounds(const Bits& a) const;
    Bits maximal(const Bits& a) const;
    Bits minimal(const Bits& a) const;
    bool is_down_set(const Bits& a) const;
    bool is_up_set(const Bits& a) const;
    bool is_chain(const Bits& a) const;
    bool is_antichain(const Bits& a) const;
    /// Greatest element of a, if any.
    std::optional<std::size_t> greatest(const Bits& a) const;
    std::optional<std::size_t> least(const Bits& a) const;

    /// Hasse covers (a, b): a < b with nothing strictly between, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    /// Subspace on a nonempty subset, keeping labels and relative order.
    FiniteSpace subspace(const Bits& keep) const;
    /// Same order, new labels (must be unique).
    FiniteSpace relabeled(std::vector<std::string> labels) const;

    /// True when both spaces have identical labels and order.
    bool same_as(const FiniteSpace& o) const;

private:
    struct Impl {
        std::uint64_t id = 0;
        std::vector<std::string> labels;
        std::vector<Bits> up;
        std::vector<Bits> down;
    };
    explicit FiniteSpace(std::shared_ptr<const Impl> p) : p_(std::move(p)) {}
    std::shared_ptr<const Impl> p_;
};

/// A subset of a particular space's carrier.
struct PointSet {
    std::uint64_t space_id = 0;
    Bits bits;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.space_id == b.space_id && a.bits == b.bits;
    }
};

/// A down-set (closed set).
struct ClosedSet : PointSet {};

/// A nonempty up-set (compact saturated set). `smyth_leq` is the Smyth
/// preorder: a is below b iff b is contained in a.
struct CompactSat : PointSet {};

bool smyth_leq(const CompactSat& a, const CompactSat& b);

PointSet make_set(const FiniteSpace& X, const Bits& bits);
PointSet make_set(const FiniteSpace& X, const std::vector<std::string>& labels);
ClosedSet as_closed(const FiniteSpace& X, const PointSet& a);
CompactSat as_compact(const FiniteSpace& X, const PointSet& a);
ClosedSet point_closure(const FiniteSpace& X, std::size_t x);
CompactSat principal_filter(const FiniteSpace& X, std::size_t x);
std::vector<std::string> set_labels(const FiniteSpace& X, const Bits& bits);
std::vector<std::string> set_labels_raw(const std::vector<std::string>& labels, const Bits& bits);

/// Space-description documents.
FiniteSpace parse_space(const nlohmann::json& doc);
FiniteSpace parse_space_text(const std::string& text);
nlohmann::json space_to_json(const FiniteSpace& X);

ClosedSet closure(const FiniteSpace& X, const PointSet& a);
PointSet saturation(const FiniteSpace& X, const PointSet& a);

enum class OrderOp { upper_bounds, lower_bounds, cut, maximals, minimals };
PointSet order_calculus(const FiniteSpace& X, const PointSet& a, OrderOp which);

bool is_directed(const FiniteSpace& X, const PointSet& a);
bool is_directed_bits(const FiniteSpace& X, const Bits& a);
/// A chain C inside the directed set D with the same closure.
PointSet chain_core(const FiniteSpace& X, const PointSet& d);

/// Irreducibility through the finite criterion: the closure has a greatest element.
bool is_irreducible(const FiniteSpace& X, const PointSet& a);
bool is_irreducible_bits(const FiniteSpace& X, const Bits& a);
/// Irreducibility by scanning all pairs of closed sets (cross-oracle).
bool is_irreducible_definitional(const FiniteSpace& X, const Bits& a, const Caps& caps = default_caps());

enum class Family { irr_closed, compact_saturated, closed, open, point_closures };
std::vector<PointSet> enumerate_families(const FiniteSpace& X, Family which, const Caps& caps = default_caps());

PointSet minimal_points(const FiniteSpace& X, const CompactSat& k);
ClosedSet down_meet_closed(const FiniteSpace& X, const CompactSat& k, const ClosedSet& a);

/// Depth-first walk over antichains, each extended only by larger indices.
/// `keep` decides whether a candidate is accepted (and explored further);
/// when `keep` is closed under nonempty sub-antichains this visits exactly
/// the antichains satisfying it. The empty antichain is not visited.
void for_each_antichain(const FiniteSpace& X, const std::function<bool(const Bits&)>& keep,
                        const std::function<void(const Bits&)>& visit);

/// Raw family enumerations, sorted lexicographically by index set.
std::vector<Bits> down_sets(const FiniteSpace& X, std::size_t limit);
std::vector<Bits> up_sets(const FiniteSpace& X, std::size_t limit);
std::vector<Bits> closed_sets(const FiniteSpace& X, const Caps& caps = default_caps());
std::vector<Bits> open_sets(const FiniteSpace& X, const Caps& caps = default_caps());
/// Nonempty up-sets, sorted by (size, lex).
std::vector<Bits> compact_saturated_sets(const FiniteSpace& X, std::size_t limit);

void require_same_space(const FiniteSpace& X, const PointSet& a);

/// Named spaces used across tests, docs and the CLI.
namespace spaces {
FiniteSpace one_point();
FiniteSpace sierpinski();              ///< a < b
FiniteSpace chain(std::size_t n);      ///< labels a, b, c, ... (or x0.. beyond 26)
FiniteSpace antichain(std::size_t n);
FiniteSpace diamond();                 ///< bot < a, b < top
std::optional<FiniteSpace> by_name(const std::string& name);
}  // namespace spaces

}  // namespace hsober
