#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hsober/space.hpp"

namespace hsober {

// ---- Johnstone's dcpo on N x (N + {inf}), N = {1, 2, ...} ----

struct JPoint {
    std::uint64_t j = 1;
    std::optional<std::uint64_t> k;  ///< nullopt is infinity
    friend bool operator==(const JPoint&, const JPoint&) = default;
};

/// (j,k) <= (m,n) iff j = m and k <= n, or n is infinite and k <= m.
bool johnstone_leq(const JPoint& p, const JPoint& q);
/// Points (j,k) with j <= J and k <= K or k infinite, labeled "(j,k)" and
/// "(j,inf)". Both bounds must be at least 1.
FiniteSpace johnstone_truncate(std::uint64_t J, std::uint64_t K);
std::string jpoint_label(const JPoint& p);
nlohmann::json jpoint_to_json(const JPoint& p);
JPoint jpoint_from_json(const nlohmann::json& j);

// ---- finite / cofinite subsets of N ----

class NatSet {
public:
    static NatSet finite(std::set<std::uint64_t> xs) { return NatSet(false, std::move(xs)); }
    static NatSet cofinite(std::set<std::uint64_t> missing) { return NatSet(true, std::move(missing)); }
    static NatSet from_json(const nlohmann::json& j);

    bool is_cofinite() const { return cofinite_; }
    const std::set<std::uint64_t>& list() const { return list_; }
    bool contains(std::uint64_t n) const { return cofinite_ != (list_.count(n) > 0); }
    bool empty() const { return !cofinite_ && list_.empty(); }
    bool is_all() const { return cofinite_ && list_.empty(); }
    /// Closed sets of the cofinite topology: finite sets and the whole carrier.
    bool is_closed() const { return !cofinite_ || list_.empty(); }
    bool is_open() const { return cofinite_ || list_.empty(); }

    NatSet complement() const { return NatSet(!cofinite_, list_); }
    NatSet unite(const NatSet& o) const;
    NatSet intersect(const NatSet& o) const;
    NatSet minus(const NatSet& o) const { return intersect(o.complement()); }
    bool subset_of(const NatSet& o) const { return minus(o).empty(); }

    nlohmann::json to_json() const;
    friend bool operator==(const NatSet&, const NatSet&) = default;

private:
    NatSet(bool co, std::set<std::uint64_t> l) : cofinite_(co), list_(std::move(l)) {}
    bool cofinite_ = false;
    std::set<std::uint64_t> list_;
};

// ---- finite / cocountable subsets of an uncountable carrier ----

/// Points are opaque tokens. A countable set is a finite token list plus an
/// optional tail {name_i : i >= start, i not in holes} of a named sequence.
struct CountablePart {
    std::set<std::string> tokens;
    struct Tail {
        std::string name;
        std::uint64_t start = 0;
        std::set<std::uint64_t> holes;
        friend bool operator==(const Tail&, const Tail&) = default;
    };
    std::optional<Tail> tail;
    bool contains(const std::string& t) const;
    bool finite() const { return !tail.has_value(); }
    friend bool operator==(const CountablePart&, const CountablePart&) = default;
};

/// A finite set, or a cocountable set given by its countable complement.
/// Results outside these two classes raise Unrepresentable.
class CoSet {
public:
    static CoSet finite(std::set<std::string> tokens);
    static CoSet cocountable(CountablePart except);
    static CoSet from_json(const nlohmann::json& j);

    bool is_finite() const { return !co_; }
    bool contains(const std::string& t) const { return co_ ? !part_.contains(t) : part_.contains(t); }
    bool empty() const { return !co_ && part_.tokens.empty(); }
    /// Closed sets of the cocountable topology: countable sets and the carrier.
    bool is_closed() const { return !co_ || (part_.tokens.empty() && !part_.tail); }
    bool is_open() const { return co_ || part_.tokens.empty(); }

    CoSet complement() const;
    CoSet unite(const CoSet& o) const;
    CoSet intersect(const CoSet& o) const;
    CoSet minus(const CoSet& o) const { return intersect(o.complement()); }
    bool subset_of(const CoSet& o) const;

    nlohmann::json to_json() const;
    friend bool operator==(const CoSet&, const CoSet&) = default;

private:
    CoSet(bool co, CountablePart p);
    bool co_ = false;
    CountablePart part_;
};

// ---- certificates ----

enum class CertVerdict { verified, refuted, checked_to_depth };
const char* to_string(CertVerdict v);

/// Outcome of a registered claim. The transcript is a list of facts, each a
/// JSON object with a "fact" kind, its arguments and the recorded "value";
/// revalidate() re-evaluates every one of them.
struct CertificateReport {
    std::string space;
    std::string claim;
    CertVerdict verdict = CertVerdict::verified;
    std::size_t depth = 0;
    std::string summary;
    nlohmann::json transcript = nlohmann::json::array();
    nlohmann::json to_json() const;
};

const std::vector<std::string>& zoo_spaces();
/// Registered (space, claim) pairs in listing order.
const std::vector<std::pair<std::string, std::string>>& zoo_claims();

/// Throws UnknownClaim for unregistered pairs.
CertificateReport verify_claim(const std::string& space, const std::string& claim);
/// Re-evaluates one fact; returns its value.
nlohmann::json evaluate_fact(const std::string& space, const nlohmann::json& fact);
/// Every fact of the transcript evaluates to its recorded value.
bool revalidate(const CertificateReport& report);

}  // namespace hsober
