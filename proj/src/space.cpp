#include "hsober/space.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace hsober {

using nlohmann::json;

namespace {

std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter++;
}

void check_labels(const std::vector<std::string>& labels) {
    if (labels.empty()) throw Error(ErrorKind::EmptySpace, "a space needs at least one point");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second)
            throw Error(ErrorKind::DuplicateLabel, "duplicate point label '" + l + "'", {{"label", l}});
}

}  // namespace

FiniteSpace::FiniteSpace() : FiniteSpace(spaces::one_point()) {}

FiniteSpace FiniteSpace::from_order(std::vector<std::string> labels, std::vector<Bits> up) {
    check_labels(labels);
    const std::size_t n = labels.size();
    if (up.size() != n) throw Error(ErrorKind::InvariantViolation, "order matrix has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (up[i].size() != n) throw Error(ErrorKind::InvariantViolation, "order row has wrong size");
        if (!up[i].test(i)) throw Error(ErrorKind::InvariantViolation, "order is not reflexive");
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool bad = false;
        up[i].for_each([&](std::size_t j) {
            if (bad || j == i) return;
            if (up[j].test(i))
                throw Error(ErrorKind::NotT0, "points '" + labels[i] + "' and '" + labels[j] + "' share a closure",
                            {{"points", {labels[i], labels[j]}}});
            if (!up[j].subset_of(up[i])) bad = true;
        });
        if (bad) throw Error(ErrorKind::InvariantViolation, "order is not transitive");
    }
    auto impl = std::make_shared<Impl>();
    impl->id = next_id();
    impl->labels = std::move(labels);
    impl->down.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) up[i].for_each([&](std::size_t j) { impl->down[j].set(i); });
    impl->up = std::move(up);
    return FiniteSpace(std::move(impl));
}

FiniteSpace FiniteSpace::from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    check_labels(labels);
    const std::size_t n = labels.size();
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) throw Error(ErrorKind::ParseError, "cover refers to an unknown point");
        up[a].set(b);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (up[i].test(k)) up[i] |= up[k];
    return from_order(std::move(labels), std::move(up));
}

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> labels, const std::vector<Bits>& opens_in) {
    check_labels(labels);
    const std::size_t n = labels.size();
    std::unordered_set<Bits, BitsHash> fam;
    std::vector<Bits> opens;
    for (const auto& o : opens_in) {
        if (o.size() != n) throw Error(ErrorKind::ParseError, "open set over the wrong carrier");
        if (fam.insert(o).second) opens.push_back(o);
    }
    const Bits empty(n), full = Bits::full(n);
    if (!fam.count(empty)) throw Error(ErrorKind::NotATopology, "the empty set is missing");
    if (!fam.count(full)) throw Error(ErrorKind::NotATopology, "the whole carrier is missing");
    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (!fam.count(opens[i] | opens[j]))
                throw Error(ErrorKind::NotATopology, "family is not closed under unions",
                            {{"pair", {set_labels_raw(labels, opens[i]), set_labels_raw(labels, opens[j])}}});
            if (!fam.count(opens[i] & opens[j]))
                throw Error(ErrorKind::NotATopology, "family is not closed under intersections",
                            {{"pair", {set_labels_raw(labels, opens[i]), set_labels_raw(labels, opens[j])}}});
        }
    // x <= y iff every open containing x contains y.
    std::vector<Bits> up(n, full);
    for (const auto& o : opens) o.for_each([&](std::size_t x) { up[x] &= o; });
    auto space = from_order(labels, up);
    for (std::size_t x = 0; x < n; ++x)
        if (!fam.count(space.up(x)))
            throw Error(ErrorKind::NotAlexandroffConsistent,
                        "principal up-set of '" + labels[x] + "' is not open");
    for (const auto& o : opens)
        if (!space.is_up_set(o))
            throw Error(ErrorKind::NotAlexandroffConsistent, "an open set is not an up-set");
    return space;
}

std::vector<std::string> set_labels_raw(const std::vector<std::string>& labels, const Bits& b) {
    std::vector<std::string> out;
    b.for_each([&](std::size_t i) { out.push_back(labels[i]); });
    return out;
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (p_->labels[i] == label) return i;
    return std::nullopt;
}

Bits FiniteSpace::up_of(const Bits& a) const {
    Bits r(size());
    a.for_each([&](std::size_t i) { r |= p_->up[i]; });
    return r;
}

Bits FiniteSpace::down_of(const Bits& a) const {
    Bits r(size());
    a.for_each([&](std::size_t i) { r |= p_->down[i]; });
    return r;
}

Bits FiniteSpace::upper_bounds(const Bits& a) const {
    Bits r = all();
    a.for_each([&](std::size_t i) { r &= p_->up[i]; });
    return r;
}

Bits FiniteSpace::lower_bounds(const Bits& a) const {
    Bits r = all();
    a.for_each([&](std::size_t i) { r &= p_->down[i]; });
    return r;
}

Bits FiniteSpace::maximal(const Bits& a) const {
    Bits r(size());
    a.for_each([&](std::size_t i) {
        Bits above = p_->up[i] & a;
        above.reset(i);
        if (above.none()) r.set(i);
    });
    return r;
}

Bits FiniteSpace::minimal(const Bits& a) const {
    Bits r(size());
    a.for_each([&](std::size_t i) {
        Bits below = p_->down[i] & a;
        below.reset(i);
        if (below.none()) r.set(i);
    });
    return r;
}

bool FiniteSpace::is_down_set(const Bits& a) const {
    bool ok = true;
    a.for_each([&](std::size_t i) { ok = ok && p_->down[i].subset_of(a); });
    return ok;
}

bool FiniteSpace::is_up_set(const Bits& a) const {
    bool ok = true;
    a.for_each([&](std::size_t i) { ok = ok && p_->up[i].subset_of(a); });
    return ok;
}

bool FiniteSpace::is_chain(const Bits& a) const {
    bool ok = true;
    a.for_each([&](std::size_t i) {
        if (ok && !a.subset_of(p_->up[i] | p_->down[i])) ok = false;
    });
    return ok;
}

bool FiniteSpace::is_antichain(const Bits& a) const {
    bool ok = true;
    a.for_each([&](std::size_t i) {
        Bits cmp = (p_->up[i] | p_->down[i]) & a;
        if (cmp.count() != 1) ok = false;
    });
    return ok;
}

std::optional<std::size_t> FiniteSpace::greatest(const Bits& a) const {
    std::optional<std::size_t> g;
    a.for_each([&](std::size_t i) {
        if (!g && a.subset_of(p_->down[i])) g = i;
    });
    return g;
}

std::optional<std::size_t> FiniteSpace::least(const Bits& a) const {
    std::optional<std::size_t> g;
    a.for_each([&](std::size_t i) {
        if (!g && a.subset_of(p_->up[i])) g = i;
    });
    return g;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteSpace::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
        p_->up[a].for_each([&](std::size_t b) {
            if (b == a) return;
            Bits between = p_->up[a] & p_->down[b];
            if (between.count() == 2) out.emplace_back(a, b);
        });
    return out;
}

FiniteSpace FiniteSpace::subspace(const Bits& keep) const {
    if (keep.none()) throw Error(ErrorKind::EmptySpace, "subspace on the empty set");
    auto idx = keep.indices();
    const std::size_t m = idx.size();
    std::vector<std::string> labels;
    std::vector<Bits> up(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(label(idx[i]));
        for (std::size_t j = 0; j < m; ++j)
            if (leq(idx[i], idx[j])) up[i].set(j);
    }
    return from_order(std::move(labels), std::move(up));
}

FiniteSpace FiniteSpace::relabeled(std::vector<std::string> labels) const {
    if (labels.size() != size()) throw Error(ErrorKind::InvariantViolation, "relabeling has wrong size");
    return from_order(std::move(labels), p_->up);
}

bool FiniteSpace::same_as(const FiniteSpace& o) const {
    return p_->labels == o.p_->labels && p_->up == o.p_->up;
}

bool smyth_leq(const CompactSat& a, const CompactSat& b) {
    if (a.space_id != b.space_id) throw Error(ErrorKind::SpaceMismatch, "compact sets from different spaces");
    return b.bits.subset_of(a.bits);
}

void require_same_space(const FiniteSpace& X, const PointSet& a) {
    if (a.space_id != X.id() || a.bits.size() != X.size())
        throw Error(ErrorKind::SpaceMismatch, "set does not belong to this space");
}

PointSet make_set(const FiniteSpace& X, const Bits& bits) {
    if (bits.size() != X.size()) throw Error(ErrorKind::SpaceMismatch, "set over the wrong carrier");
    return PointSet{X.id(), bits};
}

PointSet make_set(const FiniteSpace& X, const std::vector<std::string>& labels) {
    Bits b(X.size());
    for (const auto& l : labels) {
        auto i = X.index_of(l);
        if (!i) throw Error(ErrorKind::ParseError, "unknown point '" + l + "'", {{"label", l}});
        b.set(*i);
    }
    return PointSet{X.id(), b};
}

ClosedSet as_closed(const FiniteSpace& X, const PointSet& a) {
    require_same_space(X, a);
    if (!X.is_down_set(a.bits)) throw Error(ErrorKind::PreconditionViolated, "set is not closed");
    return ClosedSet{a};
}

CompactSat as_compact(const FiniteSpace& X, const PointSet& a) {
    require_same_space(X, a);
    if (a.bits.none() || !X.is_up_set(a.bits))
        throw Error(ErrorKind::PreconditionViolated, "set is not a nonempty up-set");
    return CompactSat{a};
}

ClosedSet point_closure(const FiniteSpace& X, std::size_t x) { return ClosedSet{{X.id(), X.down(x)}}; }
CompactSat principal_filter(const FiniteSpace& X, std::size_t x) { return CompactSat{{X.id(), X.up(x)}}; }

std::vector<std::string> set_labels(const FiniteSpace& X, const Bits& bits) {
    return set_labels_raw(X.labels(), bits);
}

FiniteSpace parse_space(const json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "space document must be an object");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw Error(ErrorKind::ParseError, "space document needs a 'points' array");
    std::vector<std::string> labels;
    for (const auto& p : doc["points"]) {
        if (p.is_string()) labels.push_back(p.get<std::string>());
        else if (p.is_number_integer()) labels.push_back(std::to_string(p.get<long long>()));
        else throw Error(ErrorKind::ParseError, "point labels must be strings or integers");
    }
    check_labels(labels);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    auto lookup = [&](const json& v) -> std::size_t {
        std::string s = v.is_string() ? v.get<std::string>()
                      : v.is_number_integer() ? std::to_string(v.get<long long>())
                      : throw Error(ErrorKind::ParseError, "point reference must be a label");
        auto it = index.find(s);
        if (it == index.end()) throw Error(ErrorKind::ParseError, "unknown point '" + s + "'", {{"label", s}});
        return it->second;
    };
    const bool has_opens = doc.contains("opens"), has_covers = doc.contains("covers");
    if (has_opens && has_covers) throw Error(ErrorKind::ParseError, "give either 'covers' or 'opens', not both");
    if (has_opens) {
        if (!doc["opens"].is_array()) throw Error(ErrorKind::ParseError, "'opens' must be an array");
        std::vector<Bits> opens;
        for (const auto& o : doc["opens"]) {
            if (!o.is_array()) throw Error(ErrorKind::ParseError, "each open set must be an array");
            Bits b(labels.size());
            for (const auto& p : o) b.set(lookup(p));
            opens.push_back(b);
        }
        return FiniteSpace::from_opens(std::move(labels), opens);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (has_covers) {
        if (!doc["covers"].is_array()) throw Error(ErrorKind::ParseError, "'covers' must be an array");
        for (const auto& c : doc["covers"]) {
            if (!c.is_array() || c.size() != 2) throw Error(ErrorKind::ParseError, "each cover must be a pair");
            pairs.emplace_back(lookup(c[0]), lookup(c[1]));
        }
    }
    return FiniteSpace::from_covers(std::move(labels), pairs);
}

FiniteSpace parse_space_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
    }
    return parse_space(doc);
}

json space_to_json(const FiniteSpace& X) {
    json j;
    j["points"] = X.labels();
    j["covers"] = json::array();
    for (auto [a, b] : X.covers()) j["covers"].push_back({X.label(a), X.label(b)});
    return j;
}

ClosedSet closure(const FiniteSpace& X, const PointSet& a) {
    require_same_space(X, a);
    return ClosedSet{{X.id(), X.down_of(a.bits)}};
}

PointSet saturation(const FiniteSpace& X, const PointSet& a) {
    require_same_space(X, a);
    return PointSet{X.id(), X.up_of(a.bits)};
}

PointSet order_calculus(const FiniteSpace& X, const PointSet& a, OrderOp which) {
    require_same_space(X, a);
    switch (which) {
        case OrderOp::upper_bounds: return {X.id(), X.upper_bounds(a.bits)};
        case OrderOp::lower_bounds: return {X.id(), X.lower_bounds(a.bits)};
        case OrderOp::cut: {
            Bits cut = X.lower_bounds(X.upper_bounds(a.bits));
            Bits via_closure = X.lower_bounds(X.upper_bounds(X.down_of(a.bits)));
            ensure(cut == via_closure, "cut differs from the cut of the closure");
            return {X.id(), cut};
        }
        case OrderOp::maximals: return {X.id(), X.maximal(a.bits)};
        case OrderOp::minimals: return {X.id(), X.minimal(a.bits)};
    }
    return {};
}

bool is_directed_bits(const FiniteSpace& X, const Bits& a) {
    if (a.none()) return false;
    bool ok = true;
    a.for_each([&](std::size_t i) {
        if (!ok) return;
        a.for_each([&](std::size_t j) {
            if (ok && j > i && !(a & X.up(i) & X.up(j)).any()) ok = false;
        });
    });
    return ok;
}

bool is_directed(const FiniteSpace& X, const PointSet& a) {
    require_same_space(X, a);
    return is_directed_bits(X, a.bits);
}

PointSet chain_core(const FiniteSpace& X, const PointSet& d) {
    require_same_space(X, d);
    if (d.bits.none()) throw Error(ErrorKind::EmptySet, "chain_core of the empty set");
    if (!is_directed_bits(X, d.bits)) throw Error(ErrorKind::NotDirected, "set is not directed");
    auto g = X.greatest(d.bits);
    ensure(g.has_value(), "finite directed set without a greatest element");
    Bits c = X.single(*g);
    ensure(X.down_of(c) == X.down_of(d.bits), "chain core changes the closure");
    return {X.id(), c};
}

bool is_irreducible_bits(const FiniteSpace& X, const Bits& a) {
    if (a.none()) throw Error(ErrorKind::EmptySet, "irreducibility of the empty set");
    // A top of the closure lies below some member and above it, so it is a
    // member itself; only members need testing.
    Bits cl = X.down_of(a);
    for (std::size_t i = a.first(); i < a.size(); i = a.next(i))
        if (cl.subset_of(X.down(i))) return true;
    return false;
}

bool is_irreducible(const FiniteSpace& X, const PointSet& a) {
    require_same_space(X, a);
    return is_irreducible_bits(X, a.bits);
}

bool is_irreducible_definitional(const FiniteSpace& X, const Bits& a, const Caps& caps) {
    if (a.none()) throw Error(ErrorKind::EmptySet, "irreducibility of the empty set");
    auto closed = closed_sets(X, caps);
    for (std::size_t i = 0; i < closed.size(); ++i) {
        if (a.subset_of(closed[i])) continue;
        for (std::size_t j = i + 1; j < closed.size(); ++j) {
            if (a.subset_of(closed[j])) continue;
            if (a.subset_of(closed[i] | closed[j])) return false;
        }
    }
    return true;
}

namespace {

void antichain_rec(const FiniteSpace& X, Bits& m, const Bits& blocked, std::size_t start,
                   const std::function<bool(const Bits&)>& keep, const std::function<void(const Bits&)>& visit) {
    for (std::size_t i = start; i < X.size(); ++i) {
        if (blocked.test(i)) continue;
        m.set(i);
        if (keep(m)) {
            visit(m);
            Bits nb = blocked | X.up(i) | X.down(i);
            antichain_rec(X, m, nb, i + 1, keep, visit);
        }
        m.reset(i);
    }
}

void sort_size_lex(std::vector<Bits>& v) { std::sort(v.begin(), v.end(), Bits::size_lex_less); }

}  // namespace

void for_each_antichain(const FiniteSpace& X, const std::function<bool(const Bits&)>& keep,
                        const std::function<void(const Bits&)>& visit) {
    Bits m(X.size());
    antichain_rec(X, m, Bits(X.size()), 0, keep, visit);
}

std::vector<Bits> down_sets(const FiniteSpace& X, std::size_t limit) {
    std::vector<Bits> out{X.none()};
    for_each_antichain(
        X, [](const Bits&) { return true; },
        [&](const Bits& m) {
            out.push_back(X.down_of(m));
            check_cap(out.size(), limit, "down_sets");
        });
    sort_size_lex(out);
    return out;
}

std::vector<Bits> up_sets(const FiniteSpace& X, std::size_t limit) {
    std::vector<Bits> out{X.none()};
    for_each_antichain(
        X, [](const Bits&) { return true; },
        [&](const Bits& m) {
            out.push_back(X.up_of(m));
            check_cap(out.size(), limit, "up_sets");
        });
    sort_size_lex(out);
    return out;
}

std::vector<Bits> closed_sets(const FiniteSpace& X, const Caps& caps) {
    check_cap(X.size(), caps.family_points, "family_points");
    return down_sets(X, std::numeric_limits<std::size_t>::max());
}

std::vector<Bits> open_sets(const FiniteSpace& X, const Caps& caps) {
    check_cap(X.size(), caps.family_points, "family_points");
    return up_sets(X, std::numeric_limits<std::size_t>::max());
}

std::vector<Bits> compact_saturated_sets(const FiniteSpace& X, std::size_t limit) {
    std::vector<Bits> out;
    for_each_antichain(
        X, [](const Bits&) { return true; },
        [&](const Bits& m) {
            out.push_back(X.up_of(m));
            check_cap(out.size(), limit, "compact_saturated");
        });
    sort_size_lex(out);
    return out;
}

std::vector<PointSet> enumerate_families(const FiniteSpace& X, Family which, const Caps& caps) {
    std::vector<Bits> raw;
    switch (which) {
        case Family::point_closures:
            for (std::size_t x = 0; x < X.size(); ++x) raw.push_back(X.down(x));
            sort_size_lex(raw);
            break;
        case Family::irr_closed: {
            for (std::size_t x = 0; x < X.size(); ++x) raw.push_back(X.down(x));
            sort_size_lex(raw);
            if (X.size() <= caps.family_points) {
                std::vector<Bits> definitional;
                for (const auto& c : closed_sets(X, caps))
                    if (c.any() && is_irreducible_definitional(X, c, caps)) definitional.push_back(c);
                ensure(definitional == raw, "irreducible closed sets differ from point closures");
            }
            break;
        }
        case Family::compact_saturated:
            raw = compact_saturated_sets(X, std::numeric_limits<std::size_t>::max());
            break;
        case Family::closed: raw = closed_sets(X, caps); break;
        case Family::open: raw = open_sets(X, caps); break;
    }
    std::vector<PointSet> out;
    out.reserve(raw.size());
    for (auto& b : raw) out.push_back(PointSet{X.id(), std::move(b)});
    return out;
}

PointSet minimal_points(const FiniteSpace& X, const CompactSat& k) {
    require_same_space(X, k);
    Bits m = X.minimal(k.bits);
    ensure(X.up_of(m) == k.bits, "compact set is not the up-set of its minimal points");
    return {X.id(), m};
}

ClosedSet down_meet_closed(const FiniteSpace& X, const CompactSat& k, const ClosedSet& a) {
    require_same_space(X, k);
    require_same_space(X, a);
    Bits r = X.down_of(k.bits & a.bits);
    Bits u(X.size());
    k.bits.for_each([&](std::size_t x) { u |= X.down_of(X.up(x) & a.bits); });
    ensure(r == u, "down-closure of K and A differs from the pointwise union");
    ensure(X.is_down_set(r), "down-closure is not a down-set");
    return ClosedSet{{X.id(), r}};
}

namespace spaces {

namespace {
std::string nth_label(std::size_t i, std::size_t n) {
    if (n <= 26) return std::string(1, static_cast<char>('a' + i));
    return "x" + std::to_string(i);
}
}  // namespace

FiniteSpace one_point() {
    static const FiniteSpace s = FiniteSpace::from_covers({"*"}, {});
    return s;
}

FiniteSpace sierpinski() { return chain(2); }

FiniteSpace chain(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(nth_label(i, n));
        if (i) pairs.emplace_back(i - 1, i);
    }
    return FiniteSpace::from_covers(labels, pairs);
}

FiniteSpace antichain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(nth_label(i, n));
    return FiniteSpace::from_covers(labels, {});
}

FiniteSpace diamond() {
    return FiniteSpace::from_covers({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

std::optional<FiniteSpace> by_name(const std::string& name) {
    if (name == "one_point" || name == "point") return one_point();
    if (name == "sierpinski") return sierpinski();
    if (name == "diamond") return diamond();
    auto numbered = [&](const std::string& prefix) -> std::optional<std::size_t> {
        if (name.rfind(prefix, 0) != 0) return std::nullopt;
        auto rest = name.substr(prefix.size());
        if (rest.empty() || rest.size() > 2 || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return std::nullopt;
        auto v = static_cast<std::size_t>(std::stoul(rest));
        if (v == 0) return std::nullopt;
        return v;
    };
    if (auto k = numbered("chain")) return chain(*k);
    if (auto k = numbered("antichain")) return antichain(*k);
    return std::nullopt;
}

}  // namespace spaces

}  // namespace hsober
