#include "hsober/zoo.hpp"

#include <algorithm>
#include <charconv>

#include "hsober/checkers.hpp"

namespace hsober {

using nlohmann::json;

// ---- Johnstone ----

bool johnstone_leq(const JPoint& p, const JPoint& q) {
    auto le = [](const std::optional<std::uint64_t>& a, const std::optional<std::uint64_t>& b) {
        return !b || (a && *a <= *b);
    };
    if (p.j == q.j && le(p.k, q.k)) return true;
    return !q.k && p.k && *p.k <= q.j;
}

std::string jpoint_label(const JPoint& p) {
    return "(" + std::to_string(p.j) + "," + (p.k ? std::to_string(*p.k) : std::string("inf")) + ")";
}

json jpoint_to_json(const JPoint& p) { return json::array({p.j, p.k ? json(*p.k) : json("inf")}); }

JPoint jpoint_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned())
        throw Error(ErrorKind::ParseError, "a Johnstone point is [j, k] with k a number or \"inf\"");
    JPoint p{j[0].get<std::uint64_t>(), std::nullopt};
    if (j[1].is_number_unsigned()) p.k = j[1].get<std::uint64_t>();
    else if (j[1] != "inf") throw Error(ErrorKind::ParseError, "bad second coordinate", {{"point", j}});
    if (p.j == 0 || (p.k && *p.k == 0)) throw Error(ErrorKind::ParseError, "coordinates start at 1", {{"point", j}});
    return p;
}

namespace {

std::vector<JPoint> truncation_points(std::uint64_t J, std::uint64_t K) {
    std::vector<JPoint> pts;
    for (std::uint64_t j = 1; j <= J; ++j) {
        for (std::uint64_t k = 1; k <= K; ++k) pts.push_back({j, k});
        pts.push_back({j, std::nullopt});
    }
    return pts;
}

}  // namespace

FiniteSpace johnstone_truncate(std::uint64_t J, std::uint64_t K) {
    if (J == 0 || K == 0) throw Error(ErrorKind::EmptySpace, "truncation bounds must be at least 1");
    auto pts = truncation_points(J, K);
    const std::size_t n = pts.size();
    std::vector<std::string> labels;
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(jpoint_label(pts[a]));
        for (std::size_t b = 0; b < n; ++b)
            if (johnstone_leq(pts[a], pts[b])) up[a].set(b);
    }
    return FiniteSpace::from_order(std::move(labels), std::move(up));
}

// ---- NatSet ----

NatSet NatSet::unite(const NatSet& o) const {
    std::set<std::uint64_t> r;
    if (!cofinite_ && !o.cofinite_) {
        std::set_union(list_.begin(), list_.end(), o.list_.begin(), o.list_.end(), std::inserter(r, r.end()));
        return finite(r);
    }
    if (cofinite_ && o.cofinite_) {
        std::set_intersection(list_.begin(), list_.end(), o.list_.begin(), o.list_.end(), std::inserter(r, r.end()));
        return cofinite(r);
    }
    const auto& co = cofinite_ ? *this : o;
    const auto& fi = cofinite_ ? o : *this;
    std::set_difference(co.list_.begin(), co.list_.end(), fi.list_.begin(), fi.list_.end(), std::inserter(r, r.end()));
    return cofinite(r);
}

NatSet NatSet::intersect(const NatSet& o) const { return complement().unite(o.complement()).complement(); }

json NatSet::to_json() const {
    return {{cofinite_ ? "cofinite" : "finite", std::vector<std::uint64_t>(list_.begin(), list_.end())}};
}

NatSet NatSet::from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw Error(ErrorKind::ParseError, "expected {finite:[...]} or {cofinite:[...]}");
    auto it = j.begin();
    auto xs = it.value().get<std::set<std::uint64_t>>();
    if (it.key() == "finite") return finite(std::move(xs));
    if (it.key() == "cofinite") return cofinite(std::move(xs));
    throw Error(ErrorKind::ParseError, "unknown set tag", {{"tag", it.key()}});
}

// ---- CoSet ----

namespace {

std::optional<std::uint64_t> tail_index(const std::string& name, const std::string& t) {
    if (t.size() <= name.size() || t.compare(0, name.size(), name) != 0) return std::nullopt;
    std::uint64_t i = 0;
    auto [p, ec] = std::from_chars(t.data() + name.size(), t.data() + t.size(), i);
    if (ec != std::errc() || p != t.data() + t.size()) return std::nullopt;
    return i;
}

bool in_tail(const CountablePart::Tail& tl, std::uint64_t i) { return i >= tl.start && !tl.holes.count(i); }

void normalize(CountablePart& c) {
    if (!c.tail) return;
    auto& tl = *c.tail;
    for (auto it = c.tokens.begin(); it != c.tokens.end();) {
        auto i = tail_index(tl.name, *it);
        if (i && *i >= tl.start) {
            tl.holes.erase(*i);
            it = c.tokens.erase(it);
        } else {
            ++it;
        }
    }
    while (tl.holes.count(tl.start)) tl.holes.erase(tl.start++);
    for (auto it = tl.holes.begin(); it != tl.holes.end();) it = *it < tl.start ? tl.holes.erase(it) : std::next(it);
}

CountablePart part_union(const CountablePart& a, const CountablePart& b) {
    CountablePart r;
    r.tokens = a.tokens;
    r.tokens.insert(b.tokens.begin(), b.tokens.end());
    if (a.tail && b.tail) {
        if (a.tail->name != b.tail->name)
            throw Error(ErrorKind::Unrepresentable, "union of two different tails",
                        {{"tails", {a.tail->name, b.tail->name}}});
        CountablePart::Tail t{a.tail->name, std::min(a.tail->start, b.tail->start), {}};
        std::uint64_t hi = std::max(a.tail->start, b.tail->start);
        for (auto h : a.tail->holes) hi = std::max(hi, h + 1);
        for (auto h : b.tail->holes) hi = std::max(hi, h + 1);
        for (std::uint64_t i = t.start; i < hi; ++i)
            if (!in_tail(*a.tail, i) && !in_tail(*b.tail, i)) t.holes.insert(i);
        r.tail = t;
    } else {
        r.tail = a.tail ? a.tail : b.tail;
    }
    normalize(r);
    return r;
}

CountablePart part_intersection(const CountablePart& a, const CountablePart& b) {
    CountablePart r;
    for (const auto& t : a.tokens)
        if (b.contains(t)) r.tokens.insert(t);
    for (const auto& t : b.tokens)
        if (a.contains(t)) r.tokens.insert(t);
    if (a.tail && b.tail && a.tail->name == b.tail->name) {
        CountablePart::Tail t{a.tail->name, std::max(a.tail->start, b.tail->start), a.tail->holes};
        t.holes.insert(b.tail->holes.begin(), b.tail->holes.end());
        r.tail = t;
    }
    normalize(r);
    return r;
}

// Finite token set minus a countable part.
std::set<std::string> tokens_minus(const std::set<std::string>& xs, const CountablePart& c) {
    std::set<std::string> r;
    for (const auto& t : xs)
        if (!c.contains(t)) r.insert(t);
    return r;
}

CountablePart part_minus_finite(CountablePart c, const std::set<std::string>& xs) {
    for (const auto& t : xs) {
        c.tokens.erase(t);
        if (c.tail)
            if (auto i = tail_index(c.tail->name, t); i && *i >= c.tail->start) c.tail->holes.insert(*i);
    }
    normalize(c);
    return c;
}

json part_to_json(const CountablePart& c) {
    json j = {{"tokens", std::vector<std::string>(c.tokens.begin(), c.tokens.end())}};
    if (c.tail)
        j["tail"] = {{"name", c.tail->name},
                     {"start", c.tail->start},
                     {"holes", std::vector<std::uint64_t>(c.tail->holes.begin(), c.tail->holes.end())}};
    return j;
}

CountablePart part_from_json(const json& j) {
    CountablePart c;
    if (j.contains("tokens")) c.tokens = j.at("tokens").get<std::set<std::string>>();
    if (j.contains("tail")) {
        const auto& t = j.at("tail");
        c.tail = CountablePart::Tail{t.at("name").get<std::string>(), t.at("start").get<std::uint64_t>(),
                                     t.value("holes", std::set<std::uint64_t>{})};
    }
    normalize(c);
    return c;
}

}  // namespace

bool CountablePart::contains(const std::string& t) const {
    if (tokens.count(t)) return true;
    if (!tail) return false;
    auto i = tail_index(tail->name, t);
    return i && in_tail(*tail, *i);
}

CoSet::CoSet(bool co, CountablePart p) : co_(co), part_(std::move(p)) { normalize(part_); }

CoSet CoSet::finite(std::set<std::string> tokens) { return CoSet(false, CountablePart{std::move(tokens), std::nullopt}); }
CoSet CoSet::cocountable(CountablePart except) { return CoSet(true, std::move(except)); }

CoSet CoSet::complement() const {
    if (!co_) return CoSet(true, part_);
    if (part_.tail)
        throw Error(ErrorKind::Unrepresentable, "complement of a cocountable set with an infinite complement",
                    {{"set", to_json()}});
    return CoSet(false, part_);
}

CoSet CoSet::unite(const CoSet& o) const {
    if (!co_ && !o.co_) return CoSet(false, part_union(part_, o.part_));
    if (co_ && o.co_) return CoSet(true, part_intersection(part_, o.part_));
    const auto& co = co_ ? *this : o;
    const auto& fi = co_ ? o : *this;
    return CoSet(true, part_minus_finite(co.part_, fi.part_.tokens));
}

CoSet CoSet::intersect(const CoSet& o) const {
    if (!co_ && !o.co_) {
        std::set<std::string> r;
        for (const auto& t : part_.tokens)
            if (o.part_.tokens.count(t)) r.insert(t);
        return finite(std::move(r));
    }
    if (co_ && o.co_) return CoSet(true, part_union(part_, o.part_));
    const auto& co = co_ ? *this : o;
    const auto& fi = co_ ? o : *this;
    return CoSet(false, CountablePart{tokens_minus(fi.part_.tokens, co.part_), std::nullopt});
}

bool CoSet::subset_of(const CoSet& o) const {
    if (!co_) {
        for (const auto& t : part_.tokens)
            if (!o.contains(t)) return false;
        return true;
    }
    if (!o.co_) return false;
    // Complement of o inside the complement of this.
    for (const auto& t : o.part_.tokens)
        if (!part_.contains(t)) return false;
    if (!o.part_.tail) return true;
    if (!part_.tail || part_.tail->name != o.part_.tail->name || part_.tail->start > o.part_.tail->start) return false;
    for (auto h : part_.tail->holes)
        if (in_tail(*o.part_.tail, h)) return false;
    return true;
}

json CoSet::to_json() const {
    if (!co_) return {{"finite", std::vector<std::string>(part_.tokens.begin(), part_.tokens.end())}};
    return {{"cocountable", part_to_json(part_)}};
}

CoSet CoSet::from_json(const json& j) {
    if (j.contains("finite")) return finite(j.at("finite").get<std::set<std::string>>());
    if (j.contains("cocountable")) return cocountable(part_from_json(j.at("cocountable")));
    throw Error(ErrorKind::ParseError, "expected {finite:[...]} or {cocountable:{...}}");
}

// ---- certificates ----

const char* to_string(CertVerdict v) {
    switch (v) {
        case CertVerdict::verified: return "verified";
        case CertVerdict::refuted: return "refuted";
        case CertVerdict::checked_to_depth: return "checked-to-depth";
    }
    return "?";
}

json CertificateReport::to_json() const {
    json j = {{"space", space}, {"claim", claim}, {"verdict", hsober::to_string(verdict)}, {"summary", summary},
              {"transcript", transcript}};
    if (verdict == CertVerdict::checked_to_depth) j["depth"] = depth;
    return j;
}

const std::vector<std::string>& zoo_spaces() {
    static const std::vector<std::string> s = {"cofinite_nat", "cocountable", "johnstone"};
    return s;
}

const std::vector<std::pair<std::string, std::string>>& zoo_claims() {
    static const std::vector<std::pair<std::string, std::string>> c = {
        {"cofinite_nat", "K_is_all_nonempty"}, {"cofinite_nat", "irr_closed"},
        {"cofinite_nat", "X_in_DR"},           {"cofinite_nat", "not_well_filtered"},
        {"cocountable", "K_is_finite_sets"},   {"cocountable", "wf_not_sober"},
        {"johnstone", "tails_compact"},        {"johnstone", "not_well_filtered"},
        {"johnstone", "is_dcpo_d_space"},
    };
    return c;
}

namespace {

// Set expressions: a literal or {union|intersect|minus: [a, b]}, {complement: a}.
template <class S>
S eval_set(const json& e) {
    if (e.contains("union")) return eval_set<S>(e["union"][0]).unite(eval_set<S>(e["union"][1]));
    if (e.contains("intersect")) return eval_set<S>(e["intersect"][0]).intersect(eval_set<S>(e["intersect"][1]));
    if (e.contains("minus")) return eval_set<S>(e["minus"][0]).minus(eval_set<S>(e["minus"][1]));
    if (e.contains("complement")) return eval_set<S>(e["complement"]).complement();
    return S::from_json(e);
}

template <class S, class Point>
json eval_boolean_fact(const std::string& kind, const json& f) {
    if (kind == "member") return eval_set<S>(f.at("set")).contains(f.at("point").get<Point>());
    if (kind == "closed") return eval_set<S>(f.at("set")).is_closed();
    if (kind == "open") return eval_set<S>(f.at("set")).is_open();
    if (kind == "nonempty") return !eval_set<S>(f.at("set")).empty();
    if (kind == "equal") return eval_set<S>(f.at("a")) == eval_set<S>(f.at("b"));
    if (kind == "subset") return eval_set<S>(f.at("a")).subset_of(eval_set<S>(f.at("b")));
    if (kind == "finite") {
        auto s = eval_set<S>(f.at("set"));
        if constexpr (std::is_same_v<S, NatSet>) return !s.is_cofinite();
        else return s.is_finite();
    }
    throw Error(ErrorKind::ParseError, "unknown fact", {{"fact", f}});
}

// Johnstone sets: {empty}, {all}, {up: [points]} for up F, {tail: n} for T_n.
struct JSet {
    enum Kind { empty, all, up, tail } kind = empty;
    std::vector<JPoint> gens;
    std::uint64_t n = 1;

    static JSet from_json(const json& j) {
        JSet s;
        if (j.contains("empty")) s.kind = empty;
        else if (j.contains("all")) s.kind = all;
        else if (j.contains("tail")) s = {tail, {}, j.at("tail").get<std::uint64_t>()};
        else if (j.contains("up")) {
            s.kind = up;
            for (const auto& p : j.at("up")) s.gens.push_back(jpoint_from_json(p));
            if (s.gens.empty()) s.kind = empty;
        } else {
            throw Error(ErrorKind::ParseError, "unknown Johnstone set", {{"set", j}});
        }
        return s;
    }
    bool contains(const JPoint& p) const {
        switch (kind) {
            case empty: return false;
            case all: return true;
            case tail: return !p.k && p.j >= n;
            case up:
                return std::any_of(gens.begin(), gens.end(), [&](const JPoint& g) { return johnstone_leq(g, p); });
        }
        return false;
    }
    bool subset_of(const JSet& o) const {
        if (kind == empty || o.kind == all) return true;
        if (o.kind == empty || kind == all) return false;
        if (kind == up)
            return std::all_of(gens.begin(), gens.end(), [&](const JPoint& g) {
                return o.kind == up ? o.contains(g) : (!g.k && g.j >= o.n);
            });
        // T_n against T_m or against up G.
        if (o.kind == tail) return n >= o.n;
        std::optional<std::uint64_t> kmin;
        for (const auto& g : o.gens)
            if (g.k) kmin = kmin ? std::min(*kmin, *g.k) : *g.k;
        if (!kmin) return false;
        for (std::uint64_t m = n; m < *kmin; ++m)
            if (!o.contains({m, std::nullopt})) return false;
        return true;
    }
};

json sorted_labels(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

json johnstone_fact(const std::string& kind, const json& f) {
    if (kind == "leq") return johnstone_leq(jpoint_from_json(f.at("p")), jpoint_from_json(f.at("q")));
    if (kind == "member") return JSet::from_json(f.at("set")).contains(jpoint_from_json(f.at("point")));
    if (kind == "nonempty") return JSet::from_json(f.at("set")).kind != JSet::empty;
    if (kind == "subset") return JSet::from_json(f.at("a")).subset_of(JSet::from_json(f.at("b")));
    const auto bound = f.value("bound", std::uint64_t{1});
    if (kind == "up_maximal") {
        auto p = jpoint_from_json(f.at("point"));
        auto T = johnstone_truncate(bound, bound);
        auto idx = T.index_of(jpoint_label(p));
        if (!idx) throw Error(ErrorKind::PreconditionViolated, "point outside the truncation", {{"fact", f}});
        std::vector<std::string> out;
        T.maximal(T.up(*idx)).for_each([&](std::size_t i) { out.push_back(T.label(i)); });
        return sorted_labels(out);
    }
    if (kind == "column_upper_bounds") {
        auto j = f.at("column").get<std::uint64_t>();
        auto K = f.at("length").get<std::uint64_t>();
        auto T = johnstone_truncate(bound, bound);
        Bits col = T.none();
        for (std::uint64_t k = 1; k <= K; ++k) col.set(*T.index_of(jpoint_label({j, k})));
        std::vector<std::string> out;
        T.upper_bounds(col).for_each([&](std::size_t i) { out.push_back(T.label(i)); });
        return sorted_labels(out);
    }
    if (kind == "truncation_order") {
        auto T = johnstone_truncate(bound, bound);
        auto pts = truncation_points(bound, bound);
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = 0; b < pts.size(); ++b)
                if (T.leq(a, b) != johnstone_leq(pts[a], pts[b])) return false;
        return true;
    }
    if (kind == "truncation_d_space") return check(johnstone_truncate(bound, bound), "d_space").holds;
    if (kind == "truncation_incomparable_bounds") {
        // Upper bounds of two incomparable points are pairwise incomparable
        // maximal points, so a directed set containing both has a top.
        auto T = johnstone_truncate(bound, bound);
        for (std::size_t a = 0; a < T.size(); ++a)
            for (std::size_t b = a + 1; b < T.size(); ++b) {
                if (T.leq(a, b) || T.leq(b, a)) continue;
                Bits ub = T.up(a) & T.up(b);
                if (T.maximal(ub) != ub || !T.is_antichain(ub)) return false;
            }
        return true;
    }
    throw Error(ErrorKind::ParseError, "unknown fact", {{"fact", f}});
}

class Transcript {
public:
    explicit Transcript(std::string space) : space_(std::move(space)) {}
    void add(json f, json expected) {
        f["value"] = expected;
        if (evaluate_fact(space_, f) != expected) ok_ = false;
        facts_.push_back(std::move(f));
    }
    void note(const std::string& text) { facts_.push_back({{"fact", "note"}, {"text", text}}); }
    bool ok() const { return ok_; }
    json take() { return std::move(facts_); }

private:
    std::string space_;
    json facts_ = json::array();
    bool ok_ = true;
};

json nat(std::initializer_list<std::uint64_t> xs) { return NatSet::finite(xs).to_json(); }
json conat(std::initializer_list<std::uint64_t> xs) { return NatSet::cofinite(xs).to_json(); }
json op(const char* o, json a, json b) { return {{o, json::array({std::move(a), std::move(b)})}}; }
json fact(const char* kind, json args) {
    args["fact"] = kind;
    return args;
}

CertificateReport finish(const std::string& space, const std::string& claim, Transcript& t, std::string summary,
                         std::size_t depth = 0) {
    CertificateReport r;
    r.space = space;
    r.claim = claim;
    r.summary = std::move(summary);
    r.verdict = !t.ok() ? CertVerdict::refuted : depth ? CertVerdict::checked_to_depth : CertVerdict::verified;
    r.depth = depth;
    r.transcript = t.take();
    return r;
}

CertificateReport cofinite_k_all(Transcript& t) {
    t.note("opens are the cofinite sets and the empty set");
    for (auto [A, w] : {std::pair{nat({0, 2, 5}), 2}, std::pair{conat({1, 3}), 0}, std::pair{conat({}), 7}}) {
        t.add(fact("member", {{"point", w}, {"set", A}}), true);
        // Any open containing a point of A leaves only finitely many points
        // of A uncovered; one cover member per leftover point suffices.
        json U = conat({static_cast<std::uint64_t>(w) + 1, static_cast<std::uint64_t>(w) + 4});
        t.add(fact("open", {{"set", U}}), true);
        t.add(fact("member", {{"point", w}, {"set", U}}), true);
        t.add(fact("finite", {{"set", op("minus", A, U)}}), true);
    }
    t.add(fact("closed", {{"set", nat({4, 9})}}), true);
    t.add(fact("closed", {{"set", conat({})}}), true);
    t.add(fact("closed", {{"set", conat({1})}}), false);
    return finish("cofinite_nat", "K_is_all_nonempty", t, "every nonempty subset is compact");
}

CertificateReport cofinite_irr(Transcript& t) {
    json X = conat({});
    t.add(fact("closed", {{"set", X}}), true);
    // X is not the union of two proper closed (finite) sets.
    for (auto [A, B] : {std::pair{nat({0, 1}), nat({2})}, std::pair{nat({3, 8, 9}), nat({1, 4})}}) {
        t.add(fact("finite", {{"set", op("union", A, B)}}), true);
        t.add(fact("equal", {{"a", op("union", A, B)}, {"b", X}}), false);
    }
    t.add(fact("closed", {{"set", nat({6})}}), true);
    // A finite closed set with two points splits into two closed pieces.
    for (auto F : {nat({0, 1}), nat({2, 5, 7})}) {
        auto first = NatSet::from_json(F).list().begin();
        json A = nat({*first});
        json B = op("minus", F, A);
        t.add(fact("closed", {{"set", A}}), true);
        t.add(fact("closed", {{"set", B}}), true);
        t.add(fact("equal", {{"a", op("union", A, B)}, {"b", F}}), true);
        t.add(fact("equal", {{"a", A}, {"b", F}}), false);
        t.add(fact("equal", {{"a", B}, {"b", F}}), false);
    }
    return finish("cofinite_nat", "irr_closed", t, "irreducible closed sets are the carrier and the singletons");
}

void cofinite_family_facts(Transcript& t) {
    t.note("K_X = { N \\ F : F finite }");
    t.add(fact("equal", {{"a", op("intersect", conat({0, 3}), conat({1}))}, {"b", conat({0, 1, 3})}}), true);
    for (std::uint64_t n = 0; n < 5; ++n) {
        t.add(fact("member", {{"point", n}, {"set", NatSet::cofinite({n}).to_json()}}), false);
        t.add(fact("member", {{"point", n + 1}, {"set", NatSet::cofinite({n}).to_json()}}), true);
    }
}

CertificateReport cofinite_dr(Transcript& t) {
    cofinite_family_facts(t);
    json X = conat({});
    for (auto F : {conat({0, 3}), conat({1, 2, 4})})
        t.add(fact("nonempty", {{"set", op("intersect", X, F)}}), true);
    // A finite closed A misses K = N \ A.
    for (auto A : {nat({0, 4}), nat({2})}) {
        t.add(fact("closed", {{"set", A}}), true);
        t.add(fact("nonempty", {{"set", op("intersect", A, json{{"complement", A}})}}), false);
    }
    return finish("cofinite_nat", "X_in_DR", t,
                  "K_X is filtered with empty intersection, and the carrier is its only minimal closed meeting set");
}

CertificateReport cofinite_nwf(Transcript& t) {
    cofinite_family_facts(t);
    json E = nat({});
    t.add(fact("open", {{"set", E}}), true);
    for (auto F : {conat({0}), conat({1, 5})}) t.add(fact("subset", {{"a", F}, {"b", E}}), false);
    return finish("cofinite_nat", "not_well_filtered", t,
                  "the intersection of K_X lies in the empty open set but no member does");
}

json tok(std::initializer_list<const char*> xs) {
    std::set<std::string> s;
    for (auto x : xs) s.insert(x);
    return CoSet::finite(s).to_json();
}

json co_except(std::set<std::string> tokens, std::optional<std::uint64_t> tail_from) {
    CountablePart c{std::move(tokens), std::nullopt};
    if (tail_from) c.tail = CountablePart::Tail{"c", *tail_from, {}};
    return CoSet::cocountable(c).to_json();
}

CertificateReport cocountable_k(Transcript& t) {
    t.note("finite sets are compact; an infinite cocountable A contains fresh points c0, c1, ...");
    for (auto A : {tok({"t0"}), tok({"t0", "t1", "t2"})}) t.add(fact("finite", {{"set", A}}), true);
    for (auto A : {co_except({"t0"}, std::nullopt), co_except({}, std::nullopt)}) {
        // U_n = X \ {c_m : m >= n} is open, the U_n increase and cover A,
        // and c_n is outside U_n, so no finite subfamily covers A.
        for (std::uint64_t n = 0; n < 5; ++n) {
            std::string c = "c" + std::to_string(n);
            t.add(fact("member", {{"point", c}, {"set", A}}), true);
            t.add(fact("open", {{"set", co_except({}, n)}}), true);
            t.add(fact("member", {{"point", c}, {"set", co_except({}, n)}}), false);
            t.add(fact("member", {{"point", c}, {"set", co_except({}, n + 1)}}), true);
            t.add(fact("subset", {{"a", co_except({}, n)}, {"b", co_except({}, n + 1)}}), true);
        }
        t.add(fact("member", {{"point", "t9"}, {"set", co_except({}, 0)}}), true);
    }
    return finish("cocountable", "K_is_finite_sets", t, "compact sets are exactly the nonempty finite sets");
}

CertificateReport cocountable_wf(Transcript& t) {
    json X = co_except({}, std::nullopt);
    t.add(fact("closed", {{"set", X}}), true);
    t.note("the carrier is uncountable; a union of two countable closed sets is countable");
    t.add(fact("finite", {{"set", op("union", tok({"t0"}), tok({"t1"}))}}), true);
    t.add(fact("equal", {{"a", op("union", tok({"t0"}), tok({"t1"}))}, {"b", X}}), false);
    // No generic point: each point closure is its singleton.
    for (auto x : {"t0", "t1"}) {
        json s = CoSet::finite({x}).to_json();
        t.add(fact("closed", {{"set", s}}), true);
        t.add(fact("member", {{"point", "t7"}, {"set", s}}), false);
        t.add(fact("member", {{"point", "t7"}, {"set", X}}), true);
    }
    // Filtered families of compacts are families of finite sets; along each
    // chain the intersection is attained by a member.
    const std::size_t depth = 8;
    std::set<std::string> F;
    for (std::size_t i = 0; i <= depth; ++i) F.insert("t" + std::to_string(i));
    json meet = CoSet::finite(F).to_json();
    for (std::size_t d = 1; d <= depth; ++d) {
        std::set<std::string> next = F;
        next.erase("t" + std::to_string(d - 1));
        json m = CoSet::finite(next).to_json();
        t.add(fact("subset", {{"a", m}, {"b", CoSet::finite(F).to_json()}}), true);
        meet = op("intersect", meet, m);
        t.add(fact("equal", {{"a", meet}, {"b", m}}), true);
        F = std::move(next);
    }
    return finish("cocountable", "wf_not_sober", t,
                  "the carrier is irreducible without a generic point; well-filteredness checked on finite chains",
                  depth);
}

json jp(std::uint64_t j, std::optional<std::uint64_t> k) { return jpoint_to_json({j, k}); }

json expected_up_maximal(std::uint64_t j, std::uint64_t k, std::uint64_t bound) {
    std::vector<std::string> v{jpoint_label({j, std::nullopt})};
    for (std::uint64_t m = k; m <= bound; ++m)
        if (m != j) v.push_back(jpoint_label({m, std::nullopt}));
    return sorted_labels(v);
}

void tail_lemma(Transcript& t, std::uint64_t bound) {
    t.note("an open set containing (j,inf) contains some (j,k), and up (j,k) contains T_k");
    for (std::uint64_t j = 1; j <= 3; ++j)
        for (std::uint64_t k = 1; k <= 3; ++k) {
            t.add(fact("leq", {{"p", jp(j, k)}, {"q", jp(j, std::nullopt)}}), true);
            t.add(fact("subset", {{"a", {{"tail", k}}}, {"b", {{"up", {jp(j, k)}}}}}), true);
        }
    for (std::uint64_t b = 1; b <= bound; ++b) {
        t.add(fact("truncation_order", {{"bound", b}}), true);
        for (std::uint64_t j = 1; j <= b; ++j)
            for (std::uint64_t k = 1; k <= b; k += 3)
                t.add(fact("up_maximal", {{"point", jp(j, k)}, {"bound", b}}), expected_up_maximal(j, k, b));
    }
}

CertificateReport johnstone_tails(Transcript& t) {
    tail_lemma(t, 12);
    return finish("johnstone", "tails_compact", t, "every tail T_n is compact");
}

CertificateReport johnstone_nwf(Transcript& t) {
    tail_lemma(t, 4);
    for (std::uint64_t n = 1; n <= 6; ++n) {
        t.add(fact("subset", {{"a", {{"tail", n + 1}}}, {"b", {{"tail", n}}}}), true);
        t.add(fact("member", {{"point", jp(n, std::nullopt)}, {"set", {{"tail", n}}}}), true);
        t.add(fact("member", {{"point", jp(n, std::nullopt)}, {"set", {{"tail", n + 1}}}}), false);
        t.add(fact("member", {{"point", jp(n, 1)}, {"set", {{"tail", 1}}}}), false);
        t.add(fact("subset", {{"a", {{"tail", n}}}, {"b", {{"empty", true}}}}), false);
    }
    t.note("(m,inf) is outside T_{m+1} and finite points lie in no tail, so the tails have empty intersection");
    return finish("johnstone", "not_well_filtered", t,
                  "the tails form a filtered family of compacts inside no open set, yet meet in the empty set");
}

CertificateReport johnstone_dcpo(Transcript& t) {
    const std::uint64_t depth = 12;
    // The column (j,1) < (j,2) < ... has sup (j,inf): (m,inf) fails to bound (j,m+1).
    for (std::uint64_t j = 1; j <= 3; ++j)
        for (std::uint64_t m = 1; m <= 4; ++m) {
            t.add(fact("leq", {{"p", jp(j, m)}, {"q", jp(j, std::nullopt)}}), true);
            if (m != j) t.add(fact("leq", {{"p", jp(j, m + 1)}, {"q", jp(m, std::nullopt)}}), false);
        }
    for (std::uint64_t b = 1; b <= depth; ++b) {
        t.add(fact("truncation_order", {{"bound", b}}), true);
        t.add(fact("truncation_incomparable_bounds", {{"bound", b}}), true);
        t.add(fact("truncation_d_space", {{"bound", b}}), true);
        // Bounds of (1,1..b) in the b x b truncation: (1,b), (1,inf), and (b,inf).
        std::vector<std::string> ub{jpoint_label({1, b}), jpoint_label({1, std::nullopt})};
        if (b != 1) ub.push_back(jpoint_label({b, std::nullopt}));
        t.add(fact("column_upper_bounds", {{"column", 1}, {"length", b}, {"bound", b}}), sorted_labels(ub));
    }
    return finish("johnstone", "is_dcpo_d_space", t,
                  "directed sets have sups; the d-space property checked on truncations", depth);
}

}  // namespace

json evaluate_fact(const std::string& space, const json& f) {
    const auto kind = f.at("fact").get<std::string>();
    if (kind == "note") return f.value("value", json());
    if (space == "cofinite_nat") return eval_boolean_fact<NatSet, std::uint64_t>(kind, f);
    if (space == "cocountable") return eval_boolean_fact<CoSet, std::string>(kind, f);
    if (space == "johnstone") return johnstone_fact(kind, f);
    throw Error(ErrorKind::UnknownClaim, "unknown zoo space", {{"space", space}});
}

CertificateReport verify_claim(const std::string& space, const std::string& claim) {
    Transcript t(space);
    const auto id = space + "." + claim;
    if (id == "cofinite_nat.K_is_all_nonempty") return cofinite_k_all(t);
    if (id == "cofinite_nat.irr_closed") return cofinite_irr(t);
    if (id == "cofinite_nat.X_in_DR") return cofinite_dr(t);
    if (id == "cofinite_nat.not_well_filtered") return cofinite_nwf(t);
    if (id == "cocountable.K_is_finite_sets") return cocountable_k(t);
    if (id == "cocountable.wf_not_sober") return cocountable_wf(t);
    if (id == "johnstone.tails_compact") return johnstone_tails(t);
    if (id == "johnstone.not_well_filtered") return johnstone_nwf(t);
    if (id == "johnstone.is_dcpo_d_space") return johnstone_dcpo(t);
    throw Error(ErrorKind::UnknownClaim, "unregistered claim", {{"space", space}, {"claim", claim}});
}

bool revalidate(const CertificateReport& r) {
    for (const auto& f : r.transcript)
        if (f.at("fact") != "note" && evaluate_fact(r.space, f) != f.at("value")) return false;
    return true;
}

}  // namespace hsober
