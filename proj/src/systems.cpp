#include "hsober/systems.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "hsober/enumerate.hpp"

namespace hsober {

using nlohmann::json;

namespace {

const char* base_name(BaseSystem b) {
    switch (b) {
        case BaseSystem::S: return "S";
        case BaseSystem::C: return "C";
        case BaseSystem::Cw: return "Cw";
        case BaseSystem::D: return "D";
        case BaseSystem::Dw: return "Dw";
        case BaseSystem::R: return "R";
        case BaseSystem::Rw: return "Rw";
    }
    return "?";
}

std::optional<BaseSystem> parse_base(const std::string& s) {
    if (s == "S") return BaseSystem::S;
    if (s == "C") return BaseSystem::C;
    if (s == "Cw" || s == "Cω") return BaseSystem::Cw;
    if (s == "D") return BaseSystem::D;
    if (s == "Dw" || s == "Dω") return BaseSystem::Dw;
    if (s == "R") return BaseSystem::R;
    if (s == "Rw" || s == "Rω") return BaseSystem::Rw;
    return std::nullopt;
}

void sort_size_lex(std::vector<Bits>& v) {
    std::sort(v.begin(), v.end(), Bits::size_lex_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool base_member(BaseSystem b, const FiniteSpace& X, const Bits& a) {
    switch (b) {
        case BaseSystem::S: return a.count() == 1;
        case BaseSystem::C:
        case BaseSystem::Cw: return X.is_chain(a);
        case BaseSystem::D:
        case BaseSystem::Dw: return is_directed_bits(X, a);
        case BaseSystem::R:
        case BaseSystem::Rw: return is_irreducible_bits(X, a);
    }
    return false;
}

std::vector<Bits> raw_family(const FiniteSpace& X, const std::vector<CompactSat>& family) {
    if (family.empty()) throw Error(ErrorKind::EmptyFamily, "family is empty");
    std::vector<Bits> out;
    for (const auto& k : family) {
        require_same_space(X, k);
        if (k.bits.none() || !X.is_up_set(k.bits))
            throw Error(ErrorKind::PreconditionViolated, "family member is not compact saturated",
                        {{"member", set_labels(X, k.bits)}});
        out.push_back(k.bits);
    }
    return out;
}

Bits require_closed(const FiniteSpace& X, const ClosedSet& a) {
    require_same_space(X, a);
    if (!X.is_down_set(a.bits))
        throw Error(ErrorKind::PreconditionViolated, "set is not closed", {{"set", set_labels(X, a.bits)}});
    return a.bits;
}

json family_labels(const FiniteSpace& X, const std::vector<Bits>& fam) {
    json j = json::array();
    for (const auto& k : fam) j.push_back(set_labels(X, k));
    return j;
}

}  // namespace

SubsetSystemId SubsetSystemId::parse(const std::string& text) {
    auto caret = text.find('^');
    std::string head = text.substr(0, caret);
    auto base = parse_base(head);
    if (!base) throw Error(ErrorKind::ParseError, "unknown subset system", {{"system", text}});
    SubsetSystemId id{*base, std::nullopt};
    if (caret == std::string::npos) return id;
    std::string rest = text.substr(caret + 1);
    if (rest.find('^') != std::string::npos)
        throw Error(ErrorKind::UnsupportedDepth, "derived systems nest at most once", {{"system", text}});
    if (rest == "d")
        id.derived = Derivation::d;
    else if (rest == "R")
        id.derived = Derivation::R;
    else if (rest == "D")
        id.derived = Derivation::D;
    else
        throw Error(ErrorKind::ParseError, "unknown derivation", {{"system", text}});
    return id;
}

std::string SubsetSystemId::name() const {
    std::string s = base_name(base);
    if (derived) {
        s += '^';
        s += *derived == Derivation::d ? "d" : *derived == Derivation::R ? "R" : "D";
    }
    return s;
}

const std::vector<SubsetSystemId>& base_systems() {
    static const std::vector<SubsetSystemId> v = {
        {BaseSystem::S, {}},  {BaseSystem::Cw, {}}, {BaseSystem::C, {}}, {BaseSystem::Dw, {}},
        {BaseSystem::D, {}},  {BaseSystem::Rw, {}}, {BaseSystem::R, {}},
    };
    return v;
}

const std::vector<SubsetSystemId>& all_systems() {
    static const std::vector<SubsetSystemId> v = [] {
        std::vector<SubsetSystemId> out;
        for (const auto& b : base_systems()) {
            out.push_back(b);
            for (auto d : {Derivation::d, Derivation::R, Derivation::D}) out.push_back({b.base, d});
        }
        return out;
    }();
    return v;
}

bool h_member_bits(const SubsetSystemId& H, const FiniteSpace& X, const Bits& a) {
    if (a.none()) throw Error(ErrorKind::EmptySet, "H-membership of the empty set");
    if (!H.derived) return base_member(H.base, X, a);
    // Finite collapse: each derivation holds exactly when the closure is a
    // point closure.
    auto g = X.greatest(X.down_of(a));
    ensure(!base_member(H.base, X, a) || g.has_value(), "H-set outside the derived system");
    if (g && *H.derived == Derivation::R) {
        std::vector<Bits> fam{X.up(*g)};
        ensure(is_minimal_in_m(X, fam, X.down(*g)), "point closure is not minimal for its principal filter");
    }
    return g.has_value();
}

bool h_member(const SubsetSystemId& H, const FiniteSpace& X, const PointSet& a) {
    require_same_space(X, a);
    return h_member_bits(H, X, a.bits);
}

std::vector<Bits> h_closed_sets(const SubsetSystemId& H, const FiniteSpace& X) {
    std::vector<Bits> out;
    for_each_antichain(
        X, [&](const Bits& m) { return h_member_bits(H, X, m); },
        [&](const Bits& m) { out.push_back(X.down_of(m)); });
    sort_size_lex(out);
    return out;
}

std::vector<Bits> h_sets_bruteforce(const SubsetSystemId& H, const FiniteSpace& X, const Caps& caps) {
    const std::size_t n = X.size();
    check_cap(n, caps.subset_points, "subset_points");
    std::vector<Bits> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Bits a(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) a.set(i);
        if (h_member_bits(H, X, a)) out.push_back(a);
    }
    sort_size_lex(out);
    return out;
}

std::vector<Bits> h_closed_sets_bruteforce(const SubsetSystemId& H, const FiniteSpace& X, const Caps& caps) {
    std::vector<Bits> out;
    for (const auto& a : h_sets_bruteforce(H, X, caps)) out.push_back(X.down_of(a));
    sort_size_lex(out);
    return out;
}

HSetSample h_sets_sample(const SubsetSystemId& H, const FiniteSpace& P, std::size_t budget, std::uint64_t seed) {
    const std::size_t n = P.size();
    const bool singletons = !H.derived && H.base == BaseSystem::S;
    const bool chains = !H.derived && (H.base == BaseSystem::C || H.base == BaseSystem::Cw);
    // On a finite poset every H-set A has a greatest element g with A inside
    // the principal ideal of g; chains additionally are totally ordered.
    const std::size_t inf = std::numeric_limits<std::size_t>::max();
    auto sat_add = [&](std::size_t a, std::size_t b) { return a > inf - b ? inf : a + b; };
    std::size_t total = 0;
    if (singletons) {
        total = n;
    } else if (chains) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return P.down(a).count() < P.down(b).count(); });
        std::vector<std::size_t> c(n, 0);
        for (auto g : order) {
            std::size_t v = 1;
            P.down(g).for_each([&](std::size_t h) {
                if (h != g) v = sat_add(v, c[h]);
            });
            c[g] = v;
            total = sat_add(total, v);
        }
    } else {
        for (std::size_t g = 0; g < n; ++g) {
            std::size_t k = P.down(g).count() - 1;
            total = sat_add(total, k >= 63 ? inf : std::size_t{1} << k);
        }
    }

    HSetSample out;
    std::unordered_set<Bits, BitsHash> seen;
    auto add = [&](const Bits& a) {
        if (seen.insert(a).second) out.sets.push_back(a);
    };
    if (total <= budget) {
        for (std::size_t g = 0; g < n; ++g) {
            if (singletons) {
                add(P.single(g));
            } else if (chains) {
                std::function<void(Bits&, std::size_t)> rec = [&](Bits& cur, std::size_t low) {
                    add(cur);
                    P.down(low).for_each([&](std::size_t h) {
                        if (h == low) return;
                        cur.set(h);
                        rec(cur, h);
                        cur.reset(h);
                    });
                };
                Bits cur = P.single(g);
                rec(cur, g);
            } else {
                Bits below = P.down(g);
                below.reset(g);
                auto idx = below.indices();
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idx.size()); ++mask) {
                    Bits a = P.single(g);
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        if (mask >> i & 1) a.set(idx[i]);
                    add(a);
                }
            }
        }
        sort_size_lex(out.sets);
        return out;
    }

    out.exhaustive = false;
    for (std::size_t g = 0; g < n; ++g) add(P.single(g));
    if (!singletons)
        for (std::size_t g = 0; g < n && out.sets.size() < budget; ++g)
            P.down(g).for_each([&](std::size_t h) {
                if (h != g && out.sets.size() < budget) add(P.single(g) | P.single(h));
            });
    std::mt19937_64 rng(seed);
    std::size_t attempts = 0;
    while (out.sets.size() < budget && !singletons && attempts++ < 8 * budget) {
        std::size_t g = draw_index(rng, n);
        Bits a = P.single(g);
        if (chains) {
            std::size_t low = g;
            while (draw_bool(rng, 0.6)) {
                Bits below = P.down(low);
                below.reset(low);
                if (below.none()) break;
                auto idx = below.indices();
                low = idx[draw_index(rng, idx.size())];
                a.set(low);
            }
        } else {
            P.down(g).for_each([&](std::size_t h) {
                if (h != g && draw_bool(rng, 0.5)) a.set(h);
            });
        }
        add(a);
    }
    sort_size_lex(out.sets);
    return out;
}

bool h_family_member_bits(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<Bits>& family) {
    if (family.empty()) throw Error(ErrorKind::EmptyFamily, "family is empty");
    std::vector<Bits> fam = family;
    for (const auto& k : fam)
        if (k.size() != X.size() || k.none() || !X.is_up_set(k))
            throw Error(ErrorKind::PreconditionViolated, "family member is not compact saturated");
    sort_size_lex(fam);
    const std::size_t m = fam.size();
    std::vector<Bits> up(m, Bits(m));
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = "K" + std::to_string(i);
        for (std::size_t j = 0; j < m; ++j)
            if (fam[j].subset_of(fam[i])) up[i].set(j);
    }
    auto P = FiniteSpace::from_order(std::move(labels), std::move(up));
    return h_member_bits(H, P, P.all());
}

bool h_family_member(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<CompactSat>& family,
                     const Caps& caps) {
    (void)caps;
    return h_family_member_bits(H, X, raw_family(X, family));
}

bool h_family_member(const SubsetSystemId& H, const SmythSpace& PX, const Bits& family) {
    if (family.none()) throw Error(ErrorKind::EmptyFamily, "family is empty");
    return h_member_bits(H, PX.as_space(), family);
}

bool meets_all_bits(const std::vector<Bits>& family, const Bits& c) {
    for (const auto& k : family)
        if (!k.intersects(c)) return false;
    return true;
}

bool meets_all(const FiniteSpace& X, const std::vector<CompactSat>& family, const ClosedSet& c) {
    auto fam = raw_family(X, family);
    return meets_all_bits(fam, require_closed(X, c));
}

std::vector<ClosedSet> m_family(const FiniteSpace& X, const std::vector<CompactSat>& family, const Caps& caps) {
    auto fam = raw_family(X, family);
    check_cap(X.size(), caps.m_family_points, "m_family_points");
    std::vector<Bits> members;
    for (const auto& c : down_sets(X, std::numeric_limits<std::size_t>::max()))
        if (meets_all_bits(fam, c)) members.push_back(c);
    std::vector<ClosedSet> out;
    for (const auto& c : members) {
        bool minimal = true;
        for (const auto& d : members)
            if (d != c && d.subset_of(c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(ClosedSet{{X.id(), c}});
    }
    return out;
}

bool is_minimal_in_m(const FiniteSpace& X, const std::vector<Bits>& family, const Bits& c) {
    if (!X.is_down_set(c) || !meets_all_bits(family, c)) return false;
    bool minimal = true;
    X.maximal(c).for_each([&](std::size_t m) {
        Bits d = c;
        d.reset(m);
        if (meets_all_bits(family, d)) minimal = false;
    });
    return minimal;
}

Bits rudin_minimal_bits(const FiniteSpace& X, const std::vector<Bits>& family, Bits c) {
    if (!X.is_down_set(c) || !meets_all_bits(family, c))
        throw Error(ErrorKind::NotInM, "closed set does not meet every member", {{"set", set_labels(X, c)}});
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto m : X.maximal(c).indices()) {
            Bits d = c;
            d.reset(m);
            if (meets_all_bits(family, d)) {
                c = std::move(d);
                progress = true;
                break;
            }
        }
    }
    return c;
}

ClosedSet rudin_minimal(const FiniteSpace& X, const std::vector<CompactSat>& family, const ClosedSet& c) {
    auto fam = raw_family(X, family);
    require_same_space(X, c);
    return ClosedSet{{X.id(), rudin_minimal_bits(X, fam, c.bits)}};
}

std::optional<RudinWitness> witness_for(const SubsetSystemId& H, const FiniteSpace& X, const PointSet& a,
                                        const Caps& caps) {
    (void)H;
    (void)caps;
    require_same_space(X, a);
    if (a.bits.none()) throw Error(ErrorKind::EmptySet, "witness for the empty set");
    auto g = X.greatest(X.down_of(a.bits));
    if (!g) return std::nullopt;
    // The singleton family {up g} lies in every subset system, and down g is
    // the least closed set meeting it.
    return RudinWitness{{principal_filter(X, *g)}, point_closure(X, *g)};
}

bool check_witness(const SubsetSystemId& H, const FiniteSpace& X, const RudinWitness& w, const Caps& caps) {
    auto fam = raw_family(X, w.family);
    require_same_space(X, w.minimal_set);
    SubsetSystemId base{H.base, std::nullopt};
    if (!h_family_member_bits(base, X, fam)) return false;
    bool local = is_minimal_in_m(X, fam, w.minimal_set.bits);
    if (X.size() <= caps.m_family_points) {
        auto ms = m_family(X, w.family, caps);
        bool listed = std::any_of(ms.begin(), ms.end(), [&](const ClosedSet& c) { return c.bits == w.minimal_set.bits; });
        ensure(listed == local, "local and exhaustive minimality disagree");
    }
    return local;
}

namespace {

bool m_holds(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<Bits>& fam, const Bits& a) {
    std::vector<Bits> cut;
    for (const auto& k : fam) cut.push_back(X.up_of(k & a));
    return h_family_member_bits(H, X, cut);
}

QOutcome q_eval(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<Bits>& fam, const Bits& a) {
    QOutcome out;
    for (const auto& c : h_closed_sets(H, X)) {
        if (!c.subset_of(a) || !meets_all_bits(fam, c)) continue;
        out.holds = true;
        out.generator = X.maximal(c);
        out.closed = c;
        break;
    }
    return out;
}

}  // namespace

bool property_m_instance(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<CompactSat>& family,
                         const ClosedSet& a, const Caps& caps) {
    (void)caps;
    auto fam = raw_family(X, family);
    Bits c = require_closed(X, a);
    if (!h_family_member_bits(H, X, fam))
        throw Error(ErrorKind::PreconditionViolated, "family is not admissible", {{"system", H.name()}});
    if (!meets_all_bits(fam, c))
        throw Error(ErrorKind::PreconditionViolated, "closed set misses a member", {{"set", set_labels(X, c)}});
    return m_holds(H, X, fam, c);
}

QOutcome property_q_outcome(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<CompactSat>& family,
                            const ClosedSet& a, const Caps& caps) {
    auto fam = raw_family(X, family);
    Bits c = require_closed(X, a);
    check_cap(X.size(), caps.m_family_points, "m_family_points");
    if (!meets_all_bits(fam, c))
        throw Error(ErrorKind::PreconditionViolated, "closed set misses a member", {{"set", set_labels(X, c)}});
    return q_eval(H, X, fam, c);
}

bool property_q_instance(const SubsetSystemId& H, const FiniteSpace& X, const std::vector<CompactSat>& family,
                         const ClosedSet& a, const Caps& caps) {
    return property_q_outcome(H, X, family, a, caps).holds;
}

std::optional<std::size_t> supremum(const FiniteSpace& X, const Bits& a) { return X.least(X.upper_bounds(a)); }

namespace {

bool scott_clause(const SubsetSystemId& H, const FiniteSpace& X, const Bits& u, const Caps& caps) {
    if (!X.is_up_set(u)) return false;
    const std::size_t n = X.size();
    if (n > caps.subset_points) {
        // Every nonempty H-set of a finite poset contains its supremum (the
        // top of its closure), so an up-set already meets each H-set whose
        // supremum it contains.
        return true;
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Bits a(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) a.set(i);
        if (!h_member_bits(H, X, a)) continue;
        auto s = supremum(X, a);
        if (s && u.test(*s) && !a.intersects(u)) return false;
    }
    return true;
}

}  // namespace

bool scott_h_open(const SubsetSystemId& H, const FiniteSpace& X, const PointSet& u, const Caps& caps) {
    require_same_space(X, u);
    return scott_clause(H, X, u.bits, caps);
}

bool scott_h_continuous(const SubsetSystemId& H, const SpaceMap& f, const Caps& caps) {
    const auto& X = f.source();
    const auto& Y = f.target();
    const std::size_t n = X.size();
    bool by_sups = true;
    if (n <= caps.subset_points) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && by_sups; ++mask) {
            Bits a(n);
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) a.set(i);
            if (!h_member_bits(H, X, a)) continue;
            auto s = supremum(X, a);
            if (!s) continue;
            auto t = supremum(Y, f.image(a));
            if (!t || *t != f(*s)) by_sups = false;
        }
    }
    // Otherwise the supremum of an H-set is its greatest member, which a
    // monotone map sends to the greatest member of the image.
    if (n <= caps.subset_points && Y.size() <= caps.family_points) {
        bool by_preimages = true;
        for (const auto& v : open_sets(Y, caps))
            if (scott_clause(H, Y, v, caps) && !scott_clause(H, X, f.preimage(v), caps)) {
                by_preimages = false;
                break;
            }
        ensure(by_preimages == by_sups, "Scott H-continuity characterizations disagree");
    }
    return by_sups;
}

json RudinInstance::to_json() const {
    return {{"space", space_to_json(space)},
            {"family", family_labels(space, family)},
            {"closed", set_labels(space, closed)}};
}

json HarnessReport::to_json() const {
    return {{"property", property},
            {"system", system},
            {"instances", instances},
            {"failures", failures},
            {"counterexample", counterexample ? counterexample->to_json() : json(nullptr)}};
}

RudinInstance random_rudin_instance(const SubsetSystemId& H, std::mt19937_64& rng, std::size_t max_points,
                                    const Caps& caps) {
    auto X = random_space(rng, max_points);
    auto ks = compact_saturated_sets(X, caps.smyth_carrier);
    std::size_t g = draw_index(rng, ks.size());
    std::vector<Bits> fam{ks[g]};
    const bool single = !H.derived && H.base == BaseSystem::S;
    const bool chain = !H.derived && (H.base == BaseSystem::C || H.base == BaseSystem::Cw);
    if (chain) {
        Bits cur = ks[g];
        while (draw_bool(rng, 0.6)) {
            std::vector<std::size_t> above;
            for (std::size_t i = 0; i < ks.size(); ++i)
                if (cur.subset_of(ks[i]) && ks[i] != cur) above.push_back(i);
            if (above.empty()) break;
            cur = ks[above[draw_index(rng, above.size())]];
            fam.push_back(cur);
        }
    } else if (!single) {
        for (std::size_t i = 0; i < ks.size(); ++i)
            if (i != g && ks[g].subset_of(ks[i]) && draw_bool(rng, 0.35)) fam.push_back(ks[i]);
    }
    sort_size_lex(fam);
    Bits a(X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
        if (draw_bool(rng, 0.3)) a.set(i);
    a = X.down_of(a);
    for (const auto& k : fam)
        if (!k.intersects(a)) {
            auto idx = k.indices();
            a |= X.down(idx[draw_index(rng, idx.size())]);
        }
    return {X, fam, a};
}

namespace {

Bits restrict_bits(const Bits& b, const std::vector<std::size_t>& keep) {
    Bits r(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (b.test(keep[i])) r.set(i);
    return r;
}

}  // namespace

RudinInstance minimize_instance(const SubsetSystemId& H, RudinInstance inst,
                                const std::function<bool(const RudinInstance&)>& fails, const Caps& caps) {
    (void)caps;
    auto admissible = [&](const RudinInstance& r) {
        return !r.family.empty() && h_family_member_bits(H, r.space, r.family) &&
               meets_all_bits(r.family, r.closed);
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t p = 0; p < inst.space.size() && inst.space.size() > 1 && !progress; ++p) {
            Bits keepb = inst.space.all();
            keepb.reset(p);
            auto keep = keepb.indices();
            RudinInstance cand{inst.space.subspace(keepb), {}, restrict_bits(inst.closed, keep)};
            bool ok = true;
            for (const auto& k : inst.family) {
                Bits r = restrict_bits(k, keep);
                if (r.none()) ok = false;
                cand.family.push_back(r);
            }
            if (!ok) continue;
            sort_size_lex(cand.family);
            if (admissible(cand) && fails(cand)) {
                inst = std::move(cand);
                progress = true;
            }
        }
        for (std::size_t i = 0; i < inst.family.size() && inst.family.size() > 1 && !progress; ++i) {
            RudinInstance cand = inst;
            cand.family.erase(cand.family.begin() + static_cast<std::ptrdiff_t>(i));
            if (admissible(cand) && fails(cand)) {
                inst = std::move(cand);
                progress = true;
            }
        }
    }
    return inst;
}

namespace {

HarnessReport run_harness(const std::string& property, const SubsetSystemId& H, std::uint64_t seed,
                          std::size_t count, std::size_t max_points, const Caps& caps,
                          const std::function<bool(const RudinInstance&)>& fails) {
    HarnessReport rep{property, H.name(), 0, 0, std::nullopt};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        auto inst = random_rudin_instance(H, rng, max_points, caps);
        ensure(h_family_member_bits(H, inst.space, inst.family), "generated family is not admissible");
        ++rep.instances;
        if (!fails(inst)) continue;
        ++rep.failures;
        if (!rep.counterexample) rep.counterexample = minimize_instance(H, inst, fails, caps);
    }
    return rep;
}

}  // namespace

HarnessReport property_m_harness(const SubsetSystemId& H, std::uint64_t seed, std::size_t count,
                                 std::size_t max_points, const Caps& caps) {
    return run_harness("M", H, seed, count, max_points, caps,
                       [&](const RudinInstance& r) { return !m_holds(H, r.space, r.family, r.closed); });
}

HarnessReport property_q_harness(const SubsetSystemId& H, std::uint64_t seed, std::size_t count,
                                 std::size_t max_points, const Caps& caps) {
    check_cap(max_points, caps.m_family_points, "m_family_points");
    return run_harness("Q", H, seed, count, max_points, caps,
                       [&](const RudinInstance& r) { return !q_eval(H, r.space, r.family, r.closed).holds; });
}

}  // namespace hsober
