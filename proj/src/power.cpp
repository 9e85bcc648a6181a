#include "hsober/power.hpp"

#include <algorithm>

namespace hsober {

using nlohmann::json;

namespace {

std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

void require_base(const FiniteSpace& expected, const FiniteSpace& got, const char* what) {
    if (expected.id() != got.id()) throw Error(ErrorKind::EndpointMismatch, what);
}

}  // namespace

// ---------------------------------------------------------------- Smyth

SmythSpace SmythSpace::build(const FiniteSpace& base, const Caps& caps) {
    SmythSpace s;
    s.base_ = base;
    s.carrier_ = compact_saturated_sets(base, caps.smyth_carrier);
    const std::size_t m = s.carrier_.size();
    for (std::size_t i = 0; i < m; ++i) s.index_[s.carrier_[i]] = i;

    std::vector<Bits> up(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (s.carrier_[j].subset_of(s.carrier_[i])) up[i].set(j);
    s.space_ = FiniteSpace::from_order(numbered_labels("K#", m), up);

    // Upper Vietoris check. The opens of the base are the empty set and the
    // carrier members, so the basis is {box U : U in carrier} plus the empty box.
    std::vector<Bits> boxes(m);
    for (std::size_t u = 0; u < m; ++u) {
        boxes[u] = s.box(s.carrier_[u]);
        ensure(s.space_.is_up_set(boxes[u]), "a box set is not an up-set of the Smyth order");
        ensure(boxes[u] == s.space_.up(u), "principal up-set differs from the box of its member");
    }
    ensure(s.box(base.none()).none(), "box of the empty set is not empty");
    // Specialization order of the generated topology: K <= K' iff every
    // basic open containing K contains K'.
    for (std::size_t i = 0; i < m; ++i) {
        Bits spec = Bits::full(m);
        for (std::size_t u = 0; u < m; ++u)
            if (boxes[u].test(i)) spec &= boxes[u];
        ensure(spec == s.space_.up(i), "specialization order of the upper Vietoris topology is not the Smyth order");
    }
    return s;
}

SmythSpace smyth(const FiniteSpace& X, const Caps& caps) { return SmythSpace::build(X, caps); }

std::optional<std::size_t> SmythSpace::index_of(const Bits& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SmythSpace::require_index(const Bits& k) const {
    auto i = index_of(k);
    if (!i) throw Error(ErrorKind::PreconditionViolated, "set is not a nonempty up-set of the base",
                        {{"set", set_labels(base_, k)}});
    return *i;
}

Bits SmythSpace::family_bits(const std::vector<CompactSat>& family) const {
    Bits b(size());
    for (const auto& k : family) {
        require_same_space(base_, k);
        b.set(require_index(k.bits));
    }
    return b;
}

Bits SmythSpace::family_bits_raw(const std::vector<Bits>& family) const {
    Bits b(size());
    for (const auto& k : family) b.set(require_index(k));
    return b;
}

std::vector<Bits> SmythSpace::members_of(const Bits& family) const {
    std::vector<Bits> out;
    family.for_each([&](std::size_t i) { out.push_back(carrier_[i]); });
    return out;
}

Bits SmythSpace::box(const Bits& u) const {
    Bits r(size());
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (carrier_[i].subset_of(u)) r.set(i);
    return r;
}

Bits SmythSpace::diamond(const Bits& a) const {
    Bits r(size());
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (carrier_[i].intersects(a)) r.set(i);
    return r;
}

json SmythSpace::labeling() const {
    json j = json::array();
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        j.push_back({{"label", space_.label(i)}, {"members", set_labels(base_, carrier_[i])}});
    return j;
}

SpaceMap xi_embed(const SmythSpace& PX) {
    const auto& X = PX.base();
    std::vector<std::size_t> a(X.size());
    for (std::size_t x = 0; x < X.size(); ++x) a[x] = PX.require_index(X.up(x));
    SpaceMap xi(X, PX.as_space(), std::move(a));
    ensure(xi.is_injective(), "xi is not injective");
    ensure(xi.is_order_embedding(), "xi is not an order embedding");
    ensure(xi.is_topological_embedding(), "xi is not a topological embedding");
    for (std::size_t u = 0; u < PX.size(); ++u)
        ensure(xi.preimage(PX.box(PX.member(u))) == PX.member(u), "preimage of a box under xi is not the open set");
    return xi;
}

SpaceMap smyth_map(const SpaceMap& f, const SmythSpace& PX, const SmythSpace& PY) {
    require_base(PX.base(), f.source(), "Smyth space does not match the source");
    require_base(PY.base(), f.target(), "Smyth space does not match the target");
    std::vector<std::size_t> a(PX.size());
    for (std::size_t i = 0; i < PX.size(); ++i)
        a[i] = PY.require_index(f.target().up_of(f.image(PX.member(i))));
    SpaceMap pf(PX.as_space(), PY.as_space(), std::move(a));
    // Continuity through the basis: the preimage of box V is box of f^-1(V).
    for (std::size_t v = 0; v < PY.size(); ++v)
        ensure(pf.preimage(PY.box(PY.member(v))) == PX.box(f.preimage(PY.member(v))),
               "preimage of a box under the Smyth map is not a box");
    auto xi_x = xi_embed(PX);
    auto xi_y = xi_embed(PY);
    for (std::size_t x = 0; x < f.source().size(); ++x)
        ensure(pf(xi_x(x)) == xi_y(f(x)), "naturality square with xi fails");
    if (f.is_identity())
        for (std::size_t i = 0; i < PX.size(); ++i)
            ensure(pf(i) == i, "Smyth map of the identity is not the identity");
    return pf;
}

bool smyth_functor_laws(const SpaceMap& f, const SpaceMap& g, const SmythSpace& PX, const SmythSpace& PY,
                        const SmythSpace& PZ) {
    auto id_law = smyth_map(SpaceMap::identity(PX.base()), PX, PX).is_identity();
    auto pf = smyth_map(f, PX, PY);
    auto pg = smyth_map(g, PY, PZ);
    auto pgf = smyth_map(compose(g, f), PX, PZ);
    return id_law && pgf == compose(pg, pf);
}

SmythUnion smyth_union(const FiniteSpace& X, const Caps& caps) {
    check_cap(X.size(), caps.double_smyth_base, "double_smyth_base");
    auto inner = smyth(X, caps);
    auto outer = smyth(inner.as_space(), caps);
    std::vector<std::size_t> a(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) {
        Bits u(X.size());
        outer.member(i).for_each([&](std::size_t k) { u |= inner.member(k); });
        auto idx = inner.index_of(u);
        ensure(idx.has_value(), "union of a compact family is not compact");
        a[i] = *idx;
    }
    SpaceMap m(outer.as_space(), inner.as_space(), std::move(a));
    std::vector<Bits> opens{X.none()};
    for (const auto& k : inner.carrier()) opens.push_back(k);
    for (const auto& u : opens) {
        Bits box_u = inner.box(u);
        ensure(m.preimage(box_u) == outer.box(box_u), "preimage of box U under union is not box box U");
    }
    return SmythUnion{std::move(inner), std::move(outer), std::move(m)};
}

// ---------------------------------------------------------------- Hoare

HoareSpace HoareSpace::build(const FiniteSpace& base, std::vector<Bits> family, const Caps& caps) {
    for (const auto& a : family) {
        if (a.size() != base.size()) throw Error(ErrorKind::SpaceMismatch, "member over the wrong carrier");
        if (a.none()) throw Error(ErrorKind::EmptyMember, "Hoare carrier members must be nonempty");
        if (!base.is_down_set(a))
            throw Error(ErrorKind::PreconditionViolated, "Hoare carrier members must be closed",
                        {{"set", set_labels(base, a)}});
    }
    std::sort(family.begin(), family.end(), Bits::size_lex_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty()) throw Error(ErrorKind::EmptyFamily, "Hoare carrier is empty");
    check_cap(family.size(), caps.smyth_carrier, "hoare_carrier");

    HoareSpace h;
    h.base_ = base;
    h.carrier_ = std::move(family);
    const std::size_t m = h.carrier_.size();
    for (std::size_t i = 0; i < m; ++i) h.index_[h.carrier_[i]] = i;
    std::vector<Bits> up(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (h.carrier_[i].subset_of(h.carrier_[j])) up[i].set(j);
    h.space_ = FiniteSpace::from_order(numbered_labels("A#", m), up);

    // Lower Vietoris check on the subbasis diamond(up x): each is an up-set
    // of inclusion and each principal up-set is a finite meet of them.
    std::vector<Bits> dia(base.size());
    for (std::size_t x = 0; x < base.size(); ++x) {
        dia[x] = h.diamond(base.up(x));
        ensure(h.space_.is_up_set(dia[x]), "a diamond set is not an up-set of inclusion");
    }
    for (std::size_t i = 0; i < m; ++i) {
        Bits meet = Bits::full(m);
        h.carrier_[i].for_each([&](std::size_t x) { meet &= dia[x]; });
        ensure(meet == h.space_.up(i), "lower Vietoris specialization differs from inclusion");
    }
    return h;
}

std::optional<std::size_t> HoareSpace::index_of(const Bits& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Bits HoareSpace::diamond(const Bits& u) const {
    Bits r(size());
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (carrier_[i].intersects(u)) r.set(i);
    return r;
}

bool HoareSpace::contains_point_closures() const {
    for (std::size_t x = 0; x < base_.size(); ++x)
        if (!index_of(base_.down(x))) return false;
    return true;
}

json HoareSpace::labeling() const {
    json j = json::array();
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        j.push_back({{"label", space_.label(i)}, {"members", set_labels(base_, carrier_[i])}});
    return j;
}

HoareSpace hoare(const FiniteSpace& X, HoareFamily which, const Caps& caps) {
    std::vector<Bits> fam;
    if (which == HoareFamily::all_closed) {
        for (auto& c : closed_sets(X, caps))
            if (c.any()) fam.push_back(std::move(c));
    } else {
        for (auto& c : enumerate_families(X, Family::irr_closed, caps)) fam.push_back(std::move(c.bits));
    }
    return HoareSpace::build(X, std::move(fam), caps);
}

HoareSpace hoare_custom(const FiniteSpace& X, const std::vector<ClosedSet>& family, const Caps& caps) {
    std::vector<Bits> fam;
    for (const auto& c : family) {
        require_same_space(X, c);
        fam.push_back(c.bits);
    }
    return HoareSpace::build(X, std::move(fam), caps);
}

SpaceMap eta_embed(const HoareSpace& HX) {
    const auto& X = HX.base();
    std::vector<std::size_t> a(X.size());
    for (std::size_t x = 0; x < X.size(); ++x) {
        auto i = HX.index_of(X.down(x));
        if (!i) throw Error(ErrorKind::PreconditionViolated, "point closure missing from the Hoare carrier",
                            {{"point", X.label(x)}});
        a[x] = *i;
    }
    SpaceMap eta(X, HX.as_space(), std::move(a));
    ensure(eta.is_injective(), "eta is not injective");
    ensure(eta.is_order_embedding(), "eta is not an order embedding");
    ensure(eta.is_topological_embedding(), "eta is not a topological embedding");
    for (std::size_t x = 0; x < X.size(); ++x)
        ensure(eta.preimage(HX.diamond(X.up(x))) == X.up(x), "preimage of a diamond under eta is not the open set");
    return eta;
}

SpaceMap hoare_map(const SpaceMap& f, const HoareSpace& HX, const HoareSpace& HY) {
    require_base(HX.base(), f.source(), "Hoare space does not match the source");
    require_base(HY.base(), f.target(), "Hoare space does not match the target");
    std::vector<std::size_t> a(HX.size());
    for (std::size_t i = 0; i < HX.size(); ++i) {
        Bits img = f.target().down_of(f.image(HX.member(i)));
        auto j = HY.index_of(img);
        if (!j) throw Error(ErrorKind::PreconditionViolated, "closure of an image leaves the target family",
                            {{"set", set_labels(f.target(), img)}});
        a[i] = *j;
    }
    SpaceMap hf(HX.as_space(), HY.as_space(), std::move(a));
    for (std::size_t x = 0; x < f.source().size(); ++x)
        ensure(hf.preimage(HY.diamond(f.target().up(f(x)))) == HX.diamond(f.preimage(f.target().up(f(x)))),
               "preimage of a diamond under the Hoare map is not a diamond");
    if (HX.contains_point_closures() && HY.contains_point_closures()) {
        auto ex = eta_embed(HX);
        auto ey = eta_embed(HY);
        for (std::size_t x = 0; x < f.source().size(); ++x)
            ensure(hf(ex(x)) == ey(f(x)), "naturality square with eta fails");
    }
    return hf;
}

bool hoare_functor_laws(const SpaceMap& f, const SpaceMap& g, const HoareSpace& HX, const HoareSpace& HY,
                        const HoareSpace& HZ) {
    auto id_law = hoare_map(SpaceMap::identity(HX.base()), HX, HX).is_identity();
    auto hf = hoare_map(f, HX, HY);
    auto hg = hoare_map(g, HY, HZ);
    auto hgf = hoare_map(compose(g, f), HX, HZ);
    return id_law && hgf == compose(hg, hf);
}

// ---------------------------------------------------------------- open filters

bool is_filter(const FiniteSpace& X, const std::vector<Bits>& fam) {
    if (fam.empty()) return false;
    std::unordered_map<Bits, bool, BitsHash> in;
    for (const auto& u : fam) in[u] = true;
    for (const auto& u : fam)
        if (u.none()) return false;
    for (const auto& u : fam)
        for (const auto& v : open_sets(X))
            if (u.subset_of(v) && !in.count(v)) return false;
    for (const auto& u : fam)
        for (const auto& v : fam)
            if (!in.count(u & v)) return false;
    return true;
}

std::vector<OpenFilter> open_filters(const FiniteSpace& X, const Caps& caps) {
    auto opens = open_sets(X, caps);
    // Proper filters are the up-closures of antichains M of nonempty opens
    // with every pairwise meet above some member of M. For an antichain
    // that forces the two members to coincide, so the condition is
    // inherited by sub-antichains and the walk below is exhaustive.
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < opens.size(); ++i)
        if (opens[i].any()) cand.push_back(i);
    std::vector<OpenFilter> out;
    std::vector<std::size_t> m;
    auto meet_ok = [&](const std::vector<std::size_t>& ms) {
        for (auto a : ms)
            for (auto b : ms) {
                Bits meet = opens[a] & opens[b];
                bool found = false;
                for (auto c : ms) found = found || opens[c].subset_of(meet);
                if (!found) return false;
            }
        return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        for (std::size_t t = start; t < cand.size(); ++t) {
            std::size_t i = cand[t];
            bool incomparable = true;
            for (auto j : m)
                if (opens[i].subset_of(opens[j]) || opens[j].subset_of(opens[i])) incomparable = false;
            if (!incomparable) continue;
            m.push_back(i);
            if (meet_ok(m)) {
                OpenFilter f{X.id(), {}};
                for (const auto& v : opens) {
                    bool above = false;
                    for (auto j : m) above = above || opens[j].subset_of(v);
                    if (above) f.members.push_back(v);
                }
                out.push_back(std::move(f));
                rec(t + 1);
            }
            m.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const OpenFilter& a, const OpenFilter& b) {
        return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                                            Bits::size_lex_less);
    });
    return out;
}

OpenFilter phi(const FiniteSpace& X, const CompactSat& k, const Caps& caps) {
    require_same_space(X, k);
    OpenFilter f{X.id(), {}};
    for (const auto& u : open_sets(X, caps))
        if (k.bits.subset_of(u)) f.members.push_back(u);
    return f;
}

OpenFilter filter_of_family(const FiniteSpace& X, const std::vector<CompactSat>& family, const Caps& caps) {
    if (family.empty()) throw Error(ErrorKind::EmptyFamily, "filter of an empty family");
    auto PX = smyth(X, caps);
    Bits fam = PX.family_bits(family);
    OpenFilter f{X.id(), {}};
    for (const auto& u : open_sets(X, caps)) {
        bool in = false;
        for (const auto& k : family) in = in || k.bits.subset_of(u);
        if (in) f.members.push_back(u);
    }
    const bool irreducible = is_irreducible_bits(PX.as_space(), fam);
    std::unordered_map<Bits, bool, BitsHash> in;
    for (const auto& u : f.members) in[u] = true;
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (!in.count(f.members[i] & f.members[j])) {
                ensure(!irreducible, "irreducible family induces a non-filter");
                throw Error(ErrorKind::NotAFilter, "union of the filters is not closed under intersection",
                            {{"pair", {set_labels(X, f.members[i]), set_labels(X, f.members[j])}}});
            }
    ensure(irreducible, "non-irreducible family induces a filter");
    return f;
}

HofmannMisloveReport hofmann_mislove(const FiniteSpace& X, const Caps& caps) {
    HofmannMisloveReport r;
    auto ks = compact_saturated_sets(X, caps.smyth_carrier);
    auto filters = open_filters(X, caps);
    r.compacts = ks.size();
    r.filters = filters.size();
    std::vector<OpenFilter> images;
    for (const auto& k : ks) images.push_back(phi(X, CompactSat{{X.id(), k}}, caps));
    r.injective = true;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] == images[j]) r.injective = false;
    r.surjective = true;
    r.inverse_is_intersection = true;
    for (const auto& f : filters) {
        r.surjective = r.surjective && std::find(images.begin(), images.end(), f) != images.end();
        Bits meet = X.all();
        for (const auto& u : f.members) meet &= u;
        r.inverse_is_intersection =
            r.inverse_is_intersection && meet.any() && phi(X, CompactSat{{X.id(), meet}}, caps) == f;
    }
    return r;
}

// ---------------------------------------------------------------- family calculus

std::vector<bool> many_meets_conditions(const SmythSpace& PX, const Bits& family, const Caps& caps) {
    const auto& X = PX.base();
    const auto& P = PX.as_space();
    Bits top = P.all();
    family.for_each([&](std::size_t k) { top &= P.up(k); });
    Bits meet = X.all();
    family.for_each([&](std::size_t k) { meet &= PX.member(k); });
    std::vector<Bits> x_opens{X.none()};
    for (const auto& k : PX.carrier()) x_opens.push_back(k);

    auto some_member_inside = [&](const std::function<bool(std::size_t)>& inside) {
        bool found = false;
        family.for_each([&](std::size_t k) { found = found || inside(k); });
        return found;
    };

    // (1) over opens of the Smyth space; the conclusion only grows with the
    // open set, so beyond the scan size the least open superset decides.
    bool c1 = true;
    std::vector<Bits> p_opens;
    if (P.size() <= caps.smyth_open_scan) p_opens = up_sets(P, 1u << 16);
    else p_opens.push_back(top);
    ensure(P.is_up_set(top), "meet of principal up-sets is not an up-set");
    for (const auto& u : p_opens) {
        if (!top.subset_of(u)) continue;
        if (!some_member_inside([&](std::size_t k) { return P.up(k).subset_of(u); })) c1 = false;
    }
    // (2) over boxes of opens of the base.
    bool c2 = true;
    for (const auto& u : x_opens) {
        Bits b = PX.box(u);
        if (!top.subset_of(b)) continue;
        if (!some_member_inside([&](std::size_t k) { return P.up(k).subset_of(b); })) c2 = false;
    }
    // (4) over opens of the base.
    bool c4 = true;
    for (const auto& u : x_opens) {
        if (!meet.subset_of(u)) continue;
        if (!some_member_inside([&](std::size_t k) { return PX.member(k).subset_of(u); })) c4 = false;
    }
    // (3) the intersection is compact and (4).
    bool c3 = meet.any() && X.is_up_set(meet) && c4;
    return {c1, c2, c3, c4};
}

std::vector<bool> irreducibility_transfer(const SmythSpace& PX, const Bits& a) {
    const auto& X = PX.base();
    Bits xi(PX.size());
    a.for_each([&](std::size_t x) { xi.set(PX.require_index(X.up(x))); });
    Bits dia = PX.diamond(a);
    ensure(dia == PX.as_space().down_of(xi), "diamond of A differs from the closure of xi(A)");
    return {is_irreducible_bits(X, a), is_irreducible_bits(PX.as_space(), xi),
            is_irreducible_bits(PX.as_space(), dia)};
}

FamilyResult family_calculus(const FiniteSpace& X, const std::vector<CompactSat>& family, FamilyOp which,
                             const Caps& caps) {
    if (family.empty()) throw Error(ErrorKind::EmptyFamily, "family calculus on an empty family");
    Bits meet = X.all();
    for (const auto& k : family) {
        require_same_space(X, k);
        meet &= k.bits;
    }
    FamilyResult r;
    switch (which) {
        case FamilyOp::intersection: r.set = meet; break;
        case FamilyOp::sup_in_K: {
            if (meet.none()) throw Error(ErrorKind::EmptyIntersection, "family has empty intersection");
            auto PX = smyth(X, caps);
            Bits fam = PX.family_bits(family);
            auto sup = PX.as_space().least(PX.as_space().upper_bounds(fam));
            ensure(sup && PX.member(*sup) == meet, "Smyth supremum differs from the intersection");
            r.set = meet;
            break;
        }
        case FamilyOp::closure_intersection_check: {
            auto PX = smyth(X, caps);
            Bits cl = PX.as_space().down_of(PX.family_bits(family));
            Bits meet_cl = X.all();
            cl.for_each([&](std::size_t k) { meet_cl &= PX.member(k); });
            r.value = meet_cl == meet;
            ensure(r.value, "intersection of a family differs from that of its closure");
            r.set = meet;
            break;
        }
        case FamilyOp::four_way_equivalence: {
            auto PX = smyth(X, caps);
            r.conditions = many_meets_conditions(PX, PX.family_bits(family), caps);
            r.value = std::all_of(r.conditions.begin(), r.conditions.end(), [&](bool c) { return c == r.conditions[0]; });
            ensure(r.value, "the four filtration conditions disagree");
            r.set = meet;
            break;
        }
    }
    return r;
}

}  // namespace hsober
