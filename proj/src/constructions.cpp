#include "hsober/constructions.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "hsober/checkers.hpp"
#include "hsober/enumerate.hpp"

namespace hsober {

using nlohmann::json;

std::size_t Product::index_of(const std::vector<std::size_t>& coord) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) k = k * factors[i].size() + coord[i];
    return k;
}

namespace {

Bits rectangle(const Product& P, const std::vector<Bits>& sides) {
    Bits r = P.space.none();
    for (std::size_t p = 0; p < P.coords.size(); ++p) {
        bool in = true;
        for (std::size_t i = 0; i < sides.size() && in; ++i) in = sides[i].test(P.coords[p][i]);
        if (in) r.set(p);
    }
    return r;
}

// Nonempty subsets of a carrier: all of them when small, else singletons and pairs.
std::vector<Bits> subset_sample(const FiniteSpace& X, std::size_t full_limit) {
    std::vector<Bits> out;
    const std::size_t n = X.size();
    if (n <= full_limit) {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
            Bits b(n);
            for (std::size_t i = 0; i < n; ++i)
                if (m >> i & 1) b.set(i);
            out.push_back(b);
        }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(X.single(i));
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(X.single(i) | X.single(j));
    }
    return out;
}

void check_irreducible_products(const Product& P) {
    const auto& Z = P.space;
    for (const auto& a : subset_sample(Z, 10)) {
        if (!is_irreducible_bits(Z, a)) continue;
        std::vector<Bits> sides;
        for (const auto& pr : P.projections) sides.push_back(pr.target().down_of(pr.image(a)));
        ensure(Z.down_of(a) == rectangle(P, sides), "closure of an irreducible set is not the product of closures");
    }
    std::vector<std::vector<Bits>> per;
    for (const auto& F : P.factors) per.push_back(subset_sample(F, 4));
    std::vector<std::size_t> pick(per.size(), 0);
    for (std::size_t step = 0; step < 4096; ++step) {
        std::vector<Bits> sides;
        bool each = true;
        for (std::size_t i = 0; i < per.size(); ++i) {
            sides.push_back(per[i][pick[i]]);
            each = each && is_irreducible_bits(P.factors[i], sides.back());
        }
        ensure(is_irreducible_bits(Z, rectangle(P, sides)) == each,
               "rectangle irreducibility differs from irreducibility of its sides");
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == per[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
}

std::size_t saturating_pow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (b != 0 && r > std::numeric_limits<std::size_t>::max() / b) return std::numeric_limits<std::size_t>::max();
        r *= b;
    }
    return r;
}

json labels_json(const std::vector<std::size_t>& f, const FiniteSpace& X, const FiniteSpace& Y) {
    json j = json::object();
    for (std::size_t i = 0; i < f.size(); ++i) j[X.label(i)] = Y.label(f[i]);
    return j;
}

}  // namespace

Product product(const std::vector<FiniteSpace>& spaces, const Caps& caps) {
    if (spaces.empty()) throw Error(ErrorKind::EmptySpace, "product of no factors");
    std::size_t total = 1;
    for (const auto& F : spaces) {
        if (F.size() != 0 && total > std::numeric_limits<std::size_t>::max() / F.size())
            total = std::numeric_limits<std::size_t>::max();
        else
            total *= F.size();
    }
    check_cap(total, caps.product_points, "product_points");

    Product P;
    P.factors = spaces;
    std::vector<std::size_t> c(spaces.size(), 0);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < total; ++k) {
        P.coords.push_back(c);
        std::string l = "(";
        for (std::size_t i = 0; i < c.size(); ++i) l += (i ? "," : "") + spaces[i].label(c[i]);
        labels.push_back(l + ")");
        for (std::size_t i = c.size(); i-- > 0;) {
            if (++c[i] < spaces[i].size()) break;
            c[i] = 0;
        }
    }
    std::vector<Bits> up(total, Bits(total));
    for (std::size_t p = 0; p < total; ++p)
        for (std::size_t q = 0; q < total; ++q) {
            bool le = true;
            for (std::size_t i = 0; i < spaces.size() && le; ++i) le = spaces[i].leq(P.coords[p][i], P.coords[q][i]);
            if (le) up[p].set(q);
        }
    P.space = FiniteSpace::from_order(std::move(labels), std::move(up));
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        std::vector<std::size_t> a(total);
        for (std::size_t p = 0; p < total; ++p) a[p] = P.coords[p][i];
        P.projections.emplace_back(P.space, spaces[i], std::move(a));
    }
    if (spaces.size() > 1) check_irreducible_products(P);
    return P;
}

std::vector<SpaceMap> continuous_maps(const FiniteSpace& X, const FiniteSpace& Y, const Caps& caps) {
    check_cap(saturating_pow(Y.size(), X.size()), caps.map_count, "map_count");
    const std::size_t n = X.size();
    std::vector<SpaceMap> out;
    std::vector<std::size_t> f(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            out.emplace_back(X, Y, f);
            return;
        }
        for (std::size_t y = 0; y < Y.size(); ++y) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (X.leq(j, i) && !Y.leq(f[j], y)) ok = false;
                if (X.leq(i, j) && !Y.leq(y, f[j])) ok = false;
            }
            if (!ok) continue;
            f[i] = y;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

FunctionSpace function_space(const FiniteSpace& X, const FiniteSpace& Y, const Caps& caps) {
    FunctionSpace F;
    F.maps = continuous_maps(X, Y, caps);
    const std::size_t m = F.maps.size();
    std::vector<std::string> labels;
    for (const auto& f : F.maps) {
        std::string l = "[";
        for (std::size_t x = 0; x < X.size(); ++x) l += (x ? "," : "") + Y.label(f(x));
        labels.push_back(l + "]");
    }
    std::vector<Bits> up(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            bool le = true;
            for (std::size_t x = 0; x < X.size() && le; ++x) le = Y.leq(F.maps[i](x), F.maps[j](x));
            if (le) up[i].set(j);
        }
    // Specialization of pointwise convergence: every subbasic open
    // {f : f(x) in V} containing f also contains g.
    const auto opens = open_sets(Y, caps);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            bool spec = true;
            for (std::size_t x = 0; x < X.size() && spec; ++x)
                for (const auto& v : opens)
                    if (v.test(F.maps[i](x)) && !v.test(F.maps[j](x))) {
                        spec = false;
                        break;
                    }
            ensure(spec == up[i].test(j), "pointwise order differs from the specialization order");
        }
    F.space = FiniteSpace::from_order(std::move(labels), std::move(up));

    SpaceChecker cy(Y, caps), cf(F.space, caps);
    for (const auto& H : base_systems())
        if (cy.check("h_sober", H).holds) ensure(cf.check("h_sober", H).holds, "function space into an H-sober space is not H-sober");
    return F;
}

Equalizer equalizer(const SpaceMap& f, const SpaceMap& g) {
    if (f.source().id() != g.source().id() || f.target().id() != g.target().id())
        throw Error(ErrorKind::EndpointMismatch, "equalizer needs parallel maps");
    const auto& X = f.source();
    Equalizer e;
    e.agreement = X.none();
    for (std::size_t x = 0; x < X.size(); ++x)
        if (f(x) == g(x)) e.agreement.set(x);
    if (e.agreement.none()) return e;
    e.space = X.subspace(e.agreement);
    std::vector<std::size_t> inc;
    e.agreement.for_each([&](std::size_t x) { inc.push_back(x); });
    e.inclusion = SpaceMap(*e.space, X, std::move(inc));
    ensure(e.inclusion->is_topological_embedding(), "equalizer inclusion is not an embedding");
    return e;
}

bool retract_verify(const SpaceMap& r, const SpaceMap& s, const Caps& caps) {
    if (r.source().id() != s.target().id() || r.target().id() != s.source().id())
        throw Error(ErrorKind::EndpointMismatch, "r and s do not compose both ways");
    if (!compose(r, s).is_identity()) return false;
    const auto& X = r.source();
    const auto& Y = r.target();
    SpaceChecker cx(X, caps), cy(Y, caps);
    for (const auto& H : base_systems())
        if (cx.check("h_sober", H).holds) ensure(cy.check("h_sober", H).holds, "retract of an H-sober space is not H-sober");
    try {
        const auto& PX = cx.smyth_space();
        const auto& PY = cy.smyth_space();
        ensure(compose(smyth_map(r, PX, PY), smyth_map(s, PY, PX)).is_identity(),
               "Smyth images do not form a retraction");
        for (const auto& H : base_systems())
            if (cx.check("super_h_sober", H).holds)
                ensure(cy.check("super_h_sober", H).holds, "retract of a super H-sober space is not super H-sober");
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) throw;
    }
    return true;
}

const char* to_string(ReflectionKind k) {
    switch (k) {
        case ReflectionKind::sobrification: return "sobrification";
        case ReflectionKind::h_sobrification: return "h_sobrification";
        case ReflectionKind::super_h_sobrification: return "super_h_sobrification";
    }
    return "?";
}

ReflectionKind parse_reflection_kind(const std::string& s) {
    for (auto k : {ReflectionKind::sobrification, ReflectionKind::h_sobrification, ReflectionKind::super_h_sobrification})
        if (s == to_string(k)) return k;
    throw Error(ErrorKind::ParseError, "unknown reflection kind", {{"kind", s}});
}

std::vector<Bits> reflection_family(const FiniteSpace& X, const SubsetSystemId& H, ReflectionKind kind) {
    switch (kind) {
        case ReflectionKind::sobrification: return h_closed_sets({BaseSystem::R, std::nullopt}, X);
        case ReflectionKind::h_sobrification: return h_closed_sets({H.base, Derivation::d}, X);
        case ReflectionKind::super_h_sobrification: return h_closed_sets({H.base, Derivation::D}, X);
    }
    return {};
}

json Reflection::carrier_labeling() const { return hoare.labeling(); }

json Reflection::to_json() const {
    json iso = json::object();
    for (std::size_t i = 0; i < homeomorphism.size(); ++i) iso[reflected.label(i)] = base.label(homeomorphism[i]);
    return {{"kind", hsober::to_string(kind)},
            {"system", system.name()},
            {"base", space_to_json(base)},
            {"reflected", space_to_json(reflected)},
            {"carrier", carrier_labeling()},
            {"unit", map_to_json(unit)},
            {"homeomorphism", iso}};
}

Reflection reflect(const FiniteSpace& X, const SubsetSystemId& H, ReflectionKind kind, const Caps& caps) {
    auto HX = HoareSpace::build(X, reflection_family(X, H, kind), caps);
    auto unit = eta_embed(HX);
    ensure(unit.is_topological_embedding(), "reflection unit is not an embedding");
    auto iso = find_isomorphism(HX.as_space(), X);
    ensure(iso.has_value(), "reflection of a finite space is not homeomorphic to it");
    SubsetSystemId sys = kind == ReflectionKind::sobrification ? SubsetSystemId{BaseSystem::R, std::nullopt} : H;
    FiniteSpace reflected = HX.as_space();
    return Reflection{kind, sys, X, std::move(HX), std::move(reflected), std::move(unit), std::move(*iso)};
}

json UniversalReport::to_json() const {
    json j = {{"targets", targets},       {"maps", maps},     {"factorizations", factorizations},
              {"factor", factor},         {"unique", unique}, {"holds", holds()}};
    if (!counterexample.is_null()) j["counterexample"] = counterexample;
    return j;
}

UniversalReport universal_property_verify(const Reflection& R, std::size_t target_bound, const Caps& caps) {
    check_cap(target_bound, caps.target_bound, "target_bound");
    UniversalReport rep;
    const auto& X = R.base;
    const auto& HX = R.hoare;
    for (const auto& Y : poset_corpus(target_bound)) {
        ++rep.targets;
        // Continuous g on the reflection, keyed by g after the unit.
        std::map<std::vector<std::size_t>, std::size_t> through;
        for (const auto& g : continuous_maps(R.reflected, Y, caps)) ++through[compose(g, R.unit).assignment()];
        for (const auto& f : continuous_maps(X, Y, caps)) {
            ++rep.maps;
            auto fail = [&](bool& flag, const char* why) {
                flag = false;
                if (rep.counterexample.is_null())
                    rep.counterexample = {{"reason", why}, {"target", space_to_json(Y)}, {"map", labels_json(f.assignment(), X, Y)}};
            };
            std::vector<std::size_t> fs(HX.size());
            bool ok = true;
            for (std::size_t k = 0; k < HX.size() && ok; ++k) {
                auto y = Y.greatest(Y.down_of(f.image(HX.member(k))));
                if (!y) ok = false;
                else fs[k] = *y;
            }
            if (!ok) {
                fail(rep.factor, "closure of an image is not a point closure");
                continue;
            }
            try {
                SpaceMap fstar(R.reflected, Y, fs);
                if (compose(fstar, R.unit).assignment() != f.assignment()) fail(rep.factor, "f* after the unit differs from f");
                else ++rep.factorizations;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotContinuous) throw;
                fail(rep.factor, "f* is not continuous");
            }
            auto it = through.find(f.assignment());
            if (it == through.end() || it->second != 1) fail(rep.unique, "factorization is not unique");
        }
    }
    return rep;
}

SpaceMap reflection_functor(const SpaceMap& f, const Reflection& RX, const Reflection& RY) {
    if (f.source().id() != RX.base.id() || f.target().id() != RY.base.id())
        throw Error(ErrorKind::EndpointMismatch, "map endpoints differ from the reflection bases");
    auto fh = hoare_map(f, RX.hoare, RY.hoare);
    ensure(compose(fh, RX.unit) == compose(RY.unit, f), "reflected map does not commute with the units");
    return fh;
}

bool reflection_functor_laws(const SpaceMap& f, const SpaceMap& g, const Reflection& RX, const Reflection& RY,
                             const Reflection& RZ) {
    bool id = reflection_functor(SpaceMap::identity(RX.base), RX, RX).is_identity();
    auto lhs = reflection_functor(compose(g, f), RX, RZ);
    auto rhs = compose(reflection_functor(g, RY, RZ), reflection_functor(f, RX, RY));
    return id && lhs == rhs;
}

json ProductPreservation::to_json() const {
    return {{"homeomorphism", homeomorphism}, {"decompositions", decompositions}};
}

ProductPreservation product_preservation(const FiniteSpace& X, const FiniteSpace& Y, const SubsetSystemId& H,
                                         ReflectionKind kind, const Caps& caps) {
    auto P = product({X, Y}, caps);
    auto RP = reflect(P.space, H, kind, caps);
    auto RX = reflect(X, H, kind, caps);
    auto RY = reflect(Y, H, kind, caps);
    auto Q = product({RX.reflected, RY.reflected}, caps);
    auto iso = find_isomorphism(RP.reflected, Q.space);
    if (!iso)
        throw Error(ErrorKind::NoHomeomorphism, "reflection of the product differs from the product of reflections",
                    {{"x", space_to_json(X)}, {"y", space_to_json(Y)}});
    ProductPreservation out;
    out.homeomorphism = std::move(*iso);
    for (const auto& a : reflection_family(P.space, H, kind)) {
        std::vector<Bits> sides{P.projections[0].image(a), P.projections[1].image(a)};
        ensure(rectangle(P, sides) == a, "closed set of the product is not the product of its projections");
        ++out.decompositions;
    }
    return out;
}

std::optional<SpaceMap> homeomorphic(const FiniteSpace& X, const FiniteSpace& Y) {
    auto f = find_isomorphism(X, Y);
    if (!f) return std::nullopt;
    return SpaceMap(X, Y, std::move(*f));
}

}  // namespace hsober
