#include <numeric>
#include <random>

#include "helpers.hpp"
#include "hsober/checkers.hpp"
#include "hsober/constructions.hpp"
#include "hsober/enumerate.hpp"

using namespace hsober;
using test::L;
using test::S;
using test::thrown;

namespace {

SubsetSystemId sys(BaseSystem b) { return {b, std::nullopt}; }

// Every assignment X -> Y checked for monotonicity by brute force.
std::vector<std::vector<std::size_t>> monotone_oracle(const FiniteSpace& X, const FiniteSpace& Y) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> a(X.size(), 0);
    while (true) {
        bool mono = true;
        for (std::size_t i = 0; i < X.size(); ++i)
            for (std::size_t j = 0; j < X.size(); ++j)
                if (X.leq(i, j) && !Y.leq(a[i], a[j])) mono = false;
        if (mono) out.push_back(a);
        std::size_t k = X.size();
        while (k > 0) {
            --k;
            if (++a[k] < Y.size()) break;
            a[k] = 0;
            if (k == 0) return out;
        }
        if (X.size() == 0) return out;
    }
}

}  // namespace

TEST_CASE("product examples") {
    auto X = spaces::sierpinski();
    auto P = product({X, X});
    REQUIRE(P.space.size() == 4);
    auto lo = P.index_of({0, 0}), hi = P.index_of({1, 1});
    auto m1 = P.index_of({0, 1}), m2 = P.index_of({1, 0});
    CHECK(P.space.leq(lo, m1));
    CHECK(P.space.leq(lo, m2));
    CHECK(P.space.leq(m1, hi));
    CHECK_FALSE(P.space.leq(m1, m2));
    CHECK(P.space.label(m1) == "(a,b)");
    CHECK(homeomorphic(P.space, spaces::diamond()));

    auto C = spaces::chain(3);
    CHECK(homeomorphic(product({C, spaces::one_point()}).space, C));

    auto A = spaces::antichain(2);
    auto Q = product({A, spaces::chain(2)});
    Bits pair(Q.space.size());
    pair.set(Q.index_of({0, 0}));
    pair.set(Q.index_of({1, 0}));
    CHECK_FALSE(is_irreducible_definitional(Q.space, pair));
    CHECK_FALSE(is_irreducible_definitional(A, Q.projections[0].image(pair)));

    Caps tight = default_caps();
    tight.product_points = 8;
    CHECK(thrown([&] { product({C, C}, tight); }) == ErrorKind::CapExceeded);
}

TEST_CASE("irreducible closed sets of products split into rectangles") {
    auto corpus = poset_corpus(3);
    for (const auto& X : corpus)
        for (const auto& Y : corpus) {
            if (X.size() * Y.size() > 9) continue;
            auto P = product({X, Y});
            for (const auto& c : test::all_subsets(P.space)) {
                if (c.none() || !test::is_down(P.space, c) || !is_irreducible_definitional(P.space, c)) continue;
                auto px = P.projections[0].image(c), py = P.projections[1].image(c);
                Bits rect(P.space.size());
                px.for_each([&](std::size_t i) { py.for_each([&](std::size_t j) { rect.set(P.index_of({i, j})); }); });
                CHECK(rect == c);
                CHECK(is_irreducible_definitional(X, X.down_of(px)));
            }
            // Products of sober spaces are H-sober for every base tag.
            for (const auto& H : base_systems()) CHECK(check(P.space, "h_sober", H).holds);
        }
}

TEST_CASE("continuous maps") {
    auto X = spaces::sierpinski();
    CHECK(continuous_maps(X, X).size() == 3);
    CHECK(continuous_maps(spaces::one_point(), spaces::diamond()).size() == 4);
    CHECK(continuous_maps(spaces::antichain(2), X).size() == 4);
    for (const auto& U : poset_corpus(3))
        for (const auto& V : poset_corpus(3)) {
            std::vector<std::vector<std::size_t>> got;
            for (const auto& f : continuous_maps(U, V)) got.push_back(f.assignment());
            CHECK(got == monotone_oracle(U, V));
        }
    Caps tight = default_caps();
    tight.map_count = 8;
    CHECK(thrown([&] { continuous_maps(spaces::chain(3), spaces::chain(3), tight); }) == ErrorKind::CapExceeded);
}

TEST_CASE("function spaces") {
    auto X = spaces::sierpinski();
    auto F = function_space(X, X);
    REQUIRE(F.space.size() == 3);
    CHECK(homeomorphic(F.space, spaces::chain(3)));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < 3; ++i) labels.push_back(F.space.label(i));
    CHECK(labels == std::vector<std::string>{"[a,a]", "[a,b]", "[b,b]"});
    auto D = spaces::diamond();
    CHECK(homeomorphic(function_space(spaces::one_point(), D).space, D));
    CHECK(function_space(D, spaces::one_point()).space.size() == 1);
    auto G = function_space(spaces::antichain(2), spaces::chain(2));
    for (std::size_t i = 0; i < G.space.size(); ++i)
        for (std::size_t j = 0; j < G.space.size(); ++j) {
            bool pw = true;
            for (std::size_t x = 0; x < 2; ++x) pw = pw && G.maps[i](x) <= G.maps[j](x);
            CHECK(G.space.leq(i, j) == pw);
        }
}

TEST_CASE("equalizers") {
    auto X = spaces::sierpinski();
    auto id = SpaceMap::identity(X);
    auto e = equalizer(id, id);
    REQUIRE_FALSE(e.empty());
    CHECK(e.space->size() == 2);
    auto cb = SpaceMap::constant(X, X, 1);
    auto e2 = equalizer(id, cb);
    CHECK(L(X, e2.agreement) == test::Labels{"b"});
    CHECK(e2.inclusion->is_topological_embedding());
    auto A = spaces::antichain(2);
    auto e3 = equalizer(SpaceMap::constant(X, A, 0), SpaceMap::constant(X, A, 1));
    CHECK(e3.empty());
    CHECK_FALSE(e3.inclusion);
    CHECK(thrown([&] { equalizer(id, SpaceMap::identity(spaces::sierpinski())); }) == ErrorKind::EndpointMismatch);
}

TEST_CASE("retracts") {
    auto C = spaces::chain(3);
    auto X = spaces::sierpinski();
    SpaceMap s(X, C, {0, 2});
    SpaceMap r(C, X, {0, 0, 1});
    CHECK(retract_verify(r, s));
    SpaceMap bad(C, X, {0, 1, 1});
    CHECK(retract_verify(bad, SpaceMap(X, C, {1, 1})) == false);
    CHECK(retract_verify(SpaceMap::identity(C), SpaceMap::identity(C)));
}

TEST_CASE("reflection kinds parse") {
    CHECK(parse_reflection_kind("sobrification") == ReflectionKind::sobrification);
    CHECK(std::string(to_string(ReflectionKind::super_h_sobrification)) == "super_h_sobrification");
    CHECK(thrown([] { parse_reflection_kind("completion"); }) == ErrorKind::ParseError);
}

TEST_CASE("reflection examples") {
    auto X = spaces::sierpinski();
    auto R = reflect(X, sys(BaseSystem::R), ReflectionKind::sobrification);
    CHECK(homeomorphic(R.reflected, X));
    CHECK(R.unit.is_topological_embedding());
    auto A = spaces::antichain(2);
    CHECK(homeomorphic(reflect(A, sys(BaseSystem::D), ReflectionKind::h_sobrification).reflected, A));
    CHECK(reflect(spaces::one_point(), sys(BaseSystem::R), ReflectionKind::sobrification).reflected.size() == 1);
    CHECK(R.carrier_labeling().size() == 2);
}

TEST_CASE("reflections are idempotent and unit images are point closures") {
    for (const auto& X : poset_corpus(4))
        for (auto kind : {ReflectionKind::sobrification, ReflectionKind::h_sobrification,
                          ReflectionKind::super_h_sobrification})
            for (auto b : {BaseSystem::D, BaseSystem::R}) {
                auto R = reflect(X, sys(b), kind);
                auto RR = reflect(R.reflected, sys(b), kind);
                CHECK(homeomorphic(RR.reflected, R.reflected));
                for (std::size_t x = 0; x < X.size(); ++x)
                    CHECK(R.hoare.member(R.unit(x)) == X.down(x));
            }
}

TEST_CASE("universal property against a brute-force factorization count") {
    auto X = spaces::sierpinski();
    auto R = reflect(X, sys(BaseSystem::D), ReflectionKind::h_sobrification);
    CHECK(universal_property_verify(R, 2).holds());
    auto A = spaces::antichain(2);
    CHECK(universal_property_verify(reflect(A, sys(BaseSystem::R), ReflectionKind::sobrification), 3).holds());
    auto one = universal_property_verify(reflect(spaces::one_point(), sys(BaseSystem::R), ReflectionKind::sobrification), 4);
    CHECK(one.holds());
    CHECK(one.targets == 24);

    Caps caps = default_caps();
    CHECK(thrown([&] { universal_property_verify(R, 5, caps); }) == ErrorKind::CapExceeded);

    for (const auto& B : poset_corpus(3)) {
        auto RB = reflect(B, sys(BaseSystem::C), ReflectionKind::h_sobrification);
        for (const auto& Y : poset_corpus(3)) {
            for (const auto& f : monotone_oracle(B, Y)) {
                std::size_t count = 0;
                for (const auto& g : monotone_oracle(RB.reflected, Y)) {
                    bool factors = true;
                    for (std::size_t x = 0; x < B.size(); ++x) factors = factors && g[RB.unit(x)] == f[x];
                    count += factors;
                }
                CHECK(count == 1);
            }
        }
        CHECK(universal_property_verify(RB, 3).holds());
    }
}

TEST_CASE("reflection functor") {
    auto C = spaces::chain(3);
    auto X = spaces::sierpinski();
    auto RC = reflect(C, sys(BaseSystem::D), ReflectionKind::h_sobrification);
    auto RX = reflect(X, sys(BaseSystem::D), ReflectionKind::h_sobrification);
    SpaceMap f(C, X, {0, 0, 1});
    auto fh = reflection_functor(f, RC, RX);
    auto b = *RC.hoare.index_of(C.down(1));
    CHECK(RX.hoare.member(fh(b)) == X.down(0));
    CHECK(reflection_functor(SpaceMap::identity(C), RC, RC).is_identity());
    SpaceMap g(X, C, {1, 2});
    CHECK(reflection_functor_laws(f, g, RC, RX, RC));
    auto lhs = reflection_functor(compose(g, f), RC, RC);
    auto rhs = compose(reflection_functor(g, RX, RC), reflection_functor(f, RC, RX));
    CHECK(lhs.assignment() == rhs.assignment());
}

TEST_CASE("reflections preserve finite products") {
    auto X = spaces::sierpinski();
    CHECK(product_preservation(X, X, sys(BaseSystem::R), ReflectionKind::h_sobrification).homeomorphism.size() == 4);
    auto p = product_preservation(spaces::antichain(2), spaces::chain(2), sys(BaseSystem::D),
                                  ReflectionKind::h_sobrification);
    CHECK(p.homeomorphism.size() == 4);
    CHECK(p.decompositions > 0);
    CHECK(product_preservation(spaces::one_point(), X, sys(BaseSystem::D), ReflectionKind::sobrification)
              .homeomorphism.size() == 2);
}

TEST_CASE("homeomorphism search") {
    auto h = homeomorphic(spaces::sierpinski(), spaces::chain(2));
    REQUIRE(h);
    CHECK(h->assignment() == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(homeomorphic(spaces::chain(2), spaces::antichain(2)));
    CHECK_FALSE(homeomorphic(spaces::diamond(), spaces::chain(4)));
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        auto X = random_space(rng, 7);
        std::vector<std::size_t> perm(X.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Bits> up(X.size(), Bits(X.size()));
        std::vector<std::string> labels(X.size());
        for (std::size_t a = 0; a < X.size(); ++a) {
            labels[perm[a]] = "p" + std::to_string(a);
            for (std::size_t b = 0; b < X.size(); ++b)
                if (X.leq(a, b)) up[perm[a]].set(perm[b]);
        }
        auto Y = FiniteSpace::from_order(labels, up);
        auto iso = homeomorphic(X, Y);
        REQUIRE(iso);
        for (std::size_t a = 0; a < X.size(); ++a)
            for (std::size_t b = 0; b < X.size(); ++b) CHECK(X.leq(a, b) == Y.leq((*iso)(a), (*iso)(b)));
    }
}
