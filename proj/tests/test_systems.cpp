#include <random>

#include "helpers.hpp"
#include "hsober/enumerate.hpp"
#include "hsober/map.hpp"
#include "hsober/systems.hpp"

using namespace hsober;
using test::L;
using test::S;

namespace {

SubsetSystemId sys(BaseSystem b) { return {b, std::nullopt}; }

std::vector<CompactSat> ups(const FiniteSpace& X, const std::vector<std::string>& pts) {
    std::vector<CompactSat> fam;
    for (const auto& p : pts) fam.push_back(principal_filter(X, *X.index_of(p)));
    return fam;
}

// Membership straight from the definitions.
bool member_oracle(BaseSystem b, const FiniteSpace& X, const Bits& a) {
    std::vector<std::size_t> xs;
    a.for_each([&](std::size_t i) { xs.push_back(i); });
    switch (b) {
        case BaseSystem::S: return xs.size() == 1;
        case BaseSystem::C:
        case BaseSystem::Cw:
            for (auto i : xs)
                for (auto j : xs)
                    if (!X.leq(i, j) && !X.leq(j, i)) return false;
            return true;
        case BaseSystem::D:
        case BaseSystem::Dw:
            for (auto i : xs)
                for (auto j : xs) {
                    bool ub = false;
                    for (auto k : xs) ub = ub || (X.leq(i, k) && X.leq(j, k));
                    if (!ub) return false;
                }
            return true;
        case BaseSystem::R:
        case BaseSystem::Rw: return is_irreducible_definitional(X, a);
    }
    return false;
}

std::vector<Bits> m_oracle(const FiniteSpace& X, const std::vector<Bits>& fam) {
    std::vector<Bits> in_m;
    for (const auto& c : test::all_subsets(X))
        if (test::is_down(X, c) && std::all_of(fam.begin(), fam.end(), [&](const Bits& k) { return k.intersects(c); }))
            in_m.push_back(c);
    std::vector<Bits> out;
    for (const auto& c : in_m)
        if (std::none_of(in_m.begin(), in_m.end(), [&](const Bits& d) { return d != c && d.subset_of(c); }))
            out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bits> bits_of(const std::vector<CompactSat>& fam) {
    std::vector<Bits> out;
    for (const auto& k : fam) out.push_back(k.bits);
    return out;
}

}  // namespace

TEST_CASE("system identifiers parse and print") {
    CHECK(SubsetSystemId::parse("D") == sys(BaseSystem::D));
    CHECK(SubsetSystemId::parse("Cw").base == BaseSystem::Cw);
    CHECK(SubsetSystemId::parse("R^D").derived == Derivation::D);
    CHECK(SubsetSystemId::parse("D^R").name() == "D^R");
    CHECK_THROWS_AS(SubsetSystemId::parse("D^R^d"), Error);
    try {
        SubsetSystemId::parse("D^R^d");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedDepth);
    }
    CHECK(all_systems().size() == 28);
    for (const auto& H : all_systems()) CHECK(SubsetSystemId::parse(H.name()) == H);
}

TEST_CASE("membership examples") {
    auto C = spaces::chain(3);
    CHECK(h_member(sys(BaseSystem::D), C, S(C, {"a", "c"})));
    auto A = spaces::antichain(2);
    CHECK_FALSE(h_member(sys(BaseSystem::R), A, S(A, {"a", "b"})));
    auto X = spaces::sierpinski();
    SubsetSystemId dr{BaseSystem::D, Derivation::R};
    CHECK(h_member(dr, X, S(X, {"a", "b"})));
    auto w = witness_for(dr, X, S(X, {"a", "b"}));
    REQUIRE(w);
    REQUIRE(w->family.size() == 1);
    CHECK(L(X, w->family[0]) == test::Labels{"b"});
    CHECK(L(X, w->minimal_set) == test::Labels{"a", "b"});
    CHECK(m_oracle(X, bits_of(w->family)) == std::vector<Bits>{w->minimal_set.bits});
    CHECK_THROWS_AS(h_member(sys(BaseSystem::D), X, S(X, {})), Error);
}

TEST_CASE("family membership examples") {
    auto C = spaces::chain(3);
    CHECK(h_family_member(sys(BaseSystem::C), C, ups(C, {"a", "b"})));
    auto A = spaces::antichain(2);
    CHECK_FALSE(h_family_member(sys(BaseSystem::D), A, ups(A, {"a", "b"})));
    auto X = spaces::sierpinski();
    CHECK(h_family_member(sys(BaseSystem::S), X, ups(X, {"b"})));
    try {
        h_family_member(sys(BaseSystem::S), X, {});
        FAIL("expected EmptyFamily");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyFamily);
    }
}

TEST_CASE("M and m examples") {
    auto C = spaces::chain(3);
    CHECK(meets_all(C, ups(C, {"b"}), as_closed(C, make_set(C, C.all()))));
    auto m = m_family(C, ups(C, {"b"}));
    REQUIRE(m.size() == 1);
    CHECK(L(C, m[0]) == test::Labels{"a", "b"});
    auto A = spaces::antichain(2);
    auto ma = m_family(A, ups(A, {"a", "b"}));
    REQUIRE(ma.size() == 1);
    CHECK(L(A, ma[0]) == test::Labels{"a", "b"});
}

TEST_CASE("Rudin descent examples") {
    auto C = spaces::chain(3);
    auto all = as_closed(C, make_set(C, C.all()));
    CHECK(L(C, rudin_minimal(C, ups(C, {"b"}), all)) == test::Labels{"a", "b"});
    auto X = spaces::sierpinski();
    CHECK(L(X, rudin_minimal(X, ups(X, {"b"}), as_closed(X, make_set(X, X.all())))) == test::Labels{"a", "b"});
    auto D = spaces::diamond();
    for (std::size_t x = 0; x < D.size(); ++x)
        CHECK(rudin_minimal(D, {principal_filter(D, x)}, point_closure(D, x)).bits == D.down(x));
    try {
        rudin_minimal(C, ups(C, {"c"}), point_closure(C, 0));
        FAIL("expected NotInM");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInM);
    }
}

TEST_CASE("property M and Q examples") {
    auto C = spaces::chain(3);
    CHECK(property_m_instance(sys(BaseSystem::S), C, ups(C, {"b"}), point_closure(C, 1)));
    CHECK(property_q_instance(sys(BaseSystem::S), C, ups(C, {"b"}), point_closure(C, 1)));
    auto q = property_q_outcome(sys(BaseSystem::S), C, ups(C, {"b"}), point_closure(C, 1));
    REQUIRE(q.generator);
    CHECK(L(C, *q.generator) == test::Labels{"b"});
    auto A = spaces::antichain(2);
    CHECK_FALSE(property_q_instance(sys(BaseSystem::S), A, ups(A, {"a", "b"}), as_closed(A, make_set(A, A.all()))));
    try {
        property_m_instance(sys(BaseSystem::D), A, ups(A, {"a", "b"}), as_closed(A, make_set(A, A.all())));
        FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionViolated);
    }
}

TEST_CASE("Scott H-open examples") {
    auto X = spaces::sierpinski();
    CHECK(scott_h_open(sys(BaseSystem::D), X, S(X, {"b"})));
    CHECK_FALSE(scott_h_open(sys(BaseSystem::D), X, S(X, {"a"})));
    auto C = spaces::chain(3);
    CHECK(scott_h_continuous(sys(BaseSystem::D), SpaceMap::identity(C)));
}

TEST_CASE("membership agrees with definitional oracles, hierarchy and collapse") {
    const std::vector<BaseSystem> order = {BaseSystem::S, BaseSystem::Cw, BaseSystem::C, BaseSystem::Dw,
                                           BaseSystem::D, BaseSystem::Rw, BaseSystem::R};
    for (const auto& X : poset_corpus(5)) {
        for (const auto& a : test::all_subsets(X)) {
            if (a.none()) continue;
            bool prev = false;
            for (auto b : order) {
                bool m = h_member_bits(sys(b), X, a);
                CHECK(m == member_oracle(b, X, a));
                if (prev) CHECK(m);
                prev = m;
                bool irr = is_irreducible_bits(X, a);
                for (auto d : {Derivation::d, Derivation::R, Derivation::D})
                    CHECK(h_member_bits({b, d}, X, a) == irr);
            }
        }
        for (const auto& H : base_systems()) {
            auto walk = h_closed_sets(H, X);
            CHECK(walk == h_closed_sets_bruteforce(H, X));
        }
    }
}

TEST_CASE("images of H-sets stay H-sets") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        auto X = random_space(rng, 5);
        auto Y = random_space(rng, 4);
        // A random monotone map: push each point above the images of its predecessors.
        std::vector<std::size_t> f(X.size());
        bool ok = true;
        for (std::size_t x = 0; x < X.size() && ok; ++x) {
            std::vector<std::size_t> cands;
            for (std::size_t y = 0; y < Y.size(); ++y) {
                bool good = true;
                for (std::size_t p = 0; p < x; ++p) {
                    if (X.leq(p, x) && !Y.leq(f[p], y)) good = false;
                    if (X.leq(x, p) && !Y.leq(y, f[p])) good = false;
                }
                if (good) cands.push_back(y);
            }
            if (cands.empty()) ok = false;
            else f[x] = cands[draw_index(rng, cands.size())];
        }
        if (!ok) continue;
        SpaceMap g(X, Y, f);
        for (const auto& a : test::all_subsets(X)) {
            if (a.none()) continue;
            for (const auto& H : all_systems())
                if (h_member_bits(H, X, a)) CHECK(h_member_bits(H, Y, g.image(a)));
        }
    }
}

TEST_CASE("Rudin descent equals the exhaustive minimal sets") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 150; ++i) {
        auto X = random_space(rng, 6);
        auto ks = compact_saturated_sets(X, 1u << 12);
        std::vector<CompactSat> fam;
        std::size_t m = 1 + draw_index(rng, 3);
        for (std::size_t j = 0; j < m; ++j) fam.push_back(as_compact(X, make_set(X, ks[draw_index(rng, ks.size())])));
        auto fb = bits_of(fam);
        auto oracle = m_oracle(X, fb);
        std::vector<Bits> lib;
        for (const auto& c : m_family(X, fam)) lib.push_back(c.bits);
        std::sort(lib.begin(), lib.end());
        CHECK(lib == oracle);
        for (const auto& c : closed_sets(X)) {
            if (!meets_all_bits(fb, c)) continue;
            auto r = rudin_minimal_bits(X, fb, c);
            CHECK(r.subset_of(c));
            CHECK(std::find(oracle.begin(), oracle.end(), r) != oracle.end());
            if (h_family_member_bits(sys(BaseSystem::R), X, fb)) CHECK(is_irreducible_bits(X, r));
        }
    }
}

TEST_CASE("property Q agrees with a subset scan") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        auto H = sys(i % 2 ? BaseSystem::S : BaseSystem::C);
        auto inst = random_rudin_instance(H, rng, 5);
        const auto& X = inst.space;
        bool expect = false;
        for (const auto& c : test::all_subsets(X))
            if (c.any() && c.subset_of(inst.closed) && h_member_bits(H, X, c) &&
                meets_all_bits(inst.family, X.down_of(c)))
                expect = true;
        std::vector<CompactSat> fam;
        for (const auto& k : inst.family) fam.push_back(as_compact(X, make_set(X, k)));
        CHECK(property_q_instance(H, X, fam, as_closed(X, make_set(X, inst.closed))) == expect);
    }
}

TEST_CASE("harnesses are deterministic and clean") {
    for (auto b : {BaseSystem::S, BaseSystem::C, BaseSystem::D, BaseSystem::R}) {
        auto r1 = property_m_harness(sys(b), 9, 120, 6);
        auto r2 = property_m_harness(sys(b), 9, 120, 6);
        CHECK(r1.failures == 0);
        CHECK(r1.to_json() == r2.to_json());
    }
    CHECK(property_q_harness(sys(BaseSystem::R), 9, 120, 6).failures == 0);
}
