#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "hsober/enumerate.hpp"

using namespace hsober;
using test::L;
using test::S;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvariantViolation;
}

// Closure as the intersection of every closed set containing a.
Bits closure_oracle(const FiniteSpace& X, const Bits& a) {
    Bits r = X.all();
    for (const auto& c : test::all_subsets(X))
        if (test::is_down(X, c) && a.subset_of(c)) r &= c;
    return r;
}

}  // namespace

TEST_CASE("parse: covers and open families describe the same space") {
    auto A = parse_space_text(R"({"points":["a","b"],"covers":[["a","b"]]})");
    auto B = parse_space_text(R"({"points":["a","b"],"opens":[[],["b"],["a","b"]]})");
    CHECK(A.same_as(B));
    CHECK(A.leq(0, 1));
    CHECK_FALSE(A.leq(1, 0));
}

TEST_CASE("parse: rejected documents") {
    CHECK(kind_of([] { parse_space_text(R"({"points":["a","b"],"opens":[[],["a","b"]]})"); }) == ErrorKind::NotT0);
    CHECK(kind_of([] { parse_space_text(R"({"points":["a","b"],"opens":[["a"],["b"],["a","b"]]})"); }) ==
          ErrorKind::NotATopology);
    CHECK(kind_of([] { parse_space_text(R"({"points":["a","a"],"covers":[]})"); }) == ErrorKind::DuplicateLabel);
    CHECK(kind_of([] { parse_space_text(R"({"points":[],"covers":[]})"); }) == ErrorKind::EmptySpace);
    CHECK(kind_of([] { parse_space_text("{not json"); }) == ErrorKind::ParseError);
}

TEST_CASE("parse: serialization round-trips") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto X = random_space(rng, 7);
        auto Y = parse_space(space_to_json(X));
        CHECK(X.same_as(Y));
        CHECK(space_to_json(Y) == space_to_json(X));
    }
}

TEST_CASE("closure and saturation examples") {
    auto X = spaces::sierpinski();
    CHECK(L(X, closure(X, S(X, {"b"}))) == test::Labels{"a", "b"});
    CHECK(L(X, closure(X, S(X, {"a"}))) == test::Labels{"a"});
    CHECK(L(X, saturation(X, S(X, {"a"}))) == test::Labels{"a", "b"});
    CHECK(L(X, saturation(X, S(X, {"b"}))) == test::Labels{"b"});
    auto C = spaces::chain(3);
    CHECK(closure(C, S(C, {"b"})).bits == closure_oracle(C, S(C, {"b"}).bits));
    CHECK(L(C, closure(C, S(C, {"b"}))) == test::Labels{"a", "b"});
    auto D = spaces::diamond();
    CHECK(L(D, saturation(D, S(D, {"a"}))) == test::Labels{"a", "top"});
}

TEST_CASE("closure rejects a set from another space") {
    auto X = spaces::sierpinski();
    auto Y = spaces::sierpinski();
    CHECK(kind_of([&] { closure(X, S(Y, {"a"})); }) == ErrorKind::SpaceMismatch);
}

TEST_CASE("order calculus examples") {
    auto A = spaces::antichain(2);
    CHECK(order_calculus(A, S(A, {"a", "b"}), OrderOp::upper_bounds).bits.none());
    auto D = spaces::diamond();
    CHECK(L(D, order_calculus(D, S(D, {"a", "b"}), OrderOp::cut)) == test::Labels{"bot", "a", "b", "top"});
    auto C = spaces::chain(3);
    CHECK(L(C, order_calculus(C, S(C, {"a", "b"}), OrderOp::maximals)) == test::Labels{"b"});
    CHECK(L(C, order_calculus(C, S(C, {"b", "c"}), OrderOp::minimals)) == test::Labels{"b"});
    CHECK(L(C, order_calculus(C, S(C, {"b"}), OrderOp::lower_bounds)) == test::Labels{"a", "b"});
}

TEST_CASE("directedness and chain cores") {
    auto A = spaces::antichain(2);
    CHECK_FALSE(is_directed(A, S(A, {"a", "b"})));
    auto C = spaces::chain(3);
    CHECK(is_directed(C, S(C, {"a", "c"})));
    auto D = spaces::diamond();
    CHECK(L(D, chain_core(D, S(D, {"bot", "a", "top"}))) == test::Labels{"top"});
    CHECK(kind_of([&] { chain_core(D, S(D, {"a", "b"})); }) == ErrorKind::NotDirected);
    CHECK(kind_of([&] { chain_core(D, S(D, {})); }) == ErrorKind::EmptySet);
}

TEST_CASE("irreducibility examples") {
    auto X = spaces::sierpinski();
    CHECK(is_irreducible(X, S(X, {"a", "b"})));
    CHECK(is_irreducible_definitional(X, S(X, {"a", "b"}).bits));
    auto A = spaces::antichain(2);
    CHECK_FALSE(is_irreducible(A, S(A, {"a", "b"})));
    auto D = spaces::diamond();
    for (std::size_t x = 0; x < D.size(); ++x) CHECK(is_irreducible(D, make_set(D, D.single(x))));
    CHECK(kind_of([&] { is_irreducible(A, S(A, {})); }) == ErrorKind::EmptySet);
}

TEST_CASE("family enumeration examples") {
    auto X = spaces::sierpinski();
    auto irr = enumerate_families(X, Family::irr_closed);
    REQUIRE(irr.size() == 2);
    CHECK(L(X, irr[0]) == test::Labels{"a"});
    CHECK(L(X, irr[1]) == test::Labels{"a", "b"});
    auto k = enumerate_families(X, Family::compact_saturated);
    REQUIRE(k.size() == 2);
    CHECK(L(X, k[0]) == test::Labels{"b"});
    CHECK(L(X, k[1]) == test::Labels{"a", "b"});
    auto A = spaces::antichain(2);
    auto ia = enumerate_families(A, Family::irr_closed);
    REQUIRE(ia.size() == 2);
    CHECK(L(A, ia[0]) == test::Labels{"a"});
    CHECK(L(A, ia[1]) == test::Labels{"b"});
    CHECK(kind_of([] { enumerate_families(spaces::antichain(15), Family::closed); }) == ErrorKind::CapExceeded);
}

TEST_CASE("minimal points and down-meet examples") {
    auto D = spaces::diamond();
    CHECK(L(D, minimal_points(D, as_compact(D, S(D, {"a", "b", "top"})))) == test::Labels{"a", "b"});
    auto C = spaces::chain(3);
    CHECK(L(C, minimal_points(C, as_compact(C, S(C, {"b", "c"})))) == test::Labels{"b"});
    CHECK(down_meet_closed(D, principal_filter(D, 1), point_closure(D, 2)).bits.none());
    CHECK(L(C, down_meet_closed(C, principal_filter(C, 1), point_closure(C, 1))) == test::Labels{"a", "b"});
    CHECK(down_meet_closed(C, as_compact(C, make_set(C, C.all())), as_closed(C, make_set(C, C.all()))).bits == C.all());
}

TEST_CASE("invariants over every poset with at most five points") {
    for (const auto& X : poset_corpus(5)) {
        auto opens = open_sets(X);
        auto closed = closed_sets(X);
        // Alexandroff collapse: opens are exactly the up-sets.
        std::size_t ups = 0, downs = 0;
        for (const auto& a : test::all_subsets(X)) {
            ups += test::is_up(X, a);
            downs += test::is_down(X, a);
        }
        CHECK(opens.size() == ups);
        CHECK(closed.size() == downs);
        auto again = FiniteSpace::from_opens(X.labels(), opens);
        CHECK(again.same_as(X));

        std::vector<Bits> pcs;
        for (std::size_t x = 0; x < X.size(); ++x) pcs.push_back(X.down(x));
        std::vector<Bits> irr_def;
        for (const auto& c : closed)
            if (c.any() && is_irreducible_definitional(X, c)) irr_def.push_back(c);
        std::sort(pcs.begin(), pcs.end());
        std::sort(irr_def.begin(), irr_def.end());
        CHECK(pcs == irr_def);

        for (const auto& a : test::all_subsets(X)) {
            auto A = make_set(X, a);
            auto cl = closure(X, A).bits;
            CHECK(cl == closure_oracle(X, a));
            CHECK(a.subset_of(cl));
            CHECK(closure(X, make_set(X, cl)).bits == cl);
            CHECK(X.upper_bounds(a) == X.upper_bounds(cl));
            CHECK(order_calculus(X, A, OrderOp::cut) == order_calculus(X, make_set(X, cl), OrderOp::cut));
            if (a.none()) continue;
            CHECK(is_irreducible(X, A) == is_irreducible(X, make_set(X, cl)));
            CHECK(is_irreducible_bits(X, a) == is_irreducible_definitional(X, a));
            if (is_directed_bits(X, a)) CHECK(X.greatest(cl).has_value());
            if (test::is_up(X, a)) {
                auto K = as_compact(X, A);
                CHECK(X.up_of(minimal_points(X, K).bits) == a);
                for (const auto& c : closed) {
                    auto r = down_meet_closed(X, K, as_closed(X, make_set(X, c))).bits;
                    CHECK(test::is_down(X, r));
                    Bits u = X.none();
                    a.for_each([&](std::size_t k) { u |= X.down_of(X.up(k) & c); });
                    CHECK(r == u);
                }
            }
        }
    }
}

TEST_CASE("closure operator is monotone") {
    auto X = spaces::diamond();
    auto subsets = test::all_subsets(X);
    for (const auto& a : subsets)
        for (const auto& b : subsets)
            if (a.subset_of(b)) {
                CHECK(X.down_of(a).subset_of(X.down_of(b)));
                CHECK(X.up_of(a).subset_of(X.up_of(b)));
            }
}

TEST_CASE("poset enumeration matches a permutation-canonical oracle") {
    // Oracle: all labeled partial orders by raw relation masks, each reduced
    // to its least relation code over all n! relabelings.
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) pairs.emplace_back(i, j);
        std::set<std::uint64_t> classes;
        std::vector<std::size_t> perm(n);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
            auto rel = [&](std::size_t i, std::size_t j) {
                if (i == j) return true;
                for (std::size_t k = 0; k < pairs.size(); ++k)
                    if (pairs[k] == std::pair{i, j}) return bool(m >> k & 1);
                return false;
            };
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = 0; j < n && ok; ++j) {
                    if (i != j && rel(i, j) && rel(j, i)) ok = false;
                    for (std::size_t k = 0; k < n && ok; ++k)
                        if (rel(i, j) && rel(j, k) && !rel(i, k)) ok = false;
                }
            if (!ok) continue;
            std::iota(perm.begin(), perm.end(), 0);
            std::uint64_t best = ~std::uint64_t{0};
            do {
                std::uint64_t c = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (rel(perm[i], perm[j])) c |= std::uint64_t{1} << (i * n + j);
                best = std::min(best, c);
            } while (std::next_permutation(perm.begin(), perm.end()));
            classes.insert(best);
        }
        auto posets = posets_up_to_iso(n);
        CHECK(posets.size() == classes.size());
        for (std::size_t a = 0; a < posets.size(); ++a)
            for (std::size_t b = a + 1; b < posets.size(); ++b) CHECK_FALSE(find_isomorphism(posets[a], posets[b]));
    }
    CHECK(poset_corpus(5).size() == 87);
}

TEST_CASE("canonical codes are relabeling invariant") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        auto X = random_space(rng, 7);
        std::vector<std::size_t> perm(X.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> labels(X.size());
        std::vector<Bits> up(X.size(), Bits(X.size()));
        for (std::size_t a = 0; a < X.size(); ++a) {
            labels[perm[a]] = "q" + std::to_string(a);
            for (std::size_t b = 0; b < X.size(); ++b)
                if (X.leq(a, b)) up[perm[a]].set(perm[b]);
        }
        auto Y = FiniteSpace::from_order(labels, up);
        CHECK(canonical_code(X) == canonical_code(Y));
        auto f = find_isomorphism(X, Y);
        REQUIRE(f);
        for (std::size_t a = 0; a < X.size(); ++a)
            for (std::size_t b = 0; b < X.size(); ++b) CHECK(X.leq(a, b) == Y.leq((*f)[a], (*f)[b]));
    }
}
