// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hsober/checkers.hpp"
#include "hsober/constructions.hpp"
#include "hsober/enumerate.hpp"
#include "hsober/power.hpp"
#include "hsober/systems.hpp"
#include "hsober/zoo.hpp"

using namespace hsober;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

SubsetSystemId sys(BaseSystem b) { return {b, std::nullopt}; }

std::vector<FiniteSpace> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_points) {
    std::mt19937_64 rng(seed);
    std::vector<FiniteSpace> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_space(rng, max_points));
    return out;
}

const std::vector<FiniteSpace>& soundness_corpus() {
    static const std::vector<FiniteSpace> c = [] {
        auto all = poset_corpus(5);
        for (auto& X : random_corpus(7, 500, 8)) all.push_back(std::move(X));
        return all;
    }();
    return c;
}

std::vector<Bits> subsets(std::size_t n) {
    std::vector<Bits> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        Bits b(n);
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1) b.set(i);
        out.push_back(b);
    }
    return out;
}

bool down_closed(const FiniteSpace& X, const Bits& a) {
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j)
            if (a.test(j) && X.leq(i, j) && !a.test(i)) return false;
    return true;
}

Result finite_collapse() {
    const std::vector<std::string> plain = {"sober", "d_space", "well_filtered", "omega_well_filtered"};
    const std::vector<std::string> param = {"h_sober", "super_h_sober"};
    std::size_t verdicts = 0;
    for (const auto& X : soundness_corpus()) {
        SpaceChecker sc(X);
        auto take = [&](const Verdict& v, const std::string& what) -> std::optional<Result> {
            ++verdicts;
            if (v.holds && v.characterizations_agreed) return std::nullopt;
            return Result{false, what + " failed on " + space_to_json(X).dump()};
        };
        for (const auto& p : plain)
            if (auto r = take(sc.check(p), p)) return *r;
        for (const auto& p : param)
            for (const auto& H : base_systems())
                if (auto r = take(sc.check(p, H), p + "(" + H.name() + ")")) return *r;
    }
    return {true, std::to_string(soundness_corpus().size()) + " spaces, " + std::to_string(verdicts) + " verdicts"};
}

Result characterization_agreement() {
    std::size_t reports = 0, sampled = 0;
    for (const auto& X : soundness_corpus()) {
        SpaceChecker sc(X);
        for (const auto& H : base_systems()) {
            for (const auto& r : {sc.crosscheck_h_sober(H), sc.crosscheck_super(H)}) {
                ++reports;
                sampled += !r.exhaustive;
                bool all = r.agreed;
                for (const auto& c : r.conditions) all = all && c.value;
                if (!all) return {false, r.name + "(" + H.name() + ") disagrees on " + space_to_json(X).dump()};
            }
        }
    }
    return {true, std::to_string(reports) + " reports agree (" + std::to_string(sampled) + " used sampled families)"};
}

// Minimal closed sets meeting every member, by a scan over all down-sets.
std::vector<Bits> m_oracle(const std::vector<Bits>& downs, const std::vector<Bits>& fam) {
    std::vector<Bits> in_m;
    for (const auto& c : downs) {
        bool meets = true;
        for (const auto& k : fam) meets = meets && k.intersects(c);
        if (meets) in_m.push_back(c);
    }
    std::vector<Bits> out;
    for (const auto& c : in_m) {
        bool minimal = true;
        for (const auto& d : in_m) minimal = minimal && !(d != c && d.subset_of(c));
        if (minimal) out.push_back(c);
    }
    return out;
}

Result rudin_oracle() {
    std::size_t checks = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& X : posets_up_to_iso(n)) {
            std::vector<Bits> downs, ups;
            for (const auto& b : subsets(n)) {
                if (down_closed(X, b)) downs.push_back(b);
                if (b.any() && down_closed(X, X.all() - b)) ups.push_back(b);
            }
            const std::size_t k = ups.size();
            auto run = [&](const std::vector<Bits>& fam) -> std::optional<Result> {
                auto m = m_oracle(downs, fam);
                // In a finite poset a family is irreducible exactly when one member sits inside all others.
                bool irreducible = false;
                for (const auto& a : fam) {
                    bool least = true;
                    for (const auto& b : fam) least = least && a.subset_of(b);
                    irreducible = irreducible || least;
                }
                for (const auto& c : downs) {
                    bool meets = true;
                    for (const auto& f : fam) meets = meets && f.intersects(c);
                    if (!meets) continue;
                    auto r = rudin_minimal_bits(X, fam, c);
                    ++checks;
                    bool in_m = std::find(m.begin(), m.end(), r) != m.end();
                    bool irr_ok = !irreducible || is_irreducible_definitional(X, r);
                    if (!in_m || !r.subset_of(c) || !irr_ok)
                        return Result{false, "descent from " + nlohmann::json(set_labels(X, c)).dump() + " on " + space_to_json(X).dump()};
                }
                return std::nullopt;
            };
            for (std::size_t a = 0; a < k; ++a) {
                if (auto r = run({ups[a]})) return *r;
                for (std::size_t b = a + 1; b < k; ++b) {
                    if (auto r = run({ups[a], ups[b]})) return *r;
                    for (std::size_t c = b + 1; c < k; ++c)
                        if (auto r = run({ups[a], ups[b], ups[c]})) return *r;
                }
            }
        }
    }
    return {true, std::to_string(checks) + " descents"};
}

Result functor_laws() {
    std::vector<FiniteSpace> spaces;
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto& X : posets_up_to_iso(n)) spaces.push_back(std::move(X));
    std::vector<SmythSpace> P;
    std::vector<HoareSpace> H;
    for (const auto& X : spaces) {
        P.push_back(smyth(X));
        H.push_back(hoare(X, HoareFamily::all_closed));
        auto xi = xi_embed(P.back());
        auto eta = eta_embed(H.back());
        auto eta_irr = eta_embed(hoare(X, HoareFamily::irr_closed));
        for (const auto* e : {&xi, &eta, &eta_irr})
            if (!e->is_injective() || !e->is_order_embedding() || !e->is_topological_embedding())
                return {false, "unit is not an embedding on " + space_to_json(X).dump()};
        if (!smyth_map(SpaceMap::identity(X), P.back(), P.back()).is_identity() ||
            !hoare_map(SpaceMap::identity(X), H.back(), H.back()).is_identity())
            return {false, "identity law on " + space_to_json(X).dump()};
    }
    // Every map with its images under both functors, computed once.
    struct Hom {
        std::vector<SpaceMap> maps;
        std::vector<std::vector<std::size_t>> ps, ph;
        std::map<std::vector<std::size_t>, std::size_t> index;
    };
    const std::size_t s = spaces.size();
    std::vector<Hom> hom(s * s);
    for (std::size_t x = 0; x < s; ++x)
        for (std::size_t y = 0; y < s; ++y) {
            auto& h = hom[x * s + y];
            for (auto& f : continuous_maps(spaces[x], spaces[y])) {
                auto pf = smyth_map(f, P[x], P[y]);
                auto hf = hoare_map(f, H[x], H[y]);
                for (std::size_t k = 0; k < P[x].size(); ++k) {
                    Bits img = spaces[y].none();
                    P[x].member(k).for_each([&](std::size_t i) { img.set(f(i)); });
                    if (P[y].member(pf(k)) != spaces[y].up_of(img)) return {false, "Smyth action differs from up f(K)"};
                }
                for (std::size_t k = 0; k < H[x].size(); ++k) {
                    Bits img = spaces[y].none();
                    H[x].member(k).for_each([&](std::size_t i) { img.set(f(i)); });
                    if (H[y].member(hf(k)) != spaces[y].down_of(img)) return {false, "Hoare action differs from cl f(A)"};
                }
                h.index[f.assignment()] = h.maps.size();
                h.ps.push_back(pf.assignment());
                h.ph.push_back(hf.assignment());
                h.maps.push_back(std::move(f));
            }
        }
    std::size_t pairs = 0;
    for (std::size_t x = 0; x < s; ++x)
        for (std::size_t y = 0; y < s; ++y)
            for (std::size_t z = 0; z < s; ++z) {
                const auto &hf = hom[x * s + y], &hg = hom[y * s + z], &hgf = hom[x * s + z];
                std::vector<std::size_t> gf(spaces[x].size());
                for (std::size_t i = 0; i < hf.maps.size(); ++i)
                    for (std::size_t j = 0; j < hg.maps.size(); ++j) {
                        ++pairs;
                        for (std::size_t p = 0; p < gf.size(); ++p) gf[p] = hg.maps[j](hf.maps[i](p));
                        std::size_t c = hgf.index.at(gf);
                        for (std::size_t k = 0; k < P[x].size(); ++k)
                            if (hg.ps[j][hf.ps[i][k]] != hgf.ps[c][k]) return {false, "Smyth composition law"};
                        for (std::size_t k = 0; k < H[x].size(); ++k)
                            if (hg.ph[j][hf.ph[i][k]] != hgf.ph[c][k]) return {false, "Hoare composition law"};
                    }
            }
    std::size_t unions = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& X : posets_up_to_iso(n)) {
            auto U = smyth_union(X);
            for (const auto& u : open_sets(X)) {
                Bits box_u = U.inner.box(u);
                if (U.map.preimage(box_u) != U.outer.box(box_u)) return {false, "union preimage of a box"};
            }
            for (const auto& w : open_sets(U.inner.as_space()))
                if (!down_closed(U.outer.as_space(), U.outer.as_space().all() - U.map.preimage(w)))
                    return {false, "union map is not continuous"};
            ++unions;
        }
    return {true, std::to_string(spaces.size()) + " spaces, " + std::to_string(pairs) + " map pairs, " +
                      std::to_string(unions) + " union maps"};
}

Result hofmann_mislove_all() {
    std::size_t n = 0;
    for (const auto& X : poset_corpus(5)) {
        auto r = hofmann_mislove(X);
        ++n;
        if (!r.bijective() || r.compacts != r.filters) return {false, "Phi not bijective on " + space_to_json(X).dump()};
    }
    return {true, std::to_string(n) + " spaces"};
}

Result reflections() {
    auto corpus = poset_corpus(5);
    std::size_t reflections = 0, maps = 0, products = 0;
    for (const auto& X : corpus)
        for (auto b : {BaseSystem::D, BaseSystem::R})
            for (auto kind : {ReflectionKind::sobrification, ReflectionKind::h_sobrification,
                              ReflectionKind::super_h_sobrification}) {
                auto R = reflect(X, sys(b), kind);
                ++reflections;
                if (!homeomorphic(R.reflected, X)) return {false, "reflection not homeomorphic to its base"};
                if (!R.unit.is_topological_embedding()) return {false, "unit is not an embedding"};
                auto u = universal_property_verify(R, 4);
                maps += u.maps;
                if (!u.holds()) return {false, "universal property: " + u.counterexample.dump()};
            }
    for (const auto& X : corpus)
        for (const auto& Y : corpus) {
            if (X.size() * Y.size() > 9) continue;
            for (auto b : {BaseSystem::D, BaseSystem::R}) {
                try {
                    product_preservation(X, Y, sys(b), ReflectionKind::h_sobrification);
                } catch (const Error& e) {
                    return {false, std::string("product preservation: ") + e.what()};
                }
                ++products;
            }
        }
    return {true, std::to_string(reflections) + " reflections, " + std::to_string(maps) + " maps factored, " +
                      std::to_string(products) + " products"};
}

Result property_sweeps() {
    std::ostringstream detail;
    Result res;
    auto record = [&](const HarnessReport& r) {
        detail << r.property << "(" << r.system << ") " << r.instances - r.failures << "/" << r.instances << "; ";
        if (r.failures) {
            res.pass = false;
            detail << "counterexample " << r.counterexample->to_json().dump() << "; ";
        }
    };
    for (auto b : {BaseSystem::S, BaseSystem::C, BaseSystem::D, BaseSystem::R}) record(property_m_harness(sys(b), 7, 1000, 6));
    record(property_q_harness(sys(BaseSystem::R), 7, 1000, 6));
    res.detail = detail.str();
    return res;
}

Result zoo() {
    const std::map<std::pair<std::string, std::string>, CertVerdict> expected = {
        {{"cofinite_nat", "K_is_all_nonempty"}, CertVerdict::verified},
        {{"cofinite_nat", "irr_closed"}, CertVerdict::verified},
        {{"cofinite_nat", "X_in_DR"}, CertVerdict::verified},
        {{"cofinite_nat", "not_well_filtered"}, CertVerdict::verified},
        {{"cocountable", "K_is_finite_sets"}, CertVerdict::verified},
        {{"cocountable", "wf_not_sober"}, CertVerdict::checked_to_depth},
        {{"johnstone", "tails_compact"}, CertVerdict::verified},
        {{"johnstone", "not_well_filtered"}, CertVerdict::verified},
        {{"johnstone", "is_dcpo_d_space"}, CertVerdict::checked_to_depth},
    };
    if (zoo_claims().size() != expected.size()) return {false, "registered claims differ"};
    std::size_t facts = 0;
    for (const auto& [space, claim] : zoo_claims()) {
        auto it = expected.find({space, claim});
        if (it == expected.end()) return {false, "unexpected claim " + space + "." + claim};
        auto r = verify_claim(space, claim);
        if (r.verdict != it->second) return {false, space + "." + claim + " is " + to_string(r.verdict)};
        if (!revalidate(r)) return {false, space + "." + claim + " transcript fails revalidation"};
        facts += r.transcript.size();
    }
    return {true, std::to_string(expected.size()) + " claims, " + std::to_string(facts) + " facts revalidated"};
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    status = pclose(p);
    return out;
}

Result determinism() {
    const std::string cmd = std::string("\"") + HSOBER_CLI + "\" sweep --seed 7";
    int s1 = 0, s2 = 0;
    auto a = capture(cmd, s1);
    auto b = capture(cmd, s2);
    if (s1 != 0 || s2 != 0) return {false, "sweep exited with status " + std::to_string(s1) + "/" + std::to_string(s2)};
    if (a.empty() || a != b) return {false, "reports differ"};
    return {true, std::to_string(a.size()) + " identical bytes"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"finite-collapse soundness", finite_collapse},
        {"characterization agreement", characterization_agreement},
        {"Rudin oracle equivalence", rudin_oracle},
        {"functor and embedding laws", functor_laws},
        {"Hofmann-Mislove at finite scale", hofmann_mislove_all},
        {"reflection correctness", reflections},
        {"property M/Q instance sweeps", property_sweeps},
        {"zoo certificates", zoo},
        {"determinism", determinism},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("threw: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && r.pass;
        char t[32];
        std::snprintf(t, sizeof t, "%.1fs", secs);
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << ": "
                  << r.detail << " [" << t << "]" << std::endl;
    }
    return all ? 0 : 1;
}
