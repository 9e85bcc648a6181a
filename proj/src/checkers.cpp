#include "hsober/checkers.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace hsober {

using nlohmann::json;

namespace {

constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

const std::vector<std::string> kProperties = {
    "t0",     "d_space",       "sober",     "well_filtered", "omega_well_filtered", "h_sober",     "super_h_sober",
    "h_complete", "h_bounded", "hip",       "smyth_h_complete", "h_consonant",      "locally_hypercompact",
};

bool agreed(const std::vector<Characterization>& cs) {
    return std::all_of(cs.begin(), cs.end(), [&](const Characterization& c) { return c.value == cs.front().value; });
}

Verdict make_verdict(std::string property, std::vector<Characterization> cs, json evidence) {
    Verdict v;
    v.property = std::move(property);
    v.holds = cs.front().value;
    v.characterizations_agreed = agreed(cs);
    v.characterizations = std::move(cs);
    v.evidence = std::move(evidence);
    return v;
}

std::uint64_t family_seed(const SubsetSystemId& H) {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    for (char c : H.name()) s = (s ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
    return s;
}

SubsetSystemId sys(BaseSystem b) { return {b, std::nullopt}; }

json labels_of(const FiniteSpace& X, const Bits& b) { return set_labels(X, b); }

// A family of compacts as label arrays.
json family_json(const SmythSpace& PX, const Bits& fam) {
    json j = json::array();
    fam.for_each([&](std::size_t k) { j.push_back(set_labels(PX.base(), PX.member(k))); });
    return j;
}

// Every member of the family contained in u?
bool some_member_inside(const SmythSpace& PX, const Bits& fam, const Bits& u) {
    bool found = false;
    fam.for_each([&](std::size_t k) { found = found || PX.member(k).subset_of(u); });
    return found;
}

Bits meet_of(const SmythSpace& PX, const Bits& fam) {
    Bits m = PX.base().all();
    fam.for_each([&](std::size_t k) { m &= PX.member(k); });
    return m;
}

struct SoberScan {
    bool holds = true;
    json evidence;
};

// H_c(Y) = S_c(Y), with a generic point per closed H-set.
SoberScan h_sober_scan(const SubsetSystemId& H, const FiniteSpace& Y, bool list_points) {
    SoberScan r;
    json pts = json::array();
    for (const auto& c : h_closed_sets(H, Y)) {
        auto g = Y.greatest(c);
        if (!g || Y.down(*g) != c) {
            r.holds = false;
            r.evidence = {{"counterexample", {{"closed", labels_of(Y, c)}}}};
            return r;
        }
        if (list_points) pts.push_back({{"closed", labels_of(Y, c)}, {"point", Y.label(*g)}});
    }
    r.evidence = list_points ? json{{"generic_points", pts}} : json::object();
    return r;
}

}  // namespace

json Verdict::to_json() const {
    json cs = json::array();
    for (const auto& c : characterizations) cs.push_back({{"name", c.name}, {"value", c.value}});
    return {{"property", property},
            {"holds", holds},
            {"evidence", evidence},
            {"characterizations", cs},
            {"characterizations_agreed", characterizations_agreed}};
}

json CrosscheckReport::to_json() const {
    json cs = json::array();
    for (const auto& c : conditions) cs.push_back({{"name", c.name}, {"value", c.value}});
    return {{"name", name}, {"conditions", cs}, {"agreed", agreed}, {"exhaustive", exhaustive}};
}

const std::vector<std::string>& property_names() { return kProperties; }

bool property_needs_system(const std::string& p) {
    return p == "h_sober" || p == "super_h_sober" || p == "h_complete" || p == "h_bounded" || p == "hip" ||
           p == "smyth_h_complete" || p == "h_consonant";
}

struct SpaceChecker::Cache {
    std::optional<SmythSpace> ps;
    std::map<std::string, HSetSample> pfams;
    std::map<std::string, HSetSample> xsets;
    std::optional<std::vector<Bits>> closed_x;
    std::optional<std::vector<Bits>> opens_x;
};

SpaceChecker::SpaceChecker(FiniteSpace X, const Caps& caps)
    : X_(std::move(X)), caps_(caps), cache_(std::make_unique<Cache>()) {}
SpaceChecker::~SpaceChecker() = default;
SpaceChecker::SpaceChecker(SpaceChecker&&) noexcept = default;
SpaceChecker& SpaceChecker::operator=(SpaceChecker&&) noexcept = default;

const SmythSpace& SpaceChecker::smyth_space() {
    if (!cache_->ps) cache_->ps = SmythSpace::build(X_, caps_);
    return *cache_->ps;
}

namespace {

struct Ctx {
    const FiniteSpace& X;
    const Caps& caps;
    std::function<const SmythSpace&()> ps;
    std::function<const HSetSample&(const SubsetSystemId&)> pfams;
    std::function<const HSetSample&(const SubsetSystemId&)> xsets;
    std::function<const std::vector<Bits>&()> closed;
    std::function<const std::vector<Bits>&()> opens;
};

// Each sup of an H-set depends only on its closure, so completeness and
// boundedness can be read off either H-sets or closed H-sets.
bool complete_over(const FiniteSpace& X, const std::vector<Bits>& sets, bool need_sup) {
    for (const auto& a : sets) {
        Bits ub = X.upper_bounds(a);
        if (need_sup ? !X.least(ub).has_value() : ub.none()) return false;
    }
    return true;
}

// Opens of X are Scott H-open: each H-set whose sup lies in an open meets it.
bool opens_scott(const Ctx& c, const SubsetSystemId& H) {
    const auto& sets = c.xsets(H).sets;
    std::vector<std::pair<const Bits*, std::size_t>> with_sup;
    for (const auto& a : sets)
        if (auto s = supremum(c.X, a)) with_sup.emplace_back(&a, *s);
    if (c.X.size() <= c.caps.family_points) {
        for (const auto& u : c.opens())
            for (const auto& [a, s] : with_sup)
                if (u.test(s) && !a->intersects(u)) return false;
        return true;
    }
    // up s is the least open containing s.
    for (const auto& [a, s] : with_sup)
        if (!a->intersects(c.X.up(s))) return false;
    return true;
}

// A ∩ A^up nonempty for each closed H-set.
bool closed_meets_bounds(const FiniteSpace& X, const std::vector<Bits>& hc) {
    for (const auto& a : hc)
        if (!a.intersects(X.upper_bounds(a))) return false;
    return true;
}

bool closure_meets_bounds(const FiniteSpace& X, const std::vector<Bits>& hs) {
    for (const auto& a : hs)
        if (!X.down_of(a).intersects(X.upper_bounds(a))) return false;
    return true;
}

// For every A and open U: A^up inside U forces A to meet U. The conclusion
// grows with U, so beyond the scan size the least candidate A^up decides.
bool open_filtration(const Ctx& c, const std::vector<Bits>& sets) {
    const bool scan = c.X.size() <= c.caps.open_scan_points;
    for (const auto& a : sets) {
        Bits ub = c.X.upper_bounds(a);
        if (scan) {
            for (const auto& u : c.opens())
                if (ub.subset_of(u) && !a.intersects(u)) return false;
        } else if (!a.intersects(ub)) {
            return false;
        }
    }
    return true;
}

// up(C ∩ A^up) = ⋂_{a∈A} up(C ∩ up a).
bool bounded_equation(const FiniteSpace& X, const std::vector<Bits>& as, const std::vector<Bits>& cs) {
    for (const auto& a : as) {
        Bits ub = X.upper_bounds(a);
        for (const auto& cl : cs) {
            Bits lhs = X.up_of(cl & ub);
            Bits rhs = X.all();
            a.for_each([&](std::size_t x) { rhs &= X.up_of(cl & X.up(x)); });
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<Bits> sample_closed(const std::vector<Bits>& all, std::size_t limit, bool& exhaustive) {
    if (all.size() <= limit) return all;
    exhaustive = false;
    std::vector<Bits> out(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(limit - 1));
    out.push_back(all.back());
    return out;
}

// Filtration over a single family of compacts, in the six equivalent shapes.
struct FamilyTerms {
    Bits meet;   // ⋂ family, in X
    Bits ub;     // upper bounds in P_S(X)
};

FamilyTerms terms(const SmythSpace& PX, const Bits& fam) {
    return {meet_of(PX, fam), PX.as_space().upper_bounds(fam)};
}

}  // namespace

namespace {

Ctx make_ctx(SpaceChecker& self, const FiniteSpace& X, const Caps& caps,
             std::function<const HSetSample&(const SubsetSystemId&)> pf,
             std::function<const HSetSample&(const SubsetSystemId&)> xs, std::function<const std::vector<Bits>&()> cl,
             std::function<const std::vector<Bits>&()> op) {
    return Ctx{X, caps, [&self]() -> const SmythSpace& { return self.smyth_space(); }, std::move(pf), std::move(xs),
               std::move(cl), std::move(op)};
}

}  // namespace

#define HS_CTX                                                                                          \
    make_ctx(                                                                                           \
        *this, X_, caps_,                                                                               \
        [this](const SubsetSystemId& H) -> const HSetSample& {                                          \
            auto key = H.name();                                                                        \
            auto it = cache_->pfams.find(key);                                                          \
            if (it == cache_->pfams.end()) {                                                            \
                const auto& P = smyth_space().as_space();                                               \
                auto s = h_sets_sample(H, P, caps_.family_budget, family_seed(H));                      \
                for (const auto& f : s.sets) ensure(h_member_bits(H, P, f), "sampled family outside H"); \
                it = cache_->pfams.emplace(key, std::move(s)).first;                                    \
            }                                                                                           \
            return it->second;                                                                          \
        },                                                                                              \
        [this](const SubsetSystemId& H) -> const HSetSample& {                                          \
            auto key = H.name();                                                                        \
            auto it = cache_->xsets.find(key);                                                          \
            if (it == cache_->xsets.end()) {                                                            \
                HSetSample s;                                                                           \
                if (X_.size() <= caps_.subset_points)                                                   \
                    s.sets = h_sets_bruteforce(H, X_, caps_);                                           \
                else                                                                                    \
                    s = h_sets_sample(H, X_, caps_.family_budget, family_seed(H));                      \
                it = cache_->xsets.emplace(key, std::move(s)).first;                                    \
            }                                                                                           \
            return it->second;                                                                          \
        },                                                                                              \
        [this]() -> const std::vector<Bits>& {                                                          \
            if (!cache_->closed_x) cache_->closed_x = closed_sets(X_, caps_);                           \
            return *cache_->closed_x;                                                                   \
        },                                                                                              \
        [this]() -> const std::vector<Bits>& {                                                          \
            if (!cache_->opens_x) cache_->opens_x = open_sets(X_, caps_);                               \
            return *cache_->opens_x;                                                                    \
        })

CrosscheckReport SpaceChecker::crosscheck_h_sober(const SubsetSystemId& H) {
    Ctx c = HS_CTX;
    const auto& hs = c.xsets(H);
    auto hc = h_closed_sets(H, X_);
    CrosscheckReport r;
    r.name = "h_sober:" + H.name();
    r.exhaustive = hs.exhaustive;
    bool ex = true;
    auto gam = sample_closed(c.closed(), caps_.closed_sample, ex);
    auto hc_s = sample_closed(hc, caps_.closed_sample, ex);
    r.exhaustive = r.exhaustive && ex;

    bool sober = h_sober_scan(H, X_, false).holds;
    bool bounded = complete_over(X_, hs.sets, false);
    r.conditions = {
        {"closed_h_sets_are_point_closures", sober},
        {"closure_meets_upper_bounds", closure_meets_bounds(X_, hs.sets)},
        {"closed_h_set_meets_upper_bounds", closed_meets_bounds(X_, hc)},
        {"open_filtration_h_sets", open_filtration(c, hs.sets)},
        {"open_filtration_closed_h_sets", open_filtration(c, hc)},
        {"point_closures_again", sober},
        {"bounded_equation_h_sets_closed", bounded && bounded_equation(X_, hs.sets, gam)},
        {"bounded_equation_closed_h_sets_closed", bounded && bounded_equation(X_, hc, gam)},
        {"bounded_equation_h_sets_closed_h_sets", bounded && bounded_equation(X_, hs.sets, hc_s)},
        {"bounded_equation_closed_h_sets_twice", bounded && bounded_equation(X_, hc, hc_s)},
    };
    r.agreed = agreed(r.conditions);
    return r;
}

CrosscheckReport SpaceChecker::crosscheck_super(const SubsetSystemId& H) {
    Ctx c = HS_CTX;
    const auto& PX = smyth_space();
    const auto& P = PX.as_space();
    const auto& fams = c.pfams(H);
    CrosscheckReport r;
    r.name = "super_h_sober:" + H.name();
    r.exhaustive = fams.exhaustive;

    std::vector<FamilyTerms> ts;
    ts.reserve(fams.sets.size());
    for (const auto& f : fams.sets) ts.push_back(terms(PX, f));

    const bool scan_p = P.size() <= caps_.smyth_open_scan;
    const bool scan_x = X_.size() <= caps_.open_scan_points;
    std::vector<Bits> p_opens;
    if (scan_p) p_opens = up_sets(P, kUnlimited);
    else r.exhaustive = false;

    bool s1 = h_sober_scan(H, P, false).holds;
    bool s2 = true, s3 = true, s4 = true, s5 = true, s6 = true, hip = true;
    for (std::size_t i = 0; i < fams.sets.size(); ++i) {
        const Bits& f = fams.sets[i];
        const auto& t = ts[i];
        if (!P.down_of(f).intersects(t.ub)) s2 = false;
        if (scan_p) {
            for (const auto& u : p_opens)
                if (t.ub.subset_of(u) && !f.intersects(u)) s3 = false;
        } else if (!f.intersects(t.ub)) {
            s3 = false;
        }
        Bits least_u = X_.none();
        t.ub.for_each([&](std::size_t k) { least_u |= PX.member(k); });
        if (scan_x) {
            for (const auto& u : c.opens()) {
                if (t.ub.subset_of(PX.box(u)) && !some_member_inside(PX, f, u)) s4 = false;
                if (t.meet.subset_of(u) && !some_member_inside(PX, f, u)) s5 = false;
            }
        } else {
            if (!some_member_inside(PX, f, least_u)) s4 = false;
            if (!some_member_inside(PX, f, t.meet)) s5 = false;
        }
        if (t.meet.none()) hip = false;
    }
    s6 = hip && s5;

    // Equational forms, with the closed sets of P_S(X) and X sampled.
    bool ex = true;
    std::vector<Bits> gamma_p;
    if (scan_p) {
        gamma_p = down_sets(P, kUnlimited);
    } else {
        for (std::size_t x = 0; x < X_.size(); ++x) gamma_p.push_back(P.down(PX.require_index(X_.up(x))));
        for (const auto& cl : c.closed())
            if (cl.any()) gamma_p.push_back(PX.diamond(cl));
        std::sort(gamma_p.begin(), gamma_p.end(), Bits::size_lex_less);
        gamma_p.erase(std::unique(gamma_p.begin(), gamma_p.end()), gamma_p.end());
        ex = false;
    }
    gamma_p = sample_closed(gamma_p, caps_.closed_sample, ex);
    std::vector<Bits> irr_p;
    for (std::size_t x = 0; x < X_.size(); ++x) irr_p.push_back(P.down(PX.require_index(X_.up(x))));
    for (std::size_t k = 0; k < P.size() && irr_p.size() < caps_.closed_sample; ++k) irr_p.push_back(P.down(k));
    if (irr_p.size() < P.size() + X_.size()) ex = ex && P.size() <= caps_.closed_sample;
    auto gamma_x = sample_closed(c.closed(), caps_.closed_sample, ex);
    r.exhaustive = r.exhaustive && ex;

    auto eq_p = [&](const std::vector<Bits>& cs) {
        for (std::size_t i = 0; i < fams.sets.size(); ++i) {
            const Bits& f = fams.sets[i];
            for (const auto& cl : cs) {
                Bits lhs = P.up_of(cl & ts[i].ub);
                Bits rhs = P.all();
                f.for_each([&](std::size_t k) { rhs &= P.up_of(cl & P.up(k)); });
                if (lhs != rhs) return false;
            }
        }
        return true;
    };
    auto eq_x = [&](const std::vector<Bits>& cs) {
        for (std::size_t i = 0; i < fams.sets.size(); ++i) {
            const Bits& f = fams.sets[i];
            for (const auto& cl : cs) {
                Bits lhs = X_.up_of(cl & ts[i].meet);
                Bits rhs = X_.all();
                f.for_each([&](std::size_t k) { rhs &= X_.up_of(cl & PX.member(k)); });
                if (lhs != rhs) return false;
            }
        }
        return true;
    };
    std::vector<Bits> irr_x;
    for (std::size_t x = 0; x < X_.size(); ++x) irr_x.push_back(X_.down(x));

    // Psi forms over the derived closed sets.
    auto psi = [&](Derivation d) {
        for (const auto& a : h_closed_sets({H.base, d}, X_)) {
            Bits psi_a = PX.diamond(a);
            if (psi_a.none() || !P.is_down_set(psi_a) || !is_directed_bits(P, psi_a)) return false;
            if (X_.maximal(a).none()) return false;
            for (const auto& k : PX.carrier())
                if (!X_.is_down_set(X_.down_of(a & k))) return false;
        }
        return true;
    };

    r.conditions = {
        {"smyth_space_h_sober", s1},
        {"smyth_closure_meets_upper_bounds", s2},
        {"smyth_open_filtration", s3},
        {"box_filtration", s4},
        {"intersection_filtration", s5},
        {"intersection_compact_and_filtration", s6},
        {"hip_and_smyth_equation_closed", hip && eq_p(gamma_p)},
        {"hip_and_smyth_equation_irreducible", hip && eq_p(irr_p)},
        {"hip_and_equation_closed", hip && eq_x(gamma_x)},
        {"hip_and_equation_irreducible", hip && eq_x(irr_x)},
        {"psi_ideal_rudin_closed", psi(Derivation::D)},
        {"psi_ideal_r_closed", psi(Derivation::R)},
    };
    if (!H.derived && (H.base == BaseSystem::R || H.base == BaseSystem::Rw)) {
        // Property Q holds for R, so super sobriety and sobriety coincide.
        r.conditions.push_back({"base_space_sober", h_sober_scan(sys(BaseSystem::R), X_, false).holds});
    }
    r.agreed = agreed(r.conditions);
    return r;
}

Verdict SpaceChecker::h_consonance(const SubsetSystemId& H) {
    Ctx c = HS_CTX;
    const auto& PX = smyth_space();
    auto filters = open_filters(X_, caps_);
    bool by_meet = true;
    bool realized = true;
    json witnesses = json::array();
    for (const auto& F : filters.size() ? filters : std::vector<OpenFilter>{}) {
        Bits meet = X_.all();
        for (const auto& u : F.members) meet &= u;
        auto single = filter_of_family(X_, {CompactSat{{X_.id(), meet}}}, caps_);
        bool meet_ok = single.members == F.members;
        by_meet = by_meet && meet_ok;
        std::optional<Bits> found;
        if (meet_ok && h_family_member_bits(H, X_, {meet})) {
            found = Bits::single(PX.size(), PX.require_index(meet));
        } else {
            for (const auto& f : c.pfams(H).sets) {
                std::vector<CompactSat> fam;
                f.for_each([&](std::size_t k) { fam.push_back(CompactSat{{X_.id(), PX.member(k)}}); });
                try {
                    if (filter_of_family(X_, fam, caps_).members == F.members) {
                        found = f;
                        break;
                    }
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::NotAFilter) throw;
                }
            }
        }
        if (!found) {
            realized = false;
            json fj = json::array();
            for (const auto& u : F.members) fj.push_back(labels_of(X_, u));
            witnesses = {{"unrealized_filter", fj}};
            break;
        }
        json fj = json::array();
        for (const auto& u : F.members) fj.push_back(labels_of(X_, u));
        witnesses.push_back({{"filter", fj}, {"family", family_json(PX, *found)}});
    }
    std::vector<Characterization> cs{{"filters_realized", realized}, {"realized_by_meet", by_meet}};
    if (!H.derived && H.base == BaseSystem::S)
        cs.push_back({"sober", h_sober_scan(sys(BaseSystem::R), X_, false).holds});
    json ev = realized ? json{{"realizations", witnesses}} : json{{"counterexample", witnesses}};
    return make_verdict("h_consonant", std::move(cs), std::move(ev));
}

Verdict SpaceChecker::upper_topology_report(const SubsetSystemId& H) {
    auto s = h_sober_scan(H, X_, true);
    bool complete = complete_over(X_, h_closed_sets(H, X_), true);
    ensure(s.holds == complete, "upper topology: H-sobriety and H-completeness disagree");
    return make_verdict("upper_topology_h_sober", {{"h_sober", s.holds}, {"h_complete", complete}}, s.evidence);
}

Verdict SpaceChecker::check(const std::string& property, const std::optional<SubsetSystemId>& Hopt) {
    if (std::find(kProperties.begin(), kProperties.end(), property) == kProperties.end())
        throw Error(ErrorKind::UnknownProperty, "unknown property", {{"property", property}});
    if (property_needs_system(property) && !Hopt)
        throw Error(ErrorKind::MissingSystem, "property needs a subset system", {{"property", property}});
    Ctx c = HS_CTX;
    const std::size_t n = X_.size();

    if (property == "t0") {
        bool antisym = true;
        std::set<Bits> closures;
        for (std::size_t i = 0; i < n; ++i) {
            closures.insert(X_.down(i));
            for (std::size_t j = i + 1; j < n; ++j)
                if (X_.leq(i, j) && X_.leq(j, i)) antisym = false;
        }
        return make_verdict("t0", {{"antisymmetric", antisym}, {"distinct_point_closures", closures.size() == n}},
                            {{"points", n}});
    }

    // Sobriety-type checks against a fixed base system.
    auto sober_like = [&](const std::string& name, const SubsetSystemId& H,
                          std::vector<Characterization> extra) {
        auto s = h_sober_scan(H, X_, true);
        std::vector<Characterization> cs{{"closed_h_sets_are_point_closures", s.holds}};
        if (n <= caps_.subset_points) {
            bool brute = true;
            for (const auto& cl : h_closed_sets_bruteforce(H, X_, caps_)) {
                auto g = X_.greatest(cl);
                if (!g || X_.down(*g) != cl) brute = false;
            }
            cs.push_back({"subset_scan", brute});
        }
        for (auto& e : extra) cs.push_back(std::move(e));
        json ev = s.evidence;
        if (!c.xsets(H).exhaustive) ev["h_sets_exhaustive"] = false;
        return make_verdict(name, std::move(cs), std::move(ev));
    };
    auto complete_and_scott = [&](const SubsetSystemId& H) {
        return complete_over(X_, h_closed_sets(H, X_), true) && opens_scott(c, H);
    };

    if (property == "sober") {
        return sober_like("sober", sys(BaseSystem::R),
                          {{"irreducible_complete_and_scott", complete_and_scott(sys(BaseSystem::R))},
                           {"smyth_space_sober", h_sober_scan(sys(BaseSystem::R), smyth_space().as_space(), false).holds}});
    }
    if (property == "d_space") {
        return sober_like("d_space", sys(BaseSystem::D),
                          {{"chain_sober", h_sober_scan(sys(BaseSystem::C), X_, false).holds},
                           {"dcpo_and_scott", complete_and_scott(sys(BaseSystem::D))}});
    }
    if (property == "h_sober") {
        const auto& H = *Hopt;
        auto hc = h_closed_sets(H, X_);
        bool ex = true;
        auto hc_s = sample_closed(hc, caps_.closed_sample, ex);
        return sober_like("h_sober", H,
                          {{"closed_h_set_meets_upper_bounds", closed_meets_bounds(X_, hc)},
                           {"bounded_equation_closed_h_sets",
                            complete_over(X_, hc, false) && bounded_equation(X_, hc, hc_s)},
                           {"h_complete_and_scott", complete_and_scott(H)}});
    }

    if (property == "well_filtered") {
        const auto& PX = smyth_space();
        const auto& P = PX.as_space();
        check_cap(PX.size(), caps_.compact_family, "compact_family");
        bool holds = true;
        std::size_t ideals = 0;
        json counter;
        const bool scan_x = n <= caps_.open_scan_points;
        // Filtered families and the ideals they generate have the same
        // intersection and the same members below any open; ideals are
        // generated by directed antichains.
        for_each_antichain(
            P, [&](const Bits& m) { return is_directed_bits(P, m); },
            [&](const Bits& m) {
                ++ideals;
                if (!holds) return;
                Bits ideal = P.down_of(m);
                Bits meet = meet_of(PX, ideal);
                auto fails = [&](const Bits& u) { return meet.subset_of(u) && !some_member_inside(PX, ideal, u); };
                if (scan_x) {
                    for (const auto& u : c.opens())
                        if (fails(u)) {
                            holds = false;
                            counter = {{"family", family_json(PX, ideal)}, {"open", labels_of(X_, u)}};
                            return;
                        }
                } else if (fails(meet)) {
                    holds = false;
                    counter = {{"family", family_json(PX, ideal)}, {"open", labels_of(X_, meet)}};
                }
            });
        json ev = holds ? json{{"compacts", PX.size()}, {"ideals", ideals}} : json{{"counterexample", counter}};
        return make_verdict("well_filtered",
                            {{"filtered_families", holds},
                             {"smyth_space_d_space", h_sober_scan(sys(BaseSystem::D), P, false).holds},
                             {"smyth_space_chain_sober", h_sober_scan(sys(BaseSystem::C), P, false).holds}},
                            std::move(ev));
    }

    if (property == "omega_well_filtered") {
        const auto& PX = smyth_space();
        const auto& P = PX.as_space();
        const auto& chains = c.pfams(sys(BaseSystem::Cw));
        bool holds = true;
        json counter;
        for (const auto& f : chains.sets) {
            Bits meet = meet_of(PX, f);
            if (!some_member_inside(PX, f, meet)) {
                holds = false;
                counter = {{"chain", family_json(PX, f)}, {"open", labels_of(X_, meet)}};
                break;
            }
        }
        json ev = holds ? json{{"chains", chains.sets.size()}, {"exhaustive", chains.exhaustive}}
                        : json{{"counterexample", counter}};
        return make_verdict("omega_well_filtered",
                            {{"descending_chains", holds},
                             {"smyth_space_countable_chain_sober", h_sober_scan(sys(BaseSystem::Cw), P, false).holds},
                             {"smyth_space_countable_directed_sober",
                              h_sober_scan(sys(BaseSystem::Dw), P, false).holds}},
                            std::move(ev));
    }

    const auto& H = *Hopt;
    if (property == "super_h_sober") {
        const auto& PX = smyth_space();
        const auto& P = PX.as_space();
        const auto& fams = c.pfams(H);
        auto s = h_sober_scan(H, P, false);
        bool s5 = true, hip = true;
        json counter;
        for (const auto& f : fams.sets) {
            Bits meet = meet_of(PX, f);
            if (meet.none()) hip = false;
            if (!some_member_inside(PX, f, meet)) {
                if (s5) counter = {{"family", family_json(PX, f)}, {"open", labels_of(X_, meet)}};
                s5 = false;
            }
        }
        bool psi = true;
        for (const auto& a : h_closed_sets({H.base, Derivation::R}, X_)) {
            Bits d = PX.diamond(a);
            if (d.none() || !P.is_down_set(d) || !is_directed_bits(P, d) || X_.maximal(a).none()) psi = false;
        }
        bool base = h_sober_scan(H, X_, false).holds;
        ensure(!s.holds || base, "super H-sober space that is not H-sober");
        json ev = {{"smyth_points", P.size()},
                   {"families", fams.sets.size()},
                   {"exhaustive", fams.exhaustive},
                   {"h_sober", base}};
        if (!s.holds) ev["counterexample"] = s.evidence["counterexample"];
        else if (!s5) ev["filtration_counterexample"] = counter;
        return make_verdict("super_h_sober",
                            {{"smyth_space_h_sober", s.holds},
                             {"intersection_filtration", s5},
                             {"intersection_compact_and_filtration", hip && s5},
                             {"psi_ideal_r_closed", psi}},
                            std::move(ev));
    }
    if (property == "h_complete" || property == "h_bounded") {
        const bool need_sup = property == "h_complete";
        auto hc = h_closed_sets(H, X_);
        const auto& hs = c.xsets(H);
        bool a = complete_over(X_, hc, need_sup);
        json ev = {{"closed_h_sets", hc.size()}, {"h_sets", hs.sets.size()}, {"exhaustive", hs.exhaustive}};
        if (!a)
            for (const auto& cl : hc) {
                Bits ub = X_.upper_bounds(cl);
                if (need_sup ? !X_.least(ub) : ub.none()) {
                    ev["counterexample"] = labels_of(X_, cl);
                    break;
                }
            }
        return make_verdict(property, {{"closed_h_sets", a}, {"h_sets", complete_over(X_, hs.sets, need_sup)}},
                            std::move(ev));
    }
    if (property == "hip" || property == "smyth_h_complete") {
        const bool need_sup = property == "smyth_h_complete";
        const auto& PX = smyth_space();
        const auto& P = PX.as_space();
        const auto& fams = c.pfams(H);
        bool by_fams = true;
        json counter;
        for (const auto& f : fams.sets)
            if (meet_of(PX, f).none()) {
                by_fams = false;
                counter = family_json(PX, f);
                break;
            }
        // On a finite carrier a nonempty intersection of up-sets is compact.
        bool by_smyth = complete_over(P, h_closed_sets(H, P), need_sup);
        json ev = {{"families", fams.sets.size()}, {"exhaustive", fams.exhaustive}};
        if (!by_fams) ev["counterexample"] = counter;
        return make_verdict(property,
                            {{"family_intersections", by_fams},
                             {need_sup ? "smyth_space_h_complete" : "smyth_space_h_bounded", by_smyth}},
                            std::move(ev));
    }
    if (property == "h_consonant") return h_consonance(H);
    if (property == "locally_hypercompact") {
        bool nbhd = true;
        if (n <= caps_.family_points) {
            for (const auto& u : c.opens())
                u.for_each([&](std::size_t x) {
                    // F = {x}: up x is open, contains x, and lies in u.
                    if (!X_.is_up_set(X_.up(x)) || !X_.up(x).subset_of(u)) nbhd = false;
                });
        } else {
            for (std::size_t x = 0; x < n; ++x) nbhd = nbhd && X_.is_up_set(X_.up(x));
        }
        bool irr_d = h_closed_sets(sys(BaseSystem::R), X_) == h_closed_sets(sys(BaseSystem::D), X_);
        return make_verdict("locally_hypercompact", {{"finite_neighbourhoods", nbhd}, {"irreducible_equals_directed", irr_d}},
                            {{"witness", "principal filters"}});
    }
    throw Error(ErrorKind::UnknownProperty, "unknown property", {{"property", property}});
}

#undef HS_CTX

Verdict check(const FiniteSpace& X, const std::string& property, const std::optional<SubsetSystemId>& H,
              const Caps& caps) {
    return SpaceChecker(X, caps).check(property, H);
}

CrosscheckReport crosscheck_h_sober(const FiniteSpace& X, const SubsetSystemId& H, const Caps& caps) {
    return SpaceChecker(X, caps).crosscheck_h_sober(H);
}

CrosscheckReport crosscheck_super(const FiniteSpace& X, const SubsetSystemId& H, const Caps& caps) {
    return SpaceChecker(X, caps).crosscheck_super(H);
}

Verdict h_consonance(const FiniteSpace& X, const SubsetSystemId& H, const Caps& caps) {
    return SpaceChecker(X, caps).h_consonance(H);
}

Verdict upper_topology_report(const FiniteSpace& P, const SubsetSystemId& H, const Caps& caps) {
    return SpaceChecker(P, caps).upper_topology_report(H);
}

}  // namespace hsober
