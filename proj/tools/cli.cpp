#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hsober/checkers.hpp"
#include "hsober/constructions.hpp"
#include "hsober/enumerate.hpp"
#include "hsober/systems.hpp"
#include "hsober/zoo.hpp"

namespace hsober::cli {

using nlohmann::json;

namespace {

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::CapExceeded: return 3;
        case ErrorKind::InvariantViolation:
        case ErrorKind::NoHomeomorphism: return 1;
        default: return 2;
    }
}

std::string dot_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r;
}

std::string html_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '&') r += "&amp;";
        else if (c == '<') r += "&lt;";
        else if (c == '>') r += "&gt;";
        else r += c;
    }
    return r;
}

std::string brace(const json& labels) {
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i].get<std::string>();
    return s + "}";
}

json family_labels(const FiniteSpace& X, const std::vector<Bits>& fam) {
    json j = json::array();
    for (const auto& b : fam) j.push_back(set_labels(X, b));
    return j;
}

struct Options {
    std::string format = "json";
    std::uint64_t seed = 0;
    Caps caps;
};

void emit(std::ostream& out, const Options& o, const json& j, const std::function<void(std::ostream&)>& text) {
    if (o.format == "text" && text) text(out);
    else out << j.dump(2) << "\n";
}

SubsetSystemId system_or(const std::string& s, BaseSystem fallback) {
    return s.empty() ? SubsetSystemId{fallback, std::nullopt} : SubsetSystemId::parse(s);
}

// ---- subcommands ----

int cmd_inspect(const Options& o, const std::string& source, std::ostream& out) {
    auto X = load_space(source);
    if (o.format == "dot") {
        out << to_dot(X, "space");
        return 0;
    }
    json covers = json::array();
    for (auto [a, b] : X.covers()) covers.push_back({X.label(a), X.label(b)});
    json j = {{"space", space_to_json(X)},
              {"points", X.size()},
              {"covers", covers},
              {"minimal", set_labels(X, X.minimal(X.all()))},
              {"maximal", set_labels(X, X.maximal(X.all()))}};
    if (X.size() <= o.caps.family_points) {
        j["closed_sets"] = family_labels(X, closed_sets(X, o.caps));
        j["open_sets"] = family_labels(X, open_sets(X, o.caps));
    }
    j["irreducible_closed_sets"] = family_labels(X, h_closed_sets({BaseSystem::R, std::nullopt}, X));
    json hc = json::object();
    for (const auto& H : base_systems()) hc[H.name()] = h_closed_sets(H, X).size();
    j["h_closed_set_counts"] = hc;
    emit(out, o, j, [&](std::ostream& s) {
        s << "points:";
        for (const auto& l : X.labels()) s << " " << l;
        s << "\ncovers:";
        for (const auto& c : covers) s << " " << c[0].get<std::string>() << "<" << c[1].get<std::string>();
        s << "\nirreducible closed sets:";
        for (const auto& c : j["irreducible_closed_sets"]) s << " " << brace(c);
        s << "\n";
    });
    return 0;
}

int cmd_check(const Options& o, const std::string& source, const std::string& prop, const std::string& sys,
              std::ostream& out) {
    auto X = load_space(source);
    SpaceChecker c(X, o.caps);
    std::optional<SubsetSystemId> H;
    if (!sys.empty()) H = SubsetSystemId::parse(sys);
    std::vector<std::string> props = prop == "all" ? property_names() : std::vector<std::string>{prop};
    json verdicts = json::array();
    bool ok = true;
    std::vector<std::string> lines;
    for (const auto& p : props) {
        std::vector<std::optional<SubsetSystemId>> systems{H};
        if (property_needs_system(p) && !H && prop == "all") {
            systems.clear();
            for (const auto& b : base_systems()) systems.push_back(b);
        }
        for (const auto& h : systems) {
            auto v = c.check(p, h);
            json vj = v.to_json();
            if (h) vj["system"] = h->name();
            if (p == "h_sober" || p == "super_h_sober") {
                auto r = p == "h_sober" ? c.crosscheck_h_sober(*h) : c.crosscheck_super(*h);
                vj["crosscheck"] = r.to_json();
                ok = ok && r.agreed;
            }
            ok = ok && v.holds && v.characterizations_agreed;
            lines.push_back(p + (h ? "(" + h->name() + ")" : "") + ": " + (v.holds ? "holds" : "fails") +
                            (v.characterizations_agreed ? "" : " [characterizations disagree]"));
            verdicts.push_back(std::move(vj));
        }
    }
    emit(out, o, verdicts.size() == 1 ? verdicts[0] : verdicts, [&](std::ostream& s) {
        for (const auto& l : lines) s << l << "\n";
    });
    return ok ? 0 : 1;
}

int cmd_construct(const Options& o, const std::string& what, const std::vector<std::string>& specs, std::ostream& out) {
    std::vector<FiniteSpace> xs;
    for (const auto& s : specs) xs.push_back(load_space(s));
    auto need = [&](std::size_t n) {
        if (xs.size() < n)
            throw Error(ErrorKind::ParseError, what + " needs " + std::to_string(n) + " --space arguments");
    };
    FiniteSpace result;
    std::optional<json> legend;
    if (what == "product") {
        need(1);
        result = product(xs, o.caps).space;
    } else if (what == "function_space") {
        need(2);
        result = function_space(xs[0], xs[1], o.caps).space;
    } else if (what == "smyth") {
        need(1);
        auto PX = smyth(xs[0], o.caps);
        result = PX.as_space();
        legend = PX.labeling();
    } else if (what == "hoare") {
        need(1);
        auto HX = hoare(xs[0], HoareFamily::all_closed, o.caps);
        result = HX.as_space();
        legend = HX.labeling();
    } else {
        throw Error(ErrorKind::ParseError, "unknown construction", {{"construction", what}});
    }
    if (o.format == "dot") {
        out << to_dot(result, what, legend);
        return 0;
    }
    json j = {{"construction", what}, {"space", space_to_json(result)}};
    if (legend) j["carrier"] = *legend;
    emit(out, o, j, [&](std::ostream& s) {
        s << what << ": " << result.size() << " points\n";
        for (auto [a, b] : result.covers()) s << result.label(a) << " < " << result.label(b) << "\n";
    });
    return 0;
}

int cmd_reflect(const Options& o, const std::string& source, const std::string& sys, const std::string& kind,
                std::size_t targets, std::ostream& out) {
    auto X = load_space(source);
    auto R = reflect(X, system_or(sys, BaseSystem::D), parse_reflection_kind(kind), o.caps);
    if (o.format == "dot") {
        out << to_dot(R.reflected, kind, R.carrier_labeling());
        return 0;
    }
    auto u = universal_property_verify(R, targets, o.caps);
    json j = {{"reflection", R.to_json()}, {"universal_property", u.to_json()}};
    emit(out, o, j, [&](std::ostream& s) {
        s << kind << " of " << X.size() << " points: homeomorphic to the base\n"
          << "universal property: " << (u.holds() ? "holds" : "fails") << " over " << u.maps << " maps\n";
    });
    return u.holds() ? 0 : 1;
}

int cmd_zoo(const Options& o, const std::string& space, const std::string& claim, std::ostream& out) {
    if (claim.empty()) {
        json j = json::object();
        for (const auto& s : zoo_spaces())
            if (space.empty() || s == space) j[s] = json::array();
        if (j.empty()) throw Error(ErrorKind::UnknownClaim, "unknown zoo space", {{"space", space}});
        for (const auto& [s, c] : zoo_claims())
            if (j.contains(s)) j[s].push_back(c);
        emit(out, o, j, [&](std::ostream& s) {
            for (auto& [k, v] : j.items())
                for (const auto& c : v) s << k << " " << c.get<std::string>() << "\n";
        });
        return 0;
    }
    auto r = verify_claim(space, claim);
    bool valid = revalidate(r);
    json j = r.to_json();
    j["revalidated"] = valid;
    emit(out, o, j, [&](std::ostream& s) {
        s << space << "." << claim << ": " << to_string(r.verdict);
        if (r.verdict == CertVerdict::checked_to_depth) s << "(" << r.depth << ")";
        s << "\n" << r.summary << "\n" << r.transcript.size() << " facts, revalidated: " << (valid ? "yes" : "no") << "\n";
    });
    return valid && r.verdict != CertVerdict::refuted ? 0 : 1;
}

struct Violation {
    std::string suite;
    json detail;
};

int cmd_sweep(const Options& o, std::size_t count, std::size_t max_points, std::ostream& out, std::ostream& err) {
    std::mt19937_64 rng(o.seed);
    std::map<std::string, std::size_t> runs;
    std::optional<Violation> bad;
    auto fail = [&](const std::string& suite, const FiniteSpace& X, json what) {
        bad = Violation{suite, {{"space", space_to_json(X)}, {"what", std::move(what)}}};
    };
    const std::vector<std::string> sober_props = {"sober", "d_space", "well_filtered", "omega_well_filtered"};
    const std::vector<std::string> h_props = {"h_sober", "super_h_sober", "h_complete", "h_bounded",
                                              "hip",     "smyth_h_complete", "h_consonant"};
    for (std::size_t i = 0; i < count && !bad; ++i) {
        auto X = random_space(rng, max_points);
        SpaceChecker c(X, o.caps);
        for (const auto& p : sober_props) {
            auto v = c.check(p);
            ++runs["checkers"];
            if (!v.holds || !v.characterizations_agreed) fail("checkers", X, v.to_json());
        }
        for (const auto& H : base_systems()) {
            for (const auto& p : h_props) {
                auto v = c.check(p, H);
                ++runs["checkers"];
                if (!v.holds || !v.characterizations_agreed) fail("checkers", X, v.to_json());
            }
            for (const auto& r : {c.crosscheck_h_sober(H), c.crosscheck_super(H)}) {
                ++runs["crosschecks"];
                if (!r.agreed) fail("crosschecks", X, r.to_json());
            }
        }
        auto hm = hofmann_mislove(X, o.caps);
        ++runs["hofmann_mislove"];
        if (!hm.bijective()) fail("hofmann_mislove", X, {{"compacts", hm.compacts}, {"filters", hm.filters}});
        for (auto kind : {ReflectionKind::sobrification, ReflectionKind::h_sobrification,
                          ReflectionKind::super_h_sobrification})
            for (auto b : {BaseSystem::D, BaseSystem::R}) {
                auto R = reflect(X, {b, std::nullopt}, kind, o.caps);
                auto u = universal_property_verify(R, 2, o.caps);
                ++runs["reflections"];
                if (!u.holds()) fail("reflections", X, u.to_json());
            }
    }
    for (auto b : {BaseSystem::S, BaseSystem::C, BaseSystem::D, BaseSystem::R}) {
        if (bad) break;
        auto rep = property_m_harness({b, std::nullopt}, o.seed, count, max_points, o.caps);
        runs["property_m"] += rep.instances;
        if (rep.failures) bad = Violation{"property_m", rep.to_json()};
    }
    if (!bad) {
        auto rep = property_q_harness({BaseSystem::R, std::nullopt}, o.seed, count, max_points, o.caps);
        runs["property_q"] += rep.instances;
        if (rep.failures) bad = Violation{"property_q", rep.to_json()};
    }
    json suites = json::array();
    for (const auto& [k, v] : runs) suites.push_back({{"suite", k}, {"runs", v}});
    json j = {{"seed", o.seed}, {"count", count}, {"max_points", max_points}, {"suites", suites},
              {"violations", bad ? 1 : 0}};
    if (bad) {
        j["violation"] = {{"suite", bad->suite}, {"detail", bad->detail}};
        err << json{{"error", "PropertyViolation"}, {"suite", bad->suite}, {"detail", bad->detail}}.dump() << "\n";
    }
    emit(out, o, j, [&](std::ostream& s) {
        s << "seed " << o.seed << ", " << count << " spaces of at most " << max_points << " points\n";
        for (const auto& [k, v] : runs) s << k << ": " << v << "\n";
        s << (bad ? "violation in " + bad->suite : std::string("no violations")) << "\n";
    });
    return bad ? 1 : 0;
}

int cmd_render(const Options& o, const std::string& source, const std::string& of, std::ostream& out) {
    auto X = load_space(source);
    if (of == "space") out << to_dot(X, "space");
    else if (of == "smyth") {
        auto PX = smyth(X, o.caps);
        out << to_dot(PX.as_space(), "smyth", PX.labeling());
    } else if (of == "hoare") {
        auto HX = hoare(X, HoareFamily::all_closed, o.caps);
        out << to_dot(HX.as_space(), "hoare", HX.labeling());
    } else {
        throw Error(ErrorKind::ParseError, "render --of takes space, smyth or hoare", {{"of", of}});
    }
    return 0;
}

}  // namespace

std::string to_dot(const FiniteSpace& X, const std::string& name, const std::optional<json>& legend) {
    std::ostringstream s;
    s << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=BT;\n  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < X.size(); ++i) s << "  n" << i << " [label=\"" << dot_escape(X.label(i)) << "\"];\n";
    for (auto [a, b] : X.covers()) s << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
    if (legend) {
        s << "  legend [shape=none, margin=0, label=<<table border=\"0\" cellborder=\"1\" cellspacing=\"0\">"
          << "<tr><td><b>point</b></td><td><b>set</b></td></tr>";
        for (const auto& row : *legend)
            s << "<tr><td>" << html_escape(row["label"].get<std::string>()) << "</td><td>"
              << html_escape(brace(row["members"])) << "</td></tr>";
        s << "</table>>];\n";
    }
    s << "}\n";
    return s.str();
}

FiniteSpace load_space(const std::string& source) {
    if (std::filesystem::exists(source)) {
        std::ifstream in(source);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_space_text(buf.str());
    }
    if (auto X = spaces::by_name(source)) return *X;
    throw Error(ErrorKind::ParseError, "no such file or built-in space", {{"space", source}});
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite T0 spaces: sobriety checkers, power spaces, reflections and certificates", "hsober"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--seed", o.seed, "Random seed");

    struct CapFlag {
        const char* name;
        std::size_t Caps::*field;
    };
    static const CapFlag cap_flags[] = {
        {"--cap-family-points", &Caps::family_points},   {"--cap-m-family-points", &Caps::m_family_points},
        {"--cap-subset-points", &Caps::subset_points},   {"--cap-compact-family", &Caps::compact_family},
        {"--cap-smyth-carrier", &Caps::smyth_carrier},   {"--cap-double-smyth-base", &Caps::double_smyth_base},
        {"--cap-target-bound", &Caps::target_bound},     {"--cap-product-points", &Caps::product_points},
        {"--cap-map-count", &Caps::map_count},           {"--cap-family-budget", &Caps::family_budget},
        {"--cap-smyth-open-scan", &Caps::smyth_open_scan}, {"--cap-closed-sample", &Caps::closed_sample},
        {"--cap-open-scan-points", &Caps::open_scan_points},
    };
    for (const auto& f : cap_flags) app.add_option(f.name, o.caps.*(f.field), "Size cap");

    std::vector<std::string> space_args;
    std::string prop, sys, kind = "h_sobrification", what, zoo_space, zoo_claim, of = "space";
    std::size_t count = 100, max_points = 6, targets = 0;

    auto* inspect = app.add_subcommand("inspect", "Carrier, order and derived families");
    auto* check = app.add_subcommand("check", "Run a property checker");
    auto* construct = app.add_subcommand("construct", "Products, function spaces and power spaces");
    auto* reflect_cmd = app.add_subcommand("reflect", "Build a reflection and verify its universal property");
    auto* zoo = app.add_subcommand("zoo", "List or verify certificates for the infinite examples");
    auto* sweep = app.add_subcommand("sweep", "Run the invariant suite on random spaces");
    auto* render = app.add_subcommand("render", "Emit a Hasse diagram in DOT");
    for (auto* sc : {inspect, check, construct, reflect_cmd, render}) sc->add_option("--space", space_args)->required();
    check->add_option("--prop", prop, "Property, or all")->required();
    check->add_option("--system", sys, "Subset system");
    construct->add_option("what", what, "product, function_space, smyth or hoare")->required();
    reflect_cmd->add_option("--system", sys, "Subset system");
    reflect_cmd->add_option("--kind", kind, "sobrification, h_sobrification or super_h_sobrification");
    reflect_cmd->add_option("--targets", targets, "Largest target space for the universal property");
    zoo->add_option("space", zoo_space);
    zoo->add_option("claim", zoo_claim);
    sweep->add_option("--count", count);
    sweep->add_option("--max-points", max_points);
    render->add_option("--of", of, "space, smyth or hoare");
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (*inspect) return cmd_inspect(o, space_args.front(), out);
        if (*check) return cmd_check(o, space_args.front(), prop, sys, out);
        if (*construct) return cmd_construct(o, what, space_args, out);
        if (*reflect_cmd) return cmd_reflect(o, space_args.front(), sys, kind, targets ? targets : o.caps.target_bound, out);
        if (*zoo) return cmd_zoo(o, zoo_space, zoo_claim, out);
        if (*sweep) return cmd_sweep(o, count, max_points, out, err);
        if (*render) return cmd_render(o, space_args.front(), of, out);
    } catch (const Error& e) {
        err << json{{"error", to_string(e.kind())}, {"message", e.what()}, {"detail", e.detail()}}.dump() << "\n";
        return exit_code(e.kind());
    }
    return 2;
}

}  // namespace hsober::cli
