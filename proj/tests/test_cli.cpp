#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "hsober");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = hsober::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HSOBER_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check the Sierpinski space for sobriety") {
    auto r = run({"check", "--space", data("sierpinski.json"), "--prop", "sober"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("holds") == true);
    CHECK(j.at("characterizations_agreed") == true);
}

TEST_CASE("check every property on a built-in space") {
    auto r = run({"check", "--space", "diamond", "--prop", "all", "--system", "R"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 13);
    for (const auto& v : j) CHECK(v.at("holds") == true);
}

TEST_CASE("zoo certificate for the Johnstone space") {
    auto r = run({"zoo", "johnstone", "not_well_filtered"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j.at("verdict") == "verified");
    CHECK(j.at("transcript").size() > 0);
    auto listing = run({"zoo", "--format", "text"});
    CHECK(listing.code == 0);
    CHECK(std::count(listing.out.begin(), listing.out.end(), '\n') == 9);
}

TEST_CASE("sweep succeeds and is byte-identical across runs") {
    auto a = run({"sweep", "--seed", "7", "--count", "30", "--max-points", "6"});
    auto b = run({"sweep", "--seed", "7", "--count", "30", "--max-points", "6"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(j.at("violations") == 0);
    auto c = run({"sweep", "--seed", "8", "--count", "30", "--max-points", "6"});
    CHECK(c.code == 0);
}

TEST_CASE("exit codes and diagnostics") {
    auto missing = run({"check", "--space", "no_such_space", "--prop", "sober"});
    CHECK(missing.code == 2);
    CHECK(json::parse(missing.err).at("error") == "ParseError");

    auto bad_flag = run({"check", "--space", "sierpinski", "--prop", "sober", "--frobnicate"});
    CHECK(bad_flag.code == 2);

    auto unknown = run({"check", "--space", "sierpinski", "--prop", "compactness"});
    CHECK(unknown.code == 2);
    CHECK(json::parse(unknown.err).at("error") == "UnknownProperty");

    auto cap = run({"--cap-product-points", "4", "construct", "product", "--space", "chain3", "--space", "chain3"});
    CHECK(cap.code == 3);
    auto d = json::parse(cap.err);
    CHECK(d.at("error") == "CapExceeded");
    CHECK(d.at("detail").at("value") == 9);

    auto claim = run({"zoo", "johnstone", "is_sober"});
    CHECK(claim.code == 2);
    CHECK(json::parse(claim.err).at("error") == "UnknownClaim");

    auto sys = run({"check", "--space", "sierpinski", "--prop", "h_sober"});
    CHECK(sys.code == 2);
    CHECK(json::parse(sys.err).at("error") == "MissingSystem");
}

TEST_CASE("parse, serialize and parse again") {
    for (const char* f : {"sierpinski.json", "chain3.json", "antichain2.json", "diamond.json"}) {
        auto X = hsober::cli::load_space(data(f));
        auto doc = hsober::space_to_json(X);
        auto path = std::string("roundtrip_") + f;
        std::ofstream(path) << doc.dump();
        auto Y = hsober::cli::load_space(path);
        CHECK(hsober::space_to_json(Y) == doc);
        auto r = run({"inspect", "--space", path});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out).at("space") == doc);
        std::remove(path.c_str());
    }
}

TEST_CASE("constructions, reflections and rendering") {
    auto p = run({"construct", "product", "--space", "sierpinski", "--space", "sierpinski"});
    CHECK(p.code == 0);
    CHECK(json::parse(p.out).at("space").at("points").size() == 4);

    auto f = run({"construct", "function_space", "--space", "sierpinski", "--space", "sierpinski"});
    CHECK(f.code == 0);
    CHECK(json::parse(f.out).at("space").at("points").size() == 3);

    auto s = run({"construct", "smyth", "--space", "antichain2"});
    CHECK(s.code == 0);
    CHECK(json::parse(s.out).at("space").at("points").size() == 3);

    auto h = run({"construct", "hoare", "--space", "antichain2"});
    CHECK(h.code == 0);

    auto refl = run({"reflect", "--space", "diamond", "--system", "R", "--kind", "sobrification", "--targets", "3"});
    CHECK(refl.code == 0);
    CHECK(json::parse(refl.out).at("universal_property").at("unique") == true);

    auto dot = run({"render", "--space", "diamond", "--of", "smyth"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph", 0) == 0);
    CHECK(dot.out.find("K#0") != std::string::npos);

    auto hasse = run({"--format", "dot", "inspect", "--space", "chain3"});
    CHECK(hasse.code == 0);
    CHECK(hasse.out.find("->") != std::string::npos);
}

TEST_CASE("DOT output draws covers only") {
    auto C = hsober::spaces::chain(4);
    auto dot = hsober::cli::to_dot(C, "c4");
    std::size_t edges = 0;
    for (auto pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++edges;
    CHECK(edges == 3);
}
