#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "conelim/errors.hpp"
#include "conelim/report.hpp"
#include "conelim/testkit.hpp"
#include "support.hpp"

using namespace conelim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

std::string golden_path(const std::string& name) {
    return std::string(GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("instances round-trip through the file format") {
    for (int seed = 0; seed < 40; ++seed) {
        testkit::GenParams params;
        params.seed = seed;
        params.rank = 2 + seed % 3;
        params.shape = testkit::Shape::Any;
        HitchinPair p = testkit::random_pair(params);
        io::json doc = io::emit_instance(p);
        HitchinPair back = io::parse_instance(doc);
        CHECK(back == p);
    }
}

TEST_CASE("fixture files parse to the fixture pairs") {
    CHECK(io::parse_instance_text(slurp(fixture_path("fixture_a.json"))) ==
          fixtures::fixture_a());
    CHECK(io::parse_instance_text(slurp(fixture_path("fixture_a_prime.json"))) ==
          fixtures::fixture_a_prime());
    CHECK(io::parse_instance_text(slurp(fixture_path("fixture_b.json"))) ==
          fixtures::fixture_b());
    CHECK(io::parse_instance_text(slurp(fixture_path("fixture_c.json"))) ==
          fixtures::fixture_c());
}

TEST_CASE("malformed input is a parse error naming the cell") {
    std::string text = slurp(fixture_path("fixture_b.json"));
    io::json doc = io::json::parse(text);
    doc["higgs"][2][0] = io::json::array({"1"});  // wrong length
    try {
        io::parse_instance(doc);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("(3,1)") != std::string::npos);
    }

    io::json bad_twists = io::json::parse(text);
    bad_twists["twists"] = {-1, 0, 0};
    CHECK_THROWS_AS(io::parse_instance(bad_twists), ParseError);

    io::json not_json;
    CHECK_THROWS_AS(io::parse_instance_text("{"), ParseError);
}

TEST_CASE("filled negative-degree slot is a holomorphy violation") {
    io::json doc = io::json::parse(slurp(fixture_path("fixture_a.json")));
    doc["higgs"][2][0] = io::json::array({"1", "2"});  // slot of degree 0
    CHECK_THROWS_AS(io::parse_instance(doc), ParseError);
    // A slot that cannot hold any form: twists (1,0), l = 0 is below the
    // line bound anyway, so use twists (2,-2), l = 1: slot (2,1) needs -3.
    io::json neg = {{"rank", 2},
                    {"twists", {2, -2}},
                    {"l_degree", 1},
                    {"higgs", {{nullptr, nullptr}, {io::json::array({"1"}), nullptr}}}};
    CHECK_THROWS_AS(io::parse_instance(neg), HolomorphyViolation);
}

TEST_CASE("report documents are byte-stable against the goldens") {
    for (const std::string name : {"fixture_a", "fixture_a_prime", "fixture_b", "fixture_c"}) {
        HitchinPair p = io::parse_instance_text(slurp(fixture_path(name + ".json")));
        std::string report = io::report_to_json(io::analyze(p)).dump(2) + "\n";
        CHECK_MESSAGE(report == slurp(golden_path(name + ".report.json")),
                      "golden mismatch for " << name);
    }
}

TEST_CASE("report schema keys are always present") {
    const std::vector<std::string> keys = {
        "valid",          "hitchin_image", "nilpotent", "nilpotency_order",
        "stable",         "stability_checks", "classification", "slopes",
        "constraints",    "limit",         "flow",      "coprime",
        "semistable"};
    // A non-nilpotent pair exercises the null branches.
    HitchinPair p = HitchinPair::create(
        BundleModel({0, 0}), 1,
        {{fixtures::Z(), fixtures::X()}, {fixtures::Y(), fixtures::Z()}});
    io::json doc = io::report_to_json(io::analyze(p));
    for (const auto& key : keys) CHECK_MESSAGE(doc.contains(key), "missing " << key);
    CHECK(doc["nilpotent"] == false);
    CHECK(doc["limit"].is_null());
    CHECK(doc["flow"].is_null());
    CHECK(doc["stable"].is_null());

    io::json full = io::report_to_json(io::analyze(fixtures::fixture_b()));
    for (const auto& key : keys) CHECK(full.contains(key));
    CHECK(full["limit"]["type_vector"] == io::json({2, 1}));
    CHECK(full["limit"]["piece_twists"] == io::json({{0, 0}, {-1}}));
    CHECK(full["flow"]["matches_prediction"] == true);
    CHECK(full["nilpotency_order"] == 2);
}
