#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "dims_io.hpp"

using namespace gcf;
using nlohmann::json;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_dims(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parses a minimal document") {
    FullereneDims d = parse_dims(R"({"edges": [[2, 1]]})");
    REQUIRE(d.edges().size() == 1);
    CHECK(d.edges()[0] == Eisenstein{2, 1});
    CHECK(d.facets().empty());
    CHECK(d.name().empty());
}

TEST_CASE("parses facets and a name") {
    FullereneDims d = parse_dims(
        R"({"name": "ico", "edges": [[2, 1], [0, 3]], "facets": [[2, 1, 2, 1]]})");
    CHECK(d.name() == "ico");
    REQUIRE(d.edges().size() == 2);
    CHECK(d.edges()[1] == Eisenstein{0, 3});
    REQUIRE(d.facets().size() == 1);
    CHECK(facet_area(d.facets()[0]) == 7);
}

TEST_CASE("rejections carry the offending field") {
    CHECK(error_of(R"({"edges": []})").find("edges") != std::string::npos);
    CHECK(error_of(R"({"edges": [[0, 0]]})").find("edges[0]") != std::string::npos);
    CHECK(error_of(R"({"edges": [[1, 0]], "color": 3})").find("color") !=
          std::string::npos);
    CHECK(error_of(R"({"edges": [[1, -2]]})").find("nonnegative") !=
          std::string::npos);
    CHECK(error_of(R"({"edges": [[1, 0.5]]})").find("integer") !=
          std::string::npos);
    CHECK(error_of(R"({"edges": [[1, 0, 2]]})").find("pair") != std::string::npos);
    CHECK(error_of(R"({"edges": [[1, 3000000000]]})").find("32-bit") !=
          std::string::npos);
    CHECK(error_of(R"({"edges": [[1, 0]], "facets": [[1, 1, 1]]})")
              .find("facets[0]") != std::string::npos);
    CHECK(error_of(R"({"edges": [[1, 0]], "facets": [[0, 1, 0, 0]]})")
              .find("area") != std::string::npos);
    CHECK(error_of(R"({"facets": [[1, 0, 1, 0]]})").find("edges") !=
          std::string::npos);
    CHECK(error_of(R"({"edges": [[1, 0]], "name": 7})").find("name") !=
          std::string::npos);
    CHECK(error_of("{nope").find("invalid JSON") != std::string::npos);
    CHECK(error_of("[1, 2]").find("object") != std::string::npos);
}

TEST_CASE("serialization round-trips") {
    FullereneDims d(
        {{2, 1}, {0, 3}, {5, 5}},
        {FacetDims(2, 1, 2, 1), FacetDims(1, 0, 0, 1)},
        "sample");
    for (bool pretty : {false, true}) {
        FullereneDims back = parse_dims(dims_to_json(d, pretty));
        CHECK(back == d);
    }
}

TEST_CASE("serialization omits empty optional fields") {
    json j = json::parse(dims_to_json(FullereneDims({{1, 0}}), false));
    CHECK(j.contains("edges"));
    CHECK_FALSE(j.contains("facets"));
    CHECK_FALSE(j.contains("name"));
}

TEST_CASE("report serialization carries the whole identification") {
    FullereneDims d(std::vector<Eisenstein>(10, {2, 1}),
                    std::vector<FacetDims>(5, FacetDims(2, 1, 2, 1)), "C140");
    IdentificationReport r = identify(d);
    json j = json::parse(report_to_json(r, true));
    CHECK(j["inflation_factor"] == 1);
    CHECK(j["area_scale_factor"] == 7);
    CHECK(j["norm_product"] == 7);
    REQUIRE(j["chain"].size() == 1);
    CHECK(j["chain"][0]["k"] == 2);
    CHECK(j["chain"][0]["l"] == 1);
    CHECK(j["chain"][0]["norm"] == 7);
    CHECK(j["chain"][0]["kind"] == "primary");
    CHECK(j["residual_primes"].empty());
    CHECK(j["archetype"]["edges"].size() == 10);
    CHECK(j["archetype"]["edges"][0] == json::array({1, 0}));
    CHECK(j["input"]["name"] == "C140");
    // the archetype block itself re-parses as a dims document
    FullereneDims archetype = parse_dims(j["archetype"].dump());
    CHECK(archetype.edges() == r.archetype.edges());
}

TEST_CASE("chain kinds distinguish inflation, leapfrog and primary") {
    FullereneDims d(std::vector<Eisenstein>(4, {2, 8}));  // 2 * (1, 4)
    IdentificationReport r = identify(d);
    json j = json::parse(report_to_json(r, false));
    REQUIRE(j["chain"].size() == 3);
    CHECK(j["chain"][0]["kind"] == "inflation");
    CHECK(j["chain"][1]["kind"] == "leapfrog");
    CHECK(j["chain"][2]["kind"] == "primary");
}
