#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equicode/errors.hpp"
#include "equicode/io.hpp"
#include "equicode/macwilliams.hpp"

using namespace equicode;

#ifndef EQUICODE_TEST_DATA
#define EQUICODE_TEST_DATA "tests/data"
#endif

TEST_CASE("problem spec round trip") {
    const ProblemSpec spec = load_problem(std::string(EQUICODE_TEST_DATA) + "/z4_example.json");
    const Instance& in = spec.instance;
    const Instance ref = z4_example();
    CHECK(in.code.codewords() == ref.code.codewords());
    CHECK(in.subgroup.order() == 3);
    CHECK(spec.genus == 2u);
    REQUIRE(spec.jacobi.has_value());
    CHECK(spec.jacobi->places == std::vector<std::size_t>{1});
    REQUIRE(spec.harmonic.has_value());
    CHECK(spec.harmonic->to_string() == "{[1]: 1, [2]: -1}");
    CHECK(parse_harmonic(to_json(*spec.harmonic)) == *spec.harmonic);
}

TEST_CASE("malformed specs") {
    auto bad = [](const char* text) { return parse_problem(json::parse(text)); };
    CHECK_THROWS_AS(bad(R"j({"length": 4})j"), ParseError);
    CHECK_THROWS_AS(bad(R"j({"modulus": 1, "length": 4})j"), ParseError);
    CHECK_THROWS_AS(bad(R"j({"modulus": 4, "length": 4, "generators": ["115"]})j"), ParseError);
    CHECK_THROWS_AS(bad(R"j({"modulus": 4, "length": 4, "generators": ["1151"]})j"), ParseError);
    CHECK_THROWS_AS(bad(R"j({"modulus": 4, "length": 4, "group": ["(1 9)"]})j"), ParseError);
    CHECK_THROWS_AS(bad(R"j({"modulus": 4, "length": 4, "group": ["(1 2 3)"], "T": [3]})j"), ParseError);
    CHECK_THROWS_AS(load_problem(std::string(EQUICODE_TEST_DATA) + "/bad_subgroup.json"), ParseError);
    CHECK_THROWS_AS(load_problem(std::string(EQUICODE_TEST_DATA) + "/missing.json"), ParseError);
}

TEST_CASE("lattice JSON round trip") {
    const Lattice l = construction_a(z4_example().code);
    CHECK(parse_lattice(to_json(l)) == l);
    CHECK_THROWS_AS(parse_lattice(json::parse(R"j({"basis": [["1/0"]]})j")), ParseError);
}

TEST_CASE("report and polynomial JSON") {
    const Instance in = z4_example();
    const Report r = check_identity(Flavor::Hamming, in.code, hayden(in.ring, in.subgroup));
    const json j = to_json(r);
    CHECK(j.at("pass") == true);
    CHECK(j.at("lhs") == "x^2 + 3*y^2");
    const json p = to_json(h_weight_enum(project_theta(in.code, hayden(in.ring, in.subgroup))));
    CHECK(p.at("text") == "x^2 + 3*y^2");
}
