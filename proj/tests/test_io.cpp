#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "toren/envelope.hpp"
#include "toren/io.hpp"

using namespace toren;

namespace {

const std::vector<std::string> kMatVars{"x11", "x12", "x21", "x22"};

Poly parse4(const std::string& s, unsigned conductor = 1) {
    return poly_from_string(s, kMatVars, conductor);
}

}  // namespace

TEST_CASE("cycnum json round trip") {
    CycNum a = CycNum::root_of_unity(8) + CycNum(Rational(3, 2));
    Json j = cycnum_to_json(a);
    CHECK(j["conductor"] == 8);
    CHECK(j["coeffs"].size() == 4);
    CHECK(j["coeffs"][0] == "3/2");
    CHECK(j["coeffs"][1] == "1");
    CHECK(cycnum_from_json(j) == a);

    CHECK_THROWS_AS(cycnum_from_json(nlohmann::json{{"conductor", 8}}), Error);
    CHECK_THROWS_AS(
        cycnum_from_json(nlohmann::json{{"conductor", 8}, {"coeffs", {"1", "0"}}}),
        Error);
}

TEST_CASE("cycnum pretty printing") {
    CHECK(cycnum_to_string(CycNum(0)) == "0");
    CHECK(cycnum_to_string(CycNum(Rational(-5, 3))) == "-5/3");
    CycNum z6 = CycNum::root_of_unity(6);
    CHECK(cycnum_to_string(z6 - CycNum(1)) == "z - 1");
    CHECK(cycnum_to_string(z6.pow(2)) == "z - 1");  // reduced mod z^2 - z + 1
    CHECK(cycnum_to_string(CycNum::root_of_unity(8, 3) + CycNum(2)) == "z^3 + 2");
    CHECK(cycnum_to_string(CycNum::root_of_unity(8) * CycNum(Rational(-1, 2))) == "-1/2*z");
}

TEST_CASE("polynomial parsing: basic forms") {
    Poly p = parse4("x11^3 - x22^3");
    CHECK(p == Poly::variable(4, 0, 3) - Poly::variable(4, 3, 3));

    Poly q = parse4("2*x11*x12 + 1/2");
    CHECK(q == Poly::variable(4, 0) * Poly::variable(4, 1).scaled(CycNum(2)) +
                   Poly::constant(4, CycNum(Rational(1, 2))));

    Poly r = parse4("-x11 + 3");
    CHECK(r == Poly::constant(4, CycNum(3)) - Poly::variable(4, 0));

    // parenthesized subexpressions multiply out
    Poly s = parse4("(x11 + x22)*(x11 - x22)");
    CHECK(s == Poly::variable(4, 0, 2) - Poly::variable(4, 3, 2));
}

TEST_CASE("polynomial parsing: cyclotomic coefficients") {
    Poly p = parse4("(z^2 - z)*x12 + z*x21", 6);
    CycNum z = CycNum::root_of_unity(6);
    Poly expect = Poly::variable(4, 1).scaled(z * z - z) + Poly::variable(4, 2).scaled(z);
    CHECK(p == expect);
    // z alone is a constant
    Poly c = parse4("z^6", 6);
    CHECK(c == Poly::constant(4, CycNum(1)));
}

TEST_CASE("polynomial parsing: errors name the offense") {
    CHECK_THROWS_AS(parse4("x11 + y"), Error);
    CHECK_THROWS_AS(parse4("x11 +"), Error);
    CHECK_THROWS_AS(parse4("(x11"), Error);
    CHECK_THROWS_AS(parse4("x11^"), Error);
    CHECK_THROWS_AS(parse4("3/0"), Error);
    CHECK_THROWS_AS(parse4(""), Error);
    CHECK_THROWS_AS(poly_from_string("z", {"z"}, 4), Error);  // z is reserved
}

TEST_CASE("polynomial printing is canonical and parseable") {
    Poly p = parse4("x11^3 - x22^3");
    CHECK(poly_to_string(p, kMatVars) == "x11^3 - x22^3");
    Poly q = parse4("(z - 1)*x12*x21 - 2*x11 + 5/3", 8);
    CHECK(poly_to_string(q, kMatVars) == "(z - 1)*x12*x21 - 2*x11 + 5/3");
    CHECK(poly_from_string(poly_to_string(q, kMatVars), kMatVars, 8) == q);
    CHECK(poly_to_string(Poly::zero(4), kMatVars) == "0");
}

TEST_CASE("polynomial string round trip on random polynomials") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-4, 4), zc(0, 3);
    std::uniform_int_distribution<unsigned> exp(0, 3), terms(1, 6);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Term> ts;
        for (unsigned t = 0, k = terms(rng); t < k; ++t) {
            std::vector<unsigned> e{exp(rng), exp(rng), exp(rng), exp(rng)};
            CycNum c = CycNum(coeff(rng)) + CycNum::root_of_unity(8, zc(rng)) * CycNum(coeff(rng));
            ts.push_back({Monomial(e), c});
        }
        Poly p = Poly::from_terms(4, ts);
        std::string s = poly_to_string(p, kMatVars);
        CHECK(poly_from_string(s, kMatVars, 8) == p);
    }
}

TEST_CASE("group json round trip") {
    FiniteMatGroup g = named_group({GroupName::Tag::binary_dihedral, 2});
    Json j = group_to_json(g);
    CHECK(j["n"] == 2);
    CHECK(j["conductor"] == 4);
    FiniteMatGroup back = group_from_json(j);
    CHECK(back.order() == g.order());
    CHECK(back.conductor() == g.conductor());
    for (const CycMatrix& m : g.elements()) CHECK(back.contains(m));

    CHECK_THROWS_AS(group_from_json(nlohmann::json{{"n", 2}, {"conductor", 4}}), Error);
    CHECK_THROWS_AS(group_from_json(nlohmann::json{
                        {"n", 2}, {"conductor", 4}, {"generators", nlohmann::json::array()}}),
                    Error);
}

TEST_CASE("ideal json round trip and file loading") {
    Json j;
    j["vars"] = kMatVars;
    j["conductor"] = 1;
    j["order"] = "grlex";
    j["generators"] = {"x12", "x21", "x11^3 - x22^3"};
    IdealFile f = ideal_from_json(j);
    CHECK(f.ideal.num_vars() == 4);
    CHECK(f.ideal.generators().size() == 3);
    CHECK(variety_profile(f.ideal) == VarietyProfile{1, BigInt(3)});

    Json out = ideal_to_json(f.ideal, f.vars, f.conductor);
    IdealFile back = ideal_from_json(out);
    CHECK(ideal_equal(back.ideal, f.ideal));

    // file loading, including a diagnostic for a missing field
    {
        std::ofstream file("io_test_ideal.json");
        file << out.dump(2);
    }
    IdealFile loaded = load_ideal_file("io_test_ideal.json");
    CHECK(ideal_equal(loaded.ideal, f.ideal));
    CHECK_THROWS_AS(load_ideal_file("does_not_exist.json"), Error);

    Json bad = out;
    bad.erase("conductor");
    CHECK_THROWS_WITH_AS(ideal_from_json(bad), "missing field 'conductor'", Error);
}

TEST_CASE("order name round trip") {
    CHECK(order_to_string(MonomialOrder::grlex()) == "grlex");
    CHECK(order_to_string(MonomialOrder::grevlex()) == "grevlex");
    CHECK(order_from_string("grevlex") == MonomialOrder::grevlex());
    CHECK_THROWS_AS(order_from_string("tdeg"), Error);
}
