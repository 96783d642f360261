#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toren/exactnum.hpp"

using namespace toren;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

CycNum random_cyc(std::mt19937& rng, unsigned conductor) {
    unsigned d = euler_phi(conductor);
    CycNum acc = CycNum::from_rational(0, conductor);
    for (unsigned i = 0; i < d; ++i)
        acc += CycNum::from_rational(random_rational(rng), conductor) *
               CycNum::root_of_unity(conductor, i);
    return acc;
}

}  // namespace

TEST_CASE("euler phi small values") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(4) == 2);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(20) == 8);
    CHECK(euler_phi(120) == 32);
}

TEST_CASE("cyclotomic polynomials: frozen small cases") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{-1, 1});          // z - 1
    CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{1, 1});           // z + 1
    CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});        // z^2 + 1
    CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});       // z^2 - z + 1
    CHECK(cyclotomic_polynomial(5) == std::vector<Rational>{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(cyclotomic_polynomial(0), Error);
}

TEST_CASE("product of cyclotomic polynomials over divisors is z^N - 1") {
    for (unsigned n = 1; n <= 24; ++n) {
        std::vector<Rational> prod{1};
        for (unsigned long d : sorted_divisors(n)) {
            auto phi = cyclotomic_polynomial(static_cast<unsigned>(d));
            std::vector<Rational> next(prod.size() + phi.size() - 1, Rational(0));
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = std::move(next);
        }
        std::vector<Rational> expect(n + 1, Rational(0));
        expect[0] = -1;
        expect[n] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("basic cyclotomic arithmetic") {
    CycNum i = CycNum::root_of_unity(4);
    CHECK(i * i == CycNum(-1));  // zeta_4^2 = -1

    CycNum z5 = CycNum::root_of_unity(5);
    CHECK(z5.inverse() == z5.pow(4));  // zeta_5^-1 = zeta_5^4

    // zeta_6^2 = zeta_6 - 1 (reduce z^2 mod z^2 - z + 1)
    CycNum z6 = CycNum::root_of_unity(6);
    CHECK(z6 * z6 == z6 - CycNum(1));

    CHECK_THROWS_AS(CycNum(0).inverse(), Error);
}

TEST_CASE("embed_into follows exponent scaling and rejects non-divisors") {
    // -1 at conductor 2 becomes zeta_4^2 at conductor 4
    CycNum minus_one = CycNum::root_of_unity(2);
    CHECK(embed_into(minus_one, 4) == CycNum::root_of_unity(4, 2));
    CHECK(embed_into(CycNum::root_of_unity(3), 6) == CycNum::root_of_unity(6, 2));
    CHECK_THROWS_AS(embed_into(CycNum::root_of_unity(4), 6), Error);
    // identity embedding
    CycNum a = CycNum::root_of_unity(8) + CycNum(2);
    CHECK(embed_into(a, 8) == a);
}

TEST_CASE("root_of_unity_order detects orders and rejects non-roots") {
    CHECK(root_of_unity_order(CycNum(1)) == 1);
    CHECK(root_of_unity_order(CycNum(-1)) == 2);
    CHECK(root_of_unity_order(CycNum::root_of_unity(6)) == 6);
    CHECK(root_of_unity_order(CycNum::root_of_unity(8, 2)) == 4);
    CHECK(root_of_unity_order(CycNum(2)) == std::nullopt);
    CHECK(root_of_unity_order(CycNum(0)) == std::nullopt);
    CHECK(root_of_unity_order(CycNum::root_of_unity(5) + CycNum(1)) == std::nullopt);
}

TEST_CASE("zeta_N^N = 1 and no smaller power is 1, N <= 24") {
    for (unsigned n = 1; n <= 24; ++n) {
        CycNum z = CycNum::root_of_unity(n);
        CycNum one = CycNum::from_rational(1, n);
        CHECK(z.pow(n) == one);
        for (unsigned k = 1; k < n; ++k) CHECK(z.pow(k) != one);
    }
}

TEST_CASE("field axioms on random samples with a common conductor") {
    std::mt19937 rng(20240521);
    const unsigned conductors[] = {4, 5, 8, 12};
    int inverses_checked = 0;
    for (int trial = 0; trial < 1100; ++trial) {
        unsigned n = conductors[trial % 4];
        CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycNum::from_rational(1, n));
            ++inverses_checked;
        }
    }
    CHECK(inverses_checked > 1000);
}

TEST_CASE("embed_into is a field homomorphism") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        CycNum a = random_cyc(rng, 6), b = random_cyc(rng, 6);
        CHECK(embed_into(a * b, 24) == embed_into(a, 24) * embed_into(b, 24));
        CHECK(embed_into(a + b, 24) == embed_into(a, 24) + embed_into(b, 24));
    }
}

TEST_CASE("mixed-conductor arithmetic promotes to the lcm") {
    CycNum z4 = CycNum::root_of_unity(4);
    CycNum z6 = CycNum::root_of_unity(6);
    CycNum prod = z4 * z6;
    CHECK(prod.conductor() == 12);
    CHECK(prod == CycNum::root_of_unity(12, 3) * CycNum::root_of_unity(12, 2));
    CHECK(prod == CycNum::root_of_unity(12, 5));
}

TEST_CASE("rational normal form is canonical") {
    Rational a(2, 4);
    a.canonicalize();
    Rational b(1, 2);
    CHECK(a == b);
    CHECK(a.get_num() == b.get_num());
    CHECK(a.get_den() == b.get_den());
    CHECK(rational_to_string(a) == "1/2");
    CHECK(rational_from_string("-6/4") == Rational(-3, 2));
    CHECK(rational_to_string(rational_from_string("-6/4")) == "-3/2");
    CHECK(rational_from_string("7") == Rational(7));
    CHECK_THROWS_AS(rational_from_string("x"), Error);
    // zero is uniquely 0/1
    Rational z = rational_from_string("0/5");
    CHECK(z.get_num() == 0);
    CHECK(z.get_den() == 1);
}

TEST_CASE("is_rational and rational_value") {
    CycNum a = CycNum::from_rational(Rational(3, 2), 8);
    CHECK(a.is_rational());
    CHECK(a.rational_value() == Rational(3, 2));
    CHECK(!CycNum::root_of_unity(8).is_rational());
    CHECK_THROWS_AS(CycNum::root_of_unity(8).rational_value(), Error);
}
