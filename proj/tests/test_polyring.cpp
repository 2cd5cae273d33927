#include <random>

#include "doctest.h"
#include "unigf/polyring.hpp"

using namespace unigf;

namespace {

MPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 5), expo(0, 3), coeff(-9, 9);
    MPoly p;
    for (int t = terms(rng); t > 0; --t) {
        Monomial m{};
        for (auto& e : m) e = static_cast<std::uint16_t>(expo(rng));
        p.add_term(m, BigInt(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("rationals parse and print in lowest terms") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("symbols accept letters and names") {
    CHECK(parse_symbol("a") == Symbol::alpha);
    CHECK(parse_symbol("lambda") == Symbol::lambda);
    CHECK(parse_symbol("m") == Symbol::mu);
    CHECK_FALSE(parse_symbol("q").has_value());
}

TEST_CASE("rendering groups by descending x power") {
    const auto q = to_integer(parse_poly("x*(l+m) + x^2*(b+a)"));
    REQUIRE(q.has_value());
    CHECK(q->to_string() == "(a+b)*x^2 + (l+m)*x");
    CHECK(MPoly().to_string() == "0");
    CHECK((MPoly::var(Symbol::x) - MPoly(1)).to_string() == "x - 1");
    CHECK(parse_poly("-2*x^3 + 1/2*a").to_string() == "-2*x^3 + 1/2*a");
    CHECK(parse_poly("a^2 - 3*a*b").to_string() == "a^2-3*a*b");
}

TEST_CASE("parse errors are reported") {
    CHECK_THROWS(parse_poly("a +"));
    CHECK_THROWS(parse_poly("(a"));
    CHECK_THROWS(parse_poly("y"));
    CHECK_THROWS(parse_poly("a^b"));
}

TEST_CASE("print then parse is the identity") {
    std::mt19937 rng(20261016);
    for (int i = 0; i < 200; ++i) {
        const MPoly p = random_poly(rng);
        const auto back = to_integer(parse_poly(p.to_string()));
        REQUIRE(back.has_value());
        INFO(p.to_string(), " -> ", back->to_string());
        CHECK(*back == p);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int i = 0; i < 150; ++i) {
        const MPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == MPoly());
        CHECK(p * MPoly(1) == p);
        CHECK((p * MPoly()).is_zero());
    }
}

TEST_CASE("zero coefficients never stored") {
    MPoly p = MPoly::var(Symbol::alpha);
    p -= MPoly::var(Symbol::alpha);
    CHECK(p.is_zero());
    CHECK(p.size() == 0);
    CHECK_FALSE(p.degree_in(Symbol::x).has_value());
}

TEST_CASE("partial derivative obeys the product rule") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        const MPoly p = random_poly(rng), q = random_poly(rng);
        for (Symbol s : kAllSymbols)
            CHECK((p * q).partial_derivative(s) == p.partial_derivative(s) * q + p * q.partial_derivative(s));
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(3);
    const Bindings b{{Symbol::alpha, Rational(2, 3)}, {Symbol::mu, Rational(-5)}, {Symbol::x, Rational(1, 7)}};
    for (int i = 0; i < 100; ++i) {
        const MPoly p = random_poly(rng), q = random_poly(rng);
        CHECK(substitute(p * q, b) == substitute(p, b) * substitute(q, b));
        CHECK(substitute(p + q, b) == substitute(p, b) + substitute(q, b));
    }
}

TEST_CASE("to_integer rejects fractional coefficients") {
    CHECK_FALSE(to_integer(parse_poly("1/2*a")).has_value());
    CHECK(to_integer(parse_poly("4/2*a")) == MPoly::var(Symbol::alpha) * BigInt(2));
}

TEST_CASE("json lists exponents and exact coefficients") {
    const auto j = to_json(parse_poly("3*x^2*a - 1/2"));
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["exponents"] == nlohmann::json({2, 1, 0, 0, 0}));
    CHECK(j["terms"][0]["coeff"] == "3");
    CHECK(j["terms"][1]["coeff"] == "-1/2");
}

}

TEST_CASE("unary minus binds looser than powers" * doctest::test_suite("polyring")) {
    CHECK(parse_poly("-a^2") == -parse_poly("a*a"));
    CHECK(parse_poly("2*-a") == parse_poly("-2*a"));
    CHECK(parse_poly("(-a)^2") == parse_poly("a^2"));
}
