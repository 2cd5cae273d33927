#include "doctest.h"
#include "oracles.hpp"
#include "unigf/degenfun.hpp"

using namespace unigf;
using QS = Series<Rational>;

TEST_SUITE("degenfun") {

TEST_CASE("W_n as a polynomial in beta") {
    CHECK(w_poly(0) == MPoly(1));
    CHECK(w_poly(1) == MPoly(1));
    CHECK(to_integer(parse_poly("2*b^2 + 3*b + 1")) == w_poly(3));
    for (unsigned n = 0; n <= 9; ++n)
        for (const Rational b : {Rational(0), Rational(1), Rational(-2, 3), Rational(5)})
            CHECK(w_value(n, b) == oracle::rising(n, Rational(1), b));
}

TEST_CASE("rising products homogenize W_n") {
    CHECK(rising_product(1, Symbol::alpha, Symbol::beta) == MPoly(1));
    CHECK(to_integer(parse_poly("(a+b)*(a+2*b)")) == rising_product(3, Symbol::alpha, Symbol::beta));
    CHECK_THROWS_AS(rising_product(0, Symbol::alpha, Symbol::beta), std::invalid_argument);
    for (unsigned n = 1; n <= 7; ++n)
        CHECK(substitute(rising_product(n, Symbol::alpha, Symbol::beta), {{Symbol::alpha, Rational(1)}}) ==
              to_rational(w_poly(n)));
}

TEST_CASE("degenerate exponential at beta = 0 is exp") {
    const QS e = degen_exp_series(8, Rational(0));
    for (unsigned n = 0; n <= 8; ++n) CHECK(e[n] == Rational(1, static_cast<long long>(oracle::factorial(n))));
}

TEST_CASE("degenerate exponential at beta = 1 is 1/(1-t)") {
    CHECK(degen_exp_series(8, Rational(1)) == geometric_series(8, Rational(1)));
}

TEST_CASE("degenerate exponential is a binomial power of 1 - beta t") {
    for (const Rational b : {Rational(1, 2), Rational(-1, 3), Rational(3)}) {
        QS base = QS::constant(Rational(1), 9);
        base[1] = -b;
        CHECK(degen_exp_series(9, b) == binomial_pow(base, Rational(-1) / b));
    }
}

TEST_CASE("derivative and log/exp identities") {
    for (const Rational b : {Rational(1), Rational(2), Rational(1, 2), Rational(1, 3), Rational(-3, 5)}) {
        CHECK(check_derivative_identity(b, 10));
        CHECK(check_log_exp_identity(b, 10));
    }
    CHECK(check_derivative_identity(Rational(0), 10));
    CHECK_THROWS_AS(check_log_exp_identity(Rational(0), 10), std::invalid_argument);
}

TEST_CASE("degenerate logarithm tends to the ordinary one") {
    CHECK(neg_degen_log_one_minus_series(9, Rational(0)) == neg_log_one_minus_series(9));
    const QS l = neg_log_one_minus_series(5);
    CHECK(l[0] == 0);
    CHECK(l[4] == Rational(1, 4));
}

}
