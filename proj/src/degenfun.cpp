#include "unigf/degenfun.hpp"

namespace unigf {

MPoly w_poly(unsigned n) {
    if (n < 2) return MPoly(1);
    return rising_product(n, MPoly(1), MPoly::var(Symbol::beta));
}

Rational w_value(unsigned n, const Rational& beta) {
    Rational v(1);
    for (unsigned m = 1; m + 1 <= n; ++m) v *= Rational(m) * beta + 1;
    return v;
}

MPoly rising_product(unsigned n, const MPoly& a, const MPoly& b) {
    if (n == 0) throw std::invalid_argument("rising_product: n must be >= 1");
    MPoly p(1);
    for (unsigned m = 1; m < n; ++m) p = p * (a + b * BigInt(m));
    return p;
}

MPoly rising_product(unsigned n, Symbol a, Symbol b) {
    return rising_product(n, MPoly::var(a), MPoly::var(b));
}

Series<Rational> degen_exp_series(unsigned order, const Rational& beta) {
    Series<Rational> s(order);
    Rational factorial(1);
    for (unsigned n = 0; n <= order; ++n) {
        if (n > 0) factorial *= n;
        s[n] = w_value(n, beta) / factorial;
    }
    return s;
}

Series<Rational> neg_log_one_minus_series(unsigned order) {
    Series<Rational> s(order);
    for (unsigned n = 1; n <= order; ++n) s[n] = Rational(1, n);
    return s;
}

Series<Rational> neg_degen_log_one_minus_series(unsigned order, const Rational& beta) {
    if (beta == 0) return neg_log_one_minus_series(order);
    Series<Rational> one_minus_t = Series<Rational>::constant(Rational(1), order);
    if (order >= 1) one_minus_t[1] = -1;
    Series<Rational> s = binomial_pow(one_minus_t, -beta);
    s[0] -= 1;
    return s.scale(1 / beta);
}

Series<Rational> geometric_series(unsigned order, const Rational& c) {
    Series<Rational> s(order);
    Rational p(1);
    for (unsigned n = 0; n <= order; ++n) {
        s[n] = p;
        p *= c;
    }
    return s;
}

bool check_log_exp_identity(const Rational& beta, unsigned order) {
    if (beta == 0) throw std::invalid_argument("check_log_exp_identity: beta must be nonzero");
    const Series<Rational> lhs = neg_degen_log_one_minus_series(order, beta);

    // e_{1/beta}(beta t) has plain coefficients W_n(1/beta) beta^n / n!.
    Series<Rational> rhs = degen_exp_series(order, 1 / beta);
    Rational p(1);
    for (unsigned n = 0; n <= order; ++n) {
        rhs[n] *= p;
        p *= beta;
    }
    rhs[0] -= 1;
    rhs.scale(1 / beta);
    return lhs == rhs;
}

bool check_derivative_identity(const Rational& beta, unsigned order) {
    const Series<Rational> e = degen_exp_series(order, beta);
    const Series<Rational> lhs = derivative_t(e);
    const Series<Rational> rhs = cauchy_product(e.truncated(order - 1), geometric_series(order - 1, beta));
    return lhs == rhs;
}

}  // namespace unigf
