#pragma once

// Degenerate exponential and logarithm building blocks.
//
//   e_b(t) = (1 - b t)^(-1/b) = sum_n W_n(b) t^n / n!,
//   W_0 = W_1 = 1,  W_n(b) = prod_{m=1}^{n-1} (m b + 1)  for n >= 2.
//
// Homogenizing W_n gives the rising products prod_{m=1}^{n-1} (a + m b)
// that appear as polynomial coefficients throughout the unified family.

#include "unigf/polyring.hpp"
#include "unigf/series.hpp"

namespace unigf {

/// W_n(beta) as a polynomial in the symbol beta.
MPoly w_poly(unsigned n);

/// W_n evaluated at a rational point.
Rational w_value(unsigned n, const Rational& beta);

/// prod_{m=1}^{n-1} (a + m b); 1 for n == 1. Throws std::invalid_argument for n == 0.
MPoly rising_product(unsigned n, const MPoly& a, const MPoly& b);
MPoly rising_product(unsigned n, Symbol a, Symbol b);

/// Plain coefficients W_n(beta)/n! for n <= order. beta == 0 yields e^t.
Series<Rational> degen_exp_series(unsigned order, const Rational& beta);

/// -log(1 - t) = sum_{n>=1} t^n / n.
Series<Rational> neg_log_one_minus_series(unsigned order);

/// -log_beta(1 - t) = ((1 - t)^(-beta) - 1) / beta from the binomial
/// expansion; beta == 0 returns the limit -log(1 - t).
Series<Rational> neg_degen_log_one_minus_series(unsigned order, const Rational& beta);

/// 1 / (1 - c t).
Series<Rational> geometric_series(unsigned order, const Rational& c);

/// -log_beta(1 - t) == (1/beta) (e_{1/beta}(beta t) - 1) to the given order.
/// Throws std::invalid_argument for beta == 0.
bool check_log_exp_identity(const Rational& beta, unsigned order);

/// d/dt e_beta(t) == e_beta(t) / (1 - beta t) to order - 1 (order >= 1).
bool check_derivative_identity(const Rational& beta, unsigned order);

}  // namespace unigf
