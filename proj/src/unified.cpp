#include "unigf/unified.hpp"

#include <stdexcept>

#include "unigf/degenfun.hpp"

namespace unigf {

namespace {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const MPoly& x_poly() {
    static const MPoly x = MPoly::var(Symbol::x);
    return x;
}

// P_k(lambda, mu) for k = 1..n_max, index k-1.
std::vector<MPoly> lambda_mu_products(unsigned n_max) {
    std::vector<MPoly> p;
    p.reserve(n_max);
    const MPoly l = MPoly::var(Symbol::lambda);
    const MPoly m = MPoly::var(Symbol::mu);
    MPoly acc(1);
    for (unsigned k = 1; k <= n_max; ++k) {
        if (k > 1) acc = acc * (l + m * BigInt(k - 1));
        p.push_back(acc);
    }
    return p;
}

void require_positive(unsigned n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace

std::vector<MPoly> u_polys_conv(unsigned n_max) {
    std::vector<MPoly> u;
    if (n_max == 0) return u;
    const auto p = lambda_mu_products(n_max);
    const MPoly a = MPoly::var(Symbol::alpha);
    const MPoly b = MPoly::var(Symbol::beta);
    u.push_back(x_poly());
    for (unsigned n = 1; n < n_max; ++n) {
        MPoly sum = p[n];  // P_{n+1}
        for (unsigned m = 1; m <= n; ++m) {
            const MPoly weight = a * binomial(n, m) + b * binomial(n, m - 1);
            sum += weight * p[n - m] * u[m - 1];
        }
        u.push_back(x_poly() * sum);
    }
    return u;
}

MPoly u_poly_conv(unsigned n) {
    require_positive(n, "u_poly_conv");
    return u_polys_conv(n).back();
}

std::vector<MPoly> u_polys_main(unsigned n_max) {
    std::vector<MPoly> u;
    if (n_max == 0) return u;
    const MPoly ax = MPoly::var(Symbol::alpha) * x_poly();
    const MPoly bx_plus_l = MPoly::var(Symbol::beta) * x_poly() + MPoly::var(Symbol::lambda);
    const MPoly x_times = x_poly() * bx_plus_l;
    u.push_back(x_poly());
    for (unsigned n = 1; n < n_max; ++n) {
        const MPoly& un = u.back();
        const MPoly mun = MPoly::var(Symbol::mu) * BigInt(n);
        u.push_back((ax + mun) * un + x_times * un.partial_derivative(Symbol::x));
    }
    return u;
}

MPoly u_poly_main(unsigned n) {
    require_positive(n, "u_poly_main");
    return u_polys_main(n).back();
}

MPoly u_poly_explicit(unsigned n) {
    require_positive(n, "u_poly_explicit");
    MPoly u;
    for (unsigned k = 1; k <= n; ++k) {
        for (unsigned i = 0; i < k; ++i) {
            for (unsigned j = 0; j <= n - k; ++j) {
                Monomial mono{};
                mono[static_cast<std::size_t>(Symbol::x)] = static_cast<std::uint16_t>(k);
                mono[static_cast<std::size_t>(Symbol::alpha)] = static_cast<std::uint16_t>(k - 1 - i);
                mono[static_cast<std::size_t>(Symbol::beta)] = static_cast<std::uint16_t>(i);
                mono[static_cast<std::size_t>(Symbol::lambda)] = static_cast<std::uint16_t>(n - k - j);
                mono[static_cast<std::size_t>(Symbol::mu)] = static_cast<std::uint16_t>(j);
                u.add_term(mono, explicit_coeff(n, k, i, j));
            }
        }
    }
    return u;
}

Rational u0_value(const Rational& alpha) {
    if (alpha == 0) throw std::invalid_argument("U_0 is undefined at alpha = 0");
    return alpha == 1 ? Rational(1) : Rational(0);
}

UTriangle coeff_triangle(unsigned n_max) {
    std::vector<std::vector<MPoly>> rows;
    rows.reserve(n_max);
    const auto u = u_polys_main(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<MPoly> row;
        row.reserve(n);
        for (unsigned m = 1; m <= n; ++m) row.push_back(u[n - 1].coeff_of_x_power(m));
        rows.push_back(std::move(row));
    }
    return UTriangle(std::move(rows));
}

void StirlingCache::grow(unsigned n) {
    while (first_.size() <= n) {
        const unsigned r = static_cast<unsigned>(first_.size());
        std::vector<BigInt> c(r + 1, 0);
        std::vector<BigInt> s(r + 1, 0);
        if (r == 0) {
            c[0] = 1;
            s[0] = 1;
        } else {
            const auto& pc = first_[r - 1];
            const auto& ps = second_[r - 1];
            for (unsigned k = 1; k <= r; ++k) {
                const BigInt c_same = k < r ? pc[k] : BigInt(0);
                const BigInt s_same = k < r ? ps[k] : BigInt(0);
                c[k] = pc[k - 1] + c_same * (r - 1);
                s[k] = ps[k - 1] + s_same * k;
            }
        }
        first_.push_back(std::move(c));
        second_.push_back(std::move(s));
    }
}

BigInt StirlingCache::first_unsigned(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::lock_guard lock(mutex_);
    grow(n);
    return first_[n][k];
}

BigInt StirlingCache::second(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::lock_guard lock(mutex_);
    grow(n);
    return second_[n][k];
}

StirlingCache& stirling_cache() {
    static StirlingCache cache;
    return cache;
}

BigInt stirling1_unsigned(unsigned n, unsigned k) { return stirling_cache().first_unsigned(n, k); }
BigInt stirling2(unsigned n, unsigned k) { return stirling_cache().second(n, k); }

BigInt explicit_coeff(unsigned n, unsigned k, unsigned i, unsigned j) {
    if (k < 1 || k > n || i > k - 1 || j > n - k) return 0;
    return stirling1_unsigned(n, n - j) * stirling2(n - j, k) * stirling1_unsigned(k, k - i);
}

LemmaReport verify_derivative_lemmas(unsigned n_max) {
    LemmaReport report;
    report.n_max = n_max;
    if (n_max == 0) return report;
    const auto u = u_polys_main(n_max);
    const auto p = lambda_mu_products(n_max + 1);
    std::vector<MPoly> du;
    du.reserve(n_max);
    for (const auto& un : u) du.push_back(un.partial_derivative(Symbol::x));

    const MPoly a = MPoly::var(Symbol::alpha);
    const MPoly bx = MPoly::var(Symbol::beta) * x_poly();

    for (unsigned n = 1; n <= n_max; ++n) {
        // First identity.
        MPoly with_u;
        MPoly with_du;
        for (unsigned m = 1; m + 1 <= n; ++m) {
            const MPoly w = p[n - m - 1] * binomial(n, m);
            with_u += w * u[m - 1];
            with_du += w * du[m - 1];
        }
        const MPoly rhs1 = a * with_u + p[n - 1] + bx * with_du;
        if (rhs1 != du[n - 1]) report.derx1_failures.push_back(n);

        // Second identity.
        MPoly lhs2;
        for (unsigned m = 0; m + 1 <= n; ++m) lhs2 += p[n - m - 1] * binomial(n, m) * u[m];
        MPoly rhs2;
        for (unsigned m = 1; m <= n; ++m) rhs2 += p[n - m] * binomial(n, m) * du[m - 1];
        rhs2 = x_poly() * rhs2;
        if (lhs2 != rhs2) report.derx2_failures.push_back(n);
    }
    return report;
}

Bindings ParamPoint::bindings() const {
    Bindings b{{Symbol::alpha, alpha}, {Symbol::beta, beta}, {Symbol::lambda, lambda}, {Symbol::mu, mu}};
    if (x) b.emplace(Symbol::x, *x);
    return b;
}

Series<Rational> f_series_at_alpha_one(const ParamPoint& p, const Rational& x, unsigned order) {
    // x * g(t), with g's coefficients P_n(lambda, mu) / n! evaluated exactly.
    Series<Rational> inner(order);
    Rational rising(1);
    Rational factorial(1);
    for (unsigned n = 1; n <= order; ++n) {
        if (n > 1) rising *= p.lambda + Rational(n - 1) * p.mu;
        factorial *= n;
        inner[n] = x * rising / factorial;
    }
    return compose(degen_exp_series(order, p.beta), inner);
}

namespace {

void check_ode_preconditions(unsigned n, const ParamPoint& p, unsigned order) {
    if (n < 1) throw std::invalid_argument("verify_ode: n must be >= 1");
    if (p.alpha != 1) throw std::invalid_argument("verify_ode: requires alpha = 1");
    if (p.mu == 0) throw std::invalid_argument("verify_ode: requires mu != 0");
    if (order < n + 2) throw std::invalid_argument("verify_ode: order must be >= n + 2");
}

}  // namespace

bool verify_ode_with_coefficients(unsigned n, const ParamPoint& p, const Rational& x, unsigned order,
                                  std::span<const Rational> s_values) {
    check_ode_preconditions(n, p, order);
    if (s_values.size() != n) throw std::invalid_argument("verify_ode: expected n coefficients");

    const Series<Rational> f = f_series_at_alpha_one(p, x, order);
    Series<Rational> lhs = f;
    for (unsigned i = 0; i < n; ++i) lhs = derivative_t(lhs);

    const unsigned out_order = order - n;
    const Series<Rational> ft = f.truncated(out_order);
    Series<Rational> one_minus_mu_t = Series<Rational>::constant(Rational(1), out_order);
    one_minus_mu_t[1] = -p.mu;

    Series<Rational> rhs(out_order);
    Rational x_power(1);
    for (unsigned m = 1; m <= n; ++m) {
        x_power *= x;
        const Rational lambda_exponent = -Rational(m) * p.lambda / p.mu - Rational(n);
        Series<Rational> term =
            cauchy_product(binomial_pow(one_minus_mu_t, lambda_exponent), binomial_pow(ft, 1 + Rational(m) * p.beta));
        rhs += term.scale(s_values[m - 1] * x_power);
    }
    return lhs == rhs;
}

bool verify_ode(unsigned n, const ParamPoint& p, const Rational& x, unsigned order) {
    check_ode_preconditions(n, p, order);
    const MPoly un = u_poly_main(n);
    const Bindings b = p.bindings();
    std::vector<Rational> s;
    s.reserve(n);
    for (unsigned m = 1; m <= n; ++m) {
        const QPoly v = substitute(un.coeff_of_x_power(m), b);
        s.push_back(v.coeff(Monomial{}));
    }
    return verify_ode_with_coefficients(n, p, x, order, s);
}

}  // namespace unigf
