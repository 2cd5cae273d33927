#pragma once

// The polynomial family U_n(x; alpha, beta, lambda, mu) and its
// coefficient triangle S(n,m) = [x^m] U_n, computed along independent
// routes, plus checks of the derivative identities and the differential
// equation satisfied by the generating function.

#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "unigf/polyring.hpp"
#include "unigf/series.hpp"

namespace unigf {

/// Convolution recurrence
///   U_{n+1} = x sum_{m=1}^{n} [a C(n,m) + b C(n,m-1)] P_{n-m+1}(l,m) U_m
///           + x P_{n+1}(l,m),   U_1 = x.
/// Element i holds U_{i+1}.
std::vector<MPoly> u_polys_conv(unsigned n_max);
MPoly u_poly_conv(unsigned n);

/// First-order recurrence U_{n+1} = (a x + m n) U_n + x (b x + l) dU_n/dx.
std::vector<MPoly> u_polys_main(unsigned n_max);
MPoly u_poly_main(unsigned n);

/// Closed form sum_k sum_i sum_j explicit_coeff(n,k,i,j) a^{k-1-i} b^i l^{n-k-j} m^j x^k.
MPoly u_poly_explicit(unsigned n);

/// U_0 at a numeric alpha: 1 when alpha == 1, 0 otherwise. The generating
/// function is undefined at alpha == 0, so that input throws.
Rational u0_value(const Rational& alpha);

/// S(n,m) = [x^m] U_n for 1 <= m <= n <= n_max.
class UTriangle {
public:
    UTriangle() = default;
    explicit UTriangle(std::vector<std::vector<MPoly>> rows) : rows_(std::move(rows)) {}

    unsigned n_max() const { return static_cast<unsigned>(rows_.size()); }

    /// Zero outside 1 <= m <= n <= n_max.
    MPoly entry(unsigned n, unsigned m) const {
        if (n < 1 || n > n_max() || m < 1 || m > n) return {};
        return rows_[n - 1][m - 1];
    }

    const std::vector<MPoly>& row(unsigned n) const { return rows_.at(n - 1); }

private:
    std::vector<std::vector<MPoly>> rows_;
};

UTriangle coeff_triangle(unsigned n_max);

/// Memoized Stirling triangles (unsigned first kind c(n,k), second kind
/// S2(n,k)). Safe for concurrent use; rows are grown under a lock.
class StirlingCache {
public:
    BigInt first_unsigned(unsigned n, unsigned k);
    BigInt second(unsigned n, unsigned k);

private:
    void grow(unsigned n);

    std::mutex mutex_;
    std::vector<std::vector<BigInt>> first_;
    std::vector<std::vector<BigInt>> second_;
};

StirlingCache& stirling_cache();

/// Returns 0 for k > n.
BigInt stirling1_unsigned(unsigned n, unsigned k);
BigInt stirling2(unsigned n, unsigned k);

/// Coefficient of a^{k-1-i} b^i l^{n-k-j} m^j in S(n,k):
/// c(n, n-j) S2(n-j, k) c(k, k-i). Zero outside 1 <= k <= n,
/// 0 <= i <= k-1, 0 <= j <= n-k.
BigInt explicit_coeff(unsigned n, unsigned k, unsigned i, unsigned j);

struct LemmaReport {
    unsigned n_max = 0;
    std::vector<unsigned> derx1_failures;
    std::vector<unsigned> derx2_failures;

    bool passed() const { return derx1_failures.empty() && derx2_failures.empty(); }
};

/// Checks, for 1 <= n <= n_max,
///   dU_n/dx = a sum_{m=1}^{n-1} C(n,m) P_{n-m} U_m + P_n
///           + b x sum_{m=1}^{n-1} C(n,m) P_{n-m} dU_m/dx
/// and
///   sum_{m=0}^{n-1} C(n,m) P_{n-m} U_{m+1} = x sum_{m=1}^{n} C(n,m) P_{n-m+1} dU_m/dx
/// where P_k = P_k(lambda, mu).
LemmaReport verify_derivative_lemmas(unsigned n_max);

/// Exact rational values for the four parameters and optionally x.
struct ParamPoint {
    Rational alpha;
    Rational beta;
    Rational lambda;
    Rational mu;
    std::optional<Rational> x;

    Bindings bindings() const;
};

/// Truncated series of F(x, t) at alpha == 1 built from the degenerate
/// exponentials directly: F = e_beta(x g(t)), g = sum P_n(lambda,mu) t^n/n!.
Series<Rational> f_series_at_alpha_one(const ParamPoint& p, const Rational& x, unsigned order);

/// Checks
///   F^{(n)} = sum_{m=1}^{n} S(n,m) x^m (1 - mu t)^{-m lambda/mu - n} F^{1 + m beta}
/// as truncated series (alpha == 1). Throws std::invalid_argument unless
/// alpha == 1, mu != 0 and order >= n + 2.
bool verify_ode(unsigned n, const ParamPoint& p, const Rational& x, unsigned order);

/// Same identity with caller-supplied S(n,1..n) values.
bool verify_ode_with_coefficients(unsigned n, const ParamPoint& p, const Rational& x, unsigned order,
                                  std::span<const Rational> s_values);

}  // namespace unigf
