#pragma once

// Truncated formal power series in t over an exact coefficient ring.
//
// Coefficients are plain: the series stores c_n for sum c_n t^n. Any n!
// normalization (EGF form) is applied by the caller.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unigf/polyring.hpp"

namespace unigf {

namespace detail {

inline bool coeff_is_zero(const BigInt& c) { return c == 0; }
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
template <typename C>
bool coeff_is_zero(const Poly<C>& c) {
    return c.is_zero();
}

inline std::string coeff_text(const BigInt& c) { return c.str(); }
inline std::string coeff_text(const Rational& c) { return to_string(c); }
template <typename C>
std::string coeff_text(const Poly<C>& c) {
    return c.to_string();
}

}  // namespace detail

template <typename R>
class Series {
public:
    using coeff_type = R;

    /// Zero series truncated at `order` (inclusive).
    explicit Series(unsigned order) : coeffs_(order + 1, R(0)) {}

    explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    }

    /// The series `c` (a constant) at the given order.
    static Series constant(const R& c, unsigned order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// The series t at the given order (order >= 1).
    static Series variable(unsigned order) {
        Series s(order);
        if (order >= 1) s.coeffs_[1] = R(1);
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    const R& operator[](unsigned n) const { return coeffs_.at(n); }
    R& operator[](unsigned n) { return coeffs_.at(n); }

    Series truncated(unsigned order) const {
        if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    Series& operator+=(const Series& o) {
        shrink_to(o.order());
        for (unsigned n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
        return *this;
    }

    Series& operator-=(const Series& o) {
        shrink_to(o.order());
        for (unsigned n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
        return *this;
    }

    Series& scale(const R& s) {
        for (auto& c : coeffs_) c = c * s;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

    /// `c0 + c1*t + c2*t^2 + ...`; zero coefficients omitted.
    std::string to_string() const {
        std::string out;
        for (unsigned n = 0; n <= order(); ++n) {
            if (detail::coeff_is_zero(coeffs_[n])) continue;
            std::string c = detail::coeff_text(coeffs_[n]);
            bool negative = false;
            const bool compound = c.find_first_of("+ ", 1) != std::string::npos ||
                                  c.find('-', 1) != std::string::npos;
            if (!compound && c.front() == '-') {
                negative = true;
                c.erase(0, 1);
            }
            if (compound) c = "(" + c + ")";
            std::string piece;
            if (n == 0) {
                piece = c;
            } else {
                const std::string tp = n == 1 ? "t" : "t^" + std::to_string(n);
                piece = c == "1" ? tp : c + "*" + tp;
            }
            if (out.empty()) {
                out = negative ? "-" + piece : piece;
            } else {
                out += negative ? " - " + piece : " + " + piece;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<R> coeffs_;

    void shrink_to(unsigned order) {
        if (order < this->order()) coeffs_.resize(order + 1);
    }
};

/// c_n = sum_k a_k b_{n-k}, truncated at the smaller input order.
template <typename R>
Series<R> cauchy_product(const Series<R>& a, const Series<R>& b) {
    const unsigned order = std::min(a.order(), b.order());
    Series<R> r(order);
    for (unsigned i = 0; i <= order; ++i) {
        if (detail::coeff_is_zero(a[i])) continue;
        for (unsigned j = 0; i + j <= order; ++j) {
            if (detail::coeff_is_zero(b[j])) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

template <typename R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
    return cauchy_product(a, b);
}

/// outer(inner(t)) by Horner's rule in the series ring. Requires a zero
/// constant term in `inner`.
template <typename R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner) {
    if (!detail::coeff_is_zero(inner[0]))
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const unsigned order = std::min(outer.order(), inner.order());
    const Series<R> u = inner.truncated(order);
    Series<R> acc = Series<R>::constant(outer[order], order);
    for (unsigned k = order; k-- > 0;) {
        acc = cauchy_product(acc, u);
        acc[0] += outer[k];
    }
    return acc;
}

/// Formal d/dt; the result has order one less than the input.
template <typename R>
Series<R> derivative_t(const Series<R>& a) {
    if (a.order() == 0) throw std::invalid_argument("derivative_t: series of order 0");
    Series<R> r(a.order() - 1);
    for (unsigned n = 0; n < a.order(); ++n) r[n] = a[n + 1] * R(n + 1);
    return r;
}

/// a^r for a series with unit constant term, summing binom(r,k) u^k with
/// u = a - 1.
inline Series<Rational> binomial_pow(const Series<Rational>& a, const Rational& r) {
    if (a[0] != 1) throw std::invalid_argument("binomial_pow: constant term must be 1");
    const unsigned order = a.order();
    Series<Rational> u = a;
    u[0] = 0;
    Series<Rational> result = Series<Rational>::constant(Rational(1), order);
    Series<Rational> upow = Series<Rational>::constant(Rational(1), order);
    Rational binom(1);
    for (unsigned k = 1; k <= order; ++k) {
        binom = binom * (r - Rational(k - 1)) / Rational(k);
        upow = cauchy_product(upow, u);
        if (binom == 0) break;
        Series<Rational> term = upow;
        result += term.scale(binom);
    }
    return result;
}

/// U_1..U_order read off the generating function
///   F = sum_{k>=1} P_k(alpha,beta) x^k g(t)^k / k!,
///   g(t) = sum_{n>=1} P_n(lambda,mu) t^n / n!,
/// with P_n(a,b) = prod_{m=1}^{n-1} (a + m b). Element i of the result is
/// U_{i+1}. U_0 is not polynomial in alpha and is not produced.
std::vector<MPoly> unified_F_series(unsigned order);

}  // namespace unigf
