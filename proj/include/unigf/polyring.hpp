#pragma once

// Sparse multivariate polynomials over the five symbols x, alpha, beta,
// lambda, mu with exact (big integer or rational) coefficients.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

namespace unigf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Symbol : std::uint8_t { x = 0, alpha = 1, beta = 2, lambda = 3, mu = 4 };

inline constexpr std::size_t kNumSymbols = 5;
inline constexpr std::array<Symbol, kNumSymbols> kAllSymbols{
    Symbol::x, Symbol::alpha, Symbol::beta, Symbol::lambda, Symbol::mu};

/// ASCII name used in textual output: x, a, b, l, m.
char symbol_name(Symbol s);

/// Accepts the ASCII names as well as the spelled-out forms
/// ("alpha", "beta", "lambda", "mu").
std::optional<Symbol> parse_symbol(std::string_view name);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Exponent vector indexed by Symbol.
using Monomial = std::array<std::uint16_t, kNumSymbols>;

inline std::uint16_t exponent(const Monomial& m, Symbol s) { return m[static_cast<std::size_t>(s)]; }

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

/// Graded-lex, highest first; ties broken lexicographically with
/// x > alpha > beta > lambda > mu.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = total_degree(a);
        const unsigned db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

namespace detail {
std::string monomial_string(const Monomial& m, bool include_x);
std::string term_string(const std::string& coeff, bool negative, bool is_one, const std::string& mono);
}  // namespace detail

template <typename C>
class Poly {
public:
    using coeff_type = C;
    using term_map = std::map<Monomial, C, GradedLexGreater>;

    Poly() = default;

    // NOLINTNEXTLINE(google-explicit-constructor)
    Poly(int c) : Poly(C(c)) {}

    explicit Poly(const C& c) {
        if (c != 0) terms_.emplace(Monomial{}, c);
    }

    static Poly monomial(const Monomial& m, const C& c = C(1)) {
        Poly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    static Poly var(Symbol s, unsigned power = 1) {
        Monomial m{};
        m[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(power);
        return monomial(m);
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of an exact monomial (zero if absent).
    C coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Monomial& m, const C& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }

    Poly& operator*=(const C& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (std::size_t i = 0; i < kNumSymbols; ++i)
                    m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend Poly operator*(Poly a, const C& s) { return a *= s; }
    friend Poly operator*(const C& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Largest exponent of `s`; nullopt for the zero polynomial.
    std::optional<unsigned> degree_in(Symbol s) const {
        if (terms_.empty()) return std::nullopt;
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, exponent(m, s));
        return d;
    }

    Poly partial_derivative(Symbol s) const {
        Poly r;
        const auto i = static_cast<std::size_t>(s);
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial d = m;
            --d[i];
            r.add_term(d, c * m[i]);
        }
        return r;
    }

    /// [x^k]p, a polynomial in the four parameters.
    Poly coeff_of_x_power(unsigned k) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (exponent(m, Symbol::x) != k) continue;
            Monomial d = m;
            d[0] = 0;
            r.terms_.emplace(d, c);
        }
        return r;
    }

    /// Canonical text: terms grouped by descending power of x, each group's
    /// parameter polynomial parenthesized when it has several terms, e.g.
    /// `(a+b)*x^2 + (l+m)*x`.
    std::string to_string() const;

private:
    term_map terms_;
};

using MPoly = Poly<BigInt>;
using QPoly = Poly<Rational>;

namespace detail {

inline std::string coeff_abs_string(const BigInt& c) { return (c < 0 ? BigInt(-c) : c).str(); }
inline std::string coeff_abs_string(const Rational& c) { return to_string(c < 0 ? Rational(-c) : c); }

}  // namespace detail

template <typename C>
std::string Poly<C>::to_string() const {
    if (terms_.empty()) return "0";

    // Group by exponent of x, highest first.
    std::map<unsigned, std::vector<std::pair<Monomial, C>>, std::greater<>> groups;
    for (const auto& [m, c] : terms_) groups[exponent(m, Symbol::x)].emplace_back(m, c);

    auto inner = [](const std::vector<std::pair<Monomial, C>>& ts) {
        std::string s;
        bool first = true;
        for (const auto& [m, c] : ts) {
            const bool neg = c < 0;
            const std::string mono = detail::monomial_string(m, false);
            const bool unit = (neg ? C(-c) : c) == 1;
            std::string t = detail::term_string(detail::coeff_abs_string(c), neg, unit, mono);
            if (first) {
                s += t;
            } else if (neg) {
                s += t;  // carries its own '-'
            } else {
                s += "+" + t;
            }
            first = false;
        }
        return s;
    };

    const bool only_constant_in_x = groups.size() == 1 && groups.begin()->first == 0;
    if (only_constant_in_x) return inner(groups.begin()->second);

    std::string out;
    bool first = true;
    for (const auto& [k, ts] : groups) {
        Monomial xm{};
        xm[0] = static_cast<std::uint16_t>(k);
        const std::string xs = detail::monomial_string(xm, true);
        std::string piece;
        bool negative_piece = false;
        if (ts.size() == 1) {
            const auto& [m, c] = ts.front();
            negative_piece = c < 0;
            std::string mono = detail::monomial_string(m, false);
            if (!xs.empty()) mono = mono.empty() ? xs : mono + "*" + xs;
            const bool unit = (negative_piece ? C(-c) : c) == 1;
            piece = detail::term_string(detail::coeff_abs_string(c), false, unit, mono);
        } else {
            piece = "(" + inner(ts) + ")";
            if (!xs.empty()) piece += "*" + xs;
        }
        if (first) {
            out += negative_piece ? "-" + piece : piece;
        } else {
            out += negative_piece ? " - " + piece : " + " + piece;
        }
        first = false;
    }
    return out;
}

/// Bindings of some of the five symbols to exact rationals.
using Bindings = std::map<Symbol, Rational>;

inline Rational pow(const Rational& base, unsigned e) {
    return Rational(boost::multiprecision::pow(boost::multiprecision::numerator(base), e),
                    boost::multiprecision::pow(boost::multiprecision::denominator(base), e));
}

/// Evaluates bound symbols exactly; unbound symbols stay formal.
template <typename C>
QPoly substitute(const Poly<C>& p, const Bindings& bindings) {
    QPoly r;
    for (const auto& [m, c] : p.terms()) {
        Rational value{c};
        Monomial rest = m;
        for (const auto& [sym, v] : bindings) {
            const auto i = static_cast<std::size_t>(sym);
            if (rest[i] == 0) continue;
            value *= pow(v, rest[i]);
            rest[i] = 0;
        }
        r.add_term(rest, value);
    }
    return r;
}

inline QPoly to_rational(const MPoly& p) {
    QPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, Rational(c));
    return r;
}

/// Integer-coefficient view of `p`, or nullopt if some coefficient is not integral.
std::optional<MPoly> to_integer(const QPoly& p);

/// Parses the textual polynomial form (integers, p/q literals, the symbols
/// x a b l m, + - * ^ and parentheses). Throws std::invalid_argument.
QPoly parse_poly(std::string_view text);

/// Structured form: {"terms":[{"exponents":[ex,ea,eb,el,em],"coeff":"..."}]}
/// in canonical term order.
nlohmann::json to_json(const MPoly& p);
nlohmann::json to_json(const QPoly& p);

}  // namespace unigf
