#include "unigf/polyring.hpp"

#include <cctype>
#include <charconv>

namespace unigf {

char symbol_name(Symbol s) {
    static constexpr char names[] = {'x', 'a', 'b', 'l', 'm'};
    return names[static_cast<std::size_t>(s)];
}

std::optional<Symbol> parse_symbol(std::string_view name) {
    if (name == "x") return Symbol::x;
    if (name == "a" || name == "alpha") return Symbol::alpha;
    if (name == "b" || name == "beta") return Symbol::beta;
    if (name == "l" || name == "lambda") return Symbol::lambda;
    if (name == "m" || name == "mu") return Symbol::mu;
    return std::nullopt;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
        return Rational(parse_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    const BigInt d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

std::string monomial_string(const Monomial& m, bool include_x) {
    std::string s;
    for (Symbol sym : kAllSymbols) {
        if (sym == Symbol::x && !include_x) continue;
        const auto e = exponent(m, sym);
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += symbol_name(sym);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string term_string(const std::string& coeff, bool negative, bool is_one, const std::string& mono) {
    std::string s = negative ? "-" : "";
    if (mono.empty()) return s + coeff;
    if (!is_one) s += coeff + "*";
    return s + mono;
}

}  // namespace detail

std::optional<MPoly> to_integer(const QPoly& p) {
    MPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
        r.add_term(m, boost::multiprecision::numerator(c));
    }
    return r;
}

namespace {

// Recursive-descent parser for the textual polynomial form.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    QPoly parse() {
        QPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    QPoly expr() {
        QPoly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    QPoly term() {
        QPoly acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    QPoly power() {
        QPoly base = primary();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            unsigned e = 0;
            std::from_chars(text_.data() + start, text_.data() + pos_, e);
            QPoly r(1);
            for (unsigned i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    QPoly unary() {
        // binds looser than '^': -a^2 is -(a^2)
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    BigInt digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    QPoly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            QPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected denominator");
                BigInt den = digits();
                if (den == 0) fail("zero denominator");
                return QPoly(Rational(num, den));
            }
            return QPoly(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const auto sym = parse_symbol(text_.substr(start, pos_ - start));
            if (!sym) fail("unknown symbol '" + std::string(text_.substr(start, pos_ - start)) + "'");
            return QPoly::var(*sym);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

template <typename C>
nlohmann::json poly_json(const Poly<C>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json e = nlohmann::json::array();
        for (auto v : m) e.push_back(v);
        std::string coeff;
        if constexpr (std::is_same_v<C, Rational>) {
            coeff = to_string(c);
        } else {
            coeff = c.str();
        }
        terms.push_back({{"exponents", e}, {"coeff", coeff}});
    }
    return {{"terms", terms}};
}

}  // namespace

QPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

nlohmann::json to_json(const MPoly& p) { return poly_json(p); }
nlohmann::json to_json(const QPoly& p) { return poly_json(p); }

}  // namespace unigf
