#include "unigf/series.hpp"

#include "unigf/degenfun.hpp"

namespace unigf {

std::vector<MPoly> unified_F_series(unsigned order) {
    if (order < 1) throw std::invalid_argument("unified_F_series: order must be >= 1");

    Series<QPoly> outer(order);
    Series<QPoly> inner(order);
    Rational factorial(1);
    for (unsigned k = 1; k <= order; ++k) {
        factorial *= k;
        const Rational inv = 1 / factorial;
        outer[k] = to_rational(rising_product(k, Symbol::alpha, Symbol::beta) * MPoly::var(Symbol::x, k)) * inv;
        inner[k] = to_rational(rising_product(k, Symbol::lambda, Symbol::mu)) * inv;
    }

    const Series<QPoly> f = compose(outer, inner);

    std::vector<MPoly> u;
    u.reserve(order);
    factorial = 1;
    for (unsigned n = 1; n <= order; ++n) {
        factorial *= n;
        auto integral = to_integer(f[n] * factorial);
        if (!integral) throw std::logic_error("unified_F_series: non-integral coefficient at n=" + std::to_string(n));
        u.push_back(std::move(*integral));
    }
    return u;
}

}  // namespace unigf
