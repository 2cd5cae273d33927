#include "unigf/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "unigf/degenfun.hpp"
#include "unigf/enumeration.hpp"
#include "unigf/series.hpp"

namespace unigf {

std::string to_string(Suite s) {
    switch (s) {
        case Suite::all: return "all";
        case Suite::recurrences: return "recurrences";
        case Suite::lemmas: return "lemmas";
        case Suite::ode: return "ode";
        case Suite::enumeration: return "enumeration";
    }
    return "?";
}

Suite parse_suite(std::string_view text) {
    for (Suite s : {Suite::all, Suite::recurrences, Suite::lemmas, Suite::ode, Suite::enumeration})
        if (text == to_string(s)) return s;
    throw std::invalid_argument("unknown suite '" + std::string(text) +
                                "' (expected all, recurrences, lemmas, ode or enumeration)");
}

const std::vector<ParamPoint>& ode_sample_points() {
    static const std::vector<ParamPoint> points{
        {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1, 2)},
        {Rational(1), Rational(2), Rational(1, 2), Rational(1), Rational(2, 3)},
        {Rational(1), Rational(1, 3), Rational(-2), Rational(3, 2), Rational(-3, 4)},
        {Rational(1), Rational(0), Rational(3), Rational(-1, 2), Rational(5, 7)},
    };
    return points;
}

namespace {

constexpr unsigned kLemmaSymbolicCap = 10;
constexpr unsigned kOdeCap = 5;
constexpr unsigned kMoveOracleCap = 7;

struct Context {
    const VerifyOptions& opts;
    std::vector<CheckResult> results;
    std::vector<MPoly> main;  // U_1..U_n_max from the first-order recurrence

    bool fault(std::string_view name) const { return opts.inject_fault && *opts.inject_fault == name; }

    void record(std::string name, bool ok, std::string detail) {
        results.push_back({std::move(name), ok, std::move(detail)});
    }
};

std::string range_text(unsigned lo, unsigned hi) {
    return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Compares a route against the first-order recurrence and names the first bad n.
void compare_route(Context& ctx, const std::string& name, const std::vector<MPoly>& route) {
    for (unsigned n = 1; n <= ctx.opts.n_max; ++n) {
        if (route[n - 1] != ctx.main[n - 1]) {
            ctx.record(name, false, "first disagreement at n=" + std::to_string(n));
            return;
        }
    }
    ctx.record(name, true, range_text(1, ctx.opts.n_max));
}

void run_recurrences(Context& ctx) {
    const unsigned n_max = ctx.opts.n_max;
    compare_route(ctx, "convolution recurrence = first-order recurrence", u_polys_conv(n_max));
    compare_route(ctx, "generating-function expansion = first-order recurrence", unified_F_series(n_max));
    {
        std::vector<MPoly> expl;
        for (unsigned n = 1; n <= n_max; ++n) expl.push_back(u_poly_explicit(n));
        compare_route(ctx, "explicit Stirling-number formula = first-order recurrence", expl);
    }

    // S(n+1,m) = (a + (m-1) b) S(n,m-1) + (m l + n m) S(n,m)
    const MPoly a = MPoly::var(Symbol::alpha), b = MPoly::var(Symbol::beta);
    const MPoly l = MPoly::var(Symbol::lambda), mu = MPoly::var(Symbol::mu);
    auto entry = [&](unsigned n, unsigned m) { return ctx.main[n - 1].coeff_of_x_power(m); };
    for (unsigned n = 1; n < n_max; ++n) {
        for (unsigned m = 1; m <= n + 1; ++m) {
            MPoly rhs = (l * BigInt(m) + mu * BigInt(n)) * entry(n, m);
            if (m >= 2) rhs += (a + b * BigInt(m - 1)) * entry(n, m - 1);
            if (entry(n + 1, m) != rhs) {
                ctx.record("triangle recurrence for S(n+1,m)", false,
                           "fails at n=" + std::to_string(n + 1) + ", m=" + std::to_string(m));
                return;
            }
        }
    }
    ctx.record("triangle recurrence for S(n+1,m)", true, range_text(2, n_max));
}

void run_lemmas(Context& ctx) {
    const unsigned n_max = ctx.opts.n_max;

    std::optional<unsigned> bad;
    for (unsigned n = 1; n <= n_max && !bad; ++n) {
        const MPoly& u = ctx.main[n - 1];
        if (u.degree_in(Symbol::x) != n) bad = n;
        for (Symbol s : {Symbol::alpha, Symbol::beta, Symbol::lambda, Symbol::mu}) {
            const auto d = u.degree_in(s);
            if (!d || *d != n - 1) bad = n;
        }
    }
    ctx.record("degree n in x and n-1 in each parameter", !bad,
               bad ? "fails at n=" + std::to_string(*bad) : range_text(1, n_max));

    bad.reset();
    for (unsigned n = 1; n <= n_max && !bad; ++n)
        if (!ctx.main[n - 1].coeff_of_x_power(0).is_zero()) bad = n;
    ctx.record("zero constant term", !bad, bad ? "fails at n=" + std::to_string(*bad) : range_text(1, n_max));

    bad.reset();
    for (unsigned n = 1; n <= n_max && !bad; ++n) {
        MPoly expect(1);
        for (unsigned m = 1; m < n; ++m) expect *= MPoly::var(Symbol::alpha) + MPoly::var(Symbol::beta) * BigInt(m);
        if (ctx.main[n - 1].coeff_of_x_power(n) != expect) bad = n;
    }
    ctx.record("leading coefficient [x^n] U_n = prod_{j<n} (a + j b)", !bad,
               bad ? "fails at n=" + std::to_string(*bad) : range_text(1, n_max));

    bad.reset();
    for (unsigned n = 1; n <= n_max && !bad; ++n) {
        MPoly expect(1);
        for (unsigned m = 1; m < n; ++m) expect *= MPoly::var(Symbol::lambda) + MPoly::var(Symbol::mu) * BigInt(m);
        if (ctx.main[n - 1].coeff_of_x_power(1) != expect) bad = n;
    }
    ctx.record("linear coefficient [x] U_n = prod_{j<n} (l + j m)", !bad,
               bad ? "fails at n=" + std::to_string(*bad) : range_text(1, n_max));

    const unsigned lemma_max = std::min(n_max, kLemmaSymbolicCap);
    const LemmaReport rep = verify_derivative_lemmas(lemma_max);
    auto failures = [](const std::vector<unsigned>& f) {
        std::string s = "fails at n=";
        for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
        return s;
    };
    ctx.record("first-derivative convolution identity", rep.derx1_failures.empty(),
               rep.derx1_failures.empty() ? range_text(1, lemma_max) : failures(rep.derx1_failures));
    ctx.record("second-derivative convolution identity", rep.derx2_failures.empty(),
               rep.derx2_failures.empty() ? range_text(1, lemma_max) : failures(rep.derx2_failures));

    const std::vector<Rational> betas{Rational(1), Rational(2), Rational(1, 2), Rational(1, 3)};
    bool deriv_ok = true, logexp_ok = true;
    for (const auto& beta : betas) {
        deriv_ok = deriv_ok && check_derivative_identity(beta, 10);
        logexp_ok = logexp_ok && check_log_exp_identity(beta, 10);
    }
    ctx.record("degenerate exponential derivative identity", deriv_ok, "beta in {1, 2, 1/2, 1/3}, order 10");
    ctx.record("degenerate logarithm / exponential identity", logexp_ok, "beta in {1, 2, 1/2, 1/3}, order 10");
}

void run_ode(Context& ctx) {
    const unsigned n_top = std::min(ctx.opts.n_max, kOdeCap);
    const auto& points = ode_sample_points();
    for (unsigned n = 1; n <= n_top; ++n) {
        bool ok = true;
        std::string detail = "order " + std::to_string(n + 7) + ", " + std::to_string(points.size()) + " samples";
        for (std::size_t i = 0; i < points.size() && ok; ++i) {
            const ParamPoint& p = points[i];
            const Rational x = *p.x;
            std::vector<Rational> s;
            const Bindings bind = p.bindings();
            for (unsigned m = 1; m <= n; ++m)
                s.push_back(substitute(ctx.main[n - 1].coeff_of_x_power(m), bind).coeff(Monomial{}));
            if (!verify_ode_with_coefficients(n, p, x, n + 7, s)) {
                ok = false;
                detail = "fails at sample " + std::to_string(i + 1);
            }
        }
        ctx.record("generating-function differential equation, n=" + std::to_string(n), ok, detail);
    }
}

void run_enumeration(Context& ctx) {
    const unsigned n_top = std::min<unsigned>(ctx.opts.n_max, kEnumerationGuard);
    std::optional<std::pair<unsigned, unsigned>> bad;
    for (unsigned n = 1; n <= n_top && !bad; ++n) {
        for (unsigned k = 1; k <= n && !bad; ++k) {
            MPoly brute = s_poly_bruteforce(static_cast<int>(n), static_cast<int>(k));
            if (ctx.fault("bruteforce") && n >= 3) brute += MPoly::var(Symbol::alpha);
            const MPoly rec = s_poly_rec(static_cast<int>(n), static_cast<int>(k));
            if (brute != rec || rec != ctx.main[n - 1].coeff_of_x_power(k)) bad = {n, k};
        }
    }
    ctx.record("enumerated statistics = S(n,k) recurrence = triangle", !bad,
               bad ? "fails at n=" + std::to_string(bad->first) + ", k=" + std::to_string(bad->second)
                   : range_text(1, n_top) + ", all k");

    const unsigned move_top = std::min(n_top, kMoveOracleCap);
    bad.reset();
    for (unsigned n = 1; n <= move_top && !bad; ++n) {
        for (unsigned k = 1; k <= n && !bad; ++k) {
            std::vector<int> openers(k);
            for_each_llp(static_cast<int>(n), static_cast<int>(k), [&](const LLPartition& p) {
                if (bad) return;
                const StatVector s = stats(p);
                int nse_moves = 0;
                for (std::size_t i = 0; i < p.blocks.size(); ++i) {
                    openers[i] = *std::min_element(p.blocks[i].begin(), p.blocks[i].end());
                    nse_moves += min_right_moves(p.blocks[i]);
                }
                const bool ok = s.rlb + s.nsb == static_cast<int>(k) - 1 &&
                                s.rle + s.nse == static_cast<int>(n - k) && s.nsb == min_right_moves(openers) &&
                                s.nse == nse_moves;
                if (!ok) bad = {n, k};
            });
        }
    }
    ctx.record("statistic complements and minimal rightward moves", !bad,
               bad ? "fails at n=" + std::to_string(bad->first) + ", k=" + std::to_string(bad->second)
                   : range_text(1, move_top));
}

}  // namespace

std::vector<CheckResult> run_checks(const VerifyOptions& opts) {
    if (opts.n_max < 1) throw std::invalid_argument("verify: n_max must be >= 1");
    if (opts.inject_fault && *opts.inject_fault != "main-recurrence" && *opts.inject_fault != "bruteforce")
        throw std::invalid_argument("unknown fault '" + *opts.inject_fault + "'");

    Context ctx{opts, {}, u_polys_main(opts.n_max)};
    if (ctx.fault("main-recurrence"))
        for (unsigned n = 3; n <= opts.n_max; ++n) ctx.main[n - 1] += MPoly::var(Symbol::x, n);

    const bool all = opts.suite == Suite::all;
    if (all || opts.suite == Suite::recurrences) run_recurrences(ctx);
    if (all || opts.suite == Suite::lemmas) run_lemmas(ctx);
    if (all || opts.suite == Suite::ode) run_ode(ctx);
    if (all || opts.suite == Suite::enumeration) run_enumeration(ctx);
    return ctx.results;
}

}  // namespace unigf
