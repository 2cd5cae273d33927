#include "unigf/cli.hpp"

#include <chrono>
#include <sstream>

#include "unigf/enumeration.hpp"
#include "unigf/unified.hpp"

namespace unigf::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Upper bounds that keep a single invocation at desk scale.
constexpr long kPolyMax = 40;
constexpr long kTriangleMax = 40;
constexpr long kVerifyMax = 14;

CommandOutput usage_error(const std::string& msg) { return {kExitUsage, "", "error: " + msg + "\n"}; }

class Timer {
public:
    explicit Timer(bool on) : on_(on), start_(Clock::now()) {}
    std::optional<long long> elapsed_ms() const {
        if (!on_) return std::nullopt;
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    }

private:
    bool on_;
    Clock::time_point start_;
};

// Structured envelope: {"command", "parameters", "result"[, "timing_ms"]}.
std::string envelope(const std::string& command, json parameters, json result, const Timer& timer) {
    json j;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["result"] = std::move(result);
    if (auto ms = timer.elapsed_ms()) j["timing_ms"] = *ms;
    return j.dump(2) + "\n";
}

std::string timing_line(const Timer& timer) {
    auto ms = timer.elapsed_ms();
    return ms ? "elapsed_ms=" + std::to_string(*ms) + "\n" : "";
}

template <typename T>
std::string join(const std::vector<T>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        if constexpr (std::is_same_v<T, BigInt>)
            s += v[i].str();
        else
            s += to_string(v[i]);
    }
    return s;
}

template <typename T>
json rows_json(const Triangle<T>& tri) {
    json rows = json::array();
    for (const auto& r : tri.rows) {
        json row = json::array();
        for (const auto& v : r) {
            if constexpr (std::is_same_v<T, BigInt>)
                row.push_back(v.str());
            else
                row.push_back(to_string(v));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
std::string rows_text(const Triangle<T>& tri) {
    std::string s;
    for (const auto& r : tri.rows) s += join(r, " ") + "\n";
    return s;
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "text") return Format::text;
    if (text == "structured" || text == "json") return Format::structured;
    throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected text or structured)");
}

Bindings parse_bindings(std::string_view text) {
    Bindings b;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("binding '" + std::string(item) + "' is not of the form sym=value");
        const auto sym = parse_symbol(item.substr(0, eq));
        if (!sym) throw std::invalid_argument("unknown symbol '" + std::string(item.substr(0, eq)) + "'");
        if (b.contains(*sym)) throw std::invalid_argument("symbol '" + std::string(1, symbol_name(*sym)) + "' bound twice");
        b.emplace(*sym, parse_rational(item.substr(eq + 1)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return b;
}

json bindings_json(const Bindings& b) {
    json j = json::object();
    for (const auto& [sym, val] : b) j[std::string(1, symbol_name(sym))] = to_string(val);
    return j;
}

CommandOutput cmd_poly(long n, const Bindings& bindings, const OutputOptions& opts) {
    if (n < 1) return usage_error("poly: n must be >= 1 (U_0 is not a polynomial in x)");
    if (n > kPolyMax) return usage_error("poly: n must be <= " + std::to_string(kPolyMax));
    const Timer timer(opts.timing);

    const MPoly u = u_poly_main(static_cast<unsigned>(n));
    json result;
    std::string text;
    if (bindings.empty()) {
        text = u.to_string();
        result = to_json(u);
    } else {
        const QPoly q = substitute(u, bindings);
        text = q.to_string();
        result = to_json(q);
    }
    result["text"] = text;

    if (opts.format == Format::structured)
        return {kExitOk, envelope("poly", {{"n", n}, {"bind", bindings_json(bindings)}}, std::move(result), timer), ""};
    return {kExitOk, text + "\n", timing_line(timer)};
}

CommandOutput cmd_triangle(const TriangleRequest& req, const OutputOptions& opts) {
    if (req.n_max < 1) return usage_error("triangle: n_max must be >= 1");
    if (req.n_max > kTriangleMax) return usage_error("triangle: n_max must be <= " + std::to_string(kTriangleMax));
    const Timer timer(opts.timing);

    Bindings bind;
    json params = json::object();
    if (req.case_id) {
        try {
            bind = special_case(*req.case_id).bindings();
        } catch (const std::out_of_range& e) {
            return usage_error(std::string("triangle: ") + e.what());
        }
        params["case"] = *req.case_id;
    }
    for (const auto& [sym, val] : req.bindings) bind.insert_or_assign(sym, val);
    params["bind"] = bindings_json(bind);
    params["n_max"] = req.n_max;

    const auto n_max = static_cast<unsigned>(req.n_max);
    try {
        json result;
        std::string text;
        if (req.allow_rational) {
            const RationalTriangle tri = specialize_triangle_rational(bind, n_max);
            result["rows"] = rows_json(tri);
            text = rows_text(tri);
        } else {
            const IntTriangle tri = specialize_triangle(bind, n_max);
            result["rows"] = rows_json(tri);
            text = rows_text(tri);
        }
        if (opts.format == Format::structured)
            return {kExitOk, envelope("triangle", std::move(params), std::move(result), timer), ""};
        return {kExitOk, text, timing_line(timer)};
    } catch (const SpecializationError& e) {
        return {kExitFailure, "", std::string("error: ") + e.what() + "\n"};
    }
}

CommandOutput cmd_enumerate(const EnumerateRequest& req, const OutputOptions& opts) {
    if (req.n < 1 || req.k < 1) return usage_error("enumerate: n and k must be >= 1");
    if (req.n > kEnumerationGuard && !req.force)
        return usage_error("enumerate: n > " + std::to_string(kEnumerationGuard) + " requires --force");
    if (req.n > 12) return usage_error("enumerate: n must be <= 12");
    const Timer timer(opts.timing);

    json params{{"n", req.n}, {"k", req.k}, {"stats", req.with_stats}};
    std::string warning;
    if (req.k > req.n) warning = "warning: k > n, no partitions\n";

    std::string text;
    json items = json::array();
    std::size_t count = 0;
    for_each_llp(static_cast<int>(req.n), static_cast<int>(req.k), [&](const LLPartition& p) {
        ++count;
        const std::string name = to_string(p);
        if (opts.format == Format::structured) {
            json item{{"partition", name}};
            if (req.with_stats) {
                const StatVector s = stats(p);
                item["rlb"] = s.rlb;
                item["nsb"] = s.nsb;
                item["rle"] = s.rle;
                item["nse"] = s.nse;
            }
            items.push_back(std::move(item));
        } else {
            text += name;
            if (req.with_stats) {
                const StatVector s = stats(p);
                text += " rlb=" + std::to_string(s.rlb) + " nsb=" + std::to_string(s.nsb) +
                        " rle=" + std::to_string(s.rle) + " nse=" + std::to_string(s.nse);
            }
            text += '\n';
        }
    });

    if (opts.format == Format::structured) {
        json result{{"count", count}, {"partitions", std::move(items)}};
        return {kExitOk, envelope("enumerate", std::move(params), std::move(result), timer), warning};
    }
    return {kExitOk, text, warning + timing_line(timer)};
}

CommandOutput cmd_verify(const VerifyRequest& req, const OutputOptions& opts) {
    if (req.n_max < 1) return usage_error("verify: n_max must be >= 1");
    if (req.n_max > kVerifyMax) return usage_error("verify: n_max must be <= " + std::to_string(kVerifyMax));
    const Timer timer(opts.timing);

    VerifyOptions vo;
    vo.n_max = static_cast<unsigned>(req.n_max);
    vo.suite = req.suite;
    vo.inject_fault = req.inject_fault;
    std::vector<CheckResult> results;
    try {
        results = run_checks(vo);
    } catch (const std::invalid_argument& e) {
        return usage_error(std::string("verify: ") + e.what());
    }

    std::size_t failed = 0;
    std::string text;
    json checks = json::array();
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        text += std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name + " (" + r.detail + ")\n";
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    text += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " checks passed\n";
    const int code = failed ? kExitFailure : kExitOk;

    if (opts.format == Format::structured) {
        json params{{"n_max", req.n_max}, {"suite", to_string(req.suite)}};
        json result{{"passed", failed == 0}, {"failed", failed}, {"checks", std::move(checks)}};
        return {code, envelope("verify", std::move(params), std::move(result), timer), ""};
    }
    return {code, text, timing_line(timer)};
}

CommandOutput cmd_oeis_check(const OeisRequest& req, const OutputOptions& opts) {
    if (req.n_max < 1) return usage_error("oeis-check: n_max must be >= 1");
    if (req.n_max > kTriangleMax) return usage_error("oeis-check: n_max must be <= " + std::to_string(kTriangleMax));
    const Timer timer(opts.timing);

    const SpecialCase* sc = nullptr;
    try {
        sc = &special_case(req.case_id);
    } catch (const std::out_of_range& e) {
        return usage_error(std::string("oeis-check: ") + e.what());
    }
    if (!sc->fully_bound())
        return usage_error("oeis-check: case " + std::to_string(req.case_id) + " leaves parameters formal");

    std::vector<BFileEntry> seq;
    try {
        seq = load_bfile(req.bfile);
    } catch (const BFileError& e) {
        return {kExitIo, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::runtime_error& e) {
        return {kExitIo, "", std::string("error: ") + e.what() + "\n"};
    }

    const IntTriangle tri = specialize_triangle(*sc, static_cast<unsigned>(req.n_max));
    ComparisonReport rep = compare_with_sequence(tri, seq, req.mode.value_or(sc->mode));
    rep.case_id = req.case_id;
    const int code = rep.agrees() ? kExitOk : kExitFailure;

    if (opts.format == Format::structured) {
        json params{{"case", req.case_id},
                    {"bfile", req.bfile.filename().string()},
                    {"n_max", req.n_max},
                    {"oeis", sc->oeis_id ? json(*sc->oeis_id) : json(nullptr)}};
        return {code, envelope("oeis-check", std::move(params), rep.to_json(), timer), ""};
    }
    return {code, rep.text() + "\n", timing_line(timer)};
}

}  // namespace unigf::cli
