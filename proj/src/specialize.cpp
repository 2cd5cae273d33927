#include "unigf/specialize.hpp"

#include <fstream>
#include <sstream>

#include "unigf/unified.hpp"

namespace unigf {

std::string to_string(CompareMode mode) {
    return mode == CompareMode::triangle_by_rows ? "triangle-by-rows" : "row-sums";
}

CompareMode parse_compare_mode(std::string_view text) {
    if (text == "triangle-by-rows" || text == "triangle") return CompareMode::triangle_by_rows;
    if (text == "row-sums" || text == "rowsums") return CompareMode::row_sums;
    throw std::invalid_argument("unknown comparison mode '" + std::string(text) + "'");
}

namespace {

constexpr std::array<Symbol, 4> kParamSymbols{Symbol::alpha, Symbol::beta, Symbol::lambda, Symbol::mu};

std::optional<Rational> v(int i) { return Rational(i); }
constexpr std::nullopt_t free_param = std::nullopt;

std::vector<SpecialCase> build_table() {
    using M = CompareMode;
    return {
        {1, {v(1), free_param, v(1), free_param},
         "Enumeration of set partitions w.r.t. statistics nsb and nse", std::nullopt, M::triangle_by_rows},
        {2, {v(1), v(0), v(1), v(0)}, "Sets of sets", "A008277", M::triangle_by_rows},
        {3, {v(1), v(0), v(1), v(1)}, "Lists of sets", std::nullopt, M::triangle_by_rows},
        {4, {v(1), v(1), v(1), v(0)}, "Sets of lists", "A019538", M::triangle_by_rows},
        {5, {v(1), v(1), v(1), v(1)}, "Lists of lists", std::nullopt, M::triangle_by_rows},
        {6, {free_param, v(1), free_param, v(1)},
         "Set partitions with cyclically ordered blocks and cyclically ordered elements inside the blocks "
         "w.r.t. statistics rlb and rle",
         std::nullopt, M::triangle_by_rows},
        {7, {v(0), v(1), v(0), v(1)},
         "Set partitions where both blocks and elements inside the block are cyclically ordered", "A188881",
         M::triangle_by_rows},
        {8, {v(0), v(1), v(1), v(1)}, "Set partitions with cyclically ordered blocks and ordered elements inside the blocks",
         std::nullopt, M::triangle_by_rows},
        {9, {v(1), v(1), v(0), v(1)}, "Set partitions with ordered blocks and cyclically ordered elements inside the blocks",
         std::nullopt, M::triangle_by_rows},
        {10, {free_param, v(1), v(1), free_param},
         "Set partitions with cyclically ordered blocks and ordered elements inside the blocks "
         "w.r.t. statistics rlb and nse",
         std::nullopt, M::triangle_by_rows},
        {11, {v(0), v(1), v(1), v(0)},
         "Set partitions with cyclically ordered blocks and unordered elements inside the blocks", std::nullopt,
         M::triangle_by_rows},
        {12, {v(1), free_param, free_param, v(1)},
         "Set partitions with ordered blocks and cyclically ordered elements inside the blocks "
         "w.r.t. statistics nsb and rle",
         std::nullopt, M::triangle_by_rows},
        {13, {v(1), v(0), v(0), v(1)},
         "Set partitions with unordered blocks and cyclically ordered elements inside the blocks", "A130534",
         M::triangle_by_rows},
    };
}

void require_all_parameters(const Bindings& b) {
    for (Symbol s : kParamSymbols) {
        if (!b.contains(s))
            throw SpecializationError(std::string("parameter '") + symbol_name(s) +
                                      "' is unbound; bind all of a, b, l, m for a numeric triangle");
    }
}

}  // namespace

Bindings SpecialCase::bindings() const {
    Bindings b;
    for (std::size_t i = 0; i < kParamSymbols.size(); ++i)
        if (params[i]) b.emplace(kParamSymbols[i], *params[i]);
    return b;
}

bool SpecialCase::fully_bound() const {
    for (const auto& p : params)
        if (!p) return false;
    return true;
}

std::optional<Rational> SpecialCase::u0() const {
    const auto& alpha = params[0];
    if (!alpha) return std::nullopt;
    if (*alpha == 0) return Rational(0);
    return u0_value(*alpha);
}

const std::vector<SpecialCase>& special_cases() {
    static const std::vector<SpecialCase> table = build_table();
    return table;
}

const SpecialCase& special_case(int id) {
    const auto& t = special_cases();
    if (id < 1 || id > static_cast<int>(t.size()))
        throw std::out_of_range("unknown special case " + std::to_string(id) + " (expected 1..13)");
    return t[static_cast<std::size_t>(id - 1)];
}

RationalTriangle specialize_triangle_rational(const Bindings& bindings, unsigned n_max) {
    require_all_parameters(bindings);
    Bindings params;
    for (Symbol s : kParamSymbols) params.emplace(s, bindings.at(s));
    const UTriangle tri = coeff_triangle(n_max);
    RationalTriangle out;
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<Rational> row;
        for (const auto& entry : tri.row(n)) row.push_back(substitute(entry, params).coeff(Monomial{}));
        out.rows.push_back(std::move(row));
    }
    return out;
}

IntTriangle specialize_triangle(const Bindings& bindings, unsigned n_max) {
    const RationalTriangle q = specialize_triangle_rational(bindings, n_max);
    IntTriangle out;
    for (std::size_t n = 0; n < q.rows.size(); ++n) {
        std::vector<BigInt> row;
        for (std::size_t k = 0; k < q.rows[n].size(); ++k) {
            const Rational& e = q.rows[n][k];
            if (boost::multiprecision::denominator(e) != 1)
                throw SpecializationError("non-integer entry " + to_string(e) + " at (n=" + std::to_string(n + 1) +
                                          ", k=" + std::to_string(k + 1) + ")");
            row.push_back(boost::multiprecision::numerator(e));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

IntTriangle specialize_triangle(const SpecialCase& c, unsigned n_max) {
    if (!c.fully_bound())
        throw SpecializationError("case " + std::to_string(c.id) +
                                  " leaves parameters formal; bind the remaining ones explicitly");
    return specialize_triangle(c.bindings(), n_max);
}

QPoly specialize_poly(const MPoly& p, const Bindings& bindings) { return substitute(p, bindings); }

namespace {

bool is_integer_token(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::string_view text) {
    std::vector<BFileEntry> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        const auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#') {
            std::istringstream in(line);
            std::string idx, val, extra;
            in >> idx >> val;
            if (val.empty()) throw BFileError(line_no, "expected 'index value', got '" + line + "'");
            if (in >> extra) throw BFileError(line_no, "trailing data '" + extra + "'");
            if (!is_integer_token(idx) || !is_integer_token(val))
                throw BFileError(line_no, "malformed entry '" + line + "'");
            BFileEntry e;
            try {
                e.index = std::stoll(idx);
            } catch (const std::out_of_range&) {
                throw BFileError(line_no, "index out of range '" + idx + "'");
            }
            e.value = BigInt(val.front() == '+' ? val.substr(1) : val);
            out.push_back(std::move(e));
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

std::vector<BFileEntry> load_bfile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open b-file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bfile(ss.str());
}

std::string to_string(ComparisonReport::Status s) {
    switch (s) {
        case ComparisonReport::Status::agree: return "agree";
        case ComparisonReport::Status::mismatch: return "mismatch";
        case ComparisonReport::Status::insufficient_terms: return "insufficient terms";
    }
    return "?";
}

ComparisonReport compare_with_sequence(const IntTriangle& tri, std::span<const BFileEntry> seq, CompareMode mode) {
    ComparisonReport r;
    r.mode = mode;
    const std::vector<BigInt> ours = mode == CompareMode::triangle_by_rows ? tri.flatten() : tri.row_sums();
    r.compared_terms = ours.size();
    r.available_terms = seq.size();
    for (std::size_t i = 0; i < ours.size(); ++i) {
        if (i >= seq.size()) {
            r.status = ComparisonReport::Status::insufficient_terms;
            return r;
        }
        if (seq[i].value != ours[i]) {
            r.status = ComparisonReport::Status::mismatch;
            r.first_mismatch = ComparisonReport::Mismatch{i, seq[i].index, seq[i].value, ours[i]};
            return r;
        }
        ++r.matched_terms;
    }
    r.status = ComparisonReport::Status::agree;
    return r;
}

ComparisonReport compare_either_mode(const IntTriangle& tri, std::span<const BFileEntry> seq, CompareMode preferred) {
    ComparisonReport first = compare_with_sequence(tri, seq, preferred);
    if (first.agrees()) return first;
    const CompareMode other =
        preferred == CompareMode::triangle_by_rows ? CompareMode::row_sums : CompareMode::triangle_by_rows;
    ComparisonReport second = compare_with_sequence(tri, seq, other);
    return second.agrees() ? second : first;
}

std::string ComparisonReport::text() const {
    std::ostringstream out;
    if (case_id) out << "case " << *case_id << ", ";
    out << "mode " << to_string(mode) << ": " << to_string(status) << " (" << matched_terms << "/" << compared_terms
        << " terms matched";
    if (status == Status::insufficient_terms) out << ", b-file has only " << available_terms;
    out << ")";
    if (first_mismatch) {
        out << "; first mismatch at position " << first_mismatch->position << " (b-file index "
            << first_mismatch->index << "): expected " << first_mismatch->expected.str() << ", computed "
            << first_mismatch->actual.str();
    }
    return out.str();
}

nlohmann::json ComparisonReport::to_json() const {
    nlohmann::json j;
    j["case"] = case_id ? nlohmann::json(*case_id) : nlohmann::json(nullptr);
    j["mode"] = to_string(mode);
    j["status"] = to_string(status);
    j["matched_terms"] = matched_terms;
    j["compared_terms"] = compared_terms;
    if (first_mismatch) {
        j["first_mismatch"] = {{"position", first_mismatch->position},
                               {"index", first_mismatch->index},
                               {"expected", first_mismatch->expected.str()},
                               {"actual", first_mismatch->actual.str()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    return j;
}

}  // namespace unigf
