#pragma once

// The thirteen parameter specializations of the unified family, integer
// coefficient triangles, and comparison against OEIS b-files.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "unigf/polyring.hpp"

namespace unigf {

enum class CompareMode { triangle_by_rows, row_sums };

std::string to_string(CompareMode mode);
CompareMode parse_compare_mode(std::string_view text);

struct SpecialCase {
    int id = 0;
    // alpha, beta, lambda, mu; nullopt = left formal.
    std::array<std::optional<Rational>, 4> params;
    std::string description;
    std::optional<std::string> oeis_id;
    CompareMode mode = CompareMode::triangle_by_rows;

    Bindings bindings() const;
    bool fully_bound() const;

    /// U_0 for this case when alpha is bound: 1 at alpha = 1, 0 at any
    /// other nonzero alpha, and 0 at alpha = 0 where the logarithmic form
    /// vanishes at t = 0.
    std::optional<Rational> u0() const;
};

const std::vector<SpecialCase>& special_cases();

/// Throws std::out_of_range for ids outside 1..13.
const SpecialCase& special_case(int id);

template <typename T>
struct Triangle {
    // rows[n-1][k-1] = [x^k] U_n for 1 <= k <= n
    std::vector<std::vector<T>> rows;

    unsigned n_max() const { return static_cast<unsigned>(rows.size()); }
    std::vector<T> flatten() const {
        std::vector<T> out;
        for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
        return out;
    }
    std::vector<T> row_sums() const {
        std::vector<T> out;
        for (const auto& r : rows) {
            T s(0);
            for (const auto& v : r) s += v;
            out.push_back(s);
        }
        return out;
    }
};

using IntTriangle = Triangle<BigInt>;
using RationalTriangle = Triangle<Rational>;

class SpecializationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All four parameters must be bound; throws SpecializationError when a
/// parameter is unbound or an entry is not an integer.
IntTriangle specialize_triangle(const Bindings& bindings, unsigned n_max);
IntTriangle specialize_triangle(const SpecialCase& c, unsigned n_max);

/// As specialize_triangle without the integrality requirement.
RationalTriangle specialize_triangle_rational(const Bindings& bindings, unsigned n_max);

/// Substitutes the bound parameters into a polynomial, leaving the rest formal.
QPoly specialize_poly(const MPoly& p, const Bindings& bindings);

struct BFileEntry {
    std::int64_t index = 0;
    BigInt value;

    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& what)
        : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// `index value` per line; blank lines and `#` comments are skipped.
std::vector<BFileEntry> parse_bfile(std::string_view text);

/// Throws std::runtime_error when the file cannot be read.
std::vector<BFileEntry> load_bfile(const std::filesystem::path& path);

struct ComparisonReport {
    enum class Status { agree, mismatch, insufficient_terms };

    std::optional<int> case_id;
    CompareMode mode = CompareMode::triangle_by_rows;
    Status status = Status::agree;
    std::size_t compared_terms = 0;  // length of the triangle-derived sequence
    std::size_t matched_terms = 0;   // leading terms that agree
    std::size_t available_terms = 0;
    // First disagreement: 0-based position, b-file index, expected (b-file) and actual values.
    struct Mismatch {
        std::size_t position = 0;
        std::int64_t index = 0;
        BigInt expected;
        BigInt actual;
    };
    std::optional<Mismatch> first_mismatch;

    bool agrees() const { return status == Status::agree; }
    std::string text() const;
    nlohmann::json to_json() const;
};

std::string to_string(ComparisonReport::Status s);

/// triangle_by_rows matches the row-major flattening (k from 1) against the
/// b-file prefix; row_sums matches sum_k row_n. Running out of b-file terms
/// is reported as insufficient_terms, not as a mismatch.
ComparisonReport compare_with_sequence(const IntTriangle& tri, std::span<const BFileEntry> seq, CompareMode mode);

/// Tries `preferred` first, then the other mode; returns the first agreeing
/// report, or the report for `preferred` if neither agrees.
ComparisonReport compare_either_mode(const IntTriangle& tri, std::span<const BFileEntry> seq, CompareMode preferred);

}  // namespace unigf
