#pragma once

// Command implementations behind the `unigf` executable. Each returns the
// exact bytes for stdout and stderr plus an exit code, so the commands can
// be exercised without spawning a process.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "unigf/polyring.hpp"
#include "unigf/specialize.hpp"
#include "unigf/verify.hpp"

namespace unigf::cli {

enum class Format { text, structured };

Format parse_format(std::string_view text);

struct OutputOptions {
    Format format = Format::text;
    // Adds elapsed wall time; off by default so output stays byte-identical.
    bool timing = false;
};

struct CommandOutput {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a check or comparison failed
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// `a=1,m=1/2`; symbols by letter or name. Throws std::invalid_argument.
Bindings parse_bindings(std::string_view text);

nlohmann::json bindings_json(const Bindings& b);

CommandOutput cmd_poly(long n, const Bindings& bindings, const OutputOptions& opts);

struct TriangleRequest {
    std::optional<int> case_id;
    Bindings bindings;  // overrides or completes the case parameters
    long n_max = 0;
    bool allow_rational = false;
};

CommandOutput cmd_triangle(const TriangleRequest& req, const OutputOptions& opts);

struct EnumerateRequest {
    long n = 0;
    long k = 0;
    bool with_stats = true;
    bool force = false;
};

CommandOutput cmd_enumerate(const EnumerateRequest& req, const OutputOptions& opts);

struct VerifyRequest {
    long n_max = 0;
    Suite suite = Suite::all;
    std::optional<std::string> inject_fault;
};

CommandOutput cmd_verify(const VerifyRequest& req, const OutputOptions& opts);

struct OeisRequest {
    int case_id = 0;
    std::filesystem::path bfile;
    long n_max = 0;
    std::optional<CompareMode> mode;  // nullopt: the case's recorded mode
};

CommandOutput cmd_oeis_check(const OeisRequest& req, const OutputOptions& opts);

}  // namespace unigf::cli
