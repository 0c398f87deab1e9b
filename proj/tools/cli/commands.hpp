#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace wdlab::cli {

struct Options
{
    std::int64_t q = 3;
    int n_max = 5;
    std::string format = "markdown";
    std::uint64_t seed = 0;
    std::string out;

    static constexpr int kMaxN = 16;
};

/// Result of one command: the versioned JSON document, its markdown view,
/// and whether every check passed.
struct Outcome
{
    io::Json doc;
    std::string markdown;
    bool ok = true;
};

Outcome cmd_wd(const Options& o, const std::string& file);
Outcome cmd_iwasawa(const Options& o, bool inject_fault);
Outcome cmd_hecke(const Options& o);
Outcome cmd_fe(const Options& o);
Outcome cmd_mult(const Options& o, const std::string& file, const std::string& builtin);
Outcome cmd_curve(const Options& o, int genus, int lo, int hi, int trunc, const std::string& file);
Outcome cmd_zeta(const Options& o, int trunc);
Outcome cmd_selftest(const Options& o);

/// "lo..hi"; throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);

/// Full command line (without the program name). Exit code 0 iff every check
/// passes, 1 when a check fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdlab::cli
