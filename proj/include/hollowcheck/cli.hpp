#pragma once

// Command-line front end: file parsing, the check / oracle / probe / gen
// subcommands, and the human and JSON reports they print.
//
// Exit codes: 0 not proven empty (or feasible), 1 empty (or infeasible),
// 2 input or usage error, 3 internal error or soundness violation.

#include "hollowcheck/emptiness.hpp"
#include "hollowcheck/scalar.hpp"
#include "hollowcheck/standardize.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hollowcheck::cli {

enum ExitCode : int {
    kNotProvenEmpty = 0,
    kEmpty = 1,
    kInputError = 2,
    kInternalError = 3,
};

enum class Subcommand { Check, Oracle, Probe, Gen };

struct RunConfig {
    Subcommand subcommand = Subcommand::Check;
    std::string input = "-";  // "-" reads stdin
    RawForm form = RawForm::Ineq;
    Mode mode = Mode::Algorithm;
    Backend backend = Backend::Rational;
    std::optional<double> tol;  // float64 only
    bool paper_order = false;
    bool json = false;
    bool oracle_check = false;
    std::uint64_t seed = 1;

    // probe
    std::string suite = "all";
    std::size_t count = 100;
    std::size_t trials = 20;

    // gen
    std::size_t m = 4;
    std::size_t n = 2;
    int range = 5;
    std::string output = "-";

    // Throws UsageError for flag combinations that make no sense.
    void validate() const;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error("UsageError: " + what) {}
};

// Line 1 "m n", then m lines of n+1 numbers (a row of Ã, then b̃ᵢ). "#"
// starts a comment; blank lines are skipped. Numbers are exact: integers,
// decimals, exponents and "p/q".
RawSystem<Rational> parse_system(std::string_view text, RawForm form = RawForm::Ineq);

// Rationals as "p/q" ("p" when integral), ±inf as "-inf" / "+inf".
struct OracleSummary {
    bool feasible = false;
    std::vector<std::string> witness;      // original variables
    std::vector<std::string> certificate;  // over the raw inequality rows
};

struct CertificateSummary {
    std::string family;  // a test family, or "zero_row" for a null row with negative bound
    std::string origin;
    std::optional<std::vector<std::string>> k_prime;
    std::string lo;
    std::string hi;
    std::vector<std::string> farkas_y;
    std::string rows;  // "standard" or "raw": which system y certifies
};

struct StandardSummary {
    std::size_t m = 0;
    std::size_t n = 0;
    std::string embedding;
    std::vector<std::string> row_origins;
};

struct CheckSummary {
    std::string backend;
    Mode mode = Mode::Algorithm;
    TestOrder order = TestOrder::Default;
    Verdict verdict = Verdict::NotProvenEmpty;
    std::size_t tests_run = 0;
    std::array<FamilyCounts, kFamilyCount> families{};
    std::optional<CertificateSummary> certificate;
    std::optional<StandardSummary> standard;  // absent when a null row decided early
    std::optional<OracleSummary> oracle;
};

std::string row_origin_str(const RowOrigin& origin);

// Standardize, decide, and optionally run the oracle on the raw inequalities.
// Throws SoundnessViolation if the oracle contradicts an Empty verdict.
CheckSummary check(const RawSystem<Rational>& raw, const RunConfig& config);
OracleSummary oracle_summary(const RawSystem<Rational>& raw);

// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string to_json(const CheckSummary& s);
std::string to_json(const OracleSummary& s);
std::string human(const CheckSummary& s);
std::string human(const OracleSummary& s);

// Re-emits a JSON document in the canonical layout.
std::string canonical_json(std::string_view text);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
// Same as run() for check / oracle, with the instance given in memory.
int run_on_text(const RunConfig& config, std::string_view text, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hollowcheck::cli
