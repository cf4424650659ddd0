#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weyllab/parabolic.hpp"
#include "weyllab/polynomial.hpp"

namespace weyllab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

inline constexpr const char* kVersion = "0.1.0";

struct Options {
    bool json = false;
    bool timing = false;
    /// Overrides every enumeration cap (group, interval, quotient).
    std::optional<std::size_t> cap;
    int threads = 1;
};

struct PolyResult {
    std::string group;
    Word word;
    int length = 0;
    IntPolynomial poly;
    /// Number of regions; only set by cmd_regions.
    std::int64_t regions = 0;
};

PolyResult cmd_poincare(const std::string& group, const std::string& word, const Options& opt = {});
PolyResult cmd_regions(const std::string& group, const std::string& word, const Options& opt = {});

struct Counterexample {
    Word word;
    IntPolynomial p, r;
};

struct VerificationReport {
    std::string scope;
    std::int64_t scanned = 0;
    std::int64_t rationally_smooth = 0;
    std::int64_t failures = 0;
    std::vector<Counterexample> counterexamples;
    double seconds = 0;

    bool ok() const { return failures == 0; }
};

/// For every w: P_w palindromic <=> P_w = R_w, and R_w palindromic.
VerificationReport cmd_verify_main(const std::string& group, const Options& opt = {});

struct QuotientEntry {
    Word word;
    QuotientClass tag = QuotientClass::NotPalindromic;
    std::string orientation;
};

struct QuotientReport {
    std::string group;
    int removed = 0;
    QuotientSide side = QuotientSide::RightFree;
    int size = 0;
    std::vector<std::int64_t> rank_sizes;
    bool chain = false;
    /// Palindromic elements other than the identity and the top.
    std::vector<QuotientEntry> nontrivial;
    /// Elements whose tag disagrees with palindromicity of their interval.
    std::int64_t mismatches = 0;
};

QuotientReport cmd_quotient(const std::string& group, int removed, QuotientSide side, const Options& opt = {});

struct MLatticeReport {
    int n = 0;
    int size = 0;
    std::vector<std::int64_t> rank_sizes;
    std::vector<std::string> palindromic;
    bool closed_form_agrees = false;
};

MLatticeReport cmd_mlattice(int n);

struct IsoReport {
    std::string group;
    int removed = 0;
    int m = 0;  // compared against M(m)
    bool isomorphic = false;
};

IsoReport cmd_verify_iso(const std::string& group, int removed);

/// kind: "mlattice N" | "quotient GROUP NODE [SIDE]" | "interval GROUP WORD" | "regions GROUP WORD";
/// format: "dot" | "json".
std::string cmd_export(const std::string& format, const std::vector<std::string>& target, const Options& opt = {});

/// Groups whose order is at most `cap`, smallest rank first.
std::vector<std::string> feasible_groups(std::size_t cap);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyllab::cli
