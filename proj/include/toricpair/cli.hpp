#pragma once

// Batch front-end: pair descriptions in and deterministic JSON reports out.
// Objects are std::map backed, so keys come out sorted and identical inputs
// give identical bytes.

#include "toricpair/resolution.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricpair {

using Json = nlohmann::json;

struct PairSpec {
  struct Options {
    /// Enumeration bound for the Nash sets; the certified bound when absent.
    std::optional<long> bound;
    int samples = 5;
    std::uint64_t seed = 0;

    friend bool operator==(const Options&, const Options&) = default;
  };

  Index dim = 0;
  /// σ's generators; the orthant when absent.
  std::optional<std::vector<LatticePoint>> cone_rays;
  std::vector<LatticePoint> ideal_exponents;
  Options options;

  friend bool operator==(const PairSpec& a, const PairSpec& b);
};

/// Throws InvalidInput naming the violated constraint.
PairSpec parse_pair_spec(const Json& j);
PairSpec parse_pair_spec(const std::string& text);
Json to_json(const PairSpec& spec);

/// (x^d y, y^d z, z x^d) on A^3.
PairSpec cyclic_spec(long long d);

/// Throws InvalidInput (make_ideal rules).
ToricPair build_pair(const PairSpec& spec);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int invalid_input = 2;
inline constexpr int not_q_gorenstein = 3;
}  // namespace exit_code

struct CommandResult {
  Json report;
  int exit_code = exit_code::ok;
  /// Human-readable notes for stderr (first failing check, warnings).
  std::vector<std::string> messages;
};

/// Invariants of the pair; on a non-Q-Gorenstein cone the discrepancy parts
/// are marked skipped and the exit code is 3.
CommandResult cmd_analyze(const PairSpec& spec, const ResolutionOptions& options = {});

/// Oracle agreement, containments, discrepancy cross-check and the theorem
/// checks. Exit 1 names the first failing check; checks against Nash sets
/// computed below the certified bound only warn.
CommandResult cmd_verify(const PairSpec& spec, const ResolutionOptions& options = {});

/// Brute-force mld and minimal sets over the box of the given bound
/// (certified bound + 1 when absent).
CommandResult cmd_oracle(const PairSpec& spec);

/// cmd_verify on n generated instances, run concurrently and reported in
/// index order, with pass/fail/warning tallies and a reproducer per failure.
CommandResult cmd_corpus(int n, Index dim, long max_exp, std::uint64_t seed, const ResolutionOptions& options = {});

/// Lossy indented view of a report.
std::string render_text(const Json& report);

}  // namespace toricpair
