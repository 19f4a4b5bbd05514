#include "toricpair/cli.hpp"
#include "toricpair/error.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace toricpair;

struct PairFlags {
  std::string input;
  std::optional<long long> d;
  std::optional<long> bound;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
};

void add_pair_flags(CLI::App* cmd, PairFlags& f) {
  cmd->add_option("--input", f.input, "pair description (JSON file, - for stdin)");
  cmd->add_option("--d", f.d, "use the family (x^d y, y^d z, z x^d) on A^3");
  cmd->add_option("--bound", f.bound, "enumeration bound");
  cmd->add_option("--samples", f.samples, "resolution samples");
  cmd->add_option("--seed", f.seed, "sampling seed");
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

PairSpec load(const PairFlags& f) {
  if (f.d && !f.input.empty()) throw InvalidInput("give either --input or --d, not both");
  PairSpec spec;
  if (f.d) {
    spec = cyclic_spec(*f.d);
  } else if (f.input == "-") {
    spec = parse_pair_spec(slurp(std::cin));
  } else if (!f.input.empty()) {
    std::ifstream in(f.input);
    if (!in) throw InvalidInput("cannot read " + f.input);
    spec = parse_pair_spec(slurp(in));
  } else {
    throw InvalidInput("no pair given: use --input or --d");
  }
  if (f.bound) {
    if (*f.bound < 1) throw InvalidInput("--bound must be at least 1");
    spec.options.bound = *f.bound;
  }
  if (f.samples) {
    if (*f.samples < 1) throw InvalidInput("--samples must be at least 1");
    spec.options.samples = *f.samples;
  }
  if (f.seed) spec.options.seed = *f.seed;
  return spec;
}

ResolutionOptions options_from_env() {
  ResolutionOptions o;
  if (const char* b = std::getenv("TORICPAIR_BUDGET")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(b, &used);
      if (used != std::string(b).size() || v < 1) throw std::invalid_argument(b);
      o.budget = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("TORICPAIR_BUDGET must be a positive integer, got ") + b);
    }
  }
  return o;
}

int emit(const CommandResult& r, const std::string& format) {
  if (format == "text")
    std::cout << render_text(r.report);
  else
    std::cout << r.report.dump(2) << "\n";
  for (const std::string& m : r.messages) std::cerr << m << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of toric pairs: mld, log-canonicity, Z-Nash and log-Nash divisors"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  PairFlags analyze_flags, verify_flags, oracle_flags;
  CLI::App* analyze = app.add_subcommand("analyze", "compute the invariants of a pair");
  add_pair_flags(analyze, analyze_flags);
  CLI::App* verify = app.add_subcommand("verify", "check the invariants against oracles and theorems");
  add_pair_flags(verify, verify_flags);
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force mld and minimal sets");
  add_pair_flags(oracle, oracle_flags);

  int n = 200;
  Index dim = 2;
  long max_exp = 4;
  std::uint64_t corpus_seed = 42;
  CLI::App* corpus = app.add_subcommand("corpus", "verify generated pairs");
  corpus->add_option("--n", n, "number of instances");
  corpus->add_option("--dim", dim, "dimension (2 or 3)");
  corpus->add_option("--max-exp", max_exp, "largest exponent coordinate");
  corpus->add_option("--seed", corpus_seed, "corpus seed");

  for (CLI::App* sub : {analyze, verify, oracle, corpus})
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::invalid_input;
  }

  try {
    const ResolutionOptions options = options_from_env();
    if (*analyze) return emit(cmd_analyze(load(analyze_flags), options), format);
    if (*verify) return emit(cmd_verify(load(verify_flags), options), format);
    if (*oracle) return emit(cmd_oracle(load(oracle_flags)), format);
    return emit(cmd_corpus(n, dim, max_exp, corpus_seed, options), format);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_code::invalid_input;
  } catch (const NotQGorenstein& e) {
    std::cerr << e.what() << "\n";
    return exit_code::not_q_gorenstein;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code::verification_failed;
  }
}
