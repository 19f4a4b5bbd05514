#include "toricpair/cli.hpp"

#include "toricpair/corpus.hpp"
#include "toricpair/error.hpp"
#include "toricpair/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace toricpair {

namespace {

constexpr const char* kNotQg = "skipped: not q-gorenstein";

Json point_json(const LatticePoint& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_int64(v(i)));
  return a;
}

Json points_json(const std::vector<LatticePoint>& vs) {
  Json a = Json::array();
  for (const LatticePoint& v : vs) a.push_back(point_json(v));
  return a;
}

Json rational_json(const Rational& q) { return to_string(q); }

long long integer_field(const Json& j, const char* name) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(name) + " must be an integer");
  return j.get<long long>();
}

LatticePoint parse_vector(const Json& j, Index dim, const char* name) {
  if (!j.is_array()) throw InvalidInput(std::string(name) + " entries must be integer vectors");
  if (static_cast<Index>(j.size()) != dim)
    throw InvalidInput(std::string(name) + ": vector length " + std::to_string(j.size()) + " does not match dim " +
                       std::to_string(dim));
  std::vector<long long> coords;
  for (const Json& x : j) coords.push_back(integer_field(x, name));
  return lattice_point(coords);
}

std::vector<LatticePoint> parse_vectors(const Json& j, Index dim, const char* name) {
  if (!j.is_array()) throw InvalidInput(std::string(name) + " must be a list of integer vectors");
  if (j.empty()) throw InvalidInput(std::string(name) + " must be nonempty");
  std::vector<LatticePoint> out;
  for (const Json& v : j) out.push_back(parse_vector(v, dim, name));
  return out;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known, const std::string& where) {
  for (const auto& [k, v] : j.items())
    if (std::none_of(known.begin(), known.end(), [&](const char* n) { return k == n; }))
      throw InvalidInput("unknown field " + where + k);
}

bool points_equal(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const auto& x, const auto& y) { return equal(x, y); });
}

// Everything a report needs, computed once. Discrepancy data is absent on a
// non-Q-Gorenstein cone.
struct Analysis {
  ToricPair pair;
  long bound;
  DivisorSet z;
  DivisorSet log;
  std::optional<MldResult> mld;
  std::optional<LcClassification> cls;
};

Analysis analyze_pair(const ToricPair& pair, const PairSpec& spec) {
  const long bound = spec.options.bound.value_or(certified_bound(pair));
  Analysis a{pair, bound, z_nash(pair, bound), log_nash(pair, bound), std::nullopt, std::nullopt};
  if (pair.qg()) {
    a.mld = mld(pair);
    a.cls = classify(pair);
  }
  return a;
}

Json mld_json(const MldResult& m, const ToricPair& pair) {
  Json j;
  j["kind"] = to_string(m.kind);
  j["value"] = m.finite() ? rational_json(m.value) : Json("-inf");
  j["witness"] = point_json(m.witness);
  if (!m.finite()) j["witness_discrepancy"] = rational_json(log_discrepancy(m.witness, pair));
  return j;
}

Json divisor_set_json(const DivisorSet& s, const ToricPair& pair) {
  Json j;
  j["members"] = points_json(s.members);
  j["bound"] = s.bound;
  j["certified"] = s.certified;
  j["status"] = s.certified ? "certified" : "uncertified";
  if (pair.qg()) {
    Json a = Json::object();
    for (const LatticePoint& v : s.members) a[to_string(v)] = rational_json(log_discrepancy(v, pair));
    j["log_discrepancies"] = a;
  } else {
    j["log_discrepancies"] = kNotQg;
  }
  return j;
}

Json resolution_json(const ResolutionModel& m, std::uint64_t seed) {
  Json j;
  j["seed"] = seed;
  Json cones = Json::array();
  for (const Cone& c : m.fan.maximal_cones()) cones.push_back(points_json(c.rays()));
  j["maximal_cones"] = cones;
  j["exceptional_rays"] = points_json(m.exceptional_rays);
  if (m.base.qg()) {
    Json a = Json::object();
    for (const LatticePoint& r : m.fan.rays()) a[to_string(r)] = rational_json(discrepancy_function(r, m.base));
    j["discrepancies"] = a;
  } else {
    j["discrepancies"] = kNotQg;
  }
  return j;
}

Json report_of(const PairSpec& spec, const Analysis& a, const ResolutionOptions& options) {
  const ToricPair& p = a.pair;
  Json r;
  r["input"] = to_json(spec);
  r["cone"] = {{"rays", points_json(p.sigma().rays())}, {"facet_normals", points_json(p.sigma().facet_normals())}};
  r["ideal"] = {{"minimal_exponents", points_json(p.ideal().exponents())},
                {"newton_vertices", points_json(newton_vertices(p.ideal()).vertices)}};
  if (p.qg())
    r["qgorenstein"] = {{"weight", Json::array()}, {"index", to_int64(p.qg()->index)}};
  else
    r["qgorenstein"] = "not-q-gorenstein";
  if (p.qg())
    for (Index i = 0; i < p.qg()->weight.size(); ++i) r["qgorenstein"]["weight"].push_back(rational_json(p.qg()->weight(i)));

  Json cones = Json::array();
  const DualFan& dual = p.dual();
  for (std::size_t i = 0; i < dual.fan.maximal_cones().size(); ++i)
    cones.push_back({{"rays", points_json(dual.fan.maximal_cones()[i].rays())}, {"vertex", point_json(dual.vertices[i])}});
  r["dual_fan"] = {{"rays", points_json(dual.fan.rays())}, {"maximal_cones", cones}, {"smooth", dual.fan.is_smooth()}};

  r["mld"] = a.mld ? mld_json(*a.mld, p) : Json(kNotQg);
  if (a.cls) {
    Json l = Json::object();
    for (const auto& [ray, c] : a.cls->l_coefficients) l[to_string(ray)] = to_string(c);
    r["classification"] = {{"class", to_string(a.cls->cls)},
                           {"l_coefficients", l},
                           {"d_part", points_json(a.cls->d_part)},
                           {"dprime_part", points_json(a.cls->dprime_part)}};
  } else {
    r["classification"] = kNotQg;
  }
  r["z_nash"] = divisor_set_json(a.z, p);
  r["log_nash"] = divisor_set_json(a.log, p);
  try {
    r["resolution"] = resolution_json(sample_log_resolution(p, spec.options.seed, options), spec.options.seed);
  } catch (const BudgetExceeded& e) {
    r["resolution"] = std::string("skipped: ") + e.what();
  }
  return r;
}

CommandResult invalid(const std::string& what) {
  return {Json{{"error", what}}, exit_code::invalid_input, {"invalid input: " + what}};
}

ResolutionOptions diverse(const ResolutionOptions& options) {
  ResolutionOptions d = kDiverseSampling;
  d.budget = options.budget;
  return d;
}

// Named verdicts, with failures kept in the order the checks ran.
class Checks {
 public:
  // A soft check rests on an uncertified Nash set: whatever its outcome it
  // is only a warning.
  void add(const std::string& name, Json verdict, bool holds, bool soft = false) {
    verdict["holds"] = holds;
    verdict["status"] = soft ? "warning" : holds ? "pass" : "fail";
    if (soft) ++warnings_;
    if (!holds && !soft) failed_.push_back(name);
    checks_[name] = std::move(verdict);
  }
  void skip(const std::string& name, const std::string& why) { checks_[name] = {{"status", "skipped: " + why}}; }
  void info(const std::string& name, Json verdict) {
    verdict["status"] = "info";
    checks_[name] = std::move(verdict);
  }

  const std::vector<std::string>& failed() const { return failed_; }
  int warnings() const { return warnings_; }
  const Json& json() const { return checks_; }

 private:
  Json checks_ = Json::object();
  std::vector<std::string> failed_;
  int warnings_ = 0;
};

void verdict_checks(Checks& checks, const Analysis& a) {
  const ToricPair& p = a.pair;
  auto verdict_json = [](const Verdict& v) {
    Json j;
    j["holds"] = v.holds;
    if (v.witness) j["witness"] = point_json(*v.witness);
    if (v.value) j["value"] = rational_json(*v.value);
    j["excluded"] = points_json(v.excluded);
    j["offenders"] = points_json(v.offenders);
    return j;
  };
  if (a.mld->finite()) {
    const Verdict v = check_lognash_computes_mld(p);
    checks.add("lognash_computes_mld", verdict_json(v), v.holds);
    checks.skip("negative_lognash", "mld is finite");
    // Reported only: fails for some pairs under the global-infimum mld.
    const Verdict all = check_all_mld_witnesses_lognash(p, certified_bound(p) + 1);
    checks.info("mld_witnesses_lognash", verdict_json(all));
  } else {
    const Verdict v = check_negative_lognash(p);
    checks.add("negative_lognash", verdict_json(v), v.holds);
    checks.skip("lognash_computes_mld", "mld is -inf");
    checks.skip("mld_witnesses_lognash", "mld is -inf");
  }
}

}  // namespace

bool operator==(const PairSpec& a, const PairSpec& b) {
  if (a.dim != b.dim || a.options != b.options || a.cone_rays.has_value() != b.cone_rays.has_value()) return false;
  if (a.cone_rays && !points_equal(*a.cone_rays, *b.cone_rays)) return false;
  return points_equal(a.ideal_exponents, b.ideal_exponents);
}

PairSpec parse_pair_spec(const Json& j) {
  if (!j.is_object()) throw InvalidInput("pair description must be a JSON object");
  reject_unknown(j, {"dim", "cone_rays", "ideal_exponents", "options"}, "");
  PairSpec s;
  if (!j.contains("dim")) throw InvalidInput("missing field dim");
  s.dim = integer_field(j["dim"], "dim");
  if (s.dim < 2) throw InvalidInput("dim must be at least 2");
  if (j.contains("cone_rays")) s.cone_rays = parse_vectors(j["cone_rays"], s.dim, "cone_rays");
  if (!j.contains("ideal_exponents")) throw InvalidInput("missing field ideal_exponents");
  s.ideal_exponents = parse_vectors(j["ideal_exponents"], s.dim, "ideal_exponents");
  if (j.contains("options")) {
    const Json& o = j["options"];
    if (!o.is_object()) throw InvalidInput("options must be an object");
    reject_unknown(o, {"bound", "samples", "seed"}, "options.");
    if (o.contains("bound")) {
      s.options.bound = integer_field(o["bound"], "options.bound");
      if (*s.options.bound < 1) throw InvalidInput("options.bound must be at least 1");
    }
    if (o.contains("samples")) {
      const long long k = integer_field(o["samples"], "options.samples");
      if (k < 1 || k > 1000) throw InvalidInput("options.samples must be between 1 and 1000");
      s.options.samples = static_cast<int>(k);
    }
    if (o.contains("seed")) {
      if (!o["seed"].is_number_unsigned()) throw InvalidInput("options.seed must be a nonnegative integer");
      s.options.seed = o["seed"].get<std::uint64_t>();
    }
  }
  return s;
}

PairSpec parse_pair_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return parse_pair_spec(j);
}

Json to_json(const PairSpec& spec) {
  Json j;
  j["dim"] = spec.dim;
  if (spec.cone_rays) j["cone_rays"] = points_json(*spec.cone_rays);
  j["ideal_exponents"] = points_json(spec.ideal_exponents);
  Json o;
  if (spec.options.bound) o["bound"] = *spec.options.bound;
  o["samples"] = spec.options.samples;
  o["seed"] = spec.options.seed;
  j["options"] = o;
  return j;
}

PairSpec cyclic_spec(long long d) {
  if (d < 1) throw InvalidInput("d must be at least 1");
  PairSpec s;
  s.dim = 3;
  s.ideal_exponents = {lattice_point({d, 1, 0}), lattice_point({0, d, 1}), lattice_point({1, 0, d})};
  return s;
}

ToricPair build_pair(const PairSpec& spec) {
  const Cone sigma = spec.cone_rays ? Cone::from_generators(spec.dim, *spec.cone_rays) : Cone::orthant(spec.dim);
  return ToricPair::make(sigma, spec.ideal_exponents);
}

CommandResult cmd_analyze(const PairSpec& spec, const ResolutionOptions& options) {
  try {
    const Analysis a = analyze_pair(build_pair(spec), spec);
    CommandResult out{report_of(spec, a, options), exit_code::ok, {}};
    if (!a.pair.qg()) {
      out.exit_code = exit_code::not_q_gorenstein;
      out.messages.push_back("cone is not Q-Gorenstein; discrepancy data skipped");
    }
    return out;
  } catch (const InvalidInput& e) {
    return invalid(e.what());
  }
}

CommandResult cmd_verify(const PairSpec& spec, const ResolutionOptions& options) {
  std::optional<Analysis> built;
  try {
    built = analyze_pair(build_pair(spec), spec);
  } catch (const InvalidInput& e) {
    return invalid(e.what());
  }
  const Analysis& a = *built;
  const ToricPair& p = a.pair;
  CommandResult out{report_of(spec, a, options), exit_code::ok, {}};
  Checks checks;
  const long box = certified_bound(p) + 1;

  if (a.mld) {
    const MldResult brute = brute_force_mld(p, box);
    const bool agree = brute.kind == a.mld->kind && (!brute.finite() || brute.value == a.mld->value);
    checks.add("mld_brute_force", {{"bound", box}, {"brute_force", mld_json(brute, p)}}, agree);
  } else {
    checks.skip("mld_brute_force", "not q-gorenstein");
  }

  // Within the box of the set's own bound the brute force never rejects a
  // true minimal element; on the orthant it finds exactly the minimal ones.
  const bool orthant = p.sigma() == Cone::orthant(p.rank());
  for (const DivisorSet* set : {&a.z, &a.log}) {
    std::vector<LatticePoint> brute;
    for (const LatticePoint& v : brute_force_minimal(p, set->flavor, set->bound))
      if (max_abs_coordinate(v) <= set->bound) brute.push_back(v);
    brute = sorted_unique(std::move(brute));
    bool ok = std::all_of(set->members.begin(), set->members.end(),
                          [&](const LatticePoint& v) { return contains_point(brute, v); });
    if (orthant) ok = ok && points_equal(brute, set->members);
    const std::string name = set->flavor == NashFlavor::ZNash ? "z_nash_oracle" : "log_nash_oracle";
    checks.add(name, {{"bound", set->bound}, {"brute_force", points_json(brute)}, {"exact", orthant}}, ok, !set->certified);
  }

  const bool uncertified = !a.z.certified || !a.log.certified;
  {
    std::vector<LatticePoint> missing;
    for (const LatticePoint& v : a.z.members)
      if (!contains_point(a.log.members, v)) missing.push_back(v);
    checks.add("z_nash_in_log_nash", {{"offenders", points_json(missing)}}, missing.empty(), uncertified);
  }

  try {
    const std::vector<LatticePoint> ess =
        essential_overapprox(p, spec.options.samples, spec.options.seed, NashFlavor::LogNash, diverse(options));
    std::vector<LatticePoint> missing;
    for (const LatticePoint& v : a.log.members)
      if (!contains_point(ess, v)) missing.push_back(v);
    checks.add("log_nash_in_essential",
               {{"samples", spec.options.samples}, {"essential_overapprox", points_json(ess)}, {"offenders", points_json(missing)}},
               missing.empty(), !a.log.certified);
  } catch (const BudgetExceeded& e) {
    checks.add("log_nash_in_essential", {{"error", e.what()}}, false);
  }

  if (p.qg()) {
    try {
      std::vector<LatticePoint> mismatches;
      std::size_t count = 0;
      constexpr int kSeeds = 3;
      for (int i = 0; i < kSeeds; ++i) {
        const ResolutionModel m = sample_log_resolution(p, spec.options.seed + static_cast<std::uint64_t>(i), diverse(options));
        for (const LatticePoint& r : m.fan.rays()) {
          ++count;
          if (!discrepancy_crosscheck(m, r)) mismatches.push_back(r);
        }
      }
      checks.add("discrepancy_crosscheck", {{"seeds", kSeeds}, {"rays_checked", count}, {"mismatches", points_json(sorted_unique(mismatches))}},
                 mismatches.empty());
    } catch (const BudgetExceeded& e) {
      checks.add("discrepancy_crosscheck", {{"error", e.what()}}, false);
    }
    verdict_checks(checks, a);
  } else {
    for (const char* name : {"discrepancy_crosscheck", "lognash_computes_mld", "negative_lognash", "mld_witnesses_lognash"})
      checks.skip(name, "not q-gorenstein");
  }

  out.report["checks"] = checks.json();
  out.report["summary"] = {{"failed", checks.failed()}, {"warnings", checks.warnings()}};
  if (!p.qg()) {
    out.exit_code = exit_code::not_q_gorenstein;
    out.messages.push_back("cone is not Q-Gorenstein; discrepancy checks skipped");
  } else if (!checks.failed().empty()) {
    out.exit_code = exit_code::verification_failed;
    out.messages.push_back("verification failed: " + checks.failed().front());
  }
  if (checks.warnings() > 0) out.messages.push_back(std::to_string(checks.warnings()) + " warning(s): nash sets uncertified");
  return out;
}

CommandResult cmd_oracle(const PairSpec& spec) {
  try {
    const ToricPair p = build_pair(spec);
    const long box = spec.options.bound.value_or(certified_bound(p) + 1);
    Json r;
    r["input"] = to_json(spec);
    r["bound"] = box;
    r["z_nash"] = points_json(brute_force_minimal(p, NashFlavor::ZNash, box));
    r["log_nash"] = points_json(brute_force_minimal(p, NashFlavor::LogNash, box));
    if (!p.qg()) {
      r["mld"] = kNotQg;
      return {r, exit_code::not_q_gorenstein, {"cone is not Q-Gorenstein; brute-force mld skipped"}};
    }
    r["mld"] = mld_json(brute_force_mld(p, box), p);
    return {r, exit_code::ok, {}};
  } catch (const InvalidInput& e) {
    return invalid(e.what());
  }
}

CommandResult cmd_corpus(int n, Index dim, long max_exp, std::uint64_t seed, const ResolutionOptions& options) {
  if (n < 1) return invalid("n must be at least 1");
  if (dim != 2 && dim != 3) return invalid("corpus dimension must be 2 or 3");
  if (max_exp < 1) return invalid("max exponent must be at least 1");

  std::vector<Json> rows(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      const CorpusInstance inst = corpus_instance(seed, static_cast<std::size_t>(i), dim, max_exp);
      PairSpec spec;
      spec.dim = dim;
      if (!(inst.sigma == Cone::orthant(dim))) spec.cone_rays = inst.sigma.rays();
      spec.ideal_exponents = inst.exponents;
      spec.options.seed = seed;
      const CommandResult r = cmd_verify(spec, options);
      Json row;
      row["index"] = i;
      const Json& summary = r.report["summary"];
      row["failed"] = summary["failed"];
      row["warnings"] = summary["warnings"];
      row["status"] = r.exit_code != exit_code::ok ? "fail" : summary["warnings"].get<int>() > 0 ? "warning" : "pass";
      if (r.exit_code != exit_code::ok) row["reproducer"] = to_json(spec);
      rows[static_cast<std::size_t>(i)] = std::move(row);
    }
  };
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  int pass = 0, fail = 0, warn = 0;
  CommandResult out;
  for (const Json& row : rows) {
    const std::string status = row["status"];
    if (status == "pass") ++pass;
    if (status == "warning") ++warn;
    if (status == "fail") {
      ++fail;
      out.messages.push_back("instance " + std::to_string(row["index"].get<int>()) + " failed: " +
                             row["failed"].dump() + " reproducer: " + row["reproducer"].dump());
    }
  }
  out.report["parameters"] = {{"n", n}, {"dim", dim}, {"max_exp", max_exp}, {"seed", seed}};
  out.report["instances"] = rows;
  out.report["summary"] = {{"pass", pass}, {"fail", fail}, {"warning", warn}};
  if (fail > 0) out.exit_code = exit_code::verification_failed;
  return out;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  auto render = [&](auto& self, const Json& j, int indent) -> void {
    for (const auto& [k, v] : j.items()) {
      os << std::string(static_cast<std::size_t>(indent), ' ') << k << ":";
      if (v.is_object() && !v.empty()) {
        os << "\n";
        self(self, v, indent + 2);
      } else {
        os << " " << (v.is_string() ? v.template get<std::string>() : v.dump()) << "\n";
      }
    }
  };
  render(render, report, 0);
  return os.str();
}

}  // namespace toricpair
