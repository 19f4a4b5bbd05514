#include "toricpair/nash.hpp"

#include "toricpair/error.hpp"

#include <algorithm>

namespace toricpair {

namespace {

bool in_s(const LatticePoint& v, const ToricPair& pair) { return !is_zero(v) && ord(v, pair.ideal()) >= 1; }

// Some h in hb with v − h ∈ cone and v − h ∈ S.
bool reducible_in(const LatticePoint& v, const Cone& cone, const std::vector<LatticePoint>& hb, const ToricPair& pair) {
  for (const LatticePoint& h : hb) {
    const LatticePoint rest = v - h;
    if (cone.contains(rest) && in_s(rest, pair)) return true;
  }
  return false;
}

std::vector<LatticePoint> candidates(const ToricPair& pair, long bound) {
  std::vector<LatticePoint> out;
  for (const auto& hb : pair.cone_hilbert_bases())
    for (const LatticePoint& h : hb)
      if (max_abs_coordinate(h) <= bound && in_s(h, pair)) out.push_back(h);
  return sorted_unique(std::move(out));
}

DivisorSet minimal_elements(const ToricPair& pair, long bound, NashFlavor flavor) {
  if (bound < 1) throw InvalidInput("enumeration bound must be at least 1");
  DivisorSet out{{}, flavor, bound, bound >= certified_bound(pair)};
  for (const LatticePoint& v : candidates(pair, bound)) {
    const bool minimal = flavor == NashFlavor::ZNash ? is_z_minimal(v, pair) : is_log_minimal(v, pair);
    if (minimal) out.members.push_back(v);
  }
  return out;
}

void require_finite(const MldResult& m, const char* alternative) {
  if (!m.finite()) throw PreconditionError(std::string("mld is -inf; use ") + alternative);
}

}  // namespace

long certified_bound(const ToricPair& pair) {
  Integer b = 1;
  for (const LatticePoint& a : pair.ideal().exponents()) b = std::max(b, max_abs_coordinate(a));
  for (const auto& hb : pair.cone_hilbert_bases())
    for (const LatticePoint& h : hb) b = std::max(b, max_abs_coordinate(h));
  return static_cast<long>(to_int64(b));
}

bool is_z_minimal(const LatticePoint& v, const ToricPair& pair) {
  return in_s(v, pair) && !reducible_in(v, pair.sigma(), pair.sigma_hilbert_basis(), pair);
}

bool is_log_minimal(const LatticePoint& v, const ToricPair& pair) {
  if (!in_s(v, pair)) return false;
  const auto& cones = pair.dual().fan.maximal_cones();
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].contains(v) && reducible_in(v, cones[i], pair.cone_hilbert_bases()[i], pair)) return false;
  return true;
}

DivisorSet z_nash(const ToricPair& pair, long bound) { return minimal_elements(pair, bound, NashFlavor::ZNash); }
DivisorSet log_nash(const ToricPair& pair, long bound) { return minimal_elements(pair, bound, NashFlavor::LogNash); }
DivisorSet z_nash(const ToricPair& pair) { return z_nash(pair, certified_bound(pair)); }
DivisorSet log_nash(const ToricPair& pair) { return log_nash(pair, certified_bound(pair)); }

Verdict check_lognash_computes_mld(const ToricPair& pair) {
  const MldResult m = mld(pair);
  require_finite(m, "check_negative_lognash");
  Verdict out;
  for (const LatticePoint& v : log_nash(pair).members)
    if (log_discrepancy(v, pair) == m.value) {
      out = {true, v, m.value, {}, {}};
      break;
    }
  if (!out.holds) out.value = m.value;
  return out;
}

Verdict check_negative_lognash(const ToricPair& pair) {
  const MldResult m = mld(pair);
  if (m.finite()) throw PreconditionError("mld is finite; use check_lognash_computes_mld");
  const DivisorSet lognash = log_nash(pair);
  Verdict out;
  for (const LatticePoint& ray : classify(pair).d_part) {
    if (!contains_point(lognash.members, ray)) continue;
    const Rational a = log_discrepancy(ray, pair);
    if (!out.holds || a < *out.value) out = {true, ray, a, {}, {}};
  }
  return out;
}

Verdict check_all_mld_witnesses_lognash(const ToricPair& pair, long bound) {
  const MldResult m = mld(pair);
  require_finite(m, "check_negative_lognash");
  const DivisorSet lognash = log_nash(pair, bound);
  Verdict out;
  out.value = m.value;
  for (const LatticePoint& v : enumerate_box(pair.sigma(), bound)) {
    if (!is_primitive(v) || discrepancy_function(v, pair) != m.value) continue;
    if (ord(v, pair.ideal()) == 0)
      out.excluded.push_back(v);
    else if (!contains_point(lognash.members, v))
      out.offenders.push_back(v);
  }
  out.holds = out.offenders.empty();
  if (!out.holds) out.witness = out.offenders.front();
  return out;
}

std::string to_string(NashFlavor f) { return f == NashFlavor::ZNash ? "z-nash" : "log-nash"; }

}  // namespace toricpair
