#include "toricpair/pair.hpp"

#include "toricpair/error.hpp"
#include "toricpair/linalg.hpp"

namespace toricpair {

std::optional<QGorensteinData> qgorenstein(const Cone& sigma) {
  if (!sigma.is_pointed() || !sigma.is_full_dimensional())
    throw InvalidInput("cone " + to_string(sigma) + " is not strongly convex and full-dimensional");
  const IntMatrix rays = rows_matrix(sigma.rays(), sigma.ambient_rank());
  const auto w = solve(rays, LatticePoint::Ones(rays.rows()));
  if (!w) return std::nullopt;
  Integer r = 1;
  for (Index i = 0; i < w->size(); ++i) {
    const Integer d = boost::multiprecision::denominator((*w)(i));
    r = r / boost::multiprecision::gcd(r, d) * d;
  }
  return QGorensteinData{*w, r};
}

ToricPair::ToricPair(MonomialIdeal ideal) {
  auto data = std::make_shared<Data>(Data{std::move(ideal), std::nullopt, {}, {}, {}});
  data->qg = qgorenstein(data->ideal.sigma());
  data->dual = dual_fan(data->ideal);
  data->sigma_hb = hilbert_basis(data->ideal.sigma());
  for (const Cone& c : data->dual.fan.maximal_cones()) data->cone_hb.push_back(hilbert_basis(c));
  data_ = std::move(data);
}

ToricPair ToricPair::make(const Cone& sigma, std::span<const LatticePoint> exponents) {
  return ToricPair(make_ideal(exponents, sigma));
}

const QGorensteinData& ToricPair::require_qg() const {
  if (!data_->qg) throw NotQGorenstein();
  return *data_->qg;
}

Rational discrepancy_function(const LatticePoint& v, const ToricPair& pair) {
  return dot(v, pair.require_qg().weight) - Rational(ord(v, pair.ideal()));
}

Rational log_discrepancy(const LatticePoint& v, const ToricPair& pair) {
  if (v.size() != pair.rank()) throw InvalidInput("point " + to_string(v) + " has the wrong length");
  if (is_zero(v)) throw InvalidInput("log-discrepancy needs a nonzero point");
  if (!is_primitive(v)) throw InvalidInput("point " + to_string(v) + " is not primitive");
  if (!pair.sigma().contains(v)) throw InvalidInput("point " + to_string(v) + " is not in the cone");
  return discrepancy_function(v, pair);
}

MldResult mld(const ToricPair& pair) {
  pair.require_qg();
  if (pair.rank() < 2) throw InvalidInput("mld convention requires dim >= 2");

  // a is linear on each dual-fan cone, so it is negative somewhere iff it
  // is negative on some ray.
  std::optional<MldResult> negative;
  for (const LatticePoint& r : pair.dual().fan.rays()) {
    const Rational a = discrepancy_function(r, pair);
    if (a < 0 && (!negative || a < negative->value)) negative = MldResult{MldKind::MinusInfinity, a, r};
  }
  if (negative) return *negative;

  std::optional<MldResult> best;
  for (const auto& hb : pair.cone_hilbert_bases())
    for (const LatticePoint& h : hb) {
      const Rational a = discrepancy_function(h, pair);
      if (!best || a < best->value || (a == best->value && lex_less(h, best->witness)))
        best = MldResult{MldKind::Finite, a, h};
    }
  return *best;
}

MldResult brute_force_mld(const ToricPair& pair, long bound) {
  pair.require_qg();
  std::optional<MldResult> best;
  bool negative = false;
  for (const LatticePoint& v : enumerate_box(pair.sigma(), bound)) {
    const Rational a = discrepancy_function(v, pair);
    if (a < 0) negative = true;
    if (!is_primitive(v)) continue;
    // enumerate_box is lexicographic, so a strict improvement keeps the
    // lexicographically first minimizer.
    if (!best || a < best->value) best = MldResult{MldKind::Finite, a, v};
  }
  if (!best) throw InvalidInput("box contains no lattice point of the cone");
  if (negative) best->kind = MldKind::MinusInfinity;
  return *best;
}

LcClassification classify(const ToricPair& pair) {
  const Integer r = pair.require_qg().index;
  LcClassification out;
  bool has_zero = false;
  for (const LatticePoint& ray : pair.dual().fan.rays()) {
    const Rational scaled = Rational(r) * discrepancy_function(ray, pair);
    const Integer coefficient = boost::multiprecision::numerator(scaled);
    out.l_coefficients.emplace_back(ray, coefficient);
    if (coefficient < 0) out.d_part.push_back(ray);
    if (coefficient > 0) out.dprime_part.push_back(ray);
    if (coefficient == 0) has_zero = true;
  }
  if (!out.d_part.empty()) {
    out.cls = LcClass::NotLogCanonical;
  } else {
    out.cls = has_zero ? LcClass::LogCanonicalNotLt : LcClass::LogTerminal;
    out.dprime_part.clear();
  }
  return out;
}

std::string to_string(MldKind k) { return k == MldKind::Finite ? "finite" : "-inf"; }

std::string to_string(LcClass c) {
  switch (c) {
    case LcClass::LogTerminal:
      return "log-terminal";
    case LcClass::LogCanonicalNotLt:
      return "log-canonical-not-lt";
    case LcClass::NotLogCanonical:
      return "not-log-canonical";
  }
  return "";
}

}  // namespace toricpair
