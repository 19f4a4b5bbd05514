#include "toricpair/scalar.hpp"

#include "toricpair/error.hpp"

#include <algorithm>
#include <limits>

namespace toricpair {

LatticePoint lattice_point(std::initializer_list<long long> coords) {
  LatticePoint v(static_cast<Index>(coords.size()));
  Index i = 0;
  for (long long c : coords) v(i++) = c;
  return v;
}

LatticePoint lattice_point(const std::vector<long long>& coords) {
  LatticePoint v(static_cast<Index>(coords.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = coords[static_cast<std::size_t>(i)];
  return v;
}

LatticePoint zero_point(Index rank) {
  LatticePoint v(rank);
  for (Index i = 0; i < rank; ++i) v(i) = 0;
  return v;
}

LatticePoint unit_point(Index rank, Index i) {
  LatticePoint v = zero_point(rank);
  v(i) = 1;
  return v;
}

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

bool LexLess::operator()(const LatticePoint& a, const LatticePoint& b) const { return lex_less(a, b); }

bool equal(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool is_zero(const LatticePoint& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

Integer dot(const LatticePoint& a, const LatticePoint& b) {
  Integer s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

Rational dot(const LatticePoint& a, const RationalVector& b) {
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) s += Rational(a(i)) * b(i);
  return s;
}

Integer content(const LatticePoint& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v(i));
  return boost::multiprecision::abs(g);
}

bool is_primitive(const LatticePoint& v) { return content(v) == 1; }

LatticePoint primitivize(const LatticePoint& v) {
  const Integer g = content(v);
  if (g == 0) throw InvalidInput("zero vector has no primitive representative");
  LatticePoint r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = v(i) / g;
  return r;
}

Integer max_abs_coordinate(const LatticePoint& v) {
  Integer m = 0;
  for (Index i = 0; i < v.size(); ++i) m = std::max(m, Integer(boost::multiprecision::abs(v(i))));
  return m;
}

Integer l1_norm(const LatticePoint& v) {
  Integer s = 0;
  for (Index i = 0; i < v.size(); ++i) s += boost::multiprecision::abs(v(i));
  return s;
}

RationalVector to_rational(const LatticePoint& v) {
  RationalVector r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

LatticePoint clear_denominators(const RationalVector& v) {
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i) {
    const Integer d = boost::multiprecision::denominator(v(i));
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  LatticePoint r(v.size());
  for (Index i = 0; i < v.size(); ++i)
    r(i) = boost::multiprecision::numerator(v(i)) * (l / boost::multiprecision::denominator(v(i)));
  return is_zero(r) ? r : primitivize(r);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  const Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Rational floor(const Rational& q) {
  return Rational(floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q)));
}

Rational frac(const Rational& q) { return q - floor(q); }

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

std::vector<LatticePoint> sorted_unique(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end(),
                           [](const LatticePoint& a, const LatticePoint& b) { return equal(a, b); }),
               points.end());
  return points;
}

bool contains_point(const std::vector<LatticePoint>& sorted_points, const LatticePoint& v) {
  return std::binary_search(sorted_points.begin(), sorted_points.end(), v, LexLess{});
}

long long to_int64(const Integer& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw Error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<long long>();
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& q) {
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

std::string to_string(const LatticePoint& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v(i).str();
  }
  return s + ")";
}

std::string to_string(const std::vector<LatticePoint>& points) {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ", ";
    s += to_string(points[i]);
  }
  return s + "}";
}

}  // namespace toricpair
