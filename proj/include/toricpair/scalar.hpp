#pragma once

// Exact scalar types and dense vector/matrix aliases shared by every module.
//
// Integers are arbitrary precision (cpp_int without expression templates so
// that they compose with Eigen's own expression templates); rationals are
// always kept in lowest terms with a positive denominator.

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/traits/is_byte_container.hpp>

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

// Boost 1.74 probes every candidate constructor argument for a byte-container
// interface; Eigen 3.4 matrices expose a `const_iterator` of type void, which
// turns that probe into a hard error during scalar promotion. Eigen types
// (anything with a StorageKind) are never byte containers.
namespace boost::multiprecision::detail {
template <class C>
  requires requires {
    typename C::StorageKind;
    typename C::Scalar;
  }
struct is_byte_container<C> : public boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace toricpair {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Element of the lattice N (or of its dual M); coordinates are exact integers.
using LatticePoint = Vector<Integer>;
/// Element of M_Q, e.g. the canonical weight covector.
using RationalVector = Vector<Rational>;
using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

LatticePoint lattice_point(std::initializer_list<long long> coords);
LatticePoint lattice_point(const std::vector<long long>& coords);
LatticePoint zero_point(Index rank);
LatticePoint unit_point(Index rank, Index i);

/// Lexicographic order on coordinates; shorter vectors sort first.
struct LexLess {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const;
};
bool lex_less(const LatticePoint& a, const LatticePoint& b);
using PointSet = std::set<LatticePoint, LexLess>;

bool equal(const LatticePoint& a, const LatticePoint& b);
bool is_zero(const LatticePoint& v);

Integer dot(const LatticePoint& a, const LatticePoint& b);
Rational dot(const LatticePoint& a, const RationalVector& b);

/// gcd of all coordinates (0 for the zero vector), always non-negative.
Integer content(const LatticePoint& v);
bool is_primitive(const LatticePoint& v);
/// v / content(v); throws InvalidInput on the zero vector.
LatticePoint primitivize(const LatticePoint& v);

Integer max_abs_coordinate(const LatticePoint& v);
Integer l1_norm(const LatticePoint& v);

RationalVector to_rational(const LatticePoint& v);
/// Smallest positive integer multiple of a rational vector, made primitive.
LatticePoint clear_denominators(const RationalVector& v);

Integer floor_div(const Integer& a, const Integer& b);
Rational floor(const Rational& q);
Rational frac(const Rational& q);
bool is_integral(const Rational& q);

std::vector<LatticePoint> sorted_unique(std::vector<LatticePoint> points);
bool contains_point(const std::vector<LatticePoint>& sorted_points, const LatticePoint& v);

long long to_int64(const Integer& v);

std::string to_string(const Integer& v);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
/// "(1,2,3)"
std::string to_string(const LatticePoint& v);
std::string to_string(const std::vector<LatticePoint>& points);

}  // namespace toricpair
