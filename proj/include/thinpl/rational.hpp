#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace thinpl {

/// Exact rational scalar. GMP keeps the canonical reduced form (positive
/// denominator, gcd(|num|, den) = 1); all arithmetic and comparisons are
/// exact. Floating point never enters a predicate.
using Rational = mpq_class;

/// Parses the rational-string grammar: optional '-', digits, optional
/// '/' digits with nonzero denominator ("0", "-3", "7/12"). Throws
/// DomainError(ParseError) on anything else.
Rational parse_rational(const std::string& text);

/// Canonical form accepted back by parse_rational: "n" or "n/d", d > 1.
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

/// Coordinate vector in the ambient rational space.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }

  bool operator==(const Point& other) const { return coords == other.coords; }
  bool operator!=(const Point& other) const { return !(*this == other); }
  /// Coordinate-wise lexicographic order by rational value.
  bool operator<(const Point& other) const;

  std::vector<double> to_doubles() const;
  std::string str() const;
};

Point make_point(std::initializer_list<const char*> coords);

}  // namespace thinpl
