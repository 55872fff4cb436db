#include "thinpl/pl_word.hpp"

#include <cassert>
#include <cmath>

#include "thinpl/errors.hpp"

namespace thinpl {

PLWord PLWord::make(std::shared_ptr<const SimplicialComplex> complex,
                    std::vector<Point> points, Kind kind) {
  if (points.empty()) {
    throw DomainError(ErrorKind::EmptyWord, "a word needs at least one point");
  }
  const Point& base = complex->basepoint_coords();
  if (points.front() != base) {
    throw DomainError(ErrorKind::NotBased,
                      "word starts at " + points.front().str() + ", basepoint is " +
                          base.str());
  }
  if (kind == Kind::Loop && points.back() != base) {
    throw DomainError(ErrorKind::NotClosed,
                      "loop ends at " + points.back().str() + ", basepoint is " +
                          base.str());
  }
  std::vector<SimplexSet> carriers;
  carriers.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    SimplexSet c = complex->carriers(points[i]);
    if (c.none()) {
      throw DomainError(ErrorKind::PointNotInComplex,
                        "point " + std::to_string(i) + " = " + points[i].str() +
                            " is not in the complex",
                        i);
    }
    carriers.push_back(std::move(c));
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if ((carriers[i] & carriers[i + 1]).none()) {
      throw DomainError(ErrorKind::NoCommonSimplex,
                        "points " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            " (" + points[i].str() + ", " + points[i + 1].str() +
                            ") share no simplex",
                        i);
    }
  }
  PLWord w;
  w.complex_ = std::move(complex);
  w.points_ = std::move(points);
  w.carriers_ = std::move(carriers);
  w.kind_ = kind;
  return w;
}

PLWord PLWord::from_validated(std::shared_ptr<const SimplicialComplex> complex,
                              std::vector<Point> points,
                              std::vector<SimplexSet> carriers, Kind kind) {
  assert(!points.empty());
  assert(points.size() == carriers.size());
#ifndef NDEBUG
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    assert((carriers[i] & carriers[i + 1]).any());
  }
  assert(points.front() == complex->basepoint_coords());
  assert(kind == Kind::Path || points.back() == complex->basepoint_coords());
#endif
  PLWord w;
  w.complex_ = std::move(complex);
  w.points_ = std::move(points);
  w.carriers_ = std::move(carriers);
  w.kind_ = kind;
  return w;
}

bool PLWord::same_complex(const PLWord& other) const {
  return complex_ == other.complex_ || *complex_ == *other.complex_;
}

PLWord make_word(std::shared_ptr<const SimplicialComplex> complex,
                 std::vector<Point> points, Kind kind) {
  return PLWord::make(std::move(complex), std::move(points), kind);
}

Subdivision even_subdivision(std::size_t n_points) {
  Subdivision sub;
  if (n_points == 0) return sub;
  if (n_points == 1) {
    sub.t = {0.0};
    return sub;
  }
  const std::size_t n = n_points - 1;
  sub.t.reserve(n_points);
  for (std::size_t i = 0; i <= n; ++i) {
    sub.t.push_back(static_cast<double>(i) / static_cast<double>(n));
  }
  return sub;
}

namespace {

Rational squared_chord(const Point& a, const Point& b) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Rational d = a.coords[i] - b.coords[i];
    acc += d * d;
  }
  return acc;
}

double chord(const Point& a, const Point& b) {
  return std::sqrt(to_double(squared_chord(a, b)));
}

void check_subdivision(const PLWord& w, const Subdivision& sub) {
  if (sub.size() != w.size()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "subdivision has " + std::to_string(sub.size()) +
                          " breakpoints for a " + std::to_string(w.size()) +
                          "-point word");
  }
  if (w.size() == 1) return;
  if (sub.t.front() != 0.0 || sub.t.back() != 1.0) {
    throw DomainError(ErrorKind::OutOfRange, "subdivision must run from 0 to 1");
  }
  for (std::size_t i = 0; i + 1 < sub.size(); ++i) {
    if (sub.t[i] > sub.t[i + 1]) {
      throw DomainError(ErrorKind::OutOfRange, "subdivision is not monotone", i);
    }
  }
}

}  // namespace

double length(const PLWord& w) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) total += chord(w[i], w[i + 1]);
  return total;
}

UniformParam uniform_breakpoints(const PLWord& w) {
  UniformParam out;
  if (w.size() == 1) {
    out.breakpoints.t = {0.0};
    return out;
  }
  std::vector<double> cumulative(w.size(), 0.0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    cumulative[i] = cumulative[i - 1] + chord(w[i - 1], w[i]);
  }
  out.total_length = cumulative.back();
  if (out.total_length == 0.0) {
    // Constant word: the (even) input subdivision is kept as is.
    out.breakpoints = even_subdivision(w.size());
    return out;
  }
  out.breakpoints.t.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.breakpoints.t[i] = cumulative[i] / out.total_length;
  }
  return out;
}

std::vector<double> evaluate(const PLWord& w, const Subdivision& sub, double t) {
  check_subdivision(w, sub);
  if (t < 0.0 || t > 1.0) {
    throw DomainError(ErrorKind::OutOfRange, "parameter t must lie in [0, 1]");
  }
  if (w.size() == 1) return w[0].to_doubles();
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (t == sub.t[i]) return w[i].to_doubles();
  }
  std::size_t seg = 0;
  while (seg + 2 < sub.size() && sub.t[seg + 1] < t) ++seg;
  // t is strictly inside (t_seg, t_seg+1), so the gap has positive width.
  const double width = sub.t[seg + 1] - sub.t[seg];
  const double frac = (t - sub.t[seg]) / width;
  std::vector<double> a = w[seg].to_doubles();
  const std::vector<double> b = w[seg + 1].to_doubles();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += frac * (b[i] - a[i]);
  return a;
}

Subdivision uniformize_homotopy(const PLWord& w, const Subdivision& sub, double s) {
  check_subdivision(w, sub);
  if (s < 0.0 || s > 1.0) {
    throw DomainError(ErrorKind::OutOfRange, "homotopy parameter s must lie in [0, 1]");
  }
  const UniformParam uni = uniform_breakpoints(w);
  // For a constant word the uniformization is the input subdivision itself.
  const Subdivision& target = uni.total_length == 0.0 ? sub : uni.breakpoints;
  Subdivision out;
  out.t.resize(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    out.t[i] = (1.0 - s) * sub.t[i] + s * target.t[i];
  }
  return out;
}

bool is_uniform(const PLWord& w, const Subdivision& sub, double rel_tol) {
  check_subdivision(w, sub);
  if (w.size() == 1) return true;
  std::vector<double> chords(w.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    chords[i] = chord(w[i], w[i + 1]);
    total += chords[i];
  }
  if (total == 0.0) return true;  // constant word
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const double gap = sub.t[i + 1] - sub.t[i];
    const double ratio = chords[i] / total;
    const double scale = std::max(std::abs(gap), std::abs(ratio));
    if (std::abs(gap - ratio) > rel_tol * scale) return false;
  }
  return true;
}

}  // namespace thinpl
