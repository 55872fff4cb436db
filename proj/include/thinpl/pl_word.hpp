#pragma once

#include <memory>
#include <vector>

#include "thinpl/geometry.hpp"

namespace thinpl {

enum class Kind { Loop, Path };

/// PL loop or path as the tuple of its vertices. Consecutive points share
/// a simplex, the word starts at the basepoint, and a Loop ends there too.
/// Words are immutable; every point carries its precomputed carrier set so
/// the reduction engine never re-solves membership.
class PLWord {
public:
  static PLWord make(std::shared_ptr<const SimplicialComplex> complex,
                     std::vector<Point> points, Kind kind);

  Kind kind() const { return kind_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  const Point& front() const { return points_.front(); }
  const Point& back() const { return points_.back(); }
  const SimplexSet& carrier_set(std::size_t i) const { return carriers_[i]; }

  const SimplicialComplex& complex() const { return *complex_; }
  const std::shared_ptr<const SimplicialComplex>& complex_ptr() const { return complex_; }
  bool same_complex(const PLWord& other) const;

  /// Exact pointwise equality (kind and points; complexes must agree).
  bool operator==(const PLWord& o) const {
    return kind_ == o.kind_ && points_ == o.points_;
  }
  bool operator!=(const PLWord& o) const { return !(*this == o); }

  /// Assembles a word whose validity is already guaranteed by construction
  /// (subsequence of a valid word, concatenation at a shared point, ...).
  /// Carrier sets travel with their points. Checked only in debug builds.
  static PLWord from_validated(std::shared_ptr<const SimplicialComplex> complex,
                               std::vector<Point> points,
                               std::vector<SimplexSet> carriers, Kind kind);

private:
  PLWord() = default;
  std::shared_ptr<const SimplicialComplex> complex_;
  std::vector<Point> points_;
  std::vector<SimplexSet> carriers_;
  Kind kind_ = Kind::Loop;
};

PLWord make_word(std::shared_ptr<const SimplicialComplex> complex,
                 std::vector<Point> points, Kind kind);

/// Breakpoint sequence 0 = t_0 <= ... <= t_n = 1 paired with an (n+1)-point
/// word. Zero-width gaps are allowed (they carry duplicate points of
/// non-reduced words). A one-point word has the degenerate subdivision (0).
struct Subdivision {
  std::vector<double> t;

  std::size_t size() const { return t.size(); }
  bool operator==(const Subdivision& o) const { return t == o.t; }
};

/// Evenly spaced subdivision for an n_points word.
Subdivision even_subdivision(std::size_t n_points);

/// Constant-speed parametrization data: gap i equals chord_i / total_length.
struct UniformParam {
  Subdivision breakpoints;
  double total_length = 0.0;
};

/// Total chord length, floating point from exact squared distances.
double length(const PLWord& w);

/// Breakpoints of the uniform reparametrization: cumulative chord length
/// over total length. A constant word keeps its (even) input subdivision.
UniformParam uniform_breakpoints(const PLWord& w);

/// Position at parameter t under the given subdivision: linear on each
/// segment, exactly the word vertex at a breakpoint, zero-width gaps
/// skipped. Coordinates are floating point.
std::vector<double> evaluate(const PLWord& w, const Subdivision& sub, double t);

/// Straight-line homotopy of subdivisions (1-s) * input + s * uniform;
/// s = 0 gives back the input exactly, s = 1 the uniform breakpoints.
Subdivision uniformize_homotopy(const PLWord& w, const Subdivision& sub, double s);

/// True iff every gap matches its chord-length ratio within rel_tol, or
/// the word is constant.
bool is_uniform(const PLWord& w, const Subdivision& sub, double rel_tol);

}  // namespace thinpl
