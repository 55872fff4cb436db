#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thinpl/rational.hpp"

namespace thinpl {

using SimplexId = std::size_t;

/// Face of the complex, stored as the sorted vertex indices.
struct Simplex {
  std::vector<int> vertices;

  std::size_t dim() const { return vertices.size() - 1; }
  bool operator==(const Simplex& o) const { return vertices == o.vertices; }
  bool operator<(const Simplex& o) const;
  /// Face test: every vertex of *this occurs in o.
  bool is_face_of(const Simplex& o) const;
};

/// Set of simplex ids, packed so the reduction inner loop can intersect
/// carrier sets with a handful of word-ANDs.
class SimplexSet {
public:
  SimplexSet() = default;
  explicit SimplexSet(std::size_t universe);

  void set(std::size_t i);
  bool test(std::size_t i) const;
  bool any() const;
  bool none() const { return !any(); }
  SimplexSet& operator&=(const SimplexSet& o);
  friend SimplexSet operator&(SimplexSet a, const SimplexSet& b) {
    a &= b;
    return a;
  }
  bool operator==(const SimplexSet& o) const { return words_ == o.words_; }
  std::vector<SimplexId> ids() const;

private:
  std::vector<std::uint64_t> words_;
};

/// Input description consumed by build_complex.
struct ComplexSpec {
  int ambient_dim = 0;
  std::vector<std::pair<std::string, Point>> vertices;
  std::vector<std::vector<std::string>> simplices;  // maximal ones suffice
  std::string basepoint;
};

/// Finite simplicial complex affinely embedded in rational ambient space.
///
/// Immutable after construction; all queries are const and pure, so one
/// instance may be shared read-only across threads. Membership of a point
/// in a (closed) simplex is decided by an exact barycentric solve, never
/// by floating point.
class SimplicialComplex {
public:
  int ambient_dim() const { return ambient_dim_; }
  std::size_t vertex_count() const { return vertex_points_.size(); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const Point& vertex_point(int v) const { return vertex_points_[v]; }
  std::optional<int> vertex_index(const std::string& id) const;

  const std::vector<Simplex>& simplices() const { return simplices_; }
  const Simplex& simplex(SimplexId s) const { return simplices_[s]; }
  std::optional<SimplexId> find_simplex(const std::vector<std::string>& ids) const;
  std::string simplex_name(SimplexId s) const;

  int basepoint() const { return basepoint_; }
  const Point& basepoint_coords() const { return vertex_points_[basepoint_]; }

  /// Exact barycentric coordinates of p with respect to simplex s, or
  /// nullopt when p is outside the affine hull. Membership in the closed
  /// simplex means all coordinates are >= 0.
  std::optional<std::vector<Rational>> barycentric(SimplexId s, const Point& p) const;
  bool in_simplex(SimplexId s, const Point& p) const;

  /// All simplices containing p (closed membership); empty means p is not
  /// in the complex.
  SimplexSet carriers(const Point& p) const;
  std::vector<SimplexId> locate(const Point& p) const;

  std::vector<SimplexId> common_simplices(const Point& p, const Point& q) const;

  /// True iff some simplex contains p, q and r and the three points are
  /// collinear (all 2x2 minors of (q-p, r-p) vanish). Triples with repeated
  /// points are degenerately collinear, so adjacent duplicates qualify.
  bool aligned_in_common_simplex(const Point& p, const Point& q, const Point& r) const;

  /// Cofaces of any carrier of p. For every point y of a returned simplex,
  /// the segment [p, y] stays inside that simplex. Throws PointNotInComplex
  /// when p lies outside the complex.
  std::vector<SimplexId> star(const Point& p) const;

  /// Shortest edge path between two vertices of the 1-skeleton, endpoints
  /// included; breadth-first with neighbors visited in ascending index
  /// order, so the result is deterministic.
  std::vector<int> vertex_path(int from, int to) const;
  const std::vector<std::vector<int>>& vertex_adjacency() const { return adjacency_; }

  bool operator==(const SimplicialComplex& o) const;

private:
  friend std::shared_ptr<const SimplicialComplex> build_complex(const ComplexSpec&);
  SimplicialComplex() = default;
  void require_dim(const Point& p) const;

  int ambient_dim_ = 0;
  std::vector<std::string> vertex_ids_;
  std::vector<Point> vertex_points_;
  std::map<std::string, int> vertex_lookup_;
  std::vector<Simplex> simplices_;  // sorted by (dim, vertices)
  std::map<std::vector<int>, SimplexId> simplex_lookup_;
  std::vector<std::vector<int>> adjacency_;  // 1-skeleton, sorted neighbors
  int basepoint_ = -1;
};

/// Validates a spec and produces the face-closed complex. Checks, in order:
/// positive ambient dimension, distinct vertex ids, coordinate lengths,
/// basepoint existence, known vertex ids in simplices, affine independence
/// of every input simplex, and connectivity of the 1-skeleton.
std::shared_ptr<const SimplicialComplex> build_complex(const ComplexSpec& spec);

/// True iff all 2x2 minors of the matrix with rows (q-p, r-p) vanish.
bool collinear(const Point& p, const Point& q, const Point& r);

/// True iff q lies on the closed segment [p, r]: collinear with
/// q = p + t(r-p) for rational t in [0, 1]; for p = r requires q = p.
/// A pure affine predicate, independent of any complex.
bool between(const Point& p, const Point& q, const Point& r);

}  // namespace thinpl
