#include "thinpl/geometry.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "thinpl/errors.hpp"

namespace thinpl {

bool Simplex::operator<(const Simplex& o) const {
  if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
  return vertices < o.vertices;
}

bool Simplex::is_face_of(const Simplex& o) const {
  return std::includes(o.vertices.begin(), o.vertices.end(), vertices.begin(),
                       vertices.end());
}

SimplexSet::SimplexSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

void SimplexSet::set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }

bool SimplexSet::test(std::size_t i) const {
  return (words_[i / 64] >> (i % 64)) & 1u;
}

bool SimplexSet::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

SimplexSet& SimplexSet::operator&=(const SimplexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

std::vector<SimplexId> SimplexSet::ids() const {
  std::vector<SimplexId> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      const int b = __builtin_ctzll(bits);
      out.push_back(w * 64 + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
  return out;
}

namespace {

// Row echelon form of the affine system  sum_j lambda_j * v_j = p,
// sum_j lambda_j = 1, kept exact throughout. Rows are the N coordinate
// equations plus the normalization row.
struct AffineSystem {
  std::vector<std::vector<Rational>> m;  // rows x (cols + 1), last col = rhs
  std::size_t rows = 0;
  std::size_t cols = 0;                 // number of lambda unknowns
  std::vector<int> pivot_row_of_col;    // -1 when the column has no pivot
  std::size_t rank = 0;
  bool consistent = true;

  AffineSystem(const std::vector<const Point*>& verts, const Point* p,
               std::size_t ambient) {
    cols = verts.size();
    rows = ambient + 1;
    m.assign(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t r = 0; r < ambient; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m[r][c] = verts[c]->coords[r];
      if (p) m[r][cols] = p->coords[r];
    }
    for (std::size_t c = 0; c < cols; ++c) m[rows - 1][c] = 1;
    if (p) m[rows - 1][cols] = 1;
    eliminate();
  }

  void eliminate() {
    pivot_row_of_col.assign(cols, -1);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
      std::size_t pivot = next_row;
      while (pivot < rows && m[pivot][col] == 0) ++pivot;
      if (pivot == rows) continue;
      std::swap(m[pivot], m[next_row]);
      for (std::size_t r = next_row + 1; r < rows; ++r) {
        if (m[r][col] == 0) continue;
        const Rational factor = m[r][col] / m[next_row][col];
        for (std::size_t c = col; c <= cols; ++c) m[r][c] -= factor * m[next_row][c];
      }
      pivot_row_of_col[col] = static_cast<int>(next_row);
      ++next_row;
    }
    rank = next_row;
    for (std::size_t r = rank; r < rows; ++r) {
      if (m[r][cols] != 0) {
        consistent = false;
        break;
      }
    }
  }

  // Valid only when rank == cols and consistent.
  std::vector<Rational> solve() const {
    std::vector<Rational> lambda(cols, Rational(0));
    for (std::size_t cc = cols; cc-- > 0;) {
      const int r = pivot_row_of_col[cc];
      Rational acc = m[r][cols];
      for (std::size_t c = cc + 1; c < cols; ++c) acc -= m[r][c] * lambda[c];
      lambda[cc] = acc / m[r][cc];
    }
    return lambda;
  }
};

bool affinely_independent(const std::vector<const Point*>& verts, std::size_t ambient) {
  AffineSystem sys(verts, nullptr, ambient);
  return sys.rank == verts.size();
}

}  // namespace

std::optional<int> SimplicialComplex::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<SimplexId> SimplicialComplex::find_simplex(
    const std::vector<std::string>& ids) const {
  std::vector<int> verts;
  verts.reserve(ids.size());
  for (const auto& id : ids) {
    auto v = vertex_index(id);
    if (!v) return std::nullopt;
    verts.push_back(*v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto it = simplex_lookup_.find(verts);
  if (it == simplex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::string SimplicialComplex::simplex_name(SimplexId s) const {
  std::string out = "{";
  const auto& verts = simplices_[s].vertices;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i) out += ",";
    out += vertex_ids_[verts[i]];
  }
  out += "}";
  return out;
}

void SimplicialComplex::require_dim(const Point& p) const {
  if (static_cast<int>(p.dim()) != ambient_dim_) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "point " + p.str() + " has dimension " + std::to_string(p.dim()) +
                          ", ambient dimension is " + std::to_string(ambient_dim_));
  }
}

std::optional<std::vector<Rational>> SimplicialComplex::barycentric(
    SimplexId s, const Point& p) const {
  require_dim(p);
  const auto& simplex = simplices_[s];
  std::vector<const Point*> verts;
  verts.reserve(simplex.vertices.size());
  for (int v : simplex.vertices) verts.push_back(&vertex_points_[v]);
  AffineSystem sys(verts, &p, static_cast<std::size_t>(ambient_dim_));
  if (!sys.consistent) return std::nullopt;
  // Complex vertices are affinely independent, so the solution is unique.
  return sys.solve();
}

bool SimplicialComplex::in_simplex(SimplexId s, const Point& p) const {
  auto lambda = barycentric(s, p);
  if (!lambda) return false;
  for (const auto& l : *lambda)
    if (l < 0) return false;
  return true;
}

SimplexSet SimplicialComplex::carriers(const Point& p) const {
  require_dim(p);
  SimplexSet out(simplices_.size());
  for (SimplexId s = 0; s < simplices_.size(); ++s) {
    if (in_simplex(s, p)) out.set(s);
  }
  return out;
}

std::vector<SimplexId> SimplicialComplex::locate(const Point& p) const {
  return carriers(p).ids();
}

std::vector<SimplexId> SimplicialComplex::common_simplices(const Point& p,
                                                           const Point& q) const {
  return (carriers(p) & carriers(q)).ids();
}

bool SimplicialComplex::aligned_in_common_simplex(const Point& p, const Point& q,
                                                  const Point& r) const {
  require_dim(p);
  require_dim(q);
  require_dim(r);
  if (!collinear(p, q, r)) return false;
  return (carriers(p) & carriers(q) & carriers(r)).any();
}

std::vector<SimplexId> SimplicialComplex::star(const Point& p) const {
  const SimplexSet carrier_set = carriers(p);
  if (carrier_set.none()) {
    throw DomainError(ErrorKind::PointNotInComplex,
                      "star of " + p.str() + ": point is not in the complex");
  }
  const auto carrier_ids = carrier_set.ids();
  std::vector<SimplexId> out;
  for (SimplexId s = 0; s < simplices_.size(); ++s) {
    for (SimplexId t : carrier_ids) {
      if (simplices_[t].is_face_of(simplices_[s])) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

std::vector<int> SimplicialComplex::vertex_path(int from, int to) const {
  std::vector<int> parent(vertex_points_.size(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : adjacency_[v]) {
      if (parent[w] == -1) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
  return ambient_dim_ == o.ambient_dim_ && vertex_ids_ == o.vertex_ids_ &&
         vertex_points_ == o.vertex_points_ && simplices_ == o.simplices_ &&
         basepoint_ == o.basepoint_;
}

std::shared_ptr<const SimplicialComplex> build_complex(const ComplexSpec& spec) {
  auto complex = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
  if (spec.ambient_dim <= 0) {
    throw DomainError(ErrorKind::DimensionMismatch, "ambient_dim must be positive");
  }
  complex->ambient_dim_ = spec.ambient_dim;

  for (const auto& [id, point] : spec.vertices) {
    if (complex->vertex_lookup_.count(id)) {
      throw DomainError(ErrorKind::DuplicateVertexId, "duplicate vertex id \"" + id + "\"");
    }
    if (static_cast<int>(point.dim()) != spec.ambient_dim) {
      throw DomainError(ErrorKind::DimensionMismatch,
                        "vertex \"" + id + "\" has " + std::to_string(point.dim()) +
                            " coordinates, ambient dimension is " +
                            std::to_string(spec.ambient_dim));
    }
    complex->vertex_lookup_[id] = static_cast<int>(complex->vertex_ids_.size());
    complex->vertex_ids_.push_back(id);
    complex->vertex_points_.push_back(point);
  }
  if (complex->vertex_ids_.empty()) {
    throw DomainError(ErrorKind::MissingBasepoint, "complex has no vertices");
  }

  auto bp = complex->vertex_index(spec.basepoint);
  if (!bp) {
    throw DomainError(ErrorKind::MissingBasepoint,
                      "basepoint \"" + spec.basepoint + "\" is not a vertex");
  }
  complex->basepoint_ = *bp;

  // Face closure; every declared vertex is a 0-simplex of the complex.
  std::set<std::vector<int>> faces;
  for (std::size_t v = 0; v < complex->vertex_ids_.size(); ++v) {
    faces.insert({static_cast<int>(v)});
  }
  for (std::size_t i = 0; i < spec.simplices.size(); ++i) {
    std::vector<int> verts;
    for (const auto& id : spec.simplices[i]) {
      auto v = complex->vertex_index(id);
      if (!v) {
        throw DomainError(ErrorKind::UnknownVertexInSimplex,
                          "simplex #" + std::to_string(i) + " names unknown vertex \"" +
                              id + "\"",
                          i);
      }
      verts.push_back(*v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<const Point*> pts;
    for (int v : verts) pts.push_back(&complex->vertex_points_[v]);
    if (!affinely_independent(pts, static_cast<std::size_t>(spec.ambient_dim))) {
      std::string name;
      for (std::size_t k = 0; k < spec.simplices[i].size(); ++k) {
        if (k) name += ",";
        name += spec.simplices[i][k];
      }
      throw DomainError(ErrorKind::AffinelyDependentSimplex,
                        "simplex {" + name + "} is affinely dependent", i);
    }
    // All nonempty vertex subsets are faces; faces of an independent
    // simplex are independent.
    const std::size_t n = verts.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::uint64_t{1} << b)) face.push_back(verts[b]);
      }
      faces.insert(std::move(face));
    }
  }

  complex->simplices_.reserve(faces.size());
  for (const auto& verts : faces) complex->simplices_.push_back(Simplex{verts});
  std::sort(complex->simplices_.begin(), complex->simplices_.end());
  for (SimplexId s = 0; s < complex->simplices_.size(); ++s) {
    complex->simplex_lookup_[complex->simplices_[s].vertices] = s;
  }

  complex->adjacency_.assign(complex->vertex_ids_.size(), {});
  for (const auto& simplex : complex->simplices_) {
    if (simplex.vertices.size() == 2) {
      complex->adjacency_[simplex.vertices[0]].push_back(simplex.vertices[1]);
      complex->adjacency_[simplex.vertices[1]].push_back(simplex.vertices[0]);
    }
  }
  for (auto& nbrs : complex->adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }

  std::vector<char> seen(complex->vertex_ids_.size(), 0);
  std::deque<int> queue{complex->basepoint_};
  seen[complex->basepoint_] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : complex->adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) {
      throw DomainError(ErrorKind::DisconnectedComplex,
                        "vertex \"" + complex->vertex_ids_[v] +
                            "\" is not connected to the basepoint in the 1-skeleton");
    }
  }
  return complex;
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  if (p.dim() != q.dim() || p.dim() != r.dim()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "collinear: points of different dimensions");
  }
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational minor = (q.coords[i] - p.coords[i]) * (r.coords[j] - p.coords[j]) -
                             (q.coords[j] - p.coords[j]) * (r.coords[i] - p.coords[i]);
      if (minor != 0) return false;
    }
  }
  return true;
}

bool between(const Point& p, const Point& q, const Point& r) {
  if (p.dim() != q.dim() || p.dim() != r.dim()) {
    throw DomainError(ErrorKind::DimensionMismatch,
                      "between: points of different dimensions");
  }
  if (p == r) return q == p;
  std::size_t axis = p.dim();
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (r.coords[i] != p.coords[i]) {
      axis = i;
      break;
    }
  }
  const Rational t = (q.coords[axis] - p.coords[axis]) / (r.coords[axis] - p.coords[axis]);
  if (t < 0 || t > 1) return false;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (q.coords[i] - p.coords[i] != t * (r.coords[i] - p.coords[i])) return false;
  }
  return true;
}

}  // namespace thinpl
