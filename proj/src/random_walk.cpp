#include "thinpl/random_walk.hpp"

#include "thinpl/errors.hpp"

namespace thinpl {

Point random_point_in_simplex(const SimplicialComplex& complex, SimplexId s,
                              SplitMix64& rng, unsigned denom_bound) {
  if (denom_bound == 0) denom_bound = 1;
  const auto& verts = complex.simplex(s).vertices;
  const std::uint64_t denom = 1 + rng.below(denom_bound);

  // Sequential composition of denom into |verts| numerators.
  std::vector<std::uint64_t> numer(verts.size(), 0);
  std::uint64_t remaining = denom;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    numer[i] = rng.below(remaining + 1);
    remaining -= numer[i];
  }
  numer.back() = remaining;

  std::vector<Rational> coords(static_cast<std::size_t>(complex.ambient_dim()),
                               Rational(0));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (numer[i] == 0) continue;
    Rational lambda(static_cast<unsigned long>(numer[i]),
                    static_cast<unsigned long>(denom));
    lambda.canonicalize();
    const Point& v = complex.vertex_point(verts[i]);
    for (std::size_t c = 0; c < coords.size(); ++c) coords[c] += lambda * v.coords[c];
  }
  return Point(std::move(coords));
}

PLWord random_loop(std::shared_ptr<const SimplicialComplex> complex, std::size_t steps,
                   std::uint64_t seed, unsigned denom_bound) {
  SplitMix64 rng(seed);
  return random_loop(std::move(complex), steps, rng, denom_bound);
}

PLWord random_loop(std::shared_ptr<const SimplicialComplex> complex, std::size_t steps,
                   SplitMix64& rng, unsigned denom_bound) {
  std::vector<Point> points{complex->basepoint_coords()};
  if (steps == 0) {
    return PLWord::make(std::move(complex), std::move(points), Kind::Loop);
  }
  for (std::size_t s = 0; s < steps; ++s) {
    const auto star = complex->star(points.back());
    const SimplexId choice = star[rng.below(star.size())];
    points.push_back(random_point_in_simplex(*complex, choice, rng, denom_bound));
  }
  // Walk home: hop to a vertex of some carrier, then follow a breadth-first
  // edge chain to the basepoint.
  const auto carriers = complex->carriers(points.back()).ids();
  const auto& landing = complex->simplex(carriers[rng.below(carriers.size())]);
  const int v = landing.vertices[rng.below(landing.vertices.size())];
  for (int u : complex->vertex_path(v, complex->basepoint())) {
    points.push_back(complex->vertex_point(u));
  }
  return PLWord::make(std::move(complex), std::move(points), Kind::Loop);
}

PLWord insert_flare(const PLWord& w, SplitMix64& rng, unsigned denom_bound) {
  const std::size_t at = rng.below(w.size());
  const auto& complex = w.complex();
  const auto carriers = complex.carriers(w[at]).ids();
  const SimplexId sigma = carriers[rng.below(carriers.size())];
  const Point q = random_point_in_simplex(complex, sigma, rng, denom_bound);

  std::vector<Point> points = w.points();
  points.insert(points.begin() + static_cast<std::ptrdiff_t>(at + 1), {q, w[at]});
  return PLWord::make(w.complex_ptr(), std::move(points), w.kind());
}

PLWord insert_between_point(const PLWord& w, SplitMix64& rng, unsigned denom_bound) {
  if (w.size() < 2) return w;
  if (denom_bound == 0) denom_bound = 1;
  const std::size_t at = rng.below(w.size() - 1);
  const std::uint64_t denom = 1 + rng.below(denom_bound);
  Rational t(static_cast<unsigned long>(rng.below(denom + 1)),
             static_cast<unsigned long>(denom));
  t.canonicalize();

  std::vector<Rational> coords = w[at].coords;
  for (std::size_t c = 0; c < coords.size(); ++c) {
    coords[c] += t * (w[at + 1].coords[c] - coords[c]);
  }
  std::vector<Point> points = w.points();
  points.insert(points.begin() + static_cast<std::ptrdiff_t>(at + 1),
                Point(std::move(coords)));
  return PLWord::make(w.complex_ptr(), std::move(points), w.kind());
}

}  // namespace thinpl
