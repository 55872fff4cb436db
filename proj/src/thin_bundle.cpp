#include "thinpl/thin_bundle.hpp"

#include "thinpl/errors.hpp"
#include "word_internal.hpp"

namespace thinpl {

using detail::MutableWord;

namespace {

void require_path(const PLWord& w, const char* op) {
  if (w.kind() != Kind::Path) {
    throw DomainError(ErrorKind::OutOfRange, std::string(op) + " expects a path word");
  }
}

bool path_reduced(const PLWord& w) {
  if (!removable_indices(w).empty()) return false;
  return !(w.size() == 2 && w[0] == w[1]);
}

}  // namespace

ThinPath::ThinPath(PLWord reduced_path) : word_(std::move(reduced_path)) {
  require_path(word_, "ThinPath");
  if (!path_reduced(word_)) {
    throw std::invalid_argument("ThinPath: word is not reduced");
  }
}

ThinPath path_core(const PLWord& w) {
  require_path(w, "path_core");
  MutableWord work = MutableWord::from(w);
  detail::thin_reduce(work, nullptr);
  return ThinPath(std::move(work).build(Kind::Path));
}

ThinPath path_core(const PLWord& w, ReductionTrace& trace) {
  require_path(w, "path_core");
  trace.clear();
  MutableWord work = MutableWord::from(w);
  detail::thin_reduce(work, &trace);
  return ThinPath(std::move(work).build(Kind::Path));
}

ThinPath act(const ThinClass& g, const ThinPath& p) {
  if (!g.word().same_complex(p.word())) {
    throw DomainError(ErrorKind::ComplexMismatch,
                      "group element and path live on different complexes");
  }
  MutableWord work = MutableWord::from(g.word());
  work.append_tail(p.word());
  detail::thin_reduce(work, nullptr);
  return ThinPath(std::move(work).build(Kind::Path));
}

const Point& endpoint(const ThinPath& p) { return p.endpoint(); }

namespace {

void require_ref_endpoint(const ThinPath& ref, const Point& x) {
  if (ref.endpoint() != x) {
    throw DomainError(ErrorKind::RefEndpointMismatch,
                      "reference path ends at " + ref.endpoint().str() + ", not at " +
                          x.str());
  }
}

void require_in_star(const SimplicialComplex& complex, const Point& x, const Point& y) {
  if ((complex.carriers(x) & complex.carriers(y)).none()) {
    throw DomainError(ErrorKind::PointNotInStar,
                      y.str() + " is not in the star neighborhood of " + x.str());
  }
}

}  // namespace

ThinPath local_triv(const Point& x, const ThinPath& ref, const ThinClass& g,
                    const Point& y) {
  if (!g.word().same_complex(ref.word())) {
    throw DomainError(ErrorKind::ComplexMismatch,
                      "group element and reference path live on different complexes");
  }
  require_ref_endpoint(ref, x);
  const SimplicialComplex& complex = ref.word().complex();
  require_in_star(complex, x, y);

  MutableWord work = MutableWord::from(g.word());
  work.append_tail(ref.word());
  work.append(y);
  detail::thin_reduce(work, nullptr);
  return ThinPath(std::move(work).build(Kind::Path));
}

std::pair<ThinClass, Point> local_triv_inv(const Point& x, const ThinPath& ref,
                                           const ThinPath& p) {
  if (!ref.word().same_complex(p.word())) {
    throw DomainError(ErrorKind::ComplexMismatch,
                      "reference path and path live on different complexes");
  }
  require_ref_endpoint(ref, x);
  const SimplicialComplex& complex = ref.word().complex();
  const Point y = p.endpoint();
  require_in_star(complex, x, y);

  MutableWord work = MutableWord::from(p.word());
  work.append(x);
  work.append_reversed_tail(ref.word());
  detail::thin_reduce(work, nullptr);
  return {ThinClass(std::move(work).build(Kind::Loop)), y};
}

ThinPath lift(const ThinPath& e, SimplexId sigma, const Point& gamma_t, double t) {
  const SimplicialComplex& complex = e.word().complex();
  if (sigma >= complex.simplices().size()) {
    throw DomainError(ErrorKind::OutOfRange,
                      "simplex id " + std::to_string(sigma) + " out of range");
  }
  if (t < 0.0 || t > 1.0) {
    throw DomainError(ErrorKind::OutOfRange, "lift parameter t must lie in [0, 1]");
  }
  if (!complex.in_simplex(sigma, e.endpoint())) {
    throw DomainError(ErrorKind::PointNotInSimplex,
                      "path endpoint " + e.endpoint().str() + " is not in " +
                          complex.simplex_name(sigma));
  }
  if (!complex.in_simplex(sigma, gamma_t)) {
    throw DomainError(ErrorKind::PointNotInSimplex,
                      gamma_t.str() + " is not in " + complex.simplex_name(sigma));
  }
  MutableWord work = MutableWord::from(e.word());
  work.append(gamma_t);
  detail::thin_reduce(work, nullptr);
  return ThinPath(std::move(work).build(Kind::Path));
}

}  // namespace thinpl
