#pragma once

#include <utility>

#include "thinpl/thin_group.hpp"

namespace thinpl {

/// Fully reduced based path: element of the thin path space. The first
/// point is the basepoint and both endpoints are pinned under reduction.
class ThinPath {
public:
  /// Wraps a path word that must already be reduced (checked).
  explicit ThinPath(PLWord reduced_path);

  const PLWord& word() const { return word_; }
  const Point& endpoint() const { return word_.back(); }
  const std::shared_ptr<const SimplicialComplex>& complex_ptr() const {
    return word_.complex_ptr();
  }

  bool operator==(const ThinPath& o) const { return word_ == o.word_; }
  bool operator!=(const ThinPath& o) const { return !(*this == o); }

private:
  PLWord word_;
};

/// Reduces interior indices only; endpoints are fixed. The unique reduced
/// representative of the path's thin class.
ThinPath path_core(const PLWord& w);
ThinPath path_core(const PLWord& w, ReductionTrace& trace);

/// Principal action by concatenation at the basepoint; preserves the
/// endpoint fiber.
ThinPath act(const ThinClass& g, const ThinPath& p);

const Point& endpoint(const ThinPath& p);

/// Local trivialization over the star of x (chart map): reduces
/// g . ref . [x, y] where ref is a fixed reduced path into x and y lies in
/// some simplex of star(x).
ThinPath local_triv(const Point& x, const ThinPath& ref, const ThinClass& g,
                    const Point& y);

/// Inverse chart: p with endpoint y in star(x) maps to the loop class of
/// p . [y, x] . reverse(ref) together with y. Composing with local_triv in
/// either order is the identity on reduced representatives.
std::pair<ThinClass, Point> local_triv_inv(const Point& x, const ThinPath& ref,
                                           const ThinPath& p);

/// Lifting step over a simplex: extends e by the position gamma_t inside
/// sigma (which must also contain e's endpoint) and reduces. The parameter
/// t of the lifted family is range-checked only.
ThinPath lift(const ThinPath& e, SimplexId sigma, const Point& gamma_t, double t);

}  // namespace thinpl
