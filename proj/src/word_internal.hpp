#pragma once

#include <memory>
#include <vector>

#include "thinpl/pl_word.hpp"
#include "thinpl/thin_group.hpp"

namespace thinpl::detail {

/// Working copy of a word during reduction: points and carrier sets move
/// in lockstep, so alignment tests stay one mask intersection plus exact
/// collinearity minors.
struct MutableWord {
  std::shared_ptr<const SimplicialComplex> complex;
  std::vector<Point> pts;
  std::vector<SimplexSet> carriers;

  static MutableWord from(const PLWord& w);

  std::size_t size() const { return pts.size(); }

  bool aligned_at(std::size_t i) const;

  void erase(std::size_t i);
  void append(const Point& p);          // carriers solved on demand
  void append_tail(const PLWord& w);    // w's points from index 1 on
  void append_reversed_tail(const PLWord& w);  // w reversed, skipping w.back()

  PLWord build(Kind kind) &&;
};

/// Lowest-index-first removal of aligned interior triples to a fixed point,
/// followed by the two-point constant-word collapse. The scan backtracks one
/// slot after each removal, which visits exactly the globally lowest
/// removable index at every step.
void thin_reduce(MutableWord& w, ReductionTrace* trace);

}  // namespace thinpl::detail
