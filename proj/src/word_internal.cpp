#include "word_internal.hpp"

namespace thinpl::detail {

MutableWord MutableWord::from(const PLWord& w) {
  MutableWord out;
  out.complex = w.complex_ptr();
  out.pts = w.points();
  out.carriers.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.carriers.push_back(w.carrier_set(i));
  return out;
}

bool MutableWord::aligned_at(std::size_t i) const {
  SimplexSet common = carriers[i - 1];
  common &= carriers[i];
  common &= carriers[i + 1];
  if (common.none()) return false;
  return collinear(pts[i - 1], pts[i], pts[i + 1]);
}

void MutableWord::erase(std::size_t i) {
  pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
  carriers.erase(carriers.begin() + static_cast<std::ptrdiff_t>(i));
}

void MutableWord::append(const Point& p) {
  carriers.push_back(complex->carriers(p));
  pts.push_back(p);
}

void MutableWord::append_tail(const PLWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    pts.push_back(w[i]);
    carriers.push_back(w.carrier_set(i));
  }
}

void MutableWord::append_reversed_tail(const PLWord& w) {
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    pts.push_back(w[i]);
    carriers.push_back(w.carrier_set(i));
  }
}

PLWord MutableWord::build(Kind kind) && {
  return PLWord::from_validated(std::move(complex), std::move(pts),
                                std::move(carriers), kind);
}

void thin_reduce(MutableWord& w, ReductionTrace* trace) {
  std::size_t i = 1;
  while (i + 1 < w.size()) {
    if (w.aligned_at(i)) {
      w.erase(i);
      if (trace) trace->push_back({Rule::ThinRemove, i});
      if (i > 1) --i;
    } else {
      ++i;
    }
  }
  if (w.size() == 2 && w.pts[0] == w.pts[1]) {
    w.erase(1);
    if (trace) trace->push_back({Rule::ThinRemove, 1});
  }
}

}  // namespace thinpl::detail
