#include "thinpl/thin_group.hpp"

#include <algorithm>
#include <set>

#include "thinpl/errors.hpp"
#include "word_internal.hpp"

namespace thinpl {

using detail::MutableWord;

const char* to_string(Rule rule) noexcept {
  switch (rule) {
    case Rule::ThinRemove: return "ThinRemove";
    case Rule::MilnorRemove: return "MilnorRemove";
    case Rule::WRemove: return "WRemove";
  }
  return "UnknownRule";
}

PLWord replay(const PLWord& w, const ReductionTrace& trace) {
  MutableWord work = MutableWord::from(w);
  for (const auto& step : trace) {
    if (step.index == 0 || step.index >= work.size()) {
      throw DomainError(ErrorKind::OutOfRange,
                        "trace step erases index " + std::to_string(step.index) +
                            " of a " + std::to_string(work.size()) + "-point word",
                        step.index);
    }
    work.erase(step.index);
  }
  return std::move(work).build(w.kind());
}

namespace {

void require_loop(const PLWord& w, const char* op) {
  if (w.kind() != Kind::Loop) {
    throw DomainError(ErrorKind::NotClosed, std::string(op) + " expects a loop word");
  }
}

bool is_reduced_word(const PLWord& w) {
  if (!removable_indices(w).empty()) return false;
  return !(w.size() == 2 && w[0] == w[1]);
}

}  // namespace

ThinClass::ThinClass(PLWord reduced_loop) : word_(std::move(reduced_loop)) {
  require_loop(word_, "ThinClass");
  if (!is_reduced_word(word_)) {
    throw std::invalid_argument("ThinClass: word is not reduced");
  }
}

std::vector<std::size_t> removable_indices(const PLWord& w) {
  std::vector<std::size_t> out;
  if (w.size() < 3) return out;
  const MutableWord work = MutableWord::from(w);
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (work.aligned_at(i)) out.push_back(i);
  }
  return out;
}

bool is_degenerate(const PLWord& w) { return !removable_indices(w).empty(); }

ThinClass core(const PLWord& w) {
  require_loop(w, "core");
  MutableWord work = MutableWord::from(w);
  detail::thin_reduce(work, nullptr);
  return ThinClass(std::move(work).build(Kind::Loop));
}

ThinClass core(const PLWord& w, ReductionTrace& trace) {
  require_loop(w, "core");
  trace.clear();
  MutableWord work = MutableWord::from(w);
  detail::thin_reduce(work, &trace);
  return ThinClass(std::move(work).build(Kind::Loop));
}

PLWord w_reduce(const PLWord& w, ReductionTrace* trace) {
  MutableWord work = MutableWord::from(w);
  std::size_t i = 1;
  while (i + 1 < work.size()) {
    SimplexSet common = work.carriers[i - 1];
    common &= work.carriers[i];
    common &= work.carriers[i + 1];
    if (common.any() && between(work.pts[i - 1], work.pts[i], work.pts[i + 1])) {
      work.erase(i);
      if (trace) trace->push_back({Rule::WRemove, i});
      if (i > 1) --i;
    } else {
      ++i;
    }
  }
  return std::move(work).build(w.kind());
}

PLWord milnor_reduce(const PLWord& w, ReductionTrace* trace) {
  MutableWord work = MutableWord::from(w);
  std::size_t i = 1;
  while (i < work.size()) {
    const bool duplicate = work.pts[i - 1] == work.pts[i];
    const bool backtrack = i + 1 < work.size() && work.pts[i - 1] == work.pts[i + 1];
    if (duplicate || backtrack) {
      work.erase(i);
      if (trace) trace->push_back({Rule::MilnorRemove, i});
      if (i > 1) --i;
    } else {
      ++i;
    }
  }
  return std::move(work).build(w.kind());
}

ThinClass identity(std::shared_ptr<const SimplicialComplex> complex) {
  const Point base = complex->basepoint_coords();
  return ThinClass(PLWord::make(std::move(complex), {base}, Kind::Loop));
}

namespace {

void require_same_complex(const PLWord& a, const PLWord& b) {
  if (!a.same_complex(b)) {
    throw DomainError(ErrorKind::ComplexMismatch,
                      "operands live on different complexes");
  }
}

}  // namespace

ThinClass mul(const ThinClass& a, const ThinClass& b) {
  require_same_complex(a.word(), b.word());
  MutableWord work = MutableWord::from(a.word());
  work.append_tail(b.word());
  detail::thin_reduce(work, nullptr);
  return ThinClass(std::move(work).build(Kind::Loop));
}

ThinClass inv(const ThinClass& a) {
  const PLWord& w = a.word();
  std::vector<Point> pts(w.points().rbegin(), w.points().rend());
  std::vector<SimplexSet> carriers;
  carriers.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) carriers.push_back(w.carrier_set(i));
  // Alignment is symmetric, so the reversal of a reduced word is reduced;
  // the ThinClass constructor re-asserts this.
  return ThinClass(PLWord::from_validated(w.complex_ptr(), std::move(pts),
                                          std::move(carriers), Kind::Loop));
}

ThinClass pow(const ThinClass& a, long n) {
  ThinClass acc = identity(a.complex_ptr());
  if (n == 0) return acc;
  const ThinClass base = n < 0 ? inv(a) : a;
  unsigned long count = n < 0 ? 0ul - static_cast<unsigned long>(n)
                              : static_cast<unsigned long>(n);
  for (unsigned long i = 0; i < count; ++i) acc = mul(acc, base);
  return acc;
}

bool eq(const ThinClass& a, const ThinClass& b) {
  require_same_complex(a.word(), b.word());
  return a == b;
}

bool eq(const PLWord& a, const PLWord& b) {
  require_same_complex(a, b);
  return core(a) == core(b);
}

bool eq(const ThinClass& a, const PLWord& b) {
  require_same_complex(a.word(), b);
  return a == core(b);
}

bool eq(const PLWord& a, const ThinClass& b) { return eq(b, a); }

FreeThinClass::FreeThinClass(std::shared_ptr<const SimplicialComplex> complex,
                             std::vector<Point> canonical_cycle)
    : complex_(std::move(complex)), cycle_(std::move(canonical_cycle)) {}

FreeThinClass cyclic_core(const PLWord& loop) {
  require_loop(loop, "cyclic_core");
  MutableWord work = MutableWord::from(loop);
  if (work.size() >= 2) work.erase(work.size() - 1);  // drop repeated basepoint

  // Cyclic fixed point: remove the lowest index whose wrap-around triple is
  // aligned. A 1-cycle's triple (c0,c0,c0) is degenerately aligned, so every
  // constant cycle ends as the empty cycle.
  bool removed = true;
  while (removed && !work.pts.empty()) {
    removed = false;
    const std::size_t m = work.size();
    for (std::size_t j = 0; j < m; ++j) {
      const Point& prev = work.pts[(j + m - 1) % m];
      const Point& next = work.pts[(j + 1) % m];
      SimplexSet common = work.carriers[(j + m - 1) % m];
      common &= work.carriers[j];
      common &= work.carriers[(j + 1) % m];
      if (common.any() && collinear(prev, work.pts[j], next)) {
        work.erase(j);
        removed = true;
        break;
      }
    }
  }

  // Lexicographically least rotation, ordering points coordinate-wise.
  const std::size_t m = work.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t k = 0; k < m; ++k) {
      const Point& candidate = work.pts[(r + k) % m];
      const Point& incumbent = work.pts[(best + k) % m];
      if (candidate < incumbent) {
        best = r;
        break;
      }
      if (incumbent < candidate) break;
    }
  }
  std::vector<Point> cycle;
  cycle.reserve(m);
  for (std::size_t k = 0; k < m; ++k) cycle.push_back(work.pts[(best + k) % m]);
  return FreeThinClass(loop.complex_ptr(), std::move(cycle));
}

std::vector<PLWord> reduce_all_orders(const PLWord& w, std::size_t max_len) {
  if (w.size() > max_len) {
    throw DomainError(ErrorKind::TooLong,
                      "word has " + std::to_string(w.size()) +
                          " points, exhaustive search is capped at " +
                          std::to_string(max_len));
  }
  if (max_len > 63) {
    throw DomainError(ErrorKind::TooLong, "exhaustive search is capped at 63 points");
  }
  const MutableWord base = MutableWord::from(w);
  const std::size_t n = base.size();

  // A state is the bitmask of surviving indices; every reduction order is a
  // path in this lattice, memoized on the mask.
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::set<std::uint64_t> visited{full};
  std::vector<std::uint64_t> stack{full};
  std::vector<std::vector<std::size_t>> terminal_index_lists;

  std::vector<std::size_t> live;
  while (!stack.empty()) {
    const std::uint64_t mask = stack.back();
    stack.pop_back();
    live.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) live.push_back(i);
    }
    bool any_removable = false;
    for (std::size_t k = 1; k + 1 < live.size(); ++k) {
      SimplexSet common = base.carriers[live[k - 1]];
      common &= base.carriers[live[k]];
      common &= base.carriers[live[k + 1]];
      if (common.none()) continue;
      if (!collinear(base.pts[live[k - 1]], base.pts[live[k]], base.pts[live[k + 1]])) {
        continue;
      }
      any_removable = true;
      const std::uint64_t child = mask & ~(std::uint64_t{1} << live[k]);
      if (visited.insert(child).second) stack.push_back(child);
    }
    if (!any_removable) {
      auto terminal = live;
      if (terminal.size() == 2 && base.pts[terminal[0]] == base.pts[terminal[1]]) {
        terminal.pop_back();
      }
      terminal_index_lists.push_back(std::move(terminal));
    }
  }

  std::vector<PLWord> out;
  for (const auto& indices : terminal_index_lists) {
    std::vector<Point> pts;
    std::vector<SimplexSet> carriers;
    pts.reserve(indices.size());
    for (std::size_t i : indices) {
      pts.push_back(base.pts[i]);
      carriers.push_back(base.carriers[i]);
    }
    PLWord candidate = PLWord::from_validated(w.complex_ptr(), std::move(pts),
                                              std::move(carriers), w.kind());
    bool seen = false;
    for (const auto& existing : out) {
      if (existing == candidate) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace thinpl
