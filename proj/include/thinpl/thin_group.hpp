#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "thinpl/pl_word.hpp"

namespace thinpl {

enum class Rule { ThinRemove, MilnorRemove, WRemove };

const char* to_string(Rule rule) noexcept;

struct ReductionStep {
  Rule rule;
  std::size_t index;
  bool operator==(const ReductionStep& o) const {
    return rule == o.rule && index == o.index;
  }
};

/// Audit log of a reduction: replaying the erasures on the input word
/// reproduces the output exactly.
using ReductionTrace = std::vector<ReductionStep>;

/// Applies a trace to a word (pure index erasures), for audit and tests.
PLWord replay(const PLWord& w, const ReductionTrace& trace);

/// Fully reduced based loop: no interior triple is aligned within a common
/// simplex, and the identity is the one-point word at the basepoint.
class ThinClass {
public:
  /// Wraps a word that must already be reduced (checked; throws otherwise).
  explicit ThinClass(PLWord reduced_loop);

  const PLWord& word() const { return word_; }
  const std::shared_ptr<const SimplicialComplex>& complex_ptr() const {
    return word_.complex_ptr();
  }
  bool is_identity() const { return word_.size() == 1; }

  /// Exact reduced-word equality.
  bool operator==(const ThinClass& o) const { return word_ == o.word_; }
  bool operator!=(const ThinClass& o) const { return !(*this == o); }

private:
  PLWord word_;
};

/// Interior indices i (1 <= i <= len-2) whose triple is aligned within a
/// common simplex. Endpoints are never removable.
std::vector<std::size_t> removable_indices(const PLWord& w);

/// Membership in the degenerate set: some interior triple is aligned.
bool is_degenerate(const PLWord& w);

/// Thin core: removes the lowest removable index until none remains, then
/// collapses a leftover two-point constant word to the basepoint word.
/// The result is the canonical representative of the thin class.
ThinClass core(const PLWord& w);
ThinClass core(const PLWord& w, ReductionTrace& trace);

/// Removes interior points lying between their neighbors inside a common
/// simplex (redundant vertices). Strictly finer than the thin relation:
/// the output may still be thin-reducible.
PLWord w_reduce(const PLWord& w, ReductionTrace* trace = nullptr);

/// Milnor reduction: drops x_i when x_{i-1} = x_i (any i >= 1) or when
/// x_{i-1} = x_{i+1} (interior i), to a fixed point. Finer than thin:
/// core(milnor_reduce(w)) = core(w).
PLWord milnor_reduce(const PLWord& w, ReductionTrace* trace = nullptr);

ThinClass identity(std::shared_ptr<const SimplicialComplex> complex);

/// Core of the concatenation (shared basepoint written once).
ThinClass mul(const ThinClass& a, const ThinClass& b);

/// Reversal; the reversal of a reduced word is reduced.
ThinClass inv(const ThinClass& a);

ThinClass pow(const ThinClass& a, long n);

bool eq(const ThinClass& a, const ThinClass& b);
bool eq(const PLWord& a, const PLWord& b);
bool eq(const ThinClass& a, const PLWord& b);
bool eq(const PLWord& a, const ThinClass& b);

/// Loop without a distinguished basepoint, reduced cyclically and stored
/// as the lexicographically least rotation. The trivial class is the empty
/// cycle (every constant cycle collapses to it).
class FreeThinClass {
public:
  FreeThinClass(std::shared_ptr<const SimplicialComplex> complex,
                std::vector<Point> canonical_cycle);

  const std::vector<Point>& cycle() const { return cycle_; }
  bool is_trivial() const { return cycle_.empty(); }
  bool operator==(const FreeThinClass& o) const { return cycle_ == o.cycle_; }
  bool operator!=(const FreeThinClass& o) const { return !(*this == o); }

private:
  std::shared_ptr<const SimplicialComplex> complex_;
  std::vector<Point> cycle_;
};

/// Drops the final repeated basepoint, removes cyclically aligned triples
/// (wrap-around included) to a fixed point, then canonicalizes by rotation.
FreeThinClass cyclic_core(const PLWord& loop);

/// Exhaustive reduction oracle: explores every sequence of removable-index
/// choices and returns the distinct terminal words. A singleton certifies
/// confluence on this input. Throws TooLong above max_len.
std::vector<PLWord> reduce_all_orders(const PLWord& w, std::size_t max_len);

}  // namespace thinpl
