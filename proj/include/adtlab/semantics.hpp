// Copyright 2026 The adtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Trace semantics of attack-defense trees.
//
// Membership is decided by memoized recursion over (node, substring). Each
// substring is the half-open range [i, j) of the current trace:
//   EPS        accepts iff i == j
//   leaf γ     accepts iff i < j and the letter at j-1 satisfies γ
//   OR         some child accepts
//   SAND       the range splits into consecutive (possibly empty) pieces,
//              one per child, each accepted by its child
//   AND        some child accepts [i, j) and every other child accepts some
//              prefix [i, l) with i <= l <= j
//   C(t1, t2)  t1 accepts and t2 rejects

#ifndef ADTLAB_SEMANTICS_HPP_
#define ADTLAB_SEMANTICS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "adtlab/core.hpp"

namespace adtlab {

inline constexpr std::size_t kDefaultEnumerationBudget = 1'000'000;

/// Membership evaluator for one tree over traces of bounded length.
///
/// Memo entries for a range [i, j) stay valid while the letters at
/// positions < j are unchanged, so traces sharing a prefix reuse work.
class TraceEvaluator {
 public:
  TraceEvaluator(const Adt& tree, std::size_t max_length);

  /// Replaces the letter at `pos` (pos < max_length).
  void set_letter(std::size_t pos, Valuation v);
  /// Loads a whole trace (|t| <= max_length) and returns whether the tree
  /// accepts it.
  bool accepts(const Trace& t);
  /// Whether the tree accepts the first `n` letters currently loaded.
  bool accepts_prefix(std::size_t n);

  std::size_t max_length() const noexcept { return cap_; }

 private:
  struct Slot {
    Adt::Kind kind;
    const Formula* formula = nullptr;
    std::vector<int> kids;
  };

  bool eval(int slot, std::size_t i, std::size_t j);
  std::size_t index(int slot, std::size_t i, std::size_t j) const {
    return (j * slots_.size() + static_cast<std::size_t>(slot)) * (cap_ + 1) + i;
  }
  void flush();

  Adt tree_;  // keeps formula pointers alive
  std::size_t cap_;
  std::vector<Slot> slots_;
  int root_ = 0;
  std::vector<Valuation> letters_;
  std::vector<std::int8_t> memo_;
  std::size_t dirty_from_ = 0;  // memo rows j > dirty_from_ are stale
};

/// τ ∈ ⟦t⟧. No alphabet validation.
bool member(const Adt& t, const Trace& trace);
/// As above, but throws AlphabetMismatch if `t` or `trace` leave 2^props.
bool member(const Adt& t, const Trace& trace, const PropSet& props);

/// Σ_{n=0}^{maxlen} |Σ|^n, or BudgetExceeded when that exceeds `budget`.
std::uint64_t candidate_count(const PropSet& props, std::size_t maxlen,
                              std::size_t budget);

/// Visits every trace of length <= maxlen in length-lexicographic order.
/// `visit(trace, first_changed)` gets the first position whose letter
/// differs from the previously visited trace of the same length (0 on a
/// new length); it returns false to stop early. Refuses with
/// BudgetExceeded instead of visiting a truncated space.
void for_each_trace(
    const PropSet& props, std::size_t maxlen, std::size_t budget,
    const std::function<bool(const Trace&, std::size_t)>& visit);

/// { τ : |τ| <= maxlen, τ ∈ ⟦t⟧ } in length-lexicographic order.
std::vector<Trace> enumerate(const Adt& t, const PropSet& props,
                             std::size_t maxlen,
                             std::size_t budget = kDefaultEnumerationBudget);

/// g ⊑ τ: τ ∈ Σ* g1 … Σ* gn. Throws InvalidArgument if g is empty.
bool is_lift(const Trace& g, const Trace& trace);

}  // namespace adtlab

#endif  // ADTLAB_SEMANTICS_HPP_
