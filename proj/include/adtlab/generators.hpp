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

// Generator sets of counterdepth <= 1 trees and what they buy: the small
// model property (non-emptiness from finitely many short traces) and the
// normal form / exact equivalence of counterdepth-0 trees.
//
// Internally generators are computed with the empty trace kept as a
// possible generator of ε-accepting subtrees. Without it SAND(EPS, p) would
// get no generator although it accepts every trace ending in p. The public
// gen() removes ε again, so gen(EPS) is empty.

#ifndef ADTLAB_GENERATORS_HPP_
#define ADTLAB_GENERATORS_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "adtlab/core.hpp"

namespace adtlab {

inline constexpr std::size_t kDefaultGeneratorCap = 100'000;

using TraceSet = std::set<Trace, LengthLexLess>;

/// Shuffle where equal heads may also merge into one letter:
/// shuffle(a, a) = {aa, a}. Sorted length-lexicographically.
std::vector<Trace> shuffle(const Trace& lhs, const Trace& rhs);

struct GenSet {
  std::vector<Trace> traces;  // non-empty traces, length-lex order
  bool sound = false;         // counterdepth(origin) <= 1
  Adt origin = Adt::eps();
};

/// The generator set of `t`. Computed for every tree; `sound` is false when
/// counterdepth(t) > 1, where no generator set need exist. Throws
/// BudgetExceeded when an intermediate set would exceed `cap` traces.
GenSet gen(const Adt& t, const PropSet& props,
           std::size_t cap = kDefaultGeneratorCap);

struct SmpResult {
  bool nonempty = false;
  std::optional<Trace> witness;  // |witness| <= size(t)
};

/// Non-emptiness of a counterdepth <= 1 tree. Witness: ε when accepted,
/// otherwise the length-lex least generator. Throws DepthError above 1.
SmpResult nonempty_smp(const Adt& t, const PropSet& props,
                       std::size_t cap = kDefaultGeneratorCap);

/// OR over one SAND of exact-valuation leaves per generator, then EPS last
/// if ε is accepted. An empty language gives OR(SAND([false])). Throws
/// DepthError unless counterdepth(t) = 0.
Adt normalize_adt0(const Adt& t, const PropSet& props,
                   std::size_t cap = kDefaultGeneratorCap);

struct Adt0Equivalence {
  bool equivalent = false;
  std::optional<Trace> counterexample;  // accepted by exactly one tree
};

/// Exact equivalence of two counterdepth-0 trees: the same answer on ε and
/// each tree accepts the other's generators. Throws DepthError otherwise.
Adt0Equivalence equiv_adt0(const Adt& t1, const Adt& t2, const PropSet& props,
                           std::size_t cap = kDefaultGeneratorCap);

}  // namespace adtlab

#endif  // ADTLAB_GENERATORS_HPP_
