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

// Non-emptiness and equivalence as verdicts that say how they were reached.
//
// Exact answers exist for counterdepth <= 1 (small model property) and for
// equivalence of counterdepth-0 trees. Everything else is answered by
// enumerating traces up to a length bound, and the verdict carries that
// bound so a bounded answer never reads as exact.

#ifndef ADTLAB_DECISION_HPP_
#define ADTLAB_DECISION_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

#include "adtlab/core.hpp"
#include "adtlab/semantics.hpp"

namespace adtlab {

enum class Answer { Yes, No, NoUpToBound };
enum class Method { GenSmp, Gen0Exact, Bounded, Reduction };

/// Non-emptiness: Yes carries a witness accepted by the tree; No is exact;
/// NoUpToBound carries the bound.
/// Equivalence: Yes means equivalent, exactly when `bound` is absent and up
/// to `bound` otherwise; No carries a trace accepted by exactly one tree.
struct Verdict {
  Answer answer = Answer::No;
  std::optional<Trace> witness;
  std::optional<std::size_t> bound;
  Method method = Method::Bounded;
  /// Counterdepth of the tree the decision ran on.
  std::size_t depth = 0;
};

enum class NonemptyMethod { Auto, Gen, Bounded };
enum class EquivMethod { Auto, Gen0, Reduction, Bounded };

/// Auto uses the small model property when counterdepth <= 1 and bounded
/// enumeration otherwise. Throws DepthError for Gen above depth 1 and
/// InvalidArgument when a bounded run has no maxlen.
Verdict nonempty(const Adt& t, const PropSet& props,
                 NonemptyMethod method = NonemptyMethod::Auto,
                 std::optional<std::size_t> maxlen = std::nullopt,
                 std::size_t budget = kDefaultEnumerationBudget);

/// OR(C(t1, t2), C(t2, t1)): empty iff the trees are equivalent.
Adt equivalence_reduction(const Adt& t1, const Adt& t2);

/// Auto uses Gen0 when both trees have counterdepth 0 and bounded
/// comparison otherwise. Reduction decides emptiness of the reduction tree
/// with nonempty(Auto), exact only when that tree has counterdepth <= 1.
Verdict equiv(const Adt& t1, const Adt& t2, const PropSet& props,
              EquivMethod method = EquivMethod::Auto,
              std::optional<std::size_t> maxlen = std::nullopt,
              std::size_t budget = kDefaultEnumerationBudget);

std::string_view to_string(Answer a);
std::string_view to_string(Method m);

}  // namespace adtlab

#endif  // ADTLAB_DECISION_HPP_
