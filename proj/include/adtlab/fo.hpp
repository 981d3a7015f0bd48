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

// First-order logic over finite words: formulas, model checking, the
// translation of trees into FO, the Π2 form of counterdepth-0 trees, the
// Σ1-to-tree translation and quantifier-alternation classification.
//
// A word of length n is the structure with positions 1..n, the order <
// and one unary predicate per letter. The empty word has no positions.

#ifndef ADTLAB_FO_HPP_
#define ADTLAB_FO_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adtlab/core.hpp"
#include "adtlab/semantics.hpp"

namespace adtlab {

class FoFormula {
 public:
  enum class Kind { True, False, Less, Letter, Not, And, Or, Exists, Forall };

  static FoFormula truth();
  static FoFormula falsity();
  /// x < y.
  static FoFormula less(std::string x, std::string y);
  /// The letter at position x is exactly v.
  static FoFormula letter(Valuation v, std::string x);
  static FoFormula negation(FoFormula f);
  static FoFormula conjunction(FoFormula lhs, FoFormula rhs);
  static FoFormula disjunction(FoFormula lhs, FoFormula rhs);
  static FoFormula exists(std::string x, FoFormula body);
  static FoFormula forall(std::string x, FoFormula body);

  Kind kind() const noexcept;
  /// Letter/quantifier variable, left variable of Less.
  const std::string& var() const;
  /// Right variable of Less.
  const std::string& var2() const;
  Valuation valuation() const;
  /// Operand of Not, left of And/Or, body of a quantifier.
  const FoFormula& lhs() const;
  const FoFormula& rhs() const;

  /// Number of nodes of the formula written out as a tree (shared
  /// subformulas counted once per occurrence).
  std::size_t tree_size() const;
  /// Number of distinct shared nodes.
  std::size_t dag_size() const;

  const void* id() const noexcept { return node_.get(); }
  friend bool operator==(const FoFormula& a, const FoFormula& b);

 private:
  struct Node;
  explicit FoFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_variables(const FoFormula& f);
/// Bound variables anywhere in f.
std::set<std::string> bound_variables(const FoFormula& f);
/// Largest valuation bit used by a Letter atom plus one.
std::size_t prop_bound(const FoFormula& f);

/// Compiled model checker for a closed formula; reuse it across traces.
class FoModelChecker {
 public:
  /// Throws InvalidArgument if `f` has free variables, unless
  /// `allow_free` is set; free variables must then be assigned in holds().
  explicit FoModelChecker(const FoFormula& f, bool allow_free = false);
  ~FoModelChecker();
  FoModelChecker(FoModelChecker&&) noexcept;
  FoModelChecker& operator=(FoModelChecker&&) noexcept;

  bool holds(const Trace& t);
  /// Evaluates with the listed variables assigned (positions are 1-based).
  /// Throws InvalidArgument if a free variable stays unassigned.
  bool holds(const Trace& t,
             const std::vector<std::pair<std::string, std::size_t>>& env);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// τ ⊨ φ for closed φ. Throws InvalidArgument on free variables.
bool eval_fo(const FoFormula& f, const Trace& t);

enum class RelDir { LE, GT };

/// Restricts every quantifier of `f` to positions <= x (LE) or > x (GT).
/// With `zero` the guard is replaced by false (LE) or true (GT), which
/// evaluates `f` on the empty prefix or the whole word. Throws
/// InvalidArgument when x is bound in f.
FoFormula relativize(const FoFormula& f, const std::string& x, RelDir dir,
                     bool zero);

/// Closed formula equivalent to the tree; n-ary nodes are folded to binary
/// first and every introduced variable is fresh (x1, x2, ...).
FoFormula adt_to_fo(const Adt& t, const PropSet& props);

/// A Π2 formula for a counterdepth-0 tree built from its normal form.
/// Throws DepthError unless counterdepth(t) = 0.
FoFormula adt0_to_pi2(const Adt& t, const PropSet& props);

/// Ordered set partitions (blocks of simultaneous positions, left to right)
/// of `vars` that satisfy every order literal in `literals`. Each literal
/// is x < y or ~(x < y). Throws BudgetExceeded for more than 6 variables.
std::vector<std::vector<std::vector<std::string>>> order_linearizations(
    const std::vector<std::string>& vars,
    const std::vector<FoFormula>& literals);

/// Tree of counterdepth 0 for ∃x1…∃xn ψ, ψ quantifier-free. Throws
/// InvalidArgument when the input is not of that shape and BudgetExceeded
/// for more than 6 variables.
Adt sigma1_to_adt(const FoFormula& f, const PropSet& props);

enum class AltKind { Sigma, Pi, BothBelow };

struct AltClass {
  std::size_t level = 0;
  AltKind kind = AltKind::BothBelow;
  friend bool operator==(const AltClass&, const AltClass&) = default;
};

/// Quantifier-block alternation read off the negation normal form along
/// every path. (ℓ, Sigma) / (ℓ, Pi): at most ℓ blocks, the longest paths
/// starting with ∃ / ∀. (0, BothBelow): quantifier-free. (ℓ, BothBelow)
/// with ℓ >= 1: in both Σℓ and Πℓ because both kinds lead paths of ℓ-1
/// blocks.
AltClass alternation(const FoFormula& f);
/// Membership of a classified formula in Σm / Πm.
bool in_sigma(const AltClass& c, std::size_t m);
bool in_pi(const AltClass& c, std::size_t m);

/// Length-lex first trace of length <= maxlen satisfying closed `f`.
std::optional<Trace> sat_bounded(const FoFormula& f, const PropSet& props,
                                 std::size_t maxlen,
                                 std::size_t budget = kDefaultEnumerationBudget);

}  // namespace adtlab

#endif  // ADTLAB_FO_HPP_
