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

// Domain types shared by every module: propositions, valuations (letters),
// traces (words), propositional formulas, and attack-defense trees.
//
// Formula and Adt are immutable handles over shared nodes, so copying is
// cheap and identical subtrees may be shared. Node identity (id()) is what
// the memoizing algorithms key on.

#ifndef ADTLAB_CORE_HPP_
#define ADTLAB_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace adtlab {

/// Largest Prop for which Σ = 2^Prop is materialized.
inline constexpr std::size_t kMaxEnumerableProps = 20;
/// Hard limit imposed by the bit-vector encoding of valuations.
inline constexpr std::size_t kMaxProps = 63;

/// A letter of Σ = 2^Prop, encoded as a bit-vector over the ordered Prop.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint64_t bits) : bits_(bits) {}

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(std::size_t prop) const noexcept {
    return (bits_ >> prop) & 1U;
  }
  constexpr Valuation with(std::size_t prop) const noexcept {
    return Valuation(bits_ | (std::uint64_t{1} << prop));
  }

  friend constexpr auto operator<=>(Valuation, Valuation) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Ordered set of distinct proposition identifiers.
class PropSet {
 public:
  PropSet() = default;
  /// Throws InvalidArgument on duplicates, malformed identifiers or more
  /// than kMaxProps names.
  explicit PropSet(std::vector<std::string> names);
  PropSet(std::initializer_list<std::string> names)
      : PropSet(std::vector<std::string>(names)) {}

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// |Σ| = 2^|Prop|.
  std::uint64_t alphabet_size() const noexcept {
    return std::uint64_t{1} << names_.size();
  }
  /// Every valuation, in increasing bit-vector order. Throws
  /// BudgetExceeded above kMaxEnumerableProps.
  std::vector<Valuation> alphabet() const;
  bool contains(Valuation v) const noexcept {
    return names_.size() >= 64 || (v.bits() >> names_.size()) == 0;
  }

  friend bool operator==(const PropSet& a, const PropSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// True iff `name` matches [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name);

/// A finite word over Σ.
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::vector<Valuation> letters) : letters_(std::move(letters)) {}
  Trace(std::initializer_list<Valuation> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Valuation operator[](std::size_t i) const { return letters_[i]; }
  Valuation back() const { return letters_.back(); }
  const std::vector<Valuation>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Valuation v) { letters_.push_back(v); }
  Trace prefix(std::size_t n) const;
  Trace suffix(std::size_t from) const;
  Trace slice(std::size_t from, std::size_t to) const;

  friend Trace operator+(const Trace& a, const Trace& b);
  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::vector<Valuation> letters_;
};

/// Length-lexicographic order: shorter first, then letter codes left to
/// right. Every ordered trace output of the library uses it.
struct LengthLexLess {
  bool operator()(const Trace& a, const Trace& b) const;
};

/// Throws AlphabetMismatch unless every letter of `t` lies in 2^props.
void check_alphabet(const Trace& t, const PropSet& props);

// ---------------------------------------------------------------------------
// Propositional formulas
// ---------------------------------------------------------------------------

class Formula {
 public:
  enum class Kind { True, False, Var, Not, And, Or };

  static Formula top();
  static Formula bottom();
  static Formula var(std::size_t prop);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  /// Proposition index; only meaningful for Kind::Var.
  std::size_t prop() const noexcept;
  /// Operand of Not, left operand of And/Or.
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool eval(Valuation v) const;
  /// Number of AST nodes; this is the leaf size of an ADT.
  std::size_t node_count() const;
  /// Largest proposition index used plus one (0 for closed formulas).
  std::size_t prop_bound() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// The formula satisfied by `v` and nothing else: the conjunction, in
/// proposition order, of p for p ∈ v and ¬p for p ∉ v (⊤ when Prop = ∅).
Formula characteristic_formula(Valuation v, const PropSet& props);

/// { v ∈ Σ : v ⊨ f } in increasing order.
std::vector<Valuation> satisfying_valuations(const Formula& f,
                                             const PropSet& props);

// ---------------------------------------------------------------------------
// Attack-defense trees
// ---------------------------------------------------------------------------

class Adt {
 public:
  enum class Kind { Eps, Leaf, Or, Sand, And, Counter };

  static Adt eps();
  static Adt leaf(Formula f);
  /// n-ary constructors; throw InvalidArgument on an empty child list.
  static Adt or_node(std::vector<Adt> children);
  static Adt sand_node(std::vector<Adt> children);
  static Adt and_node(std::vector<Adt> children);
  static Adt counter(Adt goal, Adt countermeasure);

  Kind kind() const noexcept;
  /// Leaf formula; only meaningful for Kind::Leaf.
  const Formula& formula() const;
  std::span<const Adt> children() const noexcept;
  const Adt& child(std::size_t i) const;

  /// Stable identity of the underlying node.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Adt& a, const Adt& b);

 private:
  struct Node;
  explicit Adt(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Adt make_nary(Kind kind, std::vector<Adt> children);
  std::shared_ptr<const Node> node_;
};

/// Sum of leaf sizes: EPS counts 1, a formula leaf its node count.
std::size_t size(const Adt& t);
/// Maximum nesting of countermeasures along right branches of C.
std::size_t counterdepth(const Adt& t);
/// Number of EPS and formula leaves.
std::size_t leaves_count(const Adt& t);
/// Number of C nodes.
std::size_t counter_count(const Adt& t);
/// Largest proposition index appearing in a leaf, plus one.
std::size_t prop_bound(const Adt& t);
/// Throws AlphabetMismatch if a leaf mentions a proposition outside props.
void check_alphabet(const Adt& t, const PropSet& props);

/// Rewrites every OR/SAND/AND node into left-nested binary nodes. Unary
/// nodes are replaced by their child.
Adt normalize_binary(const Adt& t);

// Derived trees -------------------------------------------------------------

enum class LengthKind { AtLeast, AtMost, Exactly };

/// AtLeast: SAND(⊤,…,⊤) with ℓ copies; AtMost: C(⊤, GE(ℓ));
/// Exactly: C(GE(ℓ), GE(ℓ+1)). Throws InvalidArgument for ℓ = 0.
///
/// AtMost keeps the conventional shape, which is what gives it depth 1,
/// but ⊤ needs a letter and GE(ℓ) removes length ℓ itself: the language
/// is the traces of length 1 to ℓ-1, and empty for ℓ = 1.
Adt build_length(LengthKind kind, std::size_t length);

/// OR(EPS, ⊤): every trace.
Adt etrue();
/// C(ETRUE, t): the complement of ⟦t⟧.
Adt complement_of(const Adt& t);
/// CO(OR(CO(t1), CO(t2))): the intersection.
Adt intersection_of(const Adt& t1, const Adt& t2);
/// SAND(ETRUE, t, ETRUE).
Adt within_any(const Adt& t);
/// SAND(ETRUE, t).
Adt preceded_by_any(const Adt& t);
/// SAND(t, ETRUE).
Adt followed_by_any(const Adt& t);
/// C(γ, GE(2)): one-letter traces whose letter satisfies γ.
Adt strict(const Formula& f);
/// strict of the characteristic formula: exactly the trace `v`.
Adt strict_valuation(Valuation v, const PropSet& props);
/// SAND of strict_valuation per letter (EPS for the empty trace).
Adt trace_tree(const Trace& t, const PropSet& props);

}  // namespace adtlab

#endif  // ADTLAB_CORE_HPP_
