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

// Star-free extended regular expressions: ∅, ε, single letters, union,
// concatenation, intersection and complement (relative to Σ*). Σ* itself is
// written !0.

#ifndef ADTLAB_SERE_HPP_
#define ADTLAB_SERE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "adtlab/core.hpp"

namespace adtlab {

class Sere {
 public:
  enum class Kind { Empty, Eps, Letter, Union, Concat, Inter, Compl };

  static Sere empty();
  static Sere eps();
  static Sere letter(Valuation v);
  static Sere union_of(Sere lhs, Sere rhs);
  static Sere concat(Sere lhs, Sere rhs);
  static Sere inter(Sere lhs, Sere rhs);
  static Sere complement(Sere e);
  /// !0, every trace.
  static Sere all();

  Kind kind() const noexcept;
  Valuation valuation() const;
  /// Operand of Compl, left operand of the binary operators.
  const Sere& lhs() const;
  const Sere& rhs() const;

  const void* id() const noexcept { return node_.get(); }
  friend bool operator==(const Sere& a, const Sere& b);

 private:
  struct Node;
  explicit Sere(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Number of nodes of the expression tree.
std::size_t node_count(const Sere& e);
/// Largest valuation bit used by a letter plus one.
std::size_t prop_bound(const Sere& e);

/// Memoized substring membership for one expression, reusable across
/// traces.
class SereMatcher {
 public:
  explicit SereMatcher(const Sere& e);
  bool matches(const Trace& t);

 private:
  struct Slot {
    Sere::Kind kind;
    Valuation val;
    int a = -1;
    int b = -1;
  };
  bool eval(int slot, std::size_t i, std::size_t j);

  Sere expr_;
  std::vector<Slot> slots_;
  int root_ = 0;
  const Trace* word_ = nullptr;
  std::size_t len_ = 0;
  std::vector<std::int8_t> memo_;
};

bool sere_member(const Sere& e, const Trace& t);

/// Direct translation: a leaf becomes !0 followed by the union of its
/// satisfying letters; C(t1, t2) becomes e1 & !e2; AND uses the n-ary
/// "each" expansion, so the result grows exponentially in AND arity.
Sere adt_to_sere(const Adt& t, const PropSet& props);

/// Linear-size translation: 0 → [false], letter → STRICT of its
/// characteristic formula, & → CAP, ! → complement tree.
Adt sere_to_adt(const Sere& e, const PropSet& props);

}  // namespace adtlab

#endif  // ADTLAB_SERE_HPP_
