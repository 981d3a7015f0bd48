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

// Witness languages separating the countermeasure-depth levels, over the
// two-letter alphabet a = {p}, b = ∅.
//
// With measure(w) = #a(w) - #b(w):
//   W_k   measure 0, every prefix in [0, k], some prefix reaching k
//   W_k+  measure k, every prefix in [0, k]
//   W_k-  measure -k, every prefix in [-k, 0]
// build_witness_adt(k) gives trees of counterdepth k+1 for the three.

#ifndef ADTLAB_WITNESS_HPP_
#define ADTLAB_WITNESS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "adtlab/core.hpp"

namespace adtlab {

/// {p}.
const PropSet& ab_props();
inline constexpr Valuation kLetterA{1};
inline constexpr Valuation kLetterB{0};

/// "aab" → a·a·b. Throws InvalidArgument on other characters.
Trace ab_word(std::string_view text);
/// Inverse of ab_word. Throws AlphabetMismatch on letters other than a, b.
std::string ab_string(const Trace& w);

/// #a - #b.
long measure(const Trace& w);

enum class WitnessKind { W, Plus, Minus };

/// Direct prefix check. Throws InvalidArgument for k = 0.
bool in_witness(const Trace& w, std::size_t k, WitnessKind kind);

struct WitnessTrees {
  Adt base;   // W_k
  Adt plus;   // W_k+
  Adt minus;  // W_k-
};

/// Throws InvalidArgument for k = 0.
WitnessTrees build_witness_adt(std::size_t k);

/// a ↔ b.
Trace swap(const Trace& w);
/// Leaf rewriting p ↦ ¬p, except that ¬p becomes p, so the two letter
/// formulas trade places. An involution on formulas without ¬¬p.
/// Throws AlphabetMismatch when a leaf mentions a proposition beyond p.
Formula swap(const Formula& f);
Adt swap(const Adt& t);

/// The recursive characterization of the witness languages, evaluated on
/// words of length <= maxlen (k = 0 gives {ε}). Length-lex order.
std::vector<Trace> recursive_witness(std::size_t k, WitnessKind kind,
                                     std::size_t maxlen);

}  // namespace adtlab

#endif  // ADTLAB_WITNESS_HPP_
