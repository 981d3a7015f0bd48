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

// Text formats. `#` starts a comment running to the end of the line in
// every format.
//
// Trees:
//   adt     := EPS | "[" formula "]" | (OR|SAND|AND) "(" adt ("," adt)* ")"
//            | C "(" adt "," adt ")"
//            | GE(n) | LE(n) | EQ(n) | TOP | ETRUE | NOT(adt) | CAP(adt, adt)
//            | STRICT(formula) | ALLB(adt) | ALLL(adt) | ALLR(adt)
//   formula := true | false | ident | "!" formula | formula "&" formula
//            | formula "|" formula | "(" formula ")"     (! > & > |)
// Renderers print only the core forms, so sugar expands on parsing.
//
// First-order formulas:
//   E x. φ   A x. φ   x < y   letter({p,q}, x)   ~φ   φ & φ   φ | φ
//   true   false   (φ)                            (~, E, A > & > |)
//
// Expressions: 0 | eps | {p,q} | !e | e.e | e&e | e|e | (e)
//   (! > . > & > |)
//
// Trace files: a `props: p,q` header, then one valuation `{p}` per line.
// A blank line ends the current trace, so a blank line on its own is the
// empty trace; the last trace may end at end of file instead.

#ifndef ADTLAB_TEXTIO_HPP_
#define ADTLAB_TEXTIO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "adtlab/core.hpp"
#include "adtlab/fo.hpp"
#include "adtlab/sere.hpp"

namespace adtlab {

/// All parsers throw ParseError (with a 1-based position) on malformed
/// input and on propositions missing from `props`.
Adt parse_adt(std::string_view text, const PropSet& props);
Formula parse_formula(std::string_view text, const PropSet& props);
FoFormula parse_fo(std::string_view text, const PropSet& props);
Sere parse_sere(std::string_view text, const PropSet& props);
/// `{p,q}` or `{}`.
Valuation parse_valuation(std::string_view text, const PropSet& props);

struct TraceFile {
  PropSet props;
  std::vector<Trace> traces;
};
TraceFile parse_trace_file(std::string_view text);

enum class Dialect { Adt, Fo, Sere };

/// Proposition names of a text in order of first appearance, for inputs
/// given without a proposition list.
std::vector<std::string> collect_props(std::string_view text, Dialect dialect);

std::string render(const Adt& t, const PropSet& props);
std::string render(const Formula& f, const PropSet& props);
std::string render(const FoFormula& f, const PropSet& props);
std::string render(const Sere& e, const PropSet& props);
/// Valuation lines joined by newlines; "" for ε.
std::string render(const Trace& t, const PropSet& props);
std::string render_valuation(Valuation v, const PropSet& props);
/// Header plus every trace followed by a blank line.
std::string render_trace_file(const PropSet& props,
                              const std::vector<Trace>& traces);

}  // namespace adtlab

#endif  // ADTLAB_TEXTIO_HPP_
