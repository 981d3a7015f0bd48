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

#include "adtlab/decision.hpp"

#include <algorithm>

#include "adtlab/errors.hpp"
#include "adtlab/generators.hpp"

namespace adtlab {

namespace {

std::size_t require_bound(std::optional<std::size_t> maxlen) {
  if (!maxlen) throw InvalidArgument("bounded method needs a maximum length");
  return *maxlen;
}

}  // namespace

Verdict nonempty(const Adt& t, const PropSet& props, NonemptyMethod method,
                 std::optional<std::size_t> maxlen, std::size_t budget) {
  check_alphabet(t, props);
  Verdict v;
  v.depth = counterdepth(t);
  if (method == NonemptyMethod::Gen && v.depth > 1) {
    throw DepthError("generator method needs countermeasure-depth <= 1, got " +
                     std::to_string(v.depth));
  }
  if (method == NonemptyMethod::Gen ||
      (method == NonemptyMethod::Auto && v.depth <= 1)) {
    SmpResult r = nonempty_smp(t, props);
    v.method = Method::GenSmp;
    v.answer = r.nonempty ? Answer::Yes : Answer::No;
    v.witness = r.witness;
    return v;
  }
  const std::size_t n = require_bound(maxlen);
  v.method = Method::Bounded;
  v.bound = n;
  v.answer = Answer::NoUpToBound;
  TraceEvaluator ev(t, n);
  for_each_trace(props, n, budget, [&](const Trace& w, std::size_t from) {
    for (std::size_t q = from; q < w.size(); ++q) ev.set_letter(q, w[q]);
    if (!ev.accepts_prefix(w.size())) return true;
    v.answer = Answer::Yes;
    v.witness = w;
    return false;
  });
  return v;
}

Adt equivalence_reduction(const Adt& t1, const Adt& t2) {
  return Adt::or_node({Adt::counter(t1, t2), Adt::counter(t2, t1)});
}

Verdict equiv(const Adt& t1, const Adt& t2, const PropSet& props,
              EquivMethod method, std::optional<std::size_t> maxlen,
              std::size_t budget) {
  check_alphabet(t1, props);
  check_alphabet(t2, props);
  const std::size_t d1 = counterdepth(t1);
  const std::size_t d2 = counterdepth(t2);
  if (method == EquivMethod::Auto) {
    method = d1 == 0 && d2 == 0 ? EquivMethod::Gen0 : EquivMethod::Bounded;
  }
  Verdict v;
  switch (method) {
    case EquivMethod::Gen0: {
      if (d1 != 0 || d2 != 0) {
        throw DepthError("exact equivalence needs countermeasure-depth 0");
      }
      Adt0Equivalence r = equiv_adt0(t1, t2, props);
      v.method = Method::Gen0Exact;
      v.answer = r.equivalent ? Answer::Yes : Answer::No;
      v.witness = r.counterexample;
      v.depth = 0;
      return v;
    }
    case EquivMethod::Reduction: {
      Verdict e = nonempty(equivalence_reduction(t1, t2), props,
                           NonemptyMethod::Auto, maxlen, budget);
      v.method = Method::Reduction;
      v.depth = e.depth;
      v.bound = e.bound;
      if (e.answer == Answer::Yes) {
        v.answer = Answer::No;
        v.witness = e.witness;
      } else {
        v.answer = Answer::Yes;
      }
      return v;
    }
    case EquivMethod::Bounded:
    case EquivMethod::Auto:
      break;
  }
  const std::size_t n = require_bound(maxlen);
  v.method = Method::Bounded;
  v.bound = n;
  v.depth = std::max(d1, d2);
  v.answer = Answer::Yes;
  TraceEvaluator e1(t1, n);
  TraceEvaluator e2(t2, n);
  for_each_trace(props, n, budget, [&](const Trace& w, std::size_t from) {
    for (std::size_t q = from; q < w.size(); ++q) {
      e1.set_letter(q, w[q]);
      e2.set_letter(q, w[q]);
    }
    if (e1.accepts_prefix(w.size()) == e2.accepts_prefix(w.size())) return true;
    v.answer = Answer::No;
    v.witness = w;
    return false;
  });
  return v;
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::NoUpToBound:
      return "no-up-to-bound";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::GenSmp:
      return "gen-smp";
    case Method::Gen0Exact:
      return "gen0-exact";
    case Method::Bounded:
      return "bounded";
    case Method::Reduction:
      return "reduction";
  }
  return "?";
}

}  // namespace adtlab
