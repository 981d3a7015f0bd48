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

#include "adtlab/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "adtlab/errors.hpp"
#include "adtlab/semantics.hpp"

namespace adtlab {

namespace {

template <typename Emit>
void shuffle_rec(const Trace& a, std::size_t i, const Trace& b, std::size_t j,
                 std::vector<Valuation>& word, Emit& emit) {
  if (i == a.size() || j == b.size()) {
    const Trace& rest = i == a.size() ? b : a;
    const std::size_t from = i == a.size() ? j : i;
    const std::size_t mark = word.size();
    word.insert(word.end(), rest.begin() + static_cast<std::ptrdiff_t>(from),
                rest.end());
    emit(Trace(word));
    word.resize(mark);
    return;
  }
  word.push_back(a[i]);
  shuffle_rec(a, i + 1, b, j, word, emit);
  if (a[i] == b[j]) shuffle_rec(a, i + 1, b, j + 1, word, emit);
  word.back() = b[j];
  shuffle_rec(a, i, b, j + 1, word, emit);
  word.pop_back();
}

template <typename Emit>
void for_each_shuffle(const Trace& a, const Trace& b, Emit emit) {
  std::vector<Valuation> word;
  word.reserve(a.size() + b.size());
  shuffle_rec(a, 0, b, 0, word, emit);
}

std::size_t longest(const TraceSet& s) {
  return s.empty() ? 0 : s.rbegin()->size();  // length-lex: last is longest
}

class GenBuilder {
 public:
  GenBuilder(const PropSet& props, std::size_t cap) : props_(props), cap_(cap) {}

  // Generators with ε kept; `t` is binary.
  const TraceSet& run(const Adt& t) {
    if (auto it = memo_.find(t.id()); it != memo_.end()) return it->second;
    TraceSet out;
    switch (t.kind()) {
      case Adt::Kind::Eps:
        out.insert(Trace{});
        break;
      case Adt::Kind::Leaf:
        for (Valuation v : satisfying_valuations(t.formula(), props_)) {
          out.insert(Trace{v});
        }
        break;
      case Adt::Kind::Or:
        out = run(t.child(0));
        for (std::size_t k = 1; k < t.children().size(); ++k) {
          const TraceSet& more = run(t.child(k));
          out.insert(more.begin(), more.end());
          guard(out);
        }
        break;
      case Adt::Kind::Sand: {
        out = run(t.child(0));
        for (std::size_t k = 1; k < t.children().size(); ++k) {
          const TraceSet& rhs = run(t.child(k));
          TraceSet next;
          for (const Trace& x : out) {
            for (const Trace& y : rhs) {
              next.insert(x + y);
              guard(next);
            }
          }
          out = std::move(next);
        }
        break;
      }
      case Adt::Kind::And: {
        const TraceSet& lhs = run(t.child(0));
        const TraceSet& rhs = run(t.child(1));
        TraceEvaluator accepts(t, longest(lhs) + longest(rhs));
        TraceSet seen;
        for (const Trace& x : lhs) {
          for (const Trace& y : rhs) {
            for_each_shuffle(x, y, [&](const Trace& w) {
              if (!seen.insert(w).second) return;
              guard(seen);
              if (accepts.accepts(w)) out.insert(w);
            });
          }
        }
        break;
      }
      case Adt::Kind::Counter: {
        const TraceSet& goal = run(t.child(0));
        TraceEvaluator counter(t.child(1), longest(goal));
        for (const Trace& g : goal) {
          if (!counter.accepts(g)) out.insert(g);
        }
        break;
      }
    }
    return memo_.emplace(t.id(), std::move(out)).first->second;
  }

 private:
  void guard(const TraceSet& s) const {
    if (s.size() > cap_) {
      throw BudgetExceeded("generator set exceeds cap of " +
                           std::to_string(cap_) + " traces");
    }
  }

  const PropSet& props_;
  std::size_t cap_;
  std::unordered_map<const void*, TraceSet> memo_;
};

}  // namespace

std::vector<Trace> shuffle(const Trace& lhs, const Trace& rhs) {
  TraceSet out;
  for_each_shuffle(lhs, rhs, [&](const Trace& w) { out.insert(w); });
  return {out.begin(), out.end()};
}

GenSet gen(const Adt& t, const PropSet& props, std::size_t cap) {
  check_alphabet(t, props);
  const Adt binary = normalize_binary(t);
  GenBuilder builder(props, cap);
  const TraceSet& all = builder.run(binary);
  GenSet out;
  out.origin = t;
  out.sound = counterdepth(t) <= 1;
  for (const Trace& g : all) {
    if (!g.empty()) out.traces.push_back(g);
  }
  return out;
}

SmpResult nonempty_smp(const Adt& t, const PropSet& props, std::size_t cap) {
  if (counterdepth(t) > 1) {
    throw DepthError("small-model check needs countermeasure-depth <= 1");
  }
  check_alphabet(t, props);
  SmpResult r;
  if (member(t, Trace{})) {
    r.nonempty = true;
    r.witness = Trace{};
    return r;
  }
  GenSet g = gen(t, props, cap);
  if (!g.traces.empty()) {
    r.nonempty = true;
    r.witness = g.traces.front();
  }
  return r;
}

Adt normalize_adt0(const Adt& t, const PropSet& props, std::size_t cap) {
  if (counterdepth(t) != 0) {
    throw DepthError("normal form needs countermeasure-depth 0");
  }
  GenSet g = gen(t, props, cap);
  std::vector<Adt> disjuncts;
  disjuncts.reserve(g.traces.size() + 1);
  for (const Trace& word : g.traces) {
    std::vector<Adt> leaves;
    leaves.reserve(word.size());
    for (Valuation v : word) {
      leaves.push_back(Adt::leaf(characteristic_formula(v, props)));
    }
    disjuncts.push_back(Adt::sand_node(std::move(leaves)));
  }
  if (member(t, Trace{})) disjuncts.push_back(Adt::eps());
  if (disjuncts.empty()) {
    disjuncts.push_back(Adt::sand_node({Adt::leaf(Formula::bottom())}));
  }
  return Adt::or_node(std::move(disjuncts));
}

Adt0Equivalence equiv_adt0(const Adt& t1, const Adt& t2, const PropSet& props,
                           std::size_t cap) {
  if (counterdepth(t1) != 0 || counterdepth(t2) != 0) {
    throw DepthError("exact equivalence needs countermeasure-depth 0");
  }
  Adt0Equivalence r;
  if (member(t1, Trace{}) != member(t2, Trace{})) {
    r.counterexample = Trace{};
    return r;
  }
  auto covered = [&](const Adt& from, const Adt& into) -> bool {
    GenSet g = gen(from, props, cap);
    if (g.traces.empty()) return true;
    TraceEvaluator ev(into, g.traces.back().size());
    for (const Trace& w : g.traces) {
      if (!ev.accepts(w)) {
        r.counterexample = w;
        return false;
      }
    }
    return true;
  };
  r.equivalent = covered(t1, t2) && covered(t2, t1);
  return r;
}

}  // namespace adtlab
