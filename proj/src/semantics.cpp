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

#include "adtlab/semantics.hpp"

#include <algorithm>
#include <unordered_map>

#include "adtlab/errors.hpp"

namespace adtlab {

namespace {

constexpr std::int8_t kUnknown = -1;

}  // namespace

TraceEvaluator::TraceEvaluator(const Adt& tree, std::size_t max_length)
    : tree_(tree), cap_(max_length), letters_(max_length) {
  std::unordered_map<const void*, int> seen;
  auto rec = [&](auto& self, const Adt& t) -> int {
    if (auto it = seen.find(t.id()); it != seen.end()) return it->second;
    std::vector<int> kids;
    kids.reserve(t.children().size());
    for (const Adt& c : t.children()) kids.push_back(self(self, c));
    int slot;
    if (t.kind() == Adt::Kind::Sand && kids.size() > 2) {
      // SAND(c0, …, cm) becomes right-nested binary slots.
      int rest = kids.back();
      for (std::size_t k = kids.size() - 1; k-- > 1;) {
        slots_.push_back({Adt::Kind::Sand, nullptr, {kids[k], rest}});
        rest = static_cast<int>(slots_.size()) - 1;
      }
      slots_.push_back({Adt::Kind::Sand, nullptr, {kids[0], rest}});
    } else {
      Slot s{t.kind(), nullptr, std::move(kids)};
      if (t.kind() == Adt::Kind::Leaf) s.formula = &t.formula();
      slots_.push_back(std::move(s));
    }
    slot = static_cast<int>(slots_.size()) - 1;
    seen.emplace(t.id(), slot);
    return slot;
  };
  root_ = rec(rec, tree_);
  memo_.assign((cap_ + 1) * slots_.size() * (cap_ + 1), kUnknown);
  dirty_from_ = cap_ + 1;
}

void TraceEvaluator::set_letter(std::size_t pos, Valuation v) {
  if (pos >= cap_) throw InvalidArgument("trace longer than evaluator bound");
  if (letters_[pos] == v && pos < dirty_from_) return;
  letters_[pos] = v;
  dirty_from_ = std::min(dirty_from_, pos);
}

void TraceEvaluator::flush() {
  if (dirty_from_ > cap_) return;
  std::size_t row = dirty_from_ + 1;
  std::fill(memo_.begin() + static_cast<std::ptrdiff_t>(index(0, 0, row)),
            memo_.end(), kUnknown);
  dirty_from_ = cap_ + 1;
}

bool TraceEvaluator::accepts(const Trace& t) {
  if (t.size() > cap_) throw InvalidArgument("trace longer than evaluator bound");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (letters_[i] != t[i]) {
      letters_[i] = t[i];
      dirty_from_ = std::min(dirty_from_, i);
    }
  }
  return accepts_prefix(t.size());
}

bool TraceEvaluator::accepts_prefix(std::size_t n) {
  if (n > cap_) throw InvalidArgument("trace longer than evaluator bound");
  flush();
  return eval(root_, 0, n);
}

bool TraceEvaluator::eval(int slot, std::size_t i, std::size_t j) {
  std::int8_t& cell = memo_[index(slot, i, j)];
  if (cell != kUnknown) return cell != 0;
  const Slot& s = slots_[static_cast<std::size_t>(slot)];
  bool r = false;
  switch (s.kind) {
    case Adt::Kind::Eps:
      r = i == j;
      break;
    case Adt::Kind::Leaf:
      r = i < j && s.formula->eval(letters_[j - 1]);
      break;
    case Adt::Kind::Or:
      for (int k : s.kids) {
        if (eval(k, i, j)) {
          r = true;
          break;
        }
      }
      break;
    case Adt::Kind::Sand:
      if (s.kids.size() == 1) {
        r = eval(s.kids[0], i, j);
        break;
      }
      for (std::size_t l = i; l <= j && !r; ++l) {
        r = eval(s.kids[0], i, l) && eval(s.kids[1], l, j);
      }
      break;
    case Adt::Kind::And:
      for (std::size_t a = 0; a < s.kids.size() && !r; ++a) {
        if (!eval(s.kids[a], i, j)) continue;
        bool all = true;
        for (std::size_t b = 0; b < s.kids.size() && all; ++b) {
          if (b == a) continue;
          bool some = false;
          for (std::size_t l = i; l <= j && !some; ++l) {
            some = eval(s.kids[b], i, l);
          }
          all = some;
        }
        r = all;
      }
      break;
    case Adt::Kind::Counter:
      r = eval(s.kids[0], i, j) && !eval(s.kids[1], i, j);
      break;
  }
  cell = r ? 1 : 0;
  return r;
}

bool member(const Adt& t, const Trace& trace) {
  TraceEvaluator ev(t, trace.size());
  return ev.accepts(trace);
}

bool member(const Adt& t, const Trace& trace, const PropSet& props) {
  check_alphabet(t, props);
  check_alphabet(trace, props);
  return member(t, trace);
}

std::uint64_t candidate_count(const PropSet& props, std::size_t maxlen,
                              std::size_t budget) {
  if (props.size() > kMaxEnumerableProps) {
    throw BudgetExceeded("alphabet too large to enumerate");
  }
  const std::uint64_t sigma = props.alphabet_size();
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::size_t n = 0; n <= maxlen; ++n) {
    total += layer;
    if (total > budget) {
      throw BudgetExceeded("enumeration of traces up to length " +
                           std::to_string(maxlen) + " exceeds budget of " +
                           std::to_string(budget) + " candidates");
    }
    if (n < maxlen) layer *= sigma;  // total <= budget bounds the product
  }
  return total;
}

void for_each_trace(
    const PropSet& props, std::size_t maxlen, std::size_t budget,
    const std::function<bool(const Trace&, std::size_t)>& visit) {
  candidate_count(props, maxlen, budget);
  const std::uint64_t sigma = props.alphabet_size();
  for (std::size_t n = 0; n <= maxlen; ++n) {
    std::vector<std::uint64_t> digits(n, 0);
    Trace word(std::vector<Valuation>(n, Valuation(0)));
    std::size_t changed = 0;
    while (true) {
      if (!visit(word, changed)) return;
      // Odometer step: bump the last position, carrying leftwards.
      std::size_t pos = n;
      while (pos > 0 && digits[pos - 1] + 1 == sigma) --pos;
      if (pos == 0) break;
      ++digits[pos - 1];
      for (std::size_t q = pos; q < n; ++q) digits[q] = 0;
      std::vector<Valuation> letters(n);
      for (std::size_t q = 0; q < n; ++q) letters[q] = Valuation(digits[q]);
      word = Trace(std::move(letters));
      changed = pos - 1;
    }
  }
}

std::vector<Trace> enumerate(const Adt& t, const PropSet& props,
                             std::size_t maxlen, std::size_t budget) {
  check_alphabet(t, props);
  TraceEvaluator ev(t, maxlen);
  std::vector<Trace> out;
  for_each_trace(props, maxlen, budget, [&](const Trace& w, std::size_t from) {
    for (std::size_t q = from; q < w.size(); ++q) ev.set_letter(q, w[q]);
    if (ev.accepts_prefix(w.size())) out.push_back(w);
    return true;
  });
  return out;
}

bool is_lift(const Trace& g, const Trace& trace) {
  if (g.empty()) throw InvalidArgument("a lift needs a non-empty generator");
  if (trace.empty() || trace.back() != g.back()) return false;
  // g[0..n-1) must embed as a subsequence of trace[0..|trace|-1).
  std::size_t k = 0;
  const std::size_t need = g.size() - 1;
  for (std::size_t i = 0; i + 1 < trace.size() && k < need; ++i) {
    if (trace[i] == g[k]) ++k;
  }
  return k == need;
}

}  // namespace adtlab
