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

#include "adtlab/sere.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "adtlab/errors.hpp"

namespace adtlab {

struct Sere::Node {
  Kind kind;
  Valuation val;
  std::vector<Sere> ops;
};

Sere Sere::empty() {
  static const Sere k(std::make_shared<const Node>(Node{Kind::Empty, {}, {}}));
  return k;
}

Sere Sere::eps() {
  static const Sere k(std::make_shared<const Node>(Node{Kind::Eps, {}, {}}));
  return k;
}

Sere Sere::letter(Valuation v) {
  return Sere(std::make_shared<const Node>(Node{Kind::Letter, v, {}}));
}

Sere Sere::union_of(Sere lhs, Sere rhs) {
  return Sere(std::make_shared<const Node>(
      Node{Kind::Union, {}, {std::move(lhs), std::move(rhs)}}));
}

Sere Sere::concat(Sere lhs, Sere rhs) {
  return Sere(std::make_shared<const Node>(
      Node{Kind::Concat, {}, {std::move(lhs), std::move(rhs)}}));
}

Sere Sere::inter(Sere lhs, Sere rhs) {
  return Sere(std::make_shared<const Node>(
      Node{Kind::Inter, {}, {std::move(lhs), std::move(rhs)}}));
}

Sere Sere::complement(Sere e) {
  return Sere(std::make_shared<const Node>(Node{Kind::Compl, {}, {std::move(e)}}));
}

Sere Sere::all() { return complement(empty()); }

Sere::Kind Sere::kind() const noexcept { return node_->kind; }
Valuation Sere::valuation() const { return node_->val; }
const Sere& Sere::lhs() const { return node_->ops.at(0); }
const Sere& Sere::rhs() const { return node_->ops.at(1); }

bool operator==(const Sere& a, const Sere& b) {
  if (a.id() == b.id()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Sere::Kind::Empty:
    case Sere::Kind::Eps:
      return true;
    case Sere::Kind::Letter:
      return a.valuation() == b.valuation();
    case Sere::Kind::Compl:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

std::size_t node_count(const Sere& e) {
  switch (e.kind()) {
    case Sere::Kind::Empty:
    case Sere::Kind::Eps:
    case Sere::Kind::Letter:
      return 1;
    case Sere::Kind::Compl:
      return 1 + node_count(e.lhs());
    default:
      return 1 + node_count(e.lhs()) + node_count(e.rhs());
  }
}

std::size_t prop_bound(const Sere& e) {
  switch (e.kind()) {
    case Sere::Kind::Letter: {
      std::uint64_t bits = e.valuation().bits();
      std::size_t width = 0;
      for (; bits != 0; bits >>= 1) ++width;
      return width;
    }
    case Sere::Kind::Compl:
      return prop_bound(e.lhs());
    case Sere::Kind::Union:
    case Sere::Kind::Concat:
    case Sere::Kind::Inter:
      return std::max(prop_bound(e.lhs()), prop_bound(e.rhs()));
    default:
      return 0;
  }
}

// --- Membership ---------------------------------------------------------------

SereMatcher::SereMatcher(const Sere& e) : expr_(e) {
  std::unordered_map<const void*, int> seen;
  auto rec = [&](auto& self, const Sere& x) -> int {
    if (auto it = seen.find(x.id()); it != seen.end()) return it->second;
    Slot s{x.kind(), {}, -1, -1};
    switch (x.kind()) {
      case Sere::Kind::Letter:
        s.val = x.valuation();
        break;
      case Sere::Kind::Compl:
        s.a = self(self, x.lhs());
        break;
      case Sere::Kind::Union:
      case Sere::Kind::Concat:
      case Sere::Kind::Inter:
        s.a = self(self, x.lhs());
        s.b = self(self, x.rhs());
        break;
      default:
        break;
    }
    slots_.push_back(s);
    const int id = static_cast<int>(slots_.size()) - 1;
    seen.emplace(x.id(), id);
    return id;
  };
  root_ = rec(rec, expr_);
}

bool SereMatcher::matches(const Trace& t) {
  word_ = &t;
  len_ = t.size();
  memo_.assign(slots_.size() * (len_ + 1) * (len_ + 1), -1);
  return eval(root_, 0, len_);
}

bool SereMatcher::eval(int slot, std::size_t i, std::size_t j) {
  const std::size_t key =
      (static_cast<std::size_t>(slot) * (len_ + 1) + i) * (len_ + 1) + j;
  if (memo_[key] >= 0) return memo_[key] != 0;
  const Slot& s = slots_[static_cast<std::size_t>(slot)];
  bool r = false;
  switch (s.kind) {
    case Sere::Kind::Empty:
      r = false;
      break;
    case Sere::Kind::Eps:
      r = i == j;
      break;
    case Sere::Kind::Letter:
      r = j == i + 1 && (*word_)[i] == s.val;
      break;
    case Sere::Kind::Union:
      r = eval(s.a, i, j) || eval(s.b, i, j);
      break;
    case Sere::Kind::Inter:
      r = eval(s.a, i, j) && eval(s.b, i, j);
      break;
    case Sere::Kind::Compl:
      r = !eval(s.a, i, j);
      break;
    case Sere::Kind::Concat:
      for (std::size_t l = i; l <= j && !r; ++l) {
        r = eval(s.a, i, l) && eval(s.b, l, j);
      }
      break;
  }
  memo_[key] = r ? 1 : 0;
  return r;
}

bool sere_member(const Sere& e, const Trace& t) {
  SereMatcher m(e);
  return m.matches(t);
}

// --- Translations ---------------------------------------------------------------

namespace {

class ToSere {
 public:
  explicit ToSere(const PropSet& props) : props_(props) {}

  Sere run(const Adt& t) {
    if (auto it = memo_.find(t.id()); it != memo_.end()) return it->second;
    Sere out = Sere::empty();
    switch (t.kind()) {
      case Adt::Kind::Eps:
        out = Sere::eps();
        break;
      case Adt::Kind::Leaf: {
        std::vector<Valuation> vs = satisfying_valuations(t.formula(), props_);
        Sere last = Sere::empty();
        for (std::size_t i = 0; i < vs.size(); ++i) {
          Sere l = Sere::letter(vs[i]);
          last = i == 0 ? l : Sere::union_of(last, l);
        }
        out = Sere::concat(Sere::all(), last);
        break;
      }
      case Adt::Kind::Or:
        out = fold(t, Sere::union_of);
        break;
      case Adt::Kind::Sand:
        out = fold(t, Sere::concat);
        break;
      case Adt::Kind::Counter:
        out = Sere::inter(run(t.child(0)), Sere::complement(run(t.child(1))));
        break;
      case Adt::Kind::And: {
        const std::size_t n = t.children().size();
        if (n == 1) {
          out = run(t.child(0));
          break;
        }
        std::vector<Sere> parts;
        std::vector<Sere> prefixes;
        for (const Adt& c : t.children()) {
          parts.push_back(run(c));
          prefixes.push_back(Sere::concat(parts.back(), Sere::all()));
        }
        std::optional<Sere> acc;
        for (std::size_t i = 0; i < n; ++i) {
          std::optional<Sere> others;
          for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            others = others ? Sere::inter(*others, prefixes[j]) : prefixes[j];
          }
          Sere term = Sere::inter(parts[i], *others);
          acc = acc ? Sere::union_of(*acc, term) : term;
        }
        out = *acc;
        break;
      }
    }
    memo_.emplace(t.id(), out);
    return out;
  }

 private:
  Sere fold(const Adt& t, Sere (*op)(Sere, Sere)) {
    Sere acc = run(t.child(0));
    for (std::size_t i = 1; i < t.children().size(); ++i) {
      acc = op(acc, run(t.child(i)));
    }
    return acc;
  }

  const PropSet& props_;
  std::unordered_map<const void*, Sere> memo_;
};

}  // namespace

Sere adt_to_sere(const Adt& t, const PropSet& props) {
  check_alphabet(t, props);
  ToSere tr(props);
  return tr.run(t);
}

Adt sere_to_adt(const Sere& e, const PropSet& props) {
  if (prop_bound(e) > props.size()) {
    throw AlphabetMismatch("letter outside the proposition set");
  }
  std::unordered_map<const void*, Adt> memo;
  auto rec = [&](auto& self, const Sere& x) -> Adt {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    Adt out = Adt::eps();
    switch (x.kind()) {
      case Sere::Kind::Empty:
        out = Adt::leaf(Formula::bottom());
        break;
      case Sere::Kind::Eps:
        out = Adt::eps();
        break;
      case Sere::Kind::Letter:
        out = strict_valuation(x.valuation(), props);
        break;
      case Sere::Kind::Union:
        out = Adt::or_node({self(self, x.lhs()), self(self, x.rhs())});
        break;
      case Sere::Kind::Concat:
        out = Adt::sand_node({self(self, x.lhs()), self(self, x.rhs())});
        break;
      case Sere::Kind::Inter:
        out = intersection_of(self(self, x.lhs()), self(self, x.rhs()));
        break;
      case Sere::Kind::Compl:
        out = complement_of(self(self, x.lhs()));
        break;
    }
    memo.emplace(x.id(), out);
    return out;
  };
  return rec(rec, e);
}

}  // namespace adtlab
