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

#include "adtlab/core.hpp"

#include <algorithm>
#include <unordered_map>

#include "adtlab/errors.hpp"

namespace adtlab {

// --- PropSet ---------------------------------------------------------------

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9');
  });
}

PropSet::PropSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxProps) {
    throw InvalidArgument("too many propositions (limit is " +
                          std::to_string(kMaxProps) + ")");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (!is_identifier(n) || n == "true" || n == "false") {
      throw InvalidArgument("invalid proposition name '" + n + "'");
    }
    if (!index_.emplace(n, i).second) {
      throw InvalidArgument("duplicate proposition '" + n + "'");
    }
  }
}

std::optional<std::size_t> PropSet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Valuation> PropSet::alphabet() const {
  if (names_.size() > kMaxEnumerableProps) {
    throw BudgetExceeded("alphabet 2^" + std::to_string(names_.size()) +
                         " is too large to enumerate");
  }
  std::vector<Valuation> out;
  out.reserve(alphabet_size());
  for (std::uint64_t b = 0; b < alphabet_size(); ++b) out.emplace_back(b);
  return out;
}

// --- Trace -----------------------------------------------------------------

Trace Trace::prefix(std::size_t n) const {
  return slice(0, std::min(n, size()));
}

Trace Trace::suffix(std::size_t from) const {
  return slice(std::min(from, size()), size());
}

Trace Trace::slice(std::size_t from, std::size_t to) const {
  return Trace(std::vector<Valuation>(letters_.begin() + from,
                                      letters_.begin() + to));
}

Trace operator+(const Trace& a, const Trace& b) {
  std::vector<Valuation> v = a.letters_;
  v.insert(v.end(), b.letters_.begin(), b.letters_.end());
  return Trace(std::move(v));
}

bool LengthLexLess::operator()(const Trace& a, const Trace& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_alphabet(const Trace& t, const PropSet& props) {
  for (Valuation v : t) {
    if (!props.contains(v)) {
      throw AlphabetMismatch("trace letter outside the proposition set");
    }
  }
}

// --- Formula ---------------------------------------------------------------

struct Formula::Node {
  Kind kind;
  std::size_t prop = 0;
  std::vector<Formula> operands;
};

Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::True, 0, {}}));
  return f;
}

Formula Formula::bottom() {
  static const Formula f(
      std::make_shared<const Node>(Node{Kind::False, 0, {}}));
  return f;
}

Formula Formula::var(std::size_t prop) {
  return Formula(std::make_shared<const Node>(Node{Kind::Var, prop, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Not, 0, {std::move(f)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, 0, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, 0, {std::move(lhs), std::move(rhs)}}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
std::size_t Formula::prop() const noexcept { return node_->prop; }
const Formula& Formula::lhs() const { return node_->operands.at(0); }
const Formula& Formula::rhs() const { return node_->operands.at(1); }

bool Formula::eval(Valuation v) const {
  switch (node_->kind) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Var:
      return v.contains(node_->prop);
    case Kind::Not:
      return !lhs().eval(v);
    case Kind::And:
      return lhs().eval(v) && rhs().eval(v);
    case Kind::Or:
      return lhs().eval(v) || rhs().eval(v);
  }
  return false;
}

std::size_t Formula::node_count() const {
  std::size_t n = 1;
  for (const auto& op : node_->operands) n += op.node_count();
  return n;
}

std::size_t Formula::prop_bound() const {
  std::size_t b = node_->kind == Kind::Var ? node_->prop + 1 : 0;
  for (const auto& op : node_->operands) b = std::max(b, op.prop_bound());
  return b;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::Var) return a.prop() == b.prop();
  return a.node_->operands == b.node_->operands;
}

Formula characteristic_formula(Valuation v, const PropSet& props) {
  if (props.empty()) return Formula::top();
  std::optional<Formula> acc;
  for (std::size_t i = 0; i < props.size(); ++i) {
    Formula lit = v.contains(i) ? Formula::var(i)
                                : Formula::negation(Formula::var(i));
    acc = acc ? Formula::conjunction(*acc, lit) : lit;
  }
  return *acc;
}

std::vector<Valuation> satisfying_valuations(const Formula& f,
                                             const PropSet& props) {
  std::vector<Valuation> out;
  for (Valuation v : props.alphabet()) {
    if (f.eval(v)) out.push_back(v);
  }
  return out;
}

// --- Adt -------------------------------------------------------------------

struct Adt::Node {
  Kind kind;
  std::optional<Formula> formula;
  std::vector<Adt> children;
};

Adt Adt::eps() {
  static const Adt t(std::make_shared<const Node>(Node{Kind::Eps, {}, {}}));
  return t;
}

Adt Adt::leaf(Formula f) {
  return Adt(std::make_shared<const Node>(Node{Kind::Leaf, std::move(f), {}}));
}

Adt Adt::make_nary(Kind kind, std::vector<Adt> children) {
  if (children.empty()) {
    throw InvalidArgument("OR/SAND/AND need at least one child");
  }
  return Adt(
      std::make_shared<const Node>(Node{kind, std::nullopt, std::move(children)}));
}

Adt Adt::or_node(std::vector<Adt> children) {
  return make_nary(Kind::Or, std::move(children));
}
Adt Adt::sand_node(std::vector<Adt> children) {
  return make_nary(Kind::Sand, std::move(children));
}
Adt Adt::and_node(std::vector<Adt> children) {
  return make_nary(Kind::And, std::move(children));
}

Adt Adt::counter(Adt goal, Adt countermeasure) {
  return Adt(std::make_shared<const Node>(
      Node{Kind::Counter, std::nullopt, {std::move(goal), std::move(countermeasure)}}));
}

Adt::Kind Adt::kind() const noexcept { return node_->kind; }

const Formula& Adt::formula() const {
  if (!node_->formula) throw InvalidArgument("not a formula leaf");
  return *node_->formula;
}

std::span<const Adt> Adt::children() const noexcept {
  return node_->children;
}

const Adt& Adt::child(std::size_t i) const { return node_->children.at(i); }

bool operator==(const Adt& a, const Adt& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Adt::Kind::Leaf) return a.formula() == b.formula();
  return a.node_->children == b.node_->children;
}

// --- Measures --------------------------------------------------------------

namespace {

// Trees built by the witness constructions share subtrees heavily, so the
// structural measures are memoized on node identity.
template <typename Combine>
std::size_t fold_measure(const Adt& t,
                         std::unordered_map<const void*, std::size_t>& memo,
                         Combine& combine) {
  if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
  std::vector<std::size_t> sub;
  sub.reserve(t.children().size());
  for (const Adt& c : t.children()) sub.push_back(fold_measure(c, memo, combine));
  std::size_t r = combine(t, sub);
  memo.emplace(t.id(), r);
  return r;
}

template <typename Combine>
std::size_t measure(const Adt& t, Combine combine) {
  std::unordered_map<const void*, std::size_t> memo;
  return fold_measure(t, memo, combine);
}

}  // namespace

std::size_t size(const Adt& t) {
  return measure(t, [](const Adt& n, const std::vector<std::size_t>& sub) {
    switch (n.kind()) {
      case Adt::Kind::Eps:
        return std::size_t{1};
      case Adt::Kind::Leaf:
        return n.formula().node_count();
      default: {
        std::size_t s = 0;
        for (auto v : sub) s += v;
        return s;
      }
    }
  });
}

std::size_t counterdepth(const Adt& t) {
  return measure(t, [](const Adt& n, const std::vector<std::size_t>& sub) {
    if (n.kind() == Adt::Kind::Counter) return std::max(sub[0], sub[1] + 1);
    std::size_t d = 0;
    for (auto v : sub) d = std::max(d, v);
    return d;
  });
}

std::size_t leaves_count(const Adt& t) {
  return measure(t, [](const Adt& n, const std::vector<std::size_t>& sub) {
    if (n.children().empty()) return std::size_t{1};
    std::size_t s = 0;
    for (auto v : sub) s += v;
    return s;
  });
}

std::size_t counter_count(const Adt& t) {
  return measure(t, [](const Adt& n, const std::vector<std::size_t>& sub) {
    std::size_t s = n.kind() == Adt::Kind::Counter ? 1 : 0;
    for (auto v : sub) s += v;
    return s;
  });
}

std::size_t prop_bound(const Adt& t) {
  return measure(t, [](const Adt& n, const std::vector<std::size_t>& sub) {
    std::size_t b = n.kind() == Adt::Kind::Leaf ? n.formula().prop_bound() : 0;
    for (auto v : sub) b = std::max(b, v);
    return b;
  });
}

void check_alphabet(const Adt& t, const PropSet& props) {
  if (prop_bound(t) > props.size()) {
    throw AlphabetMismatch("tree leaf mentions a proposition outside the set");
  }
}

Adt normalize_binary(const Adt& t) {
  switch (t.kind()) {
    case Adt::Kind::Eps:
    case Adt::Kind::Leaf:
      return t;
    case Adt::Kind::Counter:
      return Adt::counter(normalize_binary(t.child(0)),
                          normalize_binary(t.child(1)));
    default:
      break;
  }
  Adt acc = normalize_binary(t.child(0));
  for (std::size_t i = 1; i < t.children().size(); ++i) {
    std::vector<Adt> pair{acc, normalize_binary(t.child(i))};
    switch (t.kind()) {
      case Adt::Kind::Or:
        acc = Adt::or_node(std::move(pair));
        break;
      case Adt::Kind::Sand:
        acc = Adt::sand_node(std::move(pair));
        break;
      default:
        acc = Adt::and_node(std::move(pair));
        break;
    }
  }
  return acc;
}

// --- Derived trees ---------------------------------------------------------

Adt build_length(LengthKind kind, std::size_t length) {
  if (length == 0) throw InvalidArgument("length bound must be at least 1");
  auto at_least = [](std::size_t n) {
    return Adt::sand_node(std::vector<Adt>(n, Adt::leaf(Formula::top())));
  };
  switch (kind) {
    case LengthKind::AtLeast:
      return at_least(length);
    case LengthKind::AtMost:
      return Adt::counter(Adt::leaf(Formula::top()), at_least(length));
    case LengthKind::Exactly:
      return Adt::counter(at_least(length), at_least(length + 1));
  }
  return at_least(length);
}

Adt etrue() { return Adt::or_node({Adt::eps(), Adt::leaf(Formula::top())}); }

Adt complement_of(const Adt& t) { return Adt::counter(etrue(), t); }

Adt intersection_of(const Adt& t1, const Adt& t2) {
  return complement_of(Adt::or_node({complement_of(t1), complement_of(t2)}));
}

Adt within_any(const Adt& t) { return Adt::sand_node({etrue(), t, etrue()}); }
Adt preceded_by_any(const Adt& t) { return Adt::sand_node({etrue(), t}); }
Adt followed_by_any(const Adt& t) { return Adt::sand_node({t, etrue()}); }

Adt strict(const Formula& f) {
  return Adt::counter(Adt::leaf(f), build_length(LengthKind::AtLeast, 2));
}

Adt strict_valuation(Valuation v, const PropSet& props) {
  if (!props.contains(v)) {
    throw AlphabetMismatch("valuation outside the proposition set");
  }
  return strict(characteristic_formula(v, props));
}

Adt trace_tree(const Trace& t, const PropSet& props) {
  if (t.empty()) return Adt::eps();
  std::vector<Adt> parts;
  parts.reserve(t.size());
  for (Valuation v : t) parts.push_back(strict_valuation(v, props));
  return Adt::sand_node(std::move(parts));
}

}  // namespace adtlab
