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

#include "adtlab/fo.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "adtlab/errors.hpp"
#include "adtlab/generators.hpp"

namespace adtlab {

struct FoFormula::Node {
  Kind kind;
  std::string v1;
  std::string v2;
  Valuation val;
  std::vector<FoFormula> ops;
};

namespace {

using Kind = FoFormula::Kind;

bool is_quantifier(Kind k) { return k == Kind::Exists || k == Kind::Forall; }

// Visits each distinct node once, children first.
void post_order(const FoFormula& f,
                const std::function<void(const FoFormula&)>& visit) {
  std::unordered_set<const void*> seen;
  std::function<void(const FoFormula&)> rec = [&](const FoFormula& g) {
    if (!seen.insert(g.id()).second) return;
    switch (g.kind()) {
      case Kind::Not:
      case Kind::Exists:
      case Kind::Forall:
        rec(g.lhs());
        break;
      case Kind::And:
      case Kind::Or:
        rec(g.lhs());
        rec(g.rhs());
        break;
      default:
        break;
    }
    visit(g);
  };
  rec(f);
}

}  // namespace

FoFormula FoFormula::truth() {
  static const FoFormula k(std::make_shared<const Node>(Node{Kind::True, {}, {}, {}, {}}));
  return k;
}

FoFormula FoFormula::falsity() {
  static const FoFormula k(std::make_shared<const Node>(Node{Kind::False, {}, {}, {}, {}}));
  return k;
}

FoFormula FoFormula::less(std::string x, std::string y) {
  return FoFormula(std::make_shared<const Node>(
      Node{Kind::Less, std::move(x), std::move(y), {}, {}}));
}

FoFormula FoFormula::letter(Valuation v, std::string x) {
  return FoFormula(
      std::make_shared<const Node>(Node{Kind::Letter, std::move(x), {}, v, {}}));
}

FoFormula FoFormula::negation(FoFormula f) {
  return FoFormula(
      std::make_shared<const Node>(Node{Kind::Not, {}, {}, {}, {std::move(f)}}));
}

FoFormula FoFormula::conjunction(FoFormula lhs, FoFormula rhs) {
  return FoFormula(std::make_shared<const Node>(
      Node{Kind::And, {}, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

FoFormula FoFormula::disjunction(FoFormula lhs, FoFormula rhs) {
  return FoFormula(std::make_shared<const Node>(
      Node{Kind::Or, {}, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

FoFormula FoFormula::exists(std::string x, FoFormula body) {
  return FoFormula(std::make_shared<const Node>(
      Node{Kind::Exists, std::move(x), {}, {}, {std::move(body)}}));
}

FoFormula FoFormula::forall(std::string x, FoFormula body) {
  return FoFormula(std::make_shared<const Node>(
      Node{Kind::Forall, std::move(x), {}, {}, {std::move(body)}}));
}

FoFormula::Kind FoFormula::kind() const noexcept { return node_->kind; }
const std::string& FoFormula::var() const { return node_->v1; }
const std::string& FoFormula::var2() const { return node_->v2; }
Valuation FoFormula::valuation() const { return node_->val; }
const FoFormula& FoFormula::lhs() const { return node_->ops.at(0); }
const FoFormula& FoFormula::rhs() const { return node_->ops.at(1); }

std::size_t FoFormula::tree_size() const {
  std::unordered_map<const void*, std::size_t> sizes;
  post_order(*this, [&](const FoFormula& g) {
    std::size_t s = 1;
    for (const FoFormula& c : g.node_->ops) s += sizes.at(c.id());
    sizes[g.id()] = s;
  });
  return sizes.at(id());
}

std::size_t FoFormula::dag_size() const {
  std::size_t n = 0;
  post_order(*this, [&](const FoFormula&) { ++n; });
  return n;
}

bool operator==(const FoFormula& a, const FoFormula& b) {
  if (a.id() == b.id()) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.v1 != y.v1 || x.v2 != y.v2 || x.val != y.val ||
      x.ops.size() != y.ops.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.ops.size(); ++i) {
    if (!(x.ops[i] == y.ops[i])) return false;
  }
  return true;
}

std::set<std::string> free_variables(const FoFormula& f) {
  std::unordered_map<const void*, std::set<std::string>> fv;
  post_order(f, [&](const FoFormula& g) {
    std::set<std::string> s;
    switch (g.kind()) {
      case Kind::Less:
        s = {g.var(), g.var2()};
        break;
      case Kind::Letter:
        s = {g.var()};
        break;
      case Kind::Not:
        s = fv.at(g.lhs().id());
        break;
      case Kind::And:
      case Kind::Or:
        s = fv.at(g.lhs().id());
        s.insert(fv.at(g.rhs().id()).begin(), fv.at(g.rhs().id()).end());
        break;
      case Kind::Exists:
      case Kind::Forall:
        s = fv.at(g.lhs().id());
        s.erase(g.var());
        break;
      default:
        break;
    }
    fv[g.id()] = std::move(s);
  });
  return fv.at(f.id());
}

std::set<std::string> bound_variables(const FoFormula& f) {
  std::set<std::string> out;
  post_order(f, [&](const FoFormula& g) {
    if (is_quantifier(g.kind())) out.insert(g.var());
  });
  return out;
}

std::size_t prop_bound(const FoFormula& f) {
  std::size_t bound = 0;
  post_order(f, [&](const FoFormula& g) {
    if (g.kind() != Kind::Letter) return;
    std::uint64_t bits = g.valuation().bits();
    std::size_t width = 0;
    while (bits != 0) {
      ++width;
      bits >>= 1;
    }
    bound = std::max(bound, width);
  });
  return bound;
}

// --- Model checking ---------------------------------------------------------

struct FoModelChecker::Impl {
  struct CNode {
    Kind kind = Kind::True;
    int s1 = -1;
    int s2 = -1;
    Valuation val;
    int a = -1;
    int b = -1;
    std::vector<int> free;  // slots
    // Memo for the current trace, keyed by the values of `free`.
    std::uint64_t stamp = 0;
    std::vector<std::int8_t> dense;
    std::unordered_map<std::uint64_t, bool> sparse;
    enum class Memo { Dense, Sparse, None } memo = Memo::None;
  };

  std::vector<CNode> nodes;
  std::unordered_map<std::string, int> slot_of;
  int root = -1;
  std::vector<std::size_t> env;
  const Trace* word = nullptr;
  std::uint64_t stamp = 0;

  int slot(const std::string& v) {
    return slot_of.emplace(v, static_cast<int>(slot_of.size())).first->second;
  }

  explicit Impl(const FoFormula& f) {
    std::unordered_map<const void*, int> index;
    post_order(f, [&](const FoFormula& g) {
      CNode n;
      n.kind = g.kind();
      std::set<int> free;
      auto child = [&](const FoFormula& c) {
        int i = index.at(c.id());
        free.insert(nodes[static_cast<std::size_t>(i)].free.begin(),
                    nodes[static_cast<std::size_t>(i)].free.end());
        return i;
      };
      switch (g.kind()) {
        case Kind::Less:
          n.s1 = slot(g.var());
          n.s2 = slot(g.var2());
          free = {n.s1, n.s2};
          break;
        case Kind::Letter:
          n.s1 = slot(g.var());
          n.val = g.valuation();
          free = {n.s1};
          break;
        case Kind::Not:
          n.a = child(g.lhs());
          break;
        case Kind::And:
        case Kind::Or:
          n.a = child(g.lhs());
          n.b = child(g.rhs());
          break;
        case Kind::Exists:
        case Kind::Forall:
          n.s1 = slot(g.var());
          n.a = child(g.lhs());
          free.erase(n.s1);
          break;
        default:
          break;
      }
      n.free.assign(free.begin(), free.end());
      index[g.id()] = static_cast<int>(nodes.size());
      nodes.push_back(std::move(n));
    });
    root = index.at(f.id());
    env.assign(slot_of.size(), 0);
  }

  bool run(const Trace& t) {
    word = &t;
    ++stamp;
    const std::size_t base = t.size() + 1;
    for (CNode& n : nodes) {
      if (n.kind == Kind::Less || n.kind == Kind::Letter ||
          n.kind == Kind::True || n.kind == Kind::False) {
        n.memo = CNode::Memo::None;
        continue;
      }
      // Capacity of the key space (n+1)^k, saturating.
      std::uint64_t cells = 1;
      bool overflow = false;
      for (std::size_t k = 0; k < n.free.size() && !overflow; ++k) {
        if (cells > (std::uint64_t{1} << 40) / base) overflow = true;
        cells *= base;
      }
      if (overflow) {
        n.memo = CNode::Memo::None;
      } else if (cells <= 4096) {
        n.memo = CNode::Memo::Dense;
      } else {
        n.memo = CNode::Memo::Sparse;
      }
    }
    return eval(root);
  }

  bool eval(int i) {
    CNode& n = nodes[static_cast<std::size_t>(i)];
    std::uint64_t key = 0;
    if (n.memo != CNode::Memo::None) {
      const std::uint64_t base = word->size() + 1;
      for (int s : n.free) key = key * base + env[static_cast<std::size_t>(s)];
      if (n.stamp != stamp) {
        n.stamp = stamp;
        if (n.memo == CNode::Memo::Dense) {
          std::uint64_t cells = 1;
          for (std::size_t k = 0; k < n.free.size(); ++k) cells *= base;
          n.dense.assign(cells, -1);
        } else {
          n.sparse.clear();
        }
      } else if (n.memo == CNode::Memo::Dense) {
        if (n.dense[key] >= 0) return n.dense[key] != 0;
      } else if (auto it = n.sparse.find(key); it != n.sparse.end()) {
        return it->second;
      }
    }
    bool r = false;
    const std::size_t len = word->size();
    switch (n.kind) {
      case Kind::True:
        r = true;
        break;
      case Kind::False:
        r = false;
        break;
      case Kind::Less:
        r = env[static_cast<std::size_t>(n.s1)] <
            env[static_cast<std::size_t>(n.s2)];
        break;
      case Kind::Letter:
        r = (*word)[env[static_cast<std::size_t>(n.s1)] - 1] == n.val;
        break;
      case Kind::Not:
        r = !eval(n.a);
        break;
      case Kind::And:
        r = eval(n.a) && eval(n.b);
        break;
      case Kind::Or:
        r = eval(n.a) || eval(n.b);
        break;
      case Kind::Exists:
      case Kind::Forall: {
        const bool want = n.kind == Kind::Exists;
        const std::size_t s = static_cast<std::size_t>(n.s1);
        const std::size_t saved = env[s];
        r = !want;
        for (std::size_t p = 1; p <= len; ++p) {
          env[s] = p;
          if (eval(n.a) == want) {
            r = want;
            break;
          }
        }
        env[s] = saved;
        break;
      }
    }
    CNode& m = nodes[static_cast<std::size_t>(i)];
    if (m.memo == CNode::Memo::Dense) {
      m.dense[key] = r ? 1 : 0;
    } else if (m.memo == CNode::Memo::Sparse) {
      m.sparse[key] = r;
    }
    return r;
  }
};

FoModelChecker::FoModelChecker(const FoFormula& f, bool allow_free)
    : impl_(std::make_unique<Impl>(f)) {
  if (!allow_free) {
    auto fv = free_variables(f);
    if (!fv.empty()) {
      throw InvalidArgument("formula has free variable '" + *fv.begin() + "'");
    }
  }
}

FoModelChecker::~FoModelChecker() = default;
FoModelChecker::FoModelChecker(FoModelChecker&&) noexcept = default;
FoModelChecker& FoModelChecker::operator=(FoModelChecker&&) noexcept = default;

bool FoModelChecker::holds(const Trace& t) { return holds(t, {}); }

bool FoModelChecker::holds(
    const Trace& t,
    const std::vector<std::pair<std::string, std::size_t>>& env) {
  std::fill(impl_->env.begin(), impl_->env.end(), 0);
  for (const auto& [name, pos] : env) {
    if (pos == 0 || pos > t.size()) {
      throw InvalidArgument("position of '" + name + "' out of range");
    }
    if (auto it = impl_->slot_of.find(name); it != impl_->slot_of.end()) {
      impl_->env[static_cast<std::size_t>(it->second)] = pos;
    }
  }
  for (int s : impl_->nodes[static_cast<std::size_t>(impl_->root)].free) {
    if (impl_->env[static_cast<std::size_t>(s)] == 0) {
      throw InvalidArgument("free variable left unassigned");
    }
  }
  return impl_->run(t);
}

bool eval_fo(const FoFormula& f, const Trace& t) {
  FoModelChecker checker(f);
  return checker.holds(t);
}

// --- Relativization ---------------------------------------------------------

FoFormula relativize(const FoFormula& f, const std::string& x, RelDir dir,
                     bool zero) {
  if (bound_variables(f).count(x) != 0) {
    throw InvalidArgument("relativization variable '" + x +
                          "' is bound in the formula");
  }
  auto guard = [&](const std::string& y) {
    if (zero) return dir == RelDir::LE ? FoFormula::falsity() : FoFormula::truth();
    // y <= x is ~(x < y); y > x is x < y.
    FoFormula gt = FoFormula::less(x, y);
    return dir == RelDir::LE ? FoFormula::negation(gt) : gt;
  };
  std::unordered_map<const void*, FoFormula> memo;
  post_order(f, [&](const FoFormula& g) {
    auto sub = [&](const FoFormula& c) { return memo.at(c.id()); };
    FoFormula out = g;
    switch (g.kind()) {
      case Kind::Not:
        out = FoFormula::negation(sub(g.lhs()));
        break;
      case Kind::And:
        out = FoFormula::conjunction(sub(g.lhs()), sub(g.rhs()));
        break;
      case Kind::Or:
        out = FoFormula::disjunction(sub(g.lhs()), sub(g.rhs()));
        break;
      case Kind::Exists:
        out = FoFormula::exists(
            g.var(), FoFormula::conjunction(guard(g.var()), sub(g.lhs())));
        break;
      case Kind::Forall:
        out = FoFormula::forall(
            g.var(), FoFormula::disjunction(FoFormula::negation(guard(g.var())),
                                            sub(g.lhs())));
        break;
      default:
        break;
    }
    memo.emplace(g.id(), out);
  });
  return memo.at(f.id());
}

// --- Tree to FO -------------------------------------------------------------

namespace {

FoFormula big_or(std::vector<FoFormula> parts) {
  if (parts.empty()) return FoFormula::falsity();
  FoFormula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = FoFormula::disjunction(acc, parts[i]);
  }
  return acc;
}

FoFormula big_and(std::vector<FoFormula> parts) {
  if (parts.empty()) return FoFormula::truth();
  FoFormula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = FoFormula::conjunction(acc, parts[i]);
  }
  return acc;
}

// ⋁_{v ⊨ γ} v(x).
FoFormula letters_satisfying(const Formula& g, const PropSet& props,
                             const std::string& x) {
  std::vector<FoFormula> parts;
  for (Valuation v : satisfying_valuations(g, props)) {
    parts.push_back(FoFormula::letter(v, x));
  }
  return big_or(std::move(parts));
}

class FoTranslator {
 public:
  explicit FoTranslator(const PropSet& props) : props_(props) {}

  std::string fresh() { return "x" + std::to_string(++counter_); }

  // `t` is binary.
  FoFormula run(const Adt& t) {
    if (auto it = memo_.find(t.id()); it != memo_.end()) return it->second;
    FoFormula out = FoFormula::truth();
    switch (t.kind()) {
      case Adt::Kind::Eps:
        out = FoFormula::forall(fresh(), FoFormula::falsity());
        break;
      case Adt::Kind::Leaf: {
        std::string x = fresh();
        std::string y = fresh();
        FoFormula last = FoFormula::forall(
            y, FoFormula::negation(FoFormula::less(x, y)));
        out = FoFormula::exists(
            x, FoFormula::conjunction(last,
                                      letters_satisfying(t.formula(), props_, x)));
        break;
      }
      case Adt::Kind::Or:
        out = FoFormula::disjunction(run(t.child(0)), run(t.child(1)));
        break;
      case Adt::Kind::Counter:
        out = FoFormula::conjunction(run(t.child(0)),
                                     FoFormula::negation(run(t.child(1))));
        break;
      case Adt::Kind::Sand: {
        FoFormula f1 = run(t.child(0));
        FoFormula f2 = run(t.child(1));
        std::string x = fresh();
        FoFormula split = FoFormula::exists(
            x, FoFormula::conjunction(relativize(f1, x, RelDir::LE, false),
                                      relativize(f2, x, RelDir::GT, false)));
        FoFormula empty_prefix = FoFormula::conjunction(
            relativize(f1, x, RelDir::LE, true), f2);
        out = FoFormula::disjunction(split, empty_prefix);
        break;
      }
      case Adt::Kind::And: {
        FoFormula f1 = run(t.child(0));
        FoFormula f2 = run(t.child(1));
        std::string x = fresh();
        FoFormula prefix = FoFormula::exists(
            x, FoFormula::disjunction(
                   FoFormula::conjunction(relativize(f1, x, RelDir::LE, false), f2),
                   FoFormula::conjunction(relativize(f2, x, RelDir::LE, false), f1)));
        FoFormula empty1 =
            FoFormula::conjunction(relativize(f1, x, RelDir::LE, true), f2);
        FoFormula empty2 =
            FoFormula::conjunction(relativize(f2, x, RelDir::LE, true), f1);
        out = FoFormula::disjunction(FoFormula::disjunction(prefix, empty1),
                                     empty2);
        break;
      }
    }
    memo_.emplace(t.id(), out);
    return out;
  }

 private:
  const PropSet& props_;
  std::size_t counter_ = 0;
  std::unordered_map<const void*, FoFormula> memo_;
};

}  // namespace

FoFormula adt_to_fo(const Adt& t, const PropSet& props) {
  check_alphabet(t, props);
  const Adt binary = normalize_binary(t);
  FoTranslator tr(props);
  return tr.run(binary);
}

FoFormula adt0_to_pi2(const Adt& t, const PropSet& props) {
  if (counterdepth(t) != 0) {
    throw DepthError("the Π2 form needs countermeasure-depth 0");
  }
  const Adt normal = normalize_adt0(t, props);
  std::size_t counter = 0;
  auto fresh = [&] { return "x" + std::to_string(++counter); };
  std::vector<FoFormula> disjuncts;
  for (const Adt& d : normal.children()) {
    if (d.kind() == Adt::Kind::Eps) {
      disjuncts.push_back(FoFormula::forall(fresh(), FoFormula::falsity()));
      continue;
    }
    // ∀y ∃x1 (γ1(x1) ∧ ∃x2 (x1 < x2 ∧ γ2(x2) ∧ … ∃xm (… ∧ y <= xm))) ∧
    // ∃z true. Each ∃ sits under its order guard, so no subformula has
    // more than three free variables. The last conjunct rules out ε,
    // where the ∀ would hold vacuously.
    const std::string y = fresh();
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < d.children().size(); ++i) xs.push_back(fresh());
    FoFormula inner = FoFormula::truth();
    for (std::size_t i = xs.size(); i-- > 0;) {
      std::vector<FoFormula> body;
      if (i > 0) body.push_back(FoFormula::less(xs[i - 1], xs[i]));
      body.push_back(letters_satisfying(d.child(i).formula(), props, xs[i]));
      if (i + 1 == xs.size()) {
        body.push_back(FoFormula::negation(FoFormula::less(xs[i], y)));
      } else {
        body.push_back(inner);
      }
      inner = FoFormula::exists(xs[i], big_and(std::move(body)));
    }
    disjuncts.push_back(FoFormula::conjunction(
        FoFormula::forall(y, inner),
        FoFormula::exists(fresh(), FoFormula::truth())));
  }
  return big_or(std::move(disjuncts));
}

// --- Σ1 to tree -------------------------------------------------------------

namespace {

constexpr std::size_t kMaxLinearizationVars = 6;
constexpr std::size_t kMaxClauses = 100'000;

struct Literal {
  bool positive;
  FoFormula atom;  // True, False, Less or Letter
};

using Clause = std::vector<Literal>;

std::vector<Clause> dnf(const FoFormula& f, bool positive) {
  switch (f.kind()) {
    case Kind::True:
      return positive ? std::vector<Clause>{Clause{}} : std::vector<Clause>{};
    case Kind::False:
      return positive ? std::vector<Clause>{} : std::vector<Clause>{Clause{}};
    case Kind::Less:
    case Kind::Letter:
      return {Clause{Literal{positive, f}}};
    case Kind::Not:
      return dnf(f.lhs(), !positive);
    case Kind::And:
    case Kind::Or: {
      std::vector<Clause> l = dnf(f.lhs(), positive);
      std::vector<Clause> r = dnf(f.rhs(), positive);
      const bool product = (f.kind() == Kind::And) == positive;
      if (!product) {
        l.insert(l.end(), r.begin(), r.end());
        if (l.size() > kMaxClauses) throw BudgetExceeded("DNF too large");
        return l;
      }
      if (l.size() * r.size() > kMaxClauses) throw BudgetExceeded("DNF too large");
      std::vector<Clause> out;
      out.reserve(l.size() * r.size());
      for (const Clause& a : l) {
        for (const Clause& b : r) {
          Clause c = a;
          c.insert(c.end(), b.begin(), b.end());
          out.push_back(std::move(c));
        }
      }
      return out;
    }
    case Kind::Exists:
    case Kind::Forall:
      break;
  }
  throw InvalidArgument("quantifier inside the matrix of a Σ1 formula");
}

// Calls visit(block_of) for every ordered set partition of n items, where
// block_of[i] is the 0-based block of item i and blocks are numbered left
// to right. Ordered by number of blocks, then lexicographically.
void for_each_ordered_partition(
    std::size_t n,
    const std::function<void(const std::vector<std::size_t>&, std::size_t)>& visit) {
  if (n == 0) {
    visit({}, 0);
    return;
  }
  for (std::size_t blocks = 1; blocks <= n; ++blocks) {
    std::vector<std::size_t> f(n, 0);
    while (true) {
      std::vector<bool> hit(blocks, false);
      for (std::size_t b : f) hit[b] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
        visit(f, blocks);
      }
      std::size_t pos = n;
      while (pos > 0 && f[pos - 1] + 1 == blocks) --pos;
      if (pos == 0) break;
      ++f[pos - 1];
      for (std::size_t q = pos; q < n; ++q) f[q] = 0;
    }
  }
}

bool order_ok(const std::vector<Literal>& order,
              const std::unordered_map<std::string, std::size_t>& var_index,
              const std::vector<std::size_t>& block_of) {
  for (const Literal& l : order) {
    const std::size_t a = block_of[var_index.at(l.atom.var())];
    const std::size_t b = block_of[var_index.at(l.atom.var2())];
    if (l.positive ? !(a < b) : (a < b)) return false;
  }
  return true;
}

std::unordered_map<std::string, std::size_t> index_vars(
    const std::vector<std::string>& vars) {
  if (vars.size() > kMaxLinearizationVars) {
    throw BudgetExceeded("more than " + std::to_string(kMaxLinearizationVars) +
                         " variables to linearize");
  }
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!idx.emplace(vars[i], i).second) {
      throw InvalidArgument("duplicate variable '" + vars[i] + "'");
    }
  }
  return idx;
}

}  // namespace

std::vector<std::vector<std::vector<std::string>>> order_linearizations(
    const std::vector<std::string>& vars,
    const std::vector<FoFormula>& literals) {
  auto idx = index_vars(vars);
  std::vector<Literal> order;
  for (const FoFormula& l : literals) {
    bool positive = true;
    FoFormula atom = l;
    if (atom.kind() == Kind::Not) {
      positive = false;
      atom = atom.lhs();
    }
    if (atom.kind() != Kind::Less) {
      throw InvalidArgument("order literal must be x < y or ~(x < y)");
    }
    if (!idx.count(atom.var()) || !idx.count(atom.var2())) {
      throw InvalidArgument("order literal mentions an unlisted variable");
    }
    order.push_back({positive, atom});
  }
  std::vector<std::vector<std::vector<std::string>>> out;
  for_each_ordered_partition(
      vars.size(), [&](const std::vector<std::size_t>& block_of, std::size_t k) {
        if (!order_ok(order, idx, block_of)) return;
        std::vector<std::vector<std::string>> blocks(k);
        for (std::size_t i = 0; i < vars.size(); ++i) {
          blocks[block_of[i]].push_back(vars[i]);
        }
        out.push_back(std::move(blocks));
      });
  return out;
}

Adt sigma1_to_adt(const FoFormula& f, const PropSet& props) {
  std::vector<std::string> vars;
  FoFormula matrix = f;
  while (matrix.kind() == Kind::Exists) {
    if (std::find(vars.begin(), vars.end(), matrix.var()) == vars.end()) {
      vars.push_back(matrix.var());
    }
    matrix = matrix.lhs();
  }
  if (!bound_variables(matrix).empty()) {
    throw InvalidArgument("not an existential prefix over a quantifier-free matrix");
  }
  for (const std::string& v : free_variables(matrix)) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw InvalidArgument("formula has free variable '" + v + "'");
    }
  }
  if (prop_bound(matrix) > props.size()) {
    throw AlphabetMismatch("letter outside the proposition set");
  }
  auto idx = index_vars(vars);

  std::vector<Adt> disjuncts;
  for (const Clause& clause : dnf(matrix, true)) {
    std::vector<Literal> order;
    std::vector<Literal> letters;
    bool dead = false;
    for (const Literal& l : clause) {
      switch (l.atom.kind()) {
        case Kind::True:
          dead = dead || !l.positive;
          break;
        case Kind::False:
          dead = dead || l.positive;
          break;
        case Kind::Less:
          order.push_back(l);
          break;
        default:
          letters.push_back(l);
          break;
      }
    }
    if (dead) continue;
    for_each_ordered_partition(
        vars.size(), [&](const std::vector<std::size_t>& block_of, std::size_t k) {
          if (!order_ok(order, idx, block_of)) return;
          std::vector<std::optional<Formula>> goal(k);
          for (const Literal& l : letters) {
            Formula chi = characteristic_formula(l.atom.valuation(), props);
            if (!l.positive) chi = Formula::negation(chi);
            auto& g = goal[block_of[idx.at(l.atom.var())]];
            g = g ? Formula::conjunction(*g, chi) : chi;
          }
          std::vector<Adt> leaves;
          for (const auto& g : goal) {
            Formula gamma = g.value_or(Formula::top());
            if (satisfying_valuations(gamma, props).empty()) return;
            leaves.push_back(Adt::leaf(gamma));
          }
          if (leaves.empty()) {
            disjuncts.push_back(etrue());
          } else {
            disjuncts.push_back(
                Adt::sand_node({Adt::sand_node(std::move(leaves)), etrue()}));
          }
        });
  }
  if (disjuncts.empty()) return Adt::leaf(Formula::bottom());
  return Adt::or_node(std::move(disjuncts));
}

// --- Alternation ------------------------------------------------------------

namespace {

constexpr unsigned kEx = 1;
constexpr unsigned kAll = 2;

struct AltInfo {
  std::size_t blocks = 0;
  unsigned leaders = 0;  // kinds leading the longest paths
};

AltInfo combine(const AltInfo& a, const AltInfo& b) {
  if (a.blocks != b.blocks) return a.blocks > b.blocks ? a : b;
  return {a.blocks, a.leaders | b.leaders};
}

class AltAnalyzer {
 public:
  AltInfo run(const FoFormula& f, bool positive) {
    auto key = std::make_pair(f.id(), positive);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    AltInfo out;
    switch (f.kind()) {
      case Kind::Not:
        out = run(f.lhs(), !positive);
        break;
      case Kind::And:
      case Kind::Or:
        out = combine(run(f.lhs(), positive), run(f.rhs(), positive));
        break;
      case Kind::Exists:
      case Kind::Forall: {
        const unsigned q = (f.kind() == Kind::Exists) == positive ? kEx : kAll;
        const unsigned other = q == kEx ? kAll : kEx;
        AltInfo in = run(f.lhs(), positive);
        if (in.blocks == 0) {
          out = {1, q};
        } else if (in.leaders & other) {
          out = {in.blocks + 1, q};
        } else {
          out = {in.blocks, q};
        }
        break;
      }
      default:
        break;
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<const void*, bool>& k) const {
      return std::hash<const void*>()(k.first) * 2 + (k.second ? 1 : 0);
    }
  };
  std::unordered_map<std::pair<const void*, bool>, AltInfo, KeyHash> memo_;
};

}  // namespace

AltClass alternation(const FoFormula& f) {
  AltAnalyzer a;
  AltInfo info = a.run(f, true);
  if (info.blocks == 0) return {0, AltKind::BothBelow};
  if (info.leaders == kEx) return {info.blocks, AltKind::Sigma};
  if (info.leaders == kAll) return {info.blocks, AltKind::Pi};
  return {info.blocks + 1, AltKind::BothBelow};
}

bool in_sigma(const AltClass& c, std::size_t m) {
  switch (c.kind) {
    case AltKind::Sigma:
    case AltKind::BothBelow:
      return c.level <= m;
    case AltKind::Pi:
      return c.level + 1 <= m;
  }
  return false;
}

bool in_pi(const AltClass& c, std::size_t m) {
  switch (c.kind) {
    case AltKind::Pi:
    case AltKind::BothBelow:
      return c.level <= m;
    case AltKind::Sigma:
      return c.level + 1 <= m;
  }
  return false;
}

std::optional<Trace> sat_bounded(const FoFormula& f, const PropSet& props,
                                 std::size_t maxlen, std::size_t budget) {
  if (prop_bound(f) > props.size()) {
    throw AlphabetMismatch("letter outside the proposition set");
  }
  FoModelChecker checker(f);
  std::optional<Trace> found;
  for_each_trace(props, maxlen, budget, [&](const Trace& w, std::size_t) {
    if (checker.holds(w)) {
      found = w;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace adtlab
