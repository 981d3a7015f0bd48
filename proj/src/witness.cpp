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

#include "adtlab/witness.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "adtlab/errors.hpp"

namespace adtlab {

const PropSet& ab_props() {
  static const PropSet props{"p"};
  return props;
}

Trace ab_word(std::string_view text) {
  Trace w;
  for (char c : text) {
    if (c == 'a') {
      w.push_back(kLetterA);
    } else if (c == 'b') {
      w.push_back(kLetterB);
    } else {
      throw InvalidArgument(std::string("not an a/b word: '") + c + "'");
    }
  }
  return w;
}

std::string ab_string(const Trace& w) {
  std::string s;
  s.reserve(w.size());
  for (Valuation v : w) {
    if (v == kLetterA) {
      s.push_back('a');
    } else if (v == kLetterB) {
      s.push_back('b');
    } else {
      throw AlphabetMismatch("letter outside {a, b}");
    }
  }
  return s;
}

long measure(const Trace& w) {
  long m = 0;
  for (char c : ab_string(w)) m += c == 'a' ? 1 : -1;
  return m;
}

bool in_witness(const Trace& w, std::size_t k, WitnessKind kind) {
  if (k == 0) throw InvalidArgument("witness level must be at least 1");
  const long top = static_cast<long>(k);
  const long lo = kind == WitnessKind::Minus ? -top : 0;
  const long hi = kind == WitnessKind::Minus ? 0 : top;
  long m = 0;
  bool reached = false;
  // The empty prefix has measure 0, inside every range.
  for (char c : ab_string(w)) {
    m += c == 'a' ? 1 : -1;
    if (m < lo || m > hi) return false;
    reached = reached || m == top;
  }
  switch (kind) {
    case WitnessKind::W:
      return m == 0 && reached;
    case WitnessKind::Plus:
      return m == top;
    case WitnessKind::Minus:
      return m == -top;
  }
  return false;
}

// --- Swap -------------------------------------------------------------------

Trace swap(const Trace& w) {
  Trace out;
  for (char c : ab_string(w)) out.push_back(c == 'a' ? kLetterB : kLetterA);
  return out;
}

Formula swap(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Var:
      if (f.prop() != 0) throw AlphabetMismatch("swap needs the alphabet {a, b}");
      return Formula::negation(f);
    case Formula::Kind::Not:
      if (f.lhs().kind() == Formula::Kind::Var) {
        if (f.lhs().prop() != 0) {
          throw AlphabetMismatch("swap needs the alphabet {a, b}");
        }
        return f.lhs();
      }
      return Formula::negation(swap(f.lhs()));
    case Formula::Kind::And:
      return Formula::conjunction(swap(f.lhs()), swap(f.rhs()));
    case Formula::Kind::Or:
      return Formula::disjunction(swap(f.lhs()), swap(f.rhs()));
  }
  return f;
}

Adt swap(const Adt& t) {
  std::unordered_map<const void*, Adt> memo;
  auto rec = [&](auto& self, const Adt& x) -> Adt {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    Adt out = x;
    if (x.kind() == Adt::Kind::Leaf) {
      out = Adt::leaf(swap(x.formula()));
    } else if (x.kind() != Adt::Kind::Eps) {
      std::vector<Adt> kids;
      for (const Adt& c : x.children()) kids.push_back(self(self, c));
      switch (x.kind()) {
        case Adt::Kind::Or:
          out = Adt::or_node(std::move(kids));
          break;
        case Adt::Kind::Sand:
          out = Adt::sand_node(std::move(kids));
          break;
        case Adt::Kind::And:
          out = Adt::and_node(std::move(kids));
          break;
        default:
          out = Adt::counter(kids[0], kids[1]);
          break;
      }
    }
    memo.emplace(x.id(), out);
    return out;
  };
  return rec(rec, t);
}

// --- Trees ------------------------------------------------------------------

namespace {

Adt leaf_a() { return Adt::leaf(Formula::var(0)); }
Adt leaf_b() { return Adt::leaf(Formula::negation(Formula::var(0))); }
Adt strict_a() { return strict_valuation(kLetterA, ab_props()); }
Adt strict_b() { return strict_valuation(kLetterB, ab_props()); }

// C(first, OR(ALLR(strict tail), ALLB(C(GE(2), AND(ALLR(a), ALLR(b)))))).
Adt level_one(const Adt& first, const Adt& strict_head) {
  Adt repeated = Adt::counter(
      build_length(LengthKind::AtLeast, 2),
      Adt::and_node({followed_by_any(leaf_a()), followed_by_any(leaf_b())}));
  return Adt::counter(
      first, Adt::or_node({followed_by_any(strict_head), within_any(repeated)}));
}

}  // namespace

WitnessTrees build_witness_adt(std::size_t k) {
  if (k == 0) throw InvalidArgument("witness level must be at least 1");
  // level[i] holds the trees for W_i; W_0 = {ε}.
  std::vector<WitnessTrees> level;
  level.push_back({Adt::eps(), Adt::eps(), Adt::eps()});
  level.push_back({level_one(leaf_b(), strict_b()),
                   level_one(leaf_a(), strict_b()),
                   level_one(leaf_b(), strict_a())});
  for (std::size_t j = 2; j <= k; ++j) {
    const WitnessTrees& prev = level[j - 1];
    Adt count = Adt::or_node(
        {Adt::sand_node({leaf_a(), prev.plus, followed_by_any(strict_a())}),
         Adt::sand_node({leaf_b(), prev.minus, followed_by_any(strict_b())})});
    std::vector<Adt> unions;
    for (std::size_t i = 0; i < j; ++i) {
      unions.push_back(Adt::sand_node({level[i].base, strict_a(), prev.plus}));
    }
    Adt base = Adt::counter(
        Adt::sand_node({prev.plus, strict_a(), etrue(), strict_b(), prev.minus}),
        count);
    Adt plus = Adt::counter(
        Adt::or_node({Adt::sand_node(
                          {prev.plus, strict_a(), etrue(), strict_a(), prev.plus}),
                      Adt::or_node(std::move(unions))}),
        count);
    Adt minus = swap(plus);
    level.push_back({base, plus, minus});
  }
  return level[k];
}

// --- Recursive characterization ---------------------------------------------

namespace {

using Lang = std::set<std::string>;

class Bounded {
 public:
  explicit Bounded(std::size_t maxlen) : n_(maxlen) {
    all_.insert("");
    Lang layer{""};
    for (std::size_t len = 1; len <= n_; ++len) {
      Lang next;
      for (const std::string& w : layer) {
        next.insert(w + "a");
        next.insert(w + "b");
      }
      all_.insert(next.begin(), next.end());
      layer = std::move(next);
    }
  }

  const Lang& all() const { return all_; }

  Lang cat(const Lang& x, const Lang& y) const {
    Lang out;
    for (const std::string& u : x) {
      for (const std::string& v : y) {
        if (u.size() + v.size() <= n_) out.insert(u + v);
      }
    }
    return out;
  }

  Lang cat(std::initializer_list<Lang> parts) const {
    Lang acc{""};
    for (const Lang& p : parts) acc = cat(acc, p);
    return acc;
  }

 private:
  std::size_t n_;
  Lang all_;
};

Lang minus_set(const Lang& x, const Lang& y) {
  Lang out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                      std::inserter(out, out.end()));
  return out;
}

Lang join(const Lang& x, const Lang& y) {
  Lang out = x;
  out.insert(y.begin(), y.end());
  return out;
}

Lang swapped(const Lang& x) {
  Lang out;
  for (std::string w : x) {
    for (char& c : w) c = c == 'a' ? 'b' : 'a';
    out.insert(std::move(w));
  }
  return out;
}

}  // namespace

std::vector<Trace> recursive_witness(std::size_t k, WitnessKind kind,
                                     std::size_t maxlen) {
  Bounded b(maxlen);
  const Lang a{"a"};
  const Lang bl{"b"};
  const Lang& any = b.all();
  std::vector<Lang> base{{""}};
  Lang plus{""};
  Lang minus{""};
  for (std::size_t j = 0; j < k; ++j) {
    Lang excluded =
        join(b.cat({any, a, plus, a, any}), b.cat({any, bl, minus, bl, any}));
    Lang next_base = minus_set(b.cat({plus, a, any, bl, minus}), excluded);
    Lang next_plus = b.cat({plus, a, any, a, plus});
    for (const Lang& w : base) next_plus = join(next_plus, b.cat({w, a, plus}));
    next_plus = minus_set(next_plus, excluded);
    base.push_back(std::move(next_base));
    minus = swapped(next_plus);
    plus = std::move(next_plus);
  }
  const Lang& pick = kind == WitnessKind::W       ? base[k]
                     : kind == WitnessKind::Plus ? plus
                                                 : minus;
  std::vector<Trace> out;
  for (const std::string& w : pick) out.push_back(ab_word(w));
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

}  // namespace adtlab
