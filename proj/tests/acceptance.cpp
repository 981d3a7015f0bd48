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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Corpus sizes, seeds, and time limits are fixed
// here and nowhere else.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "adtlab/decision.hpp"
#include "adtlab/fo.hpp"
#include "adtlab/generators.hpp"
#include "adtlab/semantics.hpp"
#include "adtlab/sere.hpp"
#include "adtlab/textio.hpp"
#include "adtlab/witness.hpp"
#include "support/random.hpp"

namespace adtlab {
namespace {

// Pinned limits.
constexpr double kQuickSeconds = 1.0;
constexpr double kSmpSeconds = 60.0;
constexpr double kFoSeconds = 120.0;
constexpr double kWitnessSeconds = 120.0;
constexpr int kSmpCorpus = 500;
constexpr int kFoCorpus = 200;
constexpr int kPi2Corpus = 100;
constexpr int kSigma1Corpus = 100;
constexpr int kSereCorpus = 200;
constexpr int kEquivPairs = 100;
constexpr int kTriples = 200;
constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;
  double limit = 0;  // seconds, 0 for none

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Corpus = std::vector<std::pair<Adt, PropSet>>;

Corpus depth_le1_corpus() {
  testing::Rng rng(kSeed + 3);
  Corpus out;
  for (int i = 0; i < kSmpCorpus; ++i) {
    const std::size_t n = rng.between(1, 2);
    out.push_back(
        {testing::random_enumerable_adt(rng, {n, 8, 1, 3, 3}), testing::props_of_size(n)});
  }
  return out;
}

Outcome sandeach() {
  Outcome o{true, "", kQuickSeconds};
  PropSet props{"p"};
  Adt not_p = strict(Formula::negation(Formula::var(0)));
  Adt p = strict(Formula::var(0));
  if (!member(Adt::sand_node({not_p, p}), Trace{Valuation(0), Valuation(1)})) {
    o.fail("SAND rejects {} {p}");
  }
  if (!enumerate(Adt::and_node({not_p, p}), props, 5).empty()) o.fail("AND form is non-empty");
  return o;
}

Outcome introductory() {
  Outcome o{true, "", kQuickSeconds};
  PropSet props{"E", "S1", "S2", "G"};
  Adt ex1 = parse_adt("SAND([E], C([S1 & S2], ALLR([G])))", props);
  const Valuation e{1}, s1{2}, s2{4}, g{8}, s12{6}, none{0};
  const std::vector<Trace> suite{
      Trace{},          Trace{e},           Trace{e, s12},       Trace{e, g, s12},
      Trace{e, none, s12}, Trace{s12, e},   Trace{e, s1, s2},    Trace{Valuation(7)},
      Trace{e, e, s12, s12}, Trace{e, Valuation(14)}};
  // E-ending prefix, then a remainder ending in S1 & S2 with no G letter.
  auto expected = [&](const Trace& t) {
    for (std::size_t cut = 1; cut < t.size(); ++cut) {
      if ((t[cut - 1].bits() & 1) == 0) continue;
      bool ends = (t.back().bits() & 6) == 6;
      bool has_g = false;
      for (std::size_t q = cut; q < t.size(); ++q) has_g = has_g || (t[q].bits() & 8) != 0;
      if (ends && !has_g) return true;
    }
    return false;
  };
  for (const Trace& t : suite) {
    if (member(ex1, t, props) != expected(t)) o.fail("disagreement on " + render(t, props));
  }
  if (counterdepth(ex1) != 1) o.fail("counterdepth(ex1) != 1");
  PropSet props2{"E", "S1", "S2", "G", "D"};
  Adt ex2 = parse_adt("SAND([E], C([S1 & S2], ALLB(C([G], [D]))))", props2);
  if (counterdepth(ex2) != 2) o.fail("counterdepth(ex2) != 2");
  return o;
}

Outcome small_model(const Corpus& corpus) {
  Outcome o{true, "", kSmpSeconds};
  for (const auto& [t, props] : corpus) {
    SmpResult r = nonempty_smp(t, props);
    const bool any = !enumerate(t, props, size(t)).empty();
    if (r.nonempty != any) o.fail("verdict differs on " + render(t, props));
    if (r.nonempty && (!r.witness || r.witness->size() > size(t) || !member(t, *r.witness))) {
      o.fail("bad witness for " + render(t, props));
    }
  }
  return o;
}

Outcome generator_laws(const Corpus& corpus) {
  Outcome o;
  for (const auto& [t, props] : corpus) {
    GenSet g = gen(t, props);
    for (const Trace& w : g.traces) {
      if (!member(t, w)) o.fail("generator outside language of " + render(t, props));
      if (w.size() > leaves_count(t)) o.fail("generator too long for " + render(t, props));
    }
    for (const Trace& w : enumerate(t, props, 4)) {
      if (w.empty()) continue;
      bool lifted = std::any_of(g.traces.begin(), g.traces.end(),
                                [&](const Trace& x) { return is_lift(x, w); });
      if (!lifted) o.fail("no generator below " + render(w, props) + " in " + render(t, props));
    }
  }
  return o;
}

Outcome fo_translation() {
  Outcome o{true, "", kFoSeconds};
  testing::Rng rng(kSeed + 5);
  for (int i = 0; i < kFoCorpus; ++i) {
    const std::size_t n = rng.between(1, 2);
    PropSet props = testing::props_of_size(n);
    Adt t = testing::random_adt(rng, {n, 8, 2, 3, 3});
    FoModelChecker mc(adt_to_fo(t, props));
    for (const Trace& w : testing::all_traces(n, 4)) {
      if (mc.holds(w) != member(t, w)) o.fail("disagreement on " + render(t, props));
    }
  }
  return o;
}

Outcome pi2_translation() {
  Outcome o;
  testing::Rng rng(kSeed + 6);
  for (int i = 0; i < kPi2Corpus; ++i) {
    const std::size_t n = rng.between(1, 2);
    PropSet props = testing::props_of_size(n);
    Adt t = testing::random_adt(rng, {n, 8, 0, 3, 3});
    FoFormula f = adt0_to_pi2(t, props);
    AltClass c = alternation(f);
    // Level at most 2 and of universal lead; a lower level counts as Pi too.
    if (!in_pi(c, 2) || (c.level == 2 && c.kind != AltKind::Pi)) {
      o.fail("not in Pi2: " + render(t, props));
    }
    FoModelChecker mc(f);
    for (const Trace& w : testing::all_traces(n, 4)) {
      if (mc.holds(w) != member(t, w)) o.fail("disagreement on " + render(t, props));
    }
  }
  return o;
}

Outcome sigma1_round_trip() {
  Outcome o;
  using F = FoFormula;
  auto orders = order_linearizations({"x", "y", "z"},
                                     {F::less("x", "y"), F::negation(F::less("y", "z"))});
  if (orders.size() != 4) o.fail("linearization example gives " + std::to_string(orders.size()));
  testing::Rng rng(kSeed + 7);
  for (int i = 0; i < kSigma1Corpus; ++i) {
    const std::size_t n = rng.between(1, 2);
    PropSet props = testing::props_of_size(n);
    F f = testing::random_sigma1(rng, n, 3);
    Adt t = sigma1_to_adt(f, props);
    if (counterdepth(t) != 0) o.fail("depth above 0 for " + render(f, props));
    for (const Trace& w : testing::all_traces(n, 4)) {
      if (member(t, w) != eval_fo(f, w)) o.fail("disagreement on " + render(f, props));
    }
  }
  return o;
}

Outcome sere_round_trips() {
  Outcome o;
  testing::Rng rng(kSeed + 8);
  for (int i = 0; i < kSereCorpus; ++i) {
    const std::size_t n = rng.between(1, 2);
    PropSet props = testing::props_of_size(n);
    Adt t = testing::random_adt(rng, {n, 6, 2, 3, 3});
    Sere e = adt_to_sere(t, props);
    Adt back = sere_to_adt(e, props);
    SereMatcher m(e);
    for (const Trace& w : testing::all_traces(n, 4)) {
      const bool in = member(t, w);
      if (m.matches(w) != in || member(back, w) != in) o.fail("tree " + render(t, props));
    }
  }
  for (int i = 0; i < kSereCorpus; ++i) {
    const std::size_t n = rng.between(1, 2);
    PropSet props = testing::props_of_size(n);
    Sere e = testing::random_sere(rng, n, 12);
    Adt t = sere_to_adt(e, props);
    if (size(t) > 8 * node_count(e)) o.fail("size bound broken on " + render(e, props));
    SereMatcher again(adt_to_sere(t, props));
    for (const Trace& w : testing::all_traces(n, 4)) {
      const bool in = sere_member(e, w);
      if (member(t, w) != in || again.matches(w) != in) o.fail("expression " + render(e, props));
    }
  }
  return o;
}

Outcome witness_languages() {
  Outcome o{true, "", kWitnessSeconds};
  const PropSet& ab = ab_props();
  if (enumerate(build_witness_adt(1).base, ab, 6) !=
      std::vector<Trace>{ab_word("ab"), ab_word("abab"), ab_word("ababab")}) {
    o.fail("first level is not (ab)+ up to 6");
  }
  auto by_predicate = [&](std::size_t k, WitnessKind kind) {
    std::vector<Trace> out;
    for (const Trace& w : testing::all_traces(1, 8)) {
      if (in_witness(w, k, kind)) out.push_back(w);
    }
    return out;
  };
  const WitnessKind kinds[] = {WitnessKind::W, WitnessKind::Plus, WitnessKind::Minus};
  for (std::size_t k = 1; k <= 4; ++k) {
    WitnessTrees trees = build_witness_adt(k);
    const Adt* of[] = {&trees.base, &trees.plus, &trees.minus};
    for (int i = 0; i < 3; ++i) {
      if (counterdepth(*of[i]) != k + 1) o.fail("depth law fails at level " + std::to_string(k));
      if (k <= 2 && enumerate(*of[i], ab, 8) != by_predicate(k, kinds[i])) {
        o.fail("tree language differs at level " + std::to_string(k));
      }
      if (k <= 3 && recursive_witness(k, kinds[i], 8) != by_predicate(k, kinds[i])) {
        o.fail("recursive form differs at level " + std::to_string(k));
      }
    }
  }
  return o;
}

Outcome equivalence_methods() {
  Outcome o;
  testing::Rng rng(kSeed + 10);
  PropSet props{"p"};
  for (int i = 0; i < kEquivPairs; ++i) {
    Adt a = testing::random_adt(rng, {1, 4, 0, 2, 2});
    Adt b = testing::random_adt(rng, {1, 4, 0, 2, 2});
    const std::size_t n = std::max(size(a), size(b));
    const bool exact = equiv(a, b, props, EquivMethod::Gen0).answer == Answer::Yes;
    const bool bounded = equiv(a, b, props, EquivMethod::Bounded, n).answer == Answer::Yes;
    const bool reduced = equiv(a, b, props, EquivMethod::Reduction).answer == Answer::Yes;
    if (exact != bounded || exact != reduced) {
      o.fail("methods disagree on " + render(a, props) + " vs " + render(b, props));
    }
  }
  return o;
}

Outcome associativity() {
  Outcome o;
  testing::Rng rng(kSeed + 11);
  PropSet props{"p", "q"};
  for (int i = 0; i < kTriples; ++i) {
    Adt a = testing::random_adt(rng, {2, 3, 1, 2, 2});
    Adt b = testing::random_adt(rng, {2, 3, 1, 2, 2});
    Adt c = testing::random_adt(rng, {2, 3, 1, 2, 2});
    const char* names[] = {"OR", "SAND", "AND"};
    int which = 0;
    for (auto make : {&Adt::or_node, &Adt::sand_node, &Adt::and_node}) {
      auto flat = enumerate(make({a, b, c}), props, 4);
      if (enumerate(make({a, make({b, c})}), props, 4) != flat ||
          enumerate(make({make({a, b}), c}), props, 4) != flat) {
        o.fail(std::string("counterexample for ") + names[which] + " on " + render(a, props) +
               ", " + render(b, props) + ", " + render(c, props));
      }
      ++which;
    }
  }
  return o;
}

}  // namespace
}  // namespace adtlab

int main(int argc, char** argv) {
  using namespace adtlab;
  using Clock = std::chrono::steady_clock;
  Corpus corpus;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "sand versus each example", sandeach},
      {2, "introductory trees", introductory},
      {3, "small model property", [&] {
         corpus = depth_le1_corpus();
         return small_model(corpus);
       }},
      {4, "generator laws", [&] { return generator_laws(corpus); }},
      {5, "first-order translation", fo_translation},
      {6, "universal-existential translation", pi2_translation},
      {7, "existential round trip", sigma1_round_trip},
      {8, "expression round trips", sere_round_trips},
      {9, "witness languages", witness_languages},
      {10, "equivalence methods agree", equivalence_methods},
      {11, "operator associativity", associativity},
  };
  // Optional criterion ids on the command line; 4 needs the corpus of 3.
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  auto selected = [&](int id) {
    if (wanted.empty()) return true;
    if (std::find(wanted.begin(), wanted.end(), id) != wanted.end()) return true;
    return id == 3 && std::find(wanted.begin(), wanted.end(), 4) != wanted.end();
  };
  int failures = 0;
  int ran = 0;
  for (const Criterion& c : criteria) {
    if (!selected(c.id)) continue;
    ++ran;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.pass && o.limit > 0 && secs >= o.limit) {
      std::ostringstream why;
      why << "took " << secs << " s, limit " << o.limit << " s";
      o.fail(why.str());
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %-36s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
