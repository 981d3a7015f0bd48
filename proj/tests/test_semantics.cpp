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

#include <gtest/gtest.h>

#include "adtlab/errors.hpp"
#include "adtlab/semantics.hpp"
#include "adtlab/textio.hpp"
#include "adtlab/witness.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

namespace adtlab {
namespace {

const Valuation kEmpty{0};
const Valuation kP{1};

Adt strict_not_p() { return strict(Formula::negation(Formula::var(0))); }
Adt strict_p() { return strict(Formula::var(0)); }

TEST(Member, SandVersusEach) {
  const Trace t{kEmpty, kP};
  EXPECT_TRUE(member(Adt::sand_node({strict_not_p(), strict_p()}), t));
  EXPECT_FALSE(member(Adt::and_node({strict_not_p(), strict_p()}), t));
}

TEST(Member, EmptyTrace) {
  EXPECT_TRUE(member(Adt::eps(), Trace{}));
  EXPECT_FALSE(member(Adt::leaf(Formula::var(0)), Trace{}));
  EXPECT_FALSE(member(Adt::eps(), Trace{kP}));
}

TEST(Member, IntroductoryTree) {
  PropSet props{"E", "S1", "S2", "G"};
  Adt t = parse_adt("SAND([E], C([S1 & S2], ALLR([G])))", props);
  const Valuation e{1};
  const Valuation s12{6};
  const Valuation g{8};
  EXPECT_TRUE(member(t, Trace{e, s12}, props));
  EXPECT_FALSE(member(t, Trace{e, g, s12}, props));
}

TEST(Member, AlphabetChecked) {
  EXPECT_THROW(member(Adt::leaf(Formula::var(0)), Trace{Valuation(2)}, PropSet{"p"}),
               AlphabetMismatch);
}

TEST(Member, EpsilonCases) {
  testing::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    std::vector<Adt> kids;
    for (std::size_t k = rng.between(1, 3); k > 0; --k) {
      kids.push_back(testing::random_adt(rng, {1, 3, 1, 2, 2}));
    }
    bool all = true;
    for (const Adt& c : kids) all = all && member(c, Trace{});
    EXPECT_EQ(member(Adt::sand_node(kids), Trace{}), all);
    EXPECT_EQ(member(Adt::and_node(kids), Trace{}), all);
    Adt c = Adt::counter(kids[0], kids.back());
    EXPECT_EQ(member(c, Trace{}), member(kids[0], Trace{}) && !member(kids.back(), Trace{}));
  }
}

TEST(Member, AgreesWithSetOracle) {
  testing::Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng.between(1, 2);
    PropSet props = testing::props_of_size(n);
    Adt t = testing::random_adt(rng, {n, 8, 3, 3, 3});
    oracle::Bounded b(n, 4);
    oracle::Lang lang = oracle::adt_language(t, b);
    for (const Trace& w : testing::all_traces(n, 4)) {
      ASSERT_EQ(member(t, w), lang.count(oracle::word_of(w)) == 1)
          << render(t, props) << " on " << render(w, props);
    }
  }
}

TEST(Evaluator, IncrementalMatchesFresh) {
  testing::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    Adt t = testing::random_adt(rng, {2, 8, 2, 3, 3});
    TraceEvaluator ev(t, 5);
    for (int k = 0; k < 20; ++k) {
      Trace w = testing::random_trace(rng, 2, rng.below(6));
      ASSERT_EQ(ev.accepts(w), member(t, w));
    }
  }
  EXPECT_THROW(TraceEvaluator(Adt::eps(), 2).accepts(Trace{kP, kP, kP}), InvalidArgument);
}

TEST(Enumerate, Examples) {
  PropSet props{"p"};
  std::vector<Trace> two =
      enumerate(build_length(LengthKind::Exactly, 2), props, 3);
  EXPECT_EQ(two, (std::vector<Trace>{Trace{kEmpty, kEmpty}, Trace{kEmpty, kP},
                                     Trace{kP, kEmpty}, Trace{kP, kP}}));
  for (std::size_t k = 0; k <= 5; ++k) {
    EXPECT_TRUE(enumerate(Adt::leaf(Formula::bottom()), props, k).empty());
  }
  std::vector<Trace> w1 = enumerate(build_witness_adt(1).base, ab_props(), 6);
  EXPECT_EQ(w1, (std::vector<Trace>{ab_word("ab"), ab_word("abab"), ab_word("ababab")}));
}

TEST(Enumerate, MatchesMembership) {
  testing::Rng rng(34);
  PropSet props{"p", "q"};
  for (int i = 0; i < 50; ++i) {
    Adt t = testing::random_adt(rng, {2, 8, 2, 3, 3});
    std::vector<Trace> got = enumerate(t, props, 4);
    std::vector<Trace> expected;
    for (const Trace& w : testing::all_traces(2, 4)) {
      if (member(t, w)) expected.push_back(w);
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(Enumerate, RefusesOverBudget) {
  PropSet props{"p", "q"};
  EXPECT_EQ(candidate_count(props, 3, 1000), 1u + 4 + 16 + 64);
  EXPECT_THROW(enumerate(etrue(), props, 10, 1000), BudgetExceeded);
  EXPECT_THROW(candidate_count(props, 40, 1'000'000), BudgetExceeded);
}

TEST(Lift, Examples) {
  EXPECT_TRUE(is_lift(Trace{kP}, Trace{kEmpty, kP}));
  EXPECT_FALSE(is_lift(Trace{kP}, Trace{kP, kEmpty}));
  EXPECT_TRUE(is_lift(Trace{kP, kP}, Trace{kP, kEmpty, kP}));
  EXPECT_THROW(is_lift(Trace{}, Trace{kP}), InvalidArgument);
}

TEST(Lift, PartialOrder) {
  std::vector<Trace> words = testing::all_traces(1, 4);
  words.erase(words.begin());
  for (const Trace& a : words) {
    EXPECT_TRUE(is_lift(a, a));
    for (const Trace& b : words) {
      if (a != b && is_lift(a, b)) {
        EXPECT_FALSE(is_lift(b, a));
      }
      if (!is_lift(a, b)) continue;
      for (const Trace& c : words) {
        if (is_lift(b, c)) {
          EXPECT_TRUE(is_lift(a, c));
        }
      }
    }
  }
}

TEST(Lift, DepthZeroLanguagesAreUpwardClosed) {
  testing::Rng rng(35);
  std::vector<Trace> targets = testing::all_traces(1, 5);
  for (int i = 0; i < 100; ++i) {
    Adt t = testing::random_adt(rng, {1, 6, 0, 3, 3});
    for (const Trace& w : enumerate(t, PropSet{"p"}, 3)) {
      if (w.empty()) continue;
      for (const Trace& up : targets) {
        if (!up.empty() && is_lift(w, up)) {
          ASSERT_TRUE(member(t, up));
        }
      }
    }
  }
}

TEST(Associativity, NestedAndFlatAgree) {
  testing::Rng rng(36);
  PropSet props{"p", "q"};
  for (int i = 0; i < 100; ++i) {
    Adt a = testing::random_adt(rng, {2, 3, 1, 2, 2});
    Adt b = testing::random_adt(rng, {2, 3, 1, 2, 2});
    Adt c = testing::random_adt(rng, {2, 3, 1, 2, 2});
    for (auto make : {&Adt::or_node, &Adt::sand_node, &Adt::and_node}) {
      auto flat = enumerate(make({a, b, c}), props, 4);
      EXPECT_EQ(enumerate(make({a, make({b, c})}), props, 4), flat);
      EXPECT_EQ(enumerate(make({make({a, b}), c}), props, 4), flat);
    }
  }
}

}  // namespace
}  // namespace adtlab
