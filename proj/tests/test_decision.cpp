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

#include "adtlab/decision.hpp"
#include "adtlab/errors.hpp"
#include "adtlab/semantics.hpp"
#include "adtlab/textio.hpp"
#include "adtlab/witness.hpp"
#include "support/random.hpp"

namespace adtlab {
namespace {

Adt sand_form() {
  return Adt::sand_node({strict(Formula::negation(Formula::var(0))), strict(Formula::var(0))});
}
Adt each_form() {
  return Adt::and_node({strict(Formula::negation(Formula::var(0))), strict(Formula::var(0))});
}

// A verdict is well formed when its answer and payload agree.
void expect_well_formed(const Verdict& v, const Adt& t) {
  if (v.answer == Answer::Yes) {
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_TRUE(member(t, *v.witness));
  }
  if (v.answer == Answer::NoUpToBound) {
    EXPECT_TRUE(v.bound.has_value());
  }
}

TEST(Nonempty, Examples) {
  PropSet p{"p"};
  Verdict none = nonempty(Adt::leaf(Formula::bottom()), p);
  EXPECT_EQ(none.answer, Answer::No);
  EXPECT_EQ(none.method, Method::GenSmp);

  PropSet thief{"E", "S1", "S2", "G"};
  Adt ex1 = parse_adt("SAND([E], C([S1 & S2], ALLR([G])))", thief);
  Verdict v = nonempty(ex1, thief);
  EXPECT_EQ(v.answer, Answer::Yes);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_LE(v.witness->size(), size(ex1));
  expect_well_formed(v, ex1);

  Adt w2 = build_witness_adt(2).base;
  Verdict b = nonempty(w2, ab_props(), NonemptyMethod::Bounded, 4);
  EXPECT_EQ(b.answer, Answer::Yes);
  EXPECT_EQ(b.witness, ab_word("aabb"));
  EXPECT_EQ(b.method, Method::Bounded);
  EXPECT_EQ(b.depth, 3u);
}

TEST(Nonempty, BoundedAnswersCarryTheBound) {
  PropSet p{"p"};
  Verdict v = nonempty(build_witness_adt(3).base, ab_props(), NonemptyMethod::Auto, 4);
  EXPECT_EQ(v.answer, Answer::NoUpToBound);
  EXPECT_EQ(v.bound, 4u);
  EXPECT_THROW(nonempty(build_witness_adt(1).base, ab_props()), InvalidArgument);
  EXPECT_THROW(nonempty(build_witness_adt(1).base, ab_props(), NonemptyMethod::Gen), DepthError);
  EXPECT_THROW(nonempty(Adt::eps(), p, NonemptyMethod::Bounded), InvalidArgument);
}

TEST(Nonempty, GenMatchesBoundedAtSize) {
  testing::Rng rng(81);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = rng.between(1, 2);
    PropSet props = testing::props_of_size(n);
    Adt t = testing::random_enumerable_adt(rng, {n, 6, 1, 3, 3});
    Verdict g = nonempty(t, props, NonemptyMethod::Gen);
    Verdict b = nonempty(t, props, NonemptyMethod::Bounded, size(t));
    EXPECT_EQ(g.answer == Answer::Yes, b.answer == Answer::Yes) << render(t, props);
    expect_well_formed(g, t);
    expect_well_formed(b, t);
  }
}

TEST(Equiv, Examples) {
  PropSet p{"p"};
  Adt top = Adt::leaf(Formula::top());
  Verdict same = equiv(build_length(LengthKind::AtLeast, 2), Adt::sand_node({top, top}), p,
                       EquivMethod::Gen0);
  EXPECT_EQ(same.answer, Answer::Yes);
  EXPECT_EQ(same.method, Method::Gen0Exact);
  EXPECT_FALSE(same.witness.has_value());

  Verdict diff = equiv(sand_form(), each_form(), p, EquivMethod::Bounded, 4);
  EXPECT_EQ(diff.answer, Answer::No);
  EXPECT_EQ(diff.witness, (Trace{Valuation(0), Valuation(1)}));

  Adt ex = parse_adt("SAND([p], C([p], ALLR([!p])))", p);
  for (EquivMethod m : {EquivMethod::Auto, EquivMethod::Reduction, EquivMethod::Bounded}) {
    EXPECT_NE(equiv(ex, ex, p, m, 4).answer, Answer::No);
  }
  EXPECT_THROW(equiv(ex, ex, p, EquivMethod::Gen0), DepthError);
}

TEST(Equiv, ReductionTreeShape) {
  Adt a = Adt::leaf(Formula::var(0));
  Adt b = Adt::eps();
  EXPECT_EQ(equivalence_reduction(a, b),
            Adt::or_node({Adt::counter(a, b), Adt::counter(b, a)}));
}

TEST(Equiv, MethodsAgreeOnDepthZero) {
  testing::Rng rng(82);
  PropSet props{"p"};
  for (int i = 0; i < 100; ++i) {
    Adt a = testing::random_adt(rng, {1, 4, 0, 2, 2});
    Adt b = testing::random_adt(rng, {1, 4, 0, 2, 2});
    const std::size_t n = std::max(size(a), size(b));
    Verdict g = equiv(a, b, props, EquivMethod::Gen0);
    Verdict r = equiv(a, b, props, EquivMethod::Reduction);
    Verdict x = equiv(a, b, props, EquivMethod::Bounded, n);
    EXPECT_EQ(g.answer, x.answer == Answer::No ? Answer::No : Answer::Yes);
    EXPECT_EQ(r.answer, g.answer);
    EXPECT_EQ(r.method, Method::Reduction);
    for (const Verdict& v : {g, r, x}) {
      if (v.answer == Answer::No) {
        ASSERT_TRUE(v.witness.has_value());
        EXPECT_NE(member(a, *v.witness), member(b, *v.witness));
      }
    }
  }
}

TEST(Equiv, ReductionNeverContradictsBounded) {
  testing::Rng rng(83);
  PropSet props{"p"};
  for (int i = 0; i < 60; ++i) {
    Adt a = testing::random_adt(rng, {1, 4, 1, 2, 2});
    Adt b = testing::random_adt(rng, {1, 4, 1, 2, 2});
    Verdict r = equiv(a, b, props, EquivMethod::Reduction, 4);
    Verdict x = equiv(a, b, props, EquivMethod::Bounded, 4);
    EXPECT_EQ(r.answer == Answer::No, x.answer == Answer::No);
  }
}

TEST(Names, Stable) {
  EXPECT_EQ(to_string(Answer::NoUpToBound), "no-up-to-bound");
  EXPECT_EQ(to_string(Method::Gen0Exact), "gen0-exact");
}

}  // namespace
}  // namespace adtlab
