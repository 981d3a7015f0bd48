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

#include "adtlab/core.hpp"
#include "adtlab/errors.hpp"
#include "adtlab/semantics.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

namespace adtlab {
namespace {

Adt leaf(std::size_t p) { return Adt::leaf(Formula::var(p)); }
Formula neg(std::size_t p) { return Formula::negation(Formula::var(p)); }

TEST(PropSet, RejectsDuplicatesAndBadNames) {
  EXPECT_THROW(PropSet({"p", "p"}), InvalidArgument);
  EXPECT_THROW(PropSet({"1p"}), InvalidArgument);
  EXPECT_THROW(PropSet({""}), InvalidArgument);
  EXPECT_NO_THROW(PropSet({"_a1", "B"}));
}

TEST(PropSet, EmptySetHasOneLetter) {
  PropSet none;
  EXPECT_EQ(none.alphabet_size(), 1u);
  ASSERT_EQ(none.alphabet().size(), 1u);
  EXPECT_EQ(none.alphabet()[0], Valuation{});
}

TEST(PropSet, IndexFollowsConstructionOrder) {
  PropSet props{"q", "p"};
  EXPECT_EQ(props.index_of("q"), 0u);
  EXPECT_EQ(props.index_of("p"), 1u);
  EXPECT_FALSE(props.index_of("r").has_value());
  EXPECT_TRUE(props.contains(Valuation(3)));
  EXPECT_FALSE(props.contains(Valuation(4)));
}

TEST(Trace, SlicesAndConcatenation) {
  Trace t{Valuation(1), Valuation(0), Valuation(1)};
  EXPECT_EQ(t.prefix(2), (Trace{Valuation(1), Valuation(0)}));
  EXPECT_EQ(t.suffix(2), (Trace{Valuation(1)}));
  EXPECT_EQ(t.slice(1, 2), (Trace{Valuation(0)}));
  EXPECT_EQ(t.prefix(1) + t.suffix(1), t);
}

TEST(Trace, LengthLexOrder) {
  LengthLexLess less;
  EXPECT_TRUE(less(Trace{Valuation(3)}, Trace{Valuation(0), Valuation(0)}));
  EXPECT_TRUE(less(Trace{Valuation(0), Valuation(2)}, Trace{Valuation(1), Valuation(0)}));
  EXPECT_FALSE(less(Trace{}, Trace{}));
}

TEST(Formula, EvaluatesConnectives) {
  Formula f = Formula::disjunction(Formula::conjunction(Formula::var(0), neg(1)),
                                   Formula::bottom());
  EXPECT_TRUE(f.eval(Valuation(1)));
  EXPECT_FALSE(f.eval(Valuation(3)));
  EXPECT_FALSE(f.eval(Valuation(0)));
  EXPECT_EQ(f.node_count(), 6u);
  EXPECT_EQ(f.prop_bound(), 2u);
}

TEST(Formula, CharacteristicFormulaSelectsOneLetter) {
  PropSet props{"p", "q", "r"};
  for (Valuation v : props.alphabet()) {
    EXPECT_EQ(satisfying_valuations(characteristic_formula(v, props), props),
              std::vector<Valuation>{v});
  }
  EXPECT_EQ(characteristic_formula(Valuation{}, PropSet{}), Formula::top());
}

TEST(Measures, Size) {
  EXPECT_EQ(size(Adt::eps()), 1u);
  EXPECT_EQ(size(leaf(0)), 1u);
  EXPECT_EQ(size(Adt::sand_node({leaf(0), Adt::leaf(neg(1))})), 3u);
}

TEST(Measures, Counterdepth) {
  Adt g1 = leaf(0);
  Adt g2 = leaf(1);
  Adt g3 = leaf(2);
  EXPECT_EQ(counterdepth(Adt::counter(Adt::counter(g1, g2), g3)), 1u);
  EXPECT_EQ(counterdepth(Adt::counter(g3, Adt::counter(g2, g3))), 2u);
  EXPECT_EQ(counterdepth(build_length(LengthKind::AtLeast, 3)), 0u);
  EXPECT_EQ(counterdepth(build_length(LengthKind::AtMost, 3)), 1u);
  EXPECT_EQ(counterdepth(build_length(LengthKind::Exactly, 3)), 1u);
  EXPECT_EQ(counterdepth(intersection_of(leaf(0), leaf(1))), 2u);
}

TEST(Measures, LeavesCount) {
  EXPECT_EQ(leaves_count(Adt::eps()), 1u);
  EXPECT_EQ(leaves_count(Adt::sand_node({leaf(0), leaf(0)})), 2u);
  EXPECT_EQ(leaves_count(Adt::counter(leaf(0), Adt::or_node({Adt::eps(), leaf(1)}))), 3u);
}

TEST(Measures, ComplementAddsOneLevel) {
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Adt t = testing::random_adt(rng, {2, 6, 2, 3, 3});
    EXPECT_EQ(counterdepth(complement_of(t)), counterdepth(t) + 1);
    EXPECT_LE(counterdepth(t), counter_count(t));
    EXPECT_GE(size(t), 1u);
    EXPECT_GE(leaves_count(t), 1u);
  }
}

TEST(Measures, AdditiveOverChildren) {
  testing::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Adt a = testing::random_adt(rng, {2, 4, 1, 3, 3});
    Adt b = testing::random_adt(rng, {2, 4, 1, 3, 3});
    for (Adt t : {Adt::or_node({a, b}), Adt::sand_node({a, b}), Adt::and_node({a, b})}) {
      EXPECT_EQ(size(t), size(a) + size(b));
      EXPECT_EQ(leaves_count(t), leaves_count(a) + leaves_count(b));
    }
  }
}

TEST(Builders, LengthShapes) {
  EXPECT_EQ(build_length(LengthKind::AtLeast, 2),
            Adt::sand_node({Adt::leaf(Formula::top()), Adt::leaf(Formula::top())}));
  EXPECT_THROW(build_length(LengthKind::AtLeast, 0), InvalidArgument);
  PropSet props{"p"};
  // C(⊤, GE(ℓ)) keeps lengths 1..ℓ-1: no ε, and nothing at all for ℓ = 1.
  EXPECT_TRUE(enumerate(build_length(LengthKind::AtMost, 1), props, 3).empty());
  auto below_three = enumerate(build_length(LengthKind::AtMost, 3), props, 4);
  EXPECT_EQ(below_three.size(), 2u + 4u);
  for (const Trace& t : below_three) {
    EXPECT_GE(t.size(), 1u);
    EXPECT_LE(t.size(), 2u);
  }
  auto exactly_two = enumerate(build_length(LengthKind::Exactly, 2), props, 3);
  EXPECT_EQ(exactly_two.size(), 4u);
  for (const Trace& t : exactly_two) EXPECT_EQ(t.size(), 2u);
}

TEST(Builders, DerivedShapes) {
  Adt t = leaf(0);
  Adt any = etrue();
  EXPECT_EQ(any, Adt::or_node({Adt::eps(), Adt::leaf(Formula::top())}));
  EXPECT_EQ(complement_of(t), Adt::counter(any, t));
  EXPECT_EQ(within_any(t), Adt::sand_node({any, t, any}));
  EXPECT_EQ(preceded_by_any(t), Adt::sand_node({any, t}));
  EXPECT_EQ(followed_by_any(t), Adt::sand_node({t, any}));
  EXPECT_EQ(strict(Formula::var(0)),
            Adt::counter(t, build_length(LengthKind::AtLeast, 2)));
  EXPECT_EQ(trace_tree(Trace{}, PropSet{"p"}), Adt::eps());
}

TEST(Builders, EtrueAcceptsEverything) {
  PropSet props{"p", "q"};
  EXPECT_EQ(enumerate(etrue(), props, 3), testing::all_traces(2, 3));
}

TEST(Builders, StrictAcceptsOneLetterTraces) {
  PropSet props{"p", "q"};
  auto got = enumerate(strict(Formula::var(1)), props, 3);
  EXPECT_EQ(got, (std::vector<Trace>{Trace{Valuation(2)}, Trace{Valuation(3)}}));
}

TEST(Builders, TraceTreeDenotesItsTrace) {
  testing::Rng rng(13);
  PropSet props{"p", "q"};
  for (int i = 0; i < 20; ++i) {
    Trace t = testing::random_trace(rng, 2, rng.below(4));
    EXPECT_EQ(enumerate(trace_tree(t, props), props, t.size() + 1), std::vector<Trace>{t});
  }
}

TEST(Normalize, BinaryFormKeepsLanguage) {
  testing::Rng rng(14);
  PropSet props{"p", "q"};
  oracle::Bounded b(2, 3);
  for (int i = 0; i < 100; ++i) {
    Adt t = testing::random_adt(rng, {2, 6, 2, 4, 3});
    Adt n = normalize_binary(t);
    EXPECT_EQ(oracle::adt_language(t, b), oracle::adt_language(n, b));
    EXPECT_EQ(size(n), size(t));
  }
  Adt three = Adt::or_node({leaf(0), leaf(1), leaf(0)});
  EXPECT_EQ(normalize_binary(three),
            Adt::or_node({Adt::or_node({leaf(0), leaf(1)}), leaf(0)}));
  EXPECT_EQ(normalize_binary(Adt::and_node({leaf(1)})), leaf(1));
}

TEST(Alphabet, CheckRejectsForeignPropositions) {
  EXPECT_THROW(check_alphabet(leaf(2), PropSet{"p", "q"}), AlphabetMismatch);
  EXPECT_THROW(check_alphabet(Trace{Valuation(4)}, PropSet{"p", "q"}), AlphabetMismatch);
  EXPECT_NO_THROW(check_alphabet(leaf(1), PropSet{"p", "q"}));
}

TEST(Adt, ConstructorsValidateArity) {
  EXPECT_THROW(Adt::or_node({}), InvalidArgument);
  EXPECT_THROW(Adt::sand_node({}), InvalidArgument);
  EXPECT_THROW(Adt::and_node({}), InvalidArgument);
}

}  // namespace
}  // namespace adtlab
