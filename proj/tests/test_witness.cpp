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

#include <algorithm>

#include "adtlab/errors.hpp"
#include "adtlab/semantics.hpp"
#include "adtlab/witness.hpp"
#include "support/random.hpp"

namespace adtlab {
namespace {

using K = WitnessKind;

std::vector<Trace> by_predicate(std::size_t k, K kind, std::size_t maxlen) {
  std::vector<Trace> out;
  for (const Trace& w : testing::all_traces(1, maxlen)) {
    if (in_witness(w, k, kind)) out.push_back(w);
  }
  return out;
}

TEST(Words, AbNotation) {
  EXPECT_EQ(ab_word("ab"), (Trace{kLetterA, kLetterB}));
  EXPECT_EQ(ab_string(ab_word("abba")), "abba");
  EXPECT_THROW(ab_word("abc"), InvalidArgument);
}

TEST(Measure, Examples) {
  EXPECT_EQ(measure(Trace{}), 0);
  EXPECT_EQ(measure(ab_word("ab")), 0);
  EXPECT_EQ(measure(ab_word("a")), 1);
  EXPECT_EQ(measure(ab_word("bbb")), -3);
}

TEST(Measure, AdditiveAndIntermediateValues) {
  testing::Rng rng(71);
  for (int i = 0; i < 500; ++i) {
    Trace u = testing::random_trace(rng, 1, rng.below(8));
    Trace v = testing::random_trace(rng, 1, rng.below(8));
    EXPECT_EQ(measure(u + v), measure(u) + measure(v));
    const long m = measure(u);
    if (m < 0) continue;
    for (long target = 0; target <= m; ++target) {
      bool hit = false;
      for (std::size_t len = 0; len <= u.size() && !hit; ++len) hit = measure(u.prefix(len)) == target;
      EXPECT_TRUE(hit) << ab_string(u) << " misses " << target;
    }
  }
}

TEST(InWitness, Examples) {
  EXPECT_TRUE(in_witness(ab_word("ab"), 1, K::W));
  EXPECT_FALSE(in_witness(ab_word("ba"), 1, K::W));
  EXPECT_TRUE(in_witness(ab_word("aabb"), 2, K::W));
  EXPECT_FALSE(in_witness(ab_word("abab"), 2, K::W));
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_FALSE(in_witness(Trace{}, k, K::W));
  EXPECT_TRUE(in_witness(ab_word("aab"), 1, K::Plus) == false);
  EXPECT_TRUE(in_witness(ab_word("aba"), 1, K::Plus));
  EXPECT_TRUE(in_witness(ab_word("bab"), 1, K::Minus));
  EXPECT_THROW(in_witness(ab_word("ab"), 0, K::W), InvalidArgument);
}

TEST(Trees, FirstLevel) {
  WitnessTrees t = build_witness_adt(1);
  EXPECT_EQ(enumerate(t.base, ab_props(), 6),
            (std::vector<Trace>{ab_word("ab"), ab_word("abab"), ab_word("ababab")}));
  EXPECT_EQ(counterdepth(t.base), 2u);
  EXPECT_THROW(build_witness_adt(0), InvalidArgument);
}

TEST(Trees, LanguagesMatchPredicates) {
  for (std::size_t k = 1; k <= 2; ++k) {
    WitnessTrees t = build_witness_adt(k);
    EXPECT_EQ(enumerate(t.base, ab_props(), 8), by_predicate(k, K::W, 8)) << k;
    EXPECT_EQ(enumerate(t.plus, ab_props(), 8), by_predicate(k, K::Plus, 8)) << k;
    EXPECT_EQ(enumerate(t.minus, ab_props(), 8), by_predicate(k, K::Minus, 8)) << k;
  }
}

TEST(Trees, DepthLaw) {
  for (std::size_t k = 1; k <= 4; ++k) {
    WitnessTrees t = build_witness_adt(k);
    EXPECT_EQ(counterdepth(t.base), k + 1) << k;
    EXPECT_EQ(counterdepth(t.plus), k + 1) << k;
    EXPECT_EQ(counterdepth(t.minus), k + 1) << k;
  }
}

TEST(Swap, WordsAndTrees) {
  EXPECT_EQ(swap(ab_word("aab")), ab_word("bba"));
  Adt plus = build_witness_adt(1).plus;
  EXPECT_EQ(swap(swap(plus)), plus);
  std::vector<Trace> mirrored;
  for (const Trace& w : enumerate(plus, ab_props(), 5)) mirrored.push_back(swap(w));
  std::sort(mirrored.begin(), mirrored.end(), LengthLexLess{});
  EXPECT_EQ(enumerate(swap(plus), ab_props(), 5), mirrored);
  EXPECT_EQ(build_witness_adt(2).minus, swap(build_witness_adt(2).plus));
  EXPECT_THROW(swap(Trace{Valuation(2)}), AlphabetMismatch);
}

TEST(Recursive, AgreesWithPredicate) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (K kind : {K::W, K::Plus, K::Minus}) {
      EXPECT_EQ(recursive_witness(k, kind, 8), by_predicate(k, kind, 8)) << k;
    }
  }
}

}  // namespace
}  // namespace adtlab
