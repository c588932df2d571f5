// Copyright 2026 The Harem Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "harem/decomposition.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "harem/errors.hpp"
#include "test_util.hpp"

namespace harem {
namespace {

using V = DecompositionViolation;

TEST(Spec, PowersAndModes) {
  EXPECT_EQ(minimal_power(1), 2u);  // 2^2 >= 3 > 2^1
  EXPECT_EQ(minimal_power(2), 3u);  // (3/2)^3 = 3.375
  EXPECT_TRUE(power_reaches_three(2, 3));
  EXPECT_FALSE(power_reaches_three(2, 2));
  // (1 + 1/n)^t >= 3 first holds near t = n ln 3; check exactly for n = 100.
  unsigned t = minimal_power(100);
  EXPECT_TRUE(power_reaches_three(100, t));
  EXPECT_FALSE(power_reaches_three(100, t - 1));
  EXPECT_EQ(t, 111u);

  auto c = ActionGraphSpec::corollary(2, 1);
  EXPECT_EQ(c.n1, 2u);
  EXPECT_EQ(c.K.size(), 17u);
  EXPECT_NO_THROW(c.validate());
  EXPECT_NO_THROW(ActionGraphSpec::tight(2).validate());
  c.n1 = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(ActionGraph, Neighbors) {
  auto o = build_action_graph(ActionGraphSpec::tight(2));
  EXPECT_EQ(o.neighbors({Side::kLeft, 0}), (IndexList{0, 1, 2, 3, 4}));
  for (Index i = 0; i < 100; ++i) {
    auto nb = o.neighbors({Side::kLeft, i});
    EXPECT_TRUE(std::binary_search(nb.begin(), nb.end(), i));
    EXPECT_EQ(nb, o.neighbors({Side::kRight, i}));
    EXPECT_EQ(o.degree({Side::kLeft, i}), 5u);
  }
  EXPECT_TRUE(check_symmetry(o, 100).empty());

  // Tight mode equals corollary mode with a single power.
  auto c = ActionGraphSpec::corollary(2, 1);
  c.n1 = 1;
  c.K = c.R;
  auto oc = build_action_graph(c);
  for (Index i = 0; i < 60; ++i) {
    EXPECT_EQ(oc.neighbors({Side::kLeft, i}), o.neighbors({Side::kLeft, i}));
  }
}

// Pieces by first letter, from the string model.
TEST(ClassicF2Decomp, PiecesAndMaps) {
  ClassicF2Decomp d;
  auto words = testing::shortlex_words(2, 4);
  for (Index m = 0; m < words.size(); ++m) {
    const std::string& w = words[m];
    ClassicF2Decomp::Piece want;
    if (w.empty() || w[0] == 'a' || w.find_first_not_of('A') == std::string::npos) {
      want = ClassicF2Decomp::Piece::kWa;
    } else if (w[0] == 'A') {
      want = ClassicF2Decomp::Piece::kWA;
    } else {
      want = w[0] == 'b' ? ClassicF2Decomp::Piece::kWb : ClassicF2Decomp::Piece::kWB;
    }
    ASSERT_EQ(d.classify(m), want) << w;
  }
  EXPECT_EQ(to_string(d.classify(3)), "W(b)");
  auto row = d.row(4);  // B
  EXPECT_EQ(format_word(row.theta1), "A");
  EXPECT_EQ(format_word(row.theta2), "B");
  EXPECT_EQ(format_word(row.psi2_word), "BB");
}

TEST(VerifyDecomposition, ClassicPasses) {
  ClassicF2Decomp d;
  auto rep = verify_decomposition([&](Index m) { return d.theta1(m); },
                                  [&](Index m) { return d.theta2(m); },
                                  GeneratorSet::standard(2), 2000);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.checked, 2000u);
}

TEST(VerifyDecomposition, PlantedDefect) {
  ClassicF2Decomp d;
  Enumeration e(2);
  const Word b = parse_word(2, "b");
  ASSERT_TRUE(d.theta1(7).is_identity());  // 7 = aB lies in W'(a)
  auto planted = [&](Index m) { return m == 7 ? b : d.theta1(m); };
  auto rep = verify_decomposition(planted, [&](Index m) { return d.theta2(m); },
                                  GeneratorSet::standard(2), 500);
  // 7 loses its only cover; b.aB = baB gets a second one.
  const Index moved = e.word_to_index(parse_word(2, "baB"));
  ASSERT_LT(moved, 500u);
  EXPECT_EQ(rep.violations,
            (std::vector<V>{{V::Kind::kCoverage, 7, 0}, {V::Kind::kCoverage, moved, 2}}));

  auto outside = [&](Index m) { return m == 7 ? parse_word(2, "ab") : d.theta1(m); };
  rep = verify_decomposition(outside, [&](Index m) { return d.theta2(m); },
                             GeneratorSet::standard(2), 20);
  EXPECT_EQ(rep.violations, (std::vector<V>{{V::Kind::kThetaAOutsideK, 7, 0},
                                            {V::Kind::kCoverage, 7, 0}}));
  EXPECT_EQ(rep.violations[1].describe(), "covered by 0 translates at 7");
}

TEST(ParadoxDecomp, CommittedRowsAfterTwoSteps) {
  ParadoxDecomp d(ActionGraphSpec::tight(2));
  d.engine().run_step();
  d.engine().run_step();
  auto rep = verify_committed(d);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.checked, 2u);

  EXPECT_EQ(d.psi(0), (std::pair<Index, Index>{0, 1}));
  EXPECT_TRUE(d.theta(0, 1).is_identity());
  EXPECT_EQ(format_word(d.theta(0, 2)), "a");
  auto row = d.row(2);
  EXPECT_EQ(row.psi1, 2u);
  EXPECT_EQ(row.psi2, 8u);
  EXPECT_EQ(format_word(row.theta2), "A");
  EXPECT_TRUE(d.a_member(Word::identity(2), 2));
  EXPECT_TRUE(d.b_member(parse_word(2, "A"), 2));
  EXPECT_FALSE(d.b_member(parse_word(2, "a"), 2));
  EXPECT_EQ(d.engine().step(), 2u);  // rows 0 and 2 are already committed
  EXPECT_THROW(d.theta(0, 3), std::invalid_argument);
}

TEST(FolnerFailureCertificate, Balls) {
  auto R = GeneratorSet::standard(2);
  std::vector<IndexList> family;
  for (Index r = 0; r <= 3; ++r) family.push_back(ball(R, 0, r));

  // n = 1 asks for a translate disjoint from F, which a ball of radius >= 1
  // never has; the singleton {e} is moved off itself by a.
  auto c1 = folner_failure_certificate(ActionGraphSpec::tight(2), family);
  ASSERT_EQ(c1.size(), 4u);
  EXPECT_TRUE(c1[0].expands);
  EXPECT_EQ(format_word(*c1[0].witness), "a");
  for (Index r = 1; r <= 3; ++r) EXPECT_FALSE(c1[r].expands) << r;

  auto c2 = folner_failure_certificate(ActionGraphSpec::corollary(2, 2), family);
  for (const auto& entry : c2) EXPECT_TRUE(entry.expands);

  // Integers are amenable: balls of radius >= 2 lose one point per shift.
  auto z = ActionGraphSpec::tight(1);
  z.n = 3;
  std::vector<IndexList> zf;
  for (Index r = 0; r <= 4; ++r) zf.push_back(ball(GeneratorSet::standard(1), 0, r));
  auto cz = folner_failure_certificate(z, zf);
  EXPECT_TRUE(cz[0].expands);
  EXPECT_TRUE(cz[1].expands);
  for (Index r = 2; r <= 4; ++r) EXPECT_FALSE(cz[r].expands);
  EXPECT_THROW(folner_failure_certificate(z, {{}}), EmptySetError);
}

TEST(Tsv, RoundTrip) {
  ClassicF2Decomp d;
  std::stringstream ss;
  write_tsv_header(ss);
  for (Index m = 0; m < 50; ++m) write_tsv_row(ss, d.row(m));
  auto rows = read_decomposition_tsv(ss, 2);
  ASSERT_EQ(rows.size(), 50u);
  for (Index m = 0; m < 50; ++m) EXPECT_EQ(rows[m], d.row(m));

  std::stringstream bad_header("index\tword\n");
  EXPECT_THROW(read_decomposition_tsv(bad_header, 2), ParseError);
  std::stringstream short_row(std::string(kTsvHeader) + "\n0\te\t0\n");
  try {
    read_decomposition_tsv(short_row, 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace harem
