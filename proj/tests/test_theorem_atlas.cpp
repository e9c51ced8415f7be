#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace twocontour;

namespace {

const TheoremPrediction& find(const std::vector<TheoremPrediction>& v, ResultId id) {
  return v.at(static_cast<std::size_t>(id));
}

// Fixed points found by scanning every acceptable state with the bitmap oracle.
bool oracle_has_fixed_point(const oracle::Model& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (m.acceptable(a, b) && m.next(a, b) == std::pair<int, int>{a, b}) return true;
  return false;
}

}  // namespace

TEST(ResultId, Names) {
  EXPECT_EQ(to_string(ResultId::L1), "L1");
  EXPECT_EQ(to_string(ResultId::L4), "L4");
  EXPECT_EQ(to_string(theorem(1)), "T1");
  EXPECT_EQ(to_string(theorem(25)), "T25");
  EXPECT_EQ(result_from_string("T14"), theorem(14));
  EXPECT_THROW(result_from_string("T26"), std::invalid_argument);
  EXPECT_THROW(theorem(0), std::out_of_range);
}

TEST(ApplicableResults, OneEntryPerResult) {
  const auto r = applicable_results(make_params(10, 1, 2, 3));
  ASSERT_EQ(r.size(), static_cast<std::size_t>(result_count));
  for (int k = 0; k < result_count; ++k) EXPECT_EQ(r[static_cast<std::size_t>(k)].id, static_cast<ResultId>(k));
}

TEST(ApplicableResults, FirstTheoremRegion) {
  const auto r = applicable_results(make_params(10, 1, 2, 3));
  const auto& t1 = find(r, theorem(1));
  EXPECT_TRUE(t1.hypotheses_hold);
  EXPECT_TRUE(t1.internally_consistent);
  ASSERT_TRUE(t1.predicted);
  EXPECT_EQ(*t1.predicted, (OutcomeSet{formulas::free_motion()}));
}

TEST(ApplicableResults, SecondTheoremRegion) {
  const auto r = applicable_results(make_params(12, 2, 4, 4));
  const auto& t2 = find(r, theorem(2));
  EXPECT_TRUE(t2.hypotheses_hold);
  ASSERT_TRUE(t2.predicted);
  EXPECT_EQ(*t2.predicted, (OutcomeSet{formulas::free_motion(), testutil::pair(6, 7, 6, 7)}));
}

TEST(ApplicableResults, SeventhTheoremNeverPredicts) {
  for (int n = 2; n <= 20; ++n)
    for (int d = 1; d <= n / 2; ++d)
      for (int l1 = 1; l1 < n; ++l1)
        for (int l2 = l1; l2 < n; ++l2) {
          const auto t7 = predict_theorem(make_params(n, l1, l2, d), theorem(7));
          // l2 >= 2d and l1 + l2 <= 2d would need l1 <= 0
          ASSERT_FALSE(t7.hypotheses_hold);
          ASSERT_FALSE(t7.internally_consistent);
          ASSERT_FALSE(t7.predicted);
        }
}

TEST(ApplicableResults, OverlappingFifthAndSixthAreBothInconclusive) {
  // l1 <= d < l2 < 2d with l1 + l2 <= 2d
  const auto p = make_params(12, 1, 3, 2);
  const auto rep = verify(p);
  EXPECT_TRUE(rep.entry(theorem(5)).prediction.hypotheses_hold);
  EXPECT_TRUE(rep.entry(theorem(6)).prediction.hypotheses_hold);
  EXPECT_EQ(rep.entry(theorem(5)).verdict, Verdict::Inconclusive);
  EXPECT_EQ(rep.entry(theorem(6)).verdict, Verdict::Inconclusive);
  ASSERT_FALSE(rep.entry(theorem(5)).variant_agreement.empty());
}

TEST(ApplicableResults, SixteenthHeadingVariantReportedSeparately) {
  // l1 <= d, n-2d < l2 <= n-d, l2 >= 2d, l1 + l2 <= n: only the heading reading holds
  const auto p = make_params(12, 1, 8, 3);
  const auto t16 = predict_theorem(p, theorem(16));
  EXPECT_TRUE(t16.hypotheses_hold);
  EXPECT_FALSE(t16.internally_consistent);
  ASSERT_EQ(t16.variants.size(), 2u);
  EXPECT_FALSE(t16.variants[0].holds);
  EXPECT_TRUE(t16.variants[1].holds);
  EXPECT_FALSE(t16.variants[1].trusted);
  EXPECT_EQ(verify(p).entry(theorem(16)).verdict, Verdict::Inconclusive);
}

TEST(ApplicableResults, EleventhHasTwoReadings) {
  for (int n = 8; n <= 24; ++n)
    for (int d = 1; d <= n / 2; ++d)
      for (int l1 = 1; l1 < n; ++l1)
        for (int l2 = l1; l2 < n; ++l2) {
          const auto t11 = predict_theorem(make_params(n, l1, l2, d), theorem(11));
          if (!t11.hypotheses_hold) continue;
          ASSERT_EQ(t11.variants.size(), 2u);
          ASSERT_TRUE(t11.variants[0].predicted);
          ASSERT_EQ(t11.variants[1].predicted_count, 2);
          ASSERT_FALSE(t11.internally_consistent);
          return;
        }
  FAIL() << "no point satisfies the eleventh theorem's hypotheses";
}

TEST(ApplicableResults, NormalizesOrder) {
  const auto a = applicable_results(make_params(12, 2, 11, 3));
  const auto b = applicable_results(make_params(12, 11, 2, 3));
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].hypotheses_hold, b[k].hypotheses_hold);
    EXPECT_EQ(a[k].predicted, b[k].predicted);
  }
}

TEST(ApplicableResults, PredictionOnlyWhenHoldingAndConsistent) {
  for (int n = 4; n <= 24; ++n)
    for (int d = 1; d <= n / 2; ++d)
      for (int l1 = 1; l1 < n; ++l1)
        for (int l2 = l1; l2 < n; ++l2)
          for (const auto& tp : applicable_results(make_params(n, l1, l2, d))) {
            if (tp.predicted) {
              ASSERT_TRUE(tp.hypotheses_hold && tp.internally_consistent);
            }
            if (!is_lemma(tp.id) && tp.hypotheses_hold && tp.internally_consistent) {
              ASSERT_TRUE(tp.predicted);
            }
          }
}

TEST(Verify, FirstTheoremMatchesOracle) {
  const auto p = make_params(10, 1, 2, 3);
  const auto rep = verify(p);
  EXPECT_EQ(rep.entry(theorem(1)).verdict, Verdict::Match);
  const auto oracle_spectrum = testutil::model(p).spectrum();
  ASSERT_EQ(oracle_spectrum.size(), 1u);
  EXPECT_EQ(oracle_spectrum.begin()->first, testutil::to_oracle(formulas::free_motion()));
  EXPECT_EQ(oracle_spectrum.begin()->second, 100);
}

TEST(Verify, HalfTurnTheorem) {
  const auto p = make_params(12, 2, 11, 3);
  const auto rep = verify(p);
  EXPECT_EQ(rep.entry(theorem(14)).verdict, Verdict::Match);
  const auto oracle_spectrum = testutil::model(p).spectrum();
  ASSERT_EQ(oracle_spectrum.size(), 1u);
  EXPECT_EQ(oracle_spectrum.begin()->first, testutil::to_oracle(testutil::pair(6, 13, 12, 13)));
}

TEST(Verify, CollapseTheorem) {
  const auto p = make_params(10, 8, 9, 3);
  const auto rep = verify(p);
  EXPECT_EQ(rep.entry(theorem(25)).verdict, Verdict::Match);
  const auto oracle_spectrum = testutil::model(p).spectrum();
  ASSERT_EQ(oracle_spectrum.size(), 1u);
  EXPECT_EQ(oracle_spectrum.begin()->first, testutil::to_oracle(formulas::collapse()));
}

TEST(Verify, MirroredParamsGiveSameVerdicts) {
  const auto a = verify(make_params(18, 4, 7, 4));
  const auto b = verify(make_params(18, 7, 4, 4));
  for (int k = 0; k < result_count; ++k) {
    EXPECT_EQ(a.entries[static_cast<std::size_t>(k)].verdict, b.entries[static_cast<std::size_t>(k)].verdict)
        << to_string(static_cast<ResultId>(k));
  }
  EXPECT_EQ(a.entry(theorem(8)).verdict, Verdict::Match);
}

TEST(Verify, LemmasHoldAndAgreeWithOracle) {
  for (int n = 4; n <= 14; ++n)
    for (int d = 1; d <= n / 2; ++d)
      for (int l1 = 1; l1 < n; ++l1)
        for (int l2 = 1; l2 < n; ++l2) {
          const auto p = make_params(n, l1, l2, d);
          const auto rep = verify(p);
          const auto m = testutil::model(p);
          ASSERT_EQ(oracle_has_fixed_point(m), l1 > d && l2 > d);
          ASSERT_EQ(rep.entry(ResultId::L1).verdict, l1 + l2 > n ? Verdict::Match : Verdict::NotApplicable);
          for (auto id : {ResultId::L2, ResultId::L3, ResultId::L4}) ASSERT_EQ(rep.entry(id).verdict, Verdict::Match);
        }
}

TEST(Verify, InconsistentNeverMismatch) {
  for (int d : {5, 7, 8, 10})
    for (int l1 = 1; l1 < 24; ++l1)
      for (int l2 = l1; l2 < 24; ++l2) {
        const auto rep = verify(make_params(24, l1, l2, d));
        for (const auto& e : rep.entries) {
          if (!e.prediction.internally_consistent && !is_lemma(e.prediction.id)) {
            ASSERT_NE(e.verdict, Verdict::Mismatch);
          }
          if (!e.prediction.hypotheses_hold) {
            ASSERT_EQ(e.verdict, Verdict::NotApplicable);
          }
        }
      }
}

TEST(Verify, Repeatable) {
  const auto p = make_params(20, 3, 14, 8);
  const auto a = verify(p), b = verify(p);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) EXPECT_EQ(a.entries[k].verdict, b.entries[k].verdict);
  EXPECT_EQ(a.spectrum, b.spectrum);
}

TEST(CheckLemmas, DetectsTamperedCensus) {
  const auto p = make_params(12, 2, 4, 4);
  auto c = census(p);
  ASSERT_TRUE(check_lemmas(p, c).all());
  // pretend the delayed cycle never passes a marker state
  for (auto& cyc : c.cycles) {
    if (classify_outcome(cyc.velocities()) == Outcome::Intermediate) {
      for (auto& s : cyc.states) s = {11, 11};
    }
  }
  const auto r = check_lemmas(p, c);
  EXPECT_FALSE(r.l3);
  EXPECT_FALSE(r.failures.empty());
}
