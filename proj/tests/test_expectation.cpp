#include "core/expectation.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace radial;
using testsupport::desk;
using testsupport::desk_free;
using testsupport::desk_specs;
using testsupport::from_lib;
using testsupport::to_lib;

namespace {

const Word a{{0, 1}};
const Word b{{1, 1}};
const Word c{{2, 1}};
const Word ab{{0, 1}, {1, 1}};
const Word bc{{1, 1}, {2, 1}};

oracle::Elem random_sparse(const oracle::Group& g, std::mt19937& rng, int k) {
  std::uniform_int_distribution<int> terms(1, 5);
  std::uniform_int_distribution<int> coin(0, 2);
  oracle::Elem e;
  for (int i = terms(rng); i > 0; --i) {
    oracle::Tuple t;
    const auto base = oracle::random_word(g, rng, 3);
    // bias toward diagonal tuples so the expectation is often nonzero
    for (int j = 0; j < k; ++j) t.push_back(coin(rng) ? base : oracle::random_word(g, rng, 3));
    oracle::add(e, t, oracle::random_rational(rng));
  }
  return e;
}

}  // namespace

TEST(Expect, ClosedFormMatchesDefinitionAndOracle) {
  std::mt19937 rng(7301);
  for (const auto& d : desk_specs()) {
    for (int trial = 0; trial < 20; ++trial) {
      const int k = 1 + trial % 3;
      const auto x = random_sparse(d.group, rng, k);
      const auto lx = to_lib(d.spec, k, x);
      const auto closed = expect(lx);
      EXPECT_EQ(closed, expect_by_definition(lx)) << d.name;
      EXPECT_EQ(from_lib(closed), oracle::expect(d.group, k, x)) << d.name;
    }
  }
}

TEST(Expect, FixesRadialElements) {
  const auto d = desk(3, 3);
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(expect(build_radial(d.spec, k, n)), RadialVector::unit(d.spec, k, n));
}

TEST(Expect, PreservesTheTrace) {
  std::mt19937 rng(7302);
  const auto d = desk(4, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + trial % 3;
    const auto x = to_lib(d.spec, k, random_sparse(d.group, rng, k));
    EXPECT_EQ(trace(radial_expand(expect(x))), trace(x));
  }
}

// E(r x s) = r E(x) s for radial r, s.
TEST(Expect, BimoduleProperty) {
  std::mt19937 rng(7303);
  std::uniform_int_distribution<int> index(0, 2);
  for (const auto& d : {desk(3, 2), desk(3, 3), desk_free(2)}) {
    for (int trial = 0; trial < 12; ++trial) {
      const int k = 1 + trial % 2;
      const auto x = to_lib(d.spec, k, random_sparse(d.group, rng, k));
      auto r = RadialVector::unit(d.spec, k, index(rng), oracle::random_rational(rng));
      r.add(index(rng), oracle::random_rational(rng));
      const auto s = RadialVector::unit(d.spec, k, index(rng), oracle::random_rational(rng));
      const auto lhs = expect(convolve(convolve(radial_expand(r), x), radial_expand(s)));
      const auto rhs = radial_product(radial_product(r, expect(x)), s);
      EXPECT_EQ(lhs, rhs) << d.name;
    }
  }
}

TEST(RadialProduct, FollowsTheRecurrence) {
  const auto d = desk(3, 2);
  const auto w1 = RadialVector::unit(d.spec, 1, 1);
  auto expected = RadialVector::unit(d.spec, 1, 4) + RadialVector::unit(d.spec, 1, 2, 2);
  EXPECT_EQ(radial_product(w1, RadialVector::unit(d.spec, 1, 3)), expected);
  EXPECT_EQ(radial_product(w1, w1), RadialVector::unit(d.spec, 1, 2) + RadialVector::unit(d.spec, 1, 0, 3));
}

TEST(Nonzero, ExamplesAndExhaustiveSmallSweep) {
  const auto d = desk(3, 2);
  EXPECT_TRUE(nonzero_criterion(d.spec, {ab, ab, ab}).closed_form_nonzero);
  EXPECT_FALSE(nonzero_criterion(d.spec, {ab, ab, a}).closed_form_nonzero);
  EXPECT_TRUE(nonzero_criterion(d.spec, {Word{}, Word{}}).closed_form_nonzero);
  for (int la = 0; la <= 2; ++la)
    for (int lb = 0; lb <= 2; ++lb)
      for (const auto& x : enumerate_words(*d.spec, la))
        for (const auto& y : enumerate_words(*d.spec, lb)) {
          const auto v = nonzero_criterion(d.spec, {x, y});
          EXPECT_TRUE(v.consistent());
          EXPECT_EQ(v.components_equal, x == y);
          ASSERT_TRUE(v.definition_nonzero.has_value());
          EXPECT_EQ(*v.definition_nonzero, x == y);
        }
  EXPECT_FALSE(nonzero_criterion(d.spec, {a, b}, false).definition_nonzero.has_value());
}

// Hand expansion at (3,2), k = 1, x = a, y = bc, n = 1:
//   E(x w_1 y) = w_2/3 + w_4/24,
//   E(x) E(y) w_1 = (w_1/3)(w_2/6) w_1 = (w_4 + 4 w_2 + 6 e)/18,
//   difference w_2/9 - w_4/72 - e/3 with squared norm 6/81 + 24/72^2 + 1/9.
TEST(Defect, HandValueAtThreeTwo) {
  const auto d = desk(3, 2);
  const Rational hand = Rational(2, 27) + Rational(1, 216) + Rational(1, 9);
  ASSERT_EQ(hand, Rational(41, 216));

  const oracle::Tuple ox{oracle::from_lib(a)};
  const oracle::Tuple oy{oracle::from_lib(bc)};
  EXPECT_EQ(oracle::defect(d.group, ox, oy, 1), hand);

  oracle::Elem sum;
  for (const auto& v : oracle::words(d.group, 1))
    oracle::add(sum, {oracle::multiply(d.group, oracle::multiply(d.group, ox[0], v), oy[0])}, 1);
  EXPECT_EQ(oracle::expect(d.group, 1, sum), (oracle::Radial{{2, oracle::Q(1, 3)}, {4, oracle::Q(1, 24)}}));

  const auto term = defect(d.spec, {a}, {bc}, 1);
  EXPECT_EQ(term.defect_sq, hand);
  EXPECT_EQ(term.solutions.size(), 3u);
}

TEST(Defect, AgreesWithFullExpansionOracle) {
  std::mt19937 rng(7304);
  for (const auto& d : {desk(3, 2), desk(3, 3), desk_free(2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int k = 1 + trial % 2;
      oracle::Tuple x, y;
      for (int i = 0; i < k; ++i) {
        x.push_back(oracle::random_word(d.group, rng, 2));
        y.push_back(oracle::random_word(d.group, rng, 2));
      }
      for (int n = 0; n <= 2; ++n)
        EXPECT_EQ(defect(d.spec, oracle::to_lib(x), oracle::to_lib(y), n).defect_sq, oracle::defect(d.group, x, y, n))
            << d.name << " k=" << k << " n=" << n;
    }
  }
}

TEST(DefectSeries, LengthOneRowsArePublishedAndDecay) {
  const auto d = desk(3, 2);
  const auto rep = defect_series(d.spec, {a}, {bc}, 8);
  ASSERT_EQ(rep.rows.size(), 9u);
  EXPECT_EQ(rep.rows[1].defect_sq, Rational(41, 216));
  EXPECT_TRUE(rep.constant_tuples());
  EXPECT_FALSE(rep.k_reduction_hypotheses);
  EXPECT_TRUE(rep.violations().empty());
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    EXPECT_GT(rep.rows[i].defect_sq, 0);  // the vanishing claim does not hold
    EXPECT_GE(rep.rows[i].partial_sum, rep.rows[i - 1].partial_sum);
  }
  for (std::size_t i = 5; i < rep.rows.size(); ++i)
    EXPECT_LT(rep.rows[i].normalized_term, rep.rows[i - 1].normalized_term);
}

TEST(DefectSeries, TailSeriesClosedForm) {
  const auto d = desk(3, 2);
  const auto rep = defect_series(d.spec, {ab}, {bc}, 6);
  EXPECT_EQ(rep.n0, 4);
  // sum_{n >= 4} 1/(3 * 2^(n-1))^2 = (1/576) / (1 - 1/4)
  ASSERT_TRUE(rep.tail_series_from_n0.has_value());
  EXPECT_EQ(*rep.tail_series_from_n0, Rational(1, 576) * Rational(4, 3));
  EXPECT_EQ(rep.tail_sum_from_n0, Rational(1, 576) + Rational(1, 2304) + Rational(1, 9216));
  EXPECT_THROW(defect_series(d.spec, {ab}, {bc}, 0), InputError);
  EXPECT_THROW(defect_series(d.spec, {ab}, {bc, bc}, 3), InputError);
}

TEST(DefectSeries, ConstantTuplesReduceToRankOne) {
  const auto d = desk(3, 2);
  const auto one = defect_series(d.spec, {ab}, {bc}, 6);
  const auto two = defect_series(d.spec, {ab, ab}, {bc, bc}, 6);
  EXPECT_TRUE(two.k_reduction_hypotheses);
  for (int n = 4; n <= 6; ++n) EXPECT_EQ(two.rows[n].defect_sq, one.rows[n].defect_sq) << n;
}

// x = (ab, a), y = (c, bc): ab v c = a v bc iff bv = vb, so v is e or b.
TEST(DefectSeries, NonConstantTuplesHaveFewSolutions) {
  const auto d = desk(3, 2);
  const auto rep = defect_series(d.spec, {ab, a}, {c, bc}, 6);
  EXPECT_FALSE(rep.constant_tuples());
  EXPECT_EQ(rep.n0, 4);
  for (const auto& r : rep.rows) {
    ASSERT_TRUE(r.window_bound.has_value());
    EXPECT_LE(r.normalized_term, *r.window_bound);
    EXPECT_EQ(r.solution_count, r.n <= 1 ? 1u : 0u) << r.n;
    EXPECT_EQ(sgn(r.defect_sq) != 0, r.n <= 1);
  }
  EXPECT_TRUE(rep.violations().empty());
}

// x = (a, b), y = (b, a): a v b = b v a has the two solutions aba and bab at
// n = 3, already beyond n0 = 2.
TEST(DefectSeries, SolutionsBeyondShortThreshold) {
  const auto d = desk(3, 2);
  const auto rep = defect_series(d.spec, {a, b}, {b, a}, 5);
  EXPECT_EQ(rep.n0, 2);
  EXPECT_EQ(rep.rows[3].solution_count, 2u);
  EXPECT_EQ(rep.rows[3].solutions, (std::vector<Word>{Word{{0, 1}, {1, 1}, {0, 1}}, Word{{1, 1}, {0, 1}, {1, 1}}}));
  EXPECT_FALSE(rep.violations().empty());
  for (const auto& r : rep.rows) EXPECT_LE(r.normalized_term, *r.window_bound);
}

// x = (e, ab), y = (ab, e): v ab = ab v has the solutions (ab)^3 and (ba)^3
// at n = 6 > n0 = 4, so the "at most one solution" step fails here.
TEST(DefectSeries, CounterexampleToSingleSolutionIsReported) {
  const auto d = desk(3, 2);
  const auto rep = defect_series(d.spec, {Word{}, ab}, {ab, Word{}}, 6);
  EXPECT_EQ(rep.n0, 4);
  EXPECT_EQ(rep.rows[6].solution_count, 2u);
  const auto v = rep.violations();
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().find("solutions beyond n0"), std::string::npos);
  // the squared window bound still dominates the term
  EXPECT_LE(rep.rows[6].normalized_term, *rep.rows[6].window_bound);
}

TEST(KReduction, EqualWithinHypotheses) {
  const auto d = desk(3, 2);
  for (int k = 2; k <= 3; ++k) {
    const auto r = k_reduction_check(d.spec, ab, bc, k, 4);
    EXPECT_TRUE(r.within_hypotheses);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.lhs, r.rhs);
  }
  EXPECT_THROW(k_reduction_check(d.spec, ab, bc, 2, 3), PreconditionError);
  EXPECT_THROW(k_reduction_check(d.spec, a, bc, 2, 5), PreconditionError);
  const auto e = k_reduction_check(d.spec, ab, bc, 2, 3, HypothesisMode::exploratory);
  EXPECT_FALSE(e.within_hypotheses);
  EXPECT_THROW(k_reduction_check(d.spec, ab, bc, 0, 4), InputError);
}
