#include <gtest/gtest.h>

#include <random>

#include "catamp/squeezing.hpp"

using namespace catamp;

TEST(Squeezing, VacuumIsTheReference) {
  const auto f = single_mode_squeezing(1, {CatSpec::even(0), CatSpec::even(0)}, AmplifierParams::undamped(1, 0), 0);
  EXPECT_NEAR(f.S, 0.0, 1e-15);
  EXPECT_NEAR(f.Q, 0.0, 1e-15);
  const auto c = two_mode_squeezing({CatSpec::even(0), CatSpec::even(0)}, AmplifierParams::undamped(1, 0), 0);
  EXPECT_NEAR(c.S, 0.0, 1e-15);
}

TEST(Squeezing, EvenCatInitialValue) {
  // Q(0) = 2 x (tanh x - 1) for an even cat with real amplitude, x = alpha^2
  for (double x : {0.3, 0.7, 1.5}) {
    const auto f = single_mode_squeezing(1, {CatSpec::even(std::sqrt(x)), CatSpec::even(1)},
                                         AmplifierParams::undamped(1, kPi / 2), 0);
    EXPECT_NEAR(f.Q, 2 * x * (std::tanh(x) - 1), 1e-14);
    EXPECT_NEAR(f.Q, 2 * even_q_shape(x), 1e-14);
  }
}

TEST(Squeezing, ClosedFormsMatchGenericMoments) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> amp(0.05, 2.0), gt(0.0, 1.0), loss(0.0, 3.0), nb(0.0, 1.5);
  for (int i = 0; i < 60; ++i) {
    const double a1 = amp(rng), a2 = amp(rng), g = 1.0, t = gt(rng);
    const bool damped = i % 2;
    const auto p = damped ? AmplifierParams::symmetric(g, kPi / 2, loss(rng), nb(rng)) : AmplifierParams::undamped(g, kPi / 2);
    for (const auto& cats : {CatPair{CatSpec::even(a1), CatSpec::even(a2)}, CatPair{CatSpec::odd(a1), CatSpec::even(a2)},
                             CatPair{CatSpec::even(a1), CatSpec::yurke_stoler(a2)}}) {
      const auto cf = signal_q_closed_form(cats, p, t);
      ASSERT_TRUE(cf.has_value());
      EXPECT_NEAR(*cf, single_mode_squeezing(1, cats, p, t).Q, 1e-10);
    }
  }
}

TEST(Squeezing, ClosedFormOnlyForRealAmplitudes) {
  EXPECT_FALSE(signal_q_closed_form({CatSpec::even(1, 0.3), CatSpec::even(1)}, AmplifierParams::undamped(1, kPi / 2), 0.1));
}

TEST(Squeezing, CompoundYIsTheSingleModeMean) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> amp(0.05, 2.0), gt(0.0, 1.0), ph(0, kTwoPi);
  for (int i = 0; i < 50; ++i) {
    const CatPair cats{CatSpec::make(amp(rng), 0, ph(rng)), CatSpec::make(amp(rng), 0, ph(rng))};
    const auto p = AmplifierParams::undamped(1, 0);
    const double t = gt(rng);
    const auto q1 = single_mode_squeezing(1, cats, p, t).Q, q2 = single_mode_squeezing(2, cats, p, t).Q;
    EXPECT_NEAR(two_mode_squeezing(cats, p, t).Q, 0.5 * (q1 + q2), 1e-12);
  }
}

TEST(Squeezing, UncertaintyBound) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> amp(0.0, 2.0), gt(0.0, 1.5), ph(0, kTwoPi), loss(0, 3), nb(0, 1);
  for (int i = 0; i < 200; ++i) {
    const CatPair cats{CatSpec::make(amp(rng), ph(rng), ph(rng)), CatSpec::make(0.1 + amp(rng), ph(rng), ph(rng))};
    const auto p = AmplifierParams::make(1, ph(rng), loss(rng), loss(rng), nb(rng), nb(rng));
    const double t = gt(rng);
    for (const auto& f : {single_mode_squeezing(1, cats, p, t), single_mode_squeezing(2, cats, p, t), two_mode_squeezing(cats, p, t)}) {
      EXPECT_GE(f.S, -1 - 1e-12);
      EXPECT_GE(f.Q, -1 - 1e-12);
      EXPECT_GE((f.S + 1) * (f.Q + 1), 1 - 1e-10);
    }
  }
}

TEST(Squeezing, ShapeFunctionMinimum) {
  const auto [x, f] = even_q_shape_minimum();
  EXPECT_GT(x, 0.55);
  EXPECT_LT(x, 0.80);
  EXPECT_GT(f, -0.30);
  EXPECT_LT(f, -0.25);
  EXPECT_NEAR(f, -0.2785, 5e-4);
}

TEST(Squeezing, SurvivalTimeBoundary) {
  const auto sig = CatSpec::even(std::sqrt(0.7)), idl = CatSpec::even(1.0);
  const auto tb = squeeze_survival_time(sig, idl, 1.0);
  ASSERT_TRUE(tb.has_value());
  const auto p = AmplifierParams::undamped(1, kPi / 2);
  EXPECT_LT(single_mode_squeezing(1, {sig, idl}, p, *tb * 0.999).Q, 0.0);
  EXPECT_GE(single_mode_squeezing(1, {sig, idl}, p, *tb * 1.001).Q, 0.0);
  EXPECT_NEAR(single_mode_squeezing(1, {sig, idl}, p, *tb).Q, 0.0, 1e-12);
}

TEST(Squeezing, SurvivalTimeEdgeCases) {
  EXPECT_EQ(*squeeze_survival_time(CatSpec::even(0), CatSpec::even(1), 1.0), 0.0);
  EXPECT_FALSE(squeeze_survival_time(CatSpec::odd(1), CatSpec::even(1), 1.0).has_value());
}

TEST(Squeezing, OddSignalNeverSqueezesY) {
  const auto p = AmplifierParams::undamped(1, kPi / 2);
  for (double a1 : {0.1, 0.5, 1.0, 2.0, 3.0})
    for (double a2 : {0.0, 0.7, 2.0})
      for (double t : {0.0, 0.1, 0.5, 1.5}) EXPECT_GE(single_mode_squeezing(1, {CatSpec::odd(a1), CatSpec::even(a2)}, p, t).Q, -1e-12);
}

TEST(Squeezing, CompoundBoundary) {
  // (even, odd) pair, pump phase 0: compound Q crosses zero at the bound
  const double a1 = 0.6, a2 = 2.4;
  const double tau = two_mode_squeeze_time_bound(a1, a2);
  ASSERT_GT(tau, 0.0);
  const CatPair cats{CatSpec::even(a1), CatSpec::odd(a2)};
  const auto p = AmplifierParams::undamped(1, 0);
  EXPECT_LT(two_mode_squeezing(cats, p, tau * 0.999).Q, 0.0);
  EXPECT_GT(two_mode_squeezing(cats, p, tau * 1.001).Q, 0.0);
}

TEST(Squeezing, CompoundBoundEdgeCases) {
  EXPECT_THROW(two_mode_squeeze_time_bound(0.5, 0.0), DomainError);
  // without an even signal only the odd idler term drives the bound
  const double x2 = 0.25;
  const double expect = std::asinh(std::sqrt(-odd_q_shape(x2) / (2 * (1 + x2 / std::tanh(x2)))));
  EXPECT_NEAR(two_mode_squeeze_time_bound(0.0, 0.5), std::max(0.0, expect), 1e-14);
}

TEST(Squeezing, CompoundBoundMaximum) {
  const auto m = maximize_two_mode_bound();
  EXPECT_NEAR(m.tau, 0.17705, 2e-4);
  EXPECT_NEAR(m.x1, 0.576, 0.01);
  EXPECT_NEAR(m.x2, 2.444, 0.01);
}

TEST(Squeezing, XMinimaOverCatPhases) {
  // even cats, |alpha| = 0.7, t = 0.2, pump phase pi/2: X is most squeezed at psi_j in {pi/2, 3pi/2}
  const auto p = AmplifierParams::undamped(1, kPi / 2);
  double best = 1e9;
  std::pair<double, double> arg;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const double p1 = kTwoPi * i / 16, p2 = kTwoPi * j / 16;
      const double s = two_mode_squeezing({CatSpec::even(0.7, p1), CatSpec::even(0.7, p2)}, p, 0.2).S;
      if (s < best - 1e-12) best = s, arg = {p1, p2};
    }
  EXPECT_NEAR(std::fmod(arg.first, kPi), kPi / 2, 1e-12);
  EXPECT_NEAR(std::fmod(arg.second, kPi), kPi / 2, 1e-12);
  for (double p1 : {kPi / 2, 1.5 * kPi})
    for (double p2 : {kPi / 2, 1.5 * kPi})
      EXPECT_NEAR(two_mode_squeezing({CatSpec::even(0.7, p1), CatSpec::even(0.7, p2)}, p, 0.2).S, best, 1e-12);
  EXPECT_LT(best, 0.0);
}
