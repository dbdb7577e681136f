#include <gtest/gtest.h>

#include "catamp/oracle_check.hpp"

using namespace catamp;
namespace or_ = catamp::oracle;

TEST(Oracle, InitialStateIsPure) {
  const auto s = or_::build_initial({CatSpec::odd(1.2), CatSpec::yurke_stoler(0.8)}, 20, 16);
  EXPECT_NEAR(s.trace(), 1.0, 1e-14);
  EXPECT_NEAR(s.purity(), 1.0, 1e-13);
  EXPECT_LT(s.hermiticity_error(), 1e-15);
}

TEST(Oracle, DimensionTooSmall) {
  EXPECT_THROW(or_::build_initial({CatSpec::even(2), CatSpec::even(1)}, 5, 12), DimTooSmall);
  try {
    or_::build_initial({CatSpec::even(2), CatSpec::even(1)}, 5, 12);
  } catch (const DimTooSmall& e) {
    EXPECT_NE(std::string(e.what()).find("e-"), std::string::npos);
  }
}

TEST(Oracle, AmplifiedVacuum) {
  const double gt = 0.5;
  const auto s = or_::evolve(or_::build_initial({CatSpec::even(0), CatSpec::even(0)}, 30, 30),
                             AmplifierParams::undamped(1, 0.3), gt);
  EXPECT_NEAR(or_::expect_normal(s, 1, 1, 0, 0).real(), std::sinh(gt) * std::sinh(gt), 1e-12);
  EXPECT_NEAR(std::abs(or_::expect_normal(s, 0, 1, 0, 1)), std::sinh(gt) * std::cosh(gt), 1e-12);
  EXPECT_NEAR(s.purity(), 1.0, 1e-12);
}

TEST(Oracle, UncoupledDecay) {
  // g = 0: <n> relaxes to the reservoir occupation
  const double gamma = 1.0, nbar = 0.3, t = 0.8, a = 1.1;
  const auto s = or_::evolve(or_::build_initial({CatSpec::even(a), CatSpec::even(0)}, 20, 6),
                             AmplifierParams::make(0, 0, gamma, gamma, nbar, nbar), t);
  const double n0 = a * a * std::tanh(a * a);
  const double expect = n0 * std::exp(-gamma * t) + nbar * (1 - std::exp(-gamma * t));
  EXPECT_NEAR(or_::expect_normal(s, 1, 1, 0, 0).real(), expect, 1e-7);
  EXPECT_LT(s.purity(), 1.0);
  EXPECT_LT(s.hermiticity_error(), 1e-12);
  EXPECT_NEAR(s.trace(), 1.0, 1e-10);
}

TEST(Oracle, ThermalFixedPoint) {
  const double nbar = 0.4;
  const auto p = AmplifierParams::make(0, 0, 2, 2, nbar, nbar);
  const auto s = or_::evolve(or_::build_initial({CatSpec::even(0), CatSpec::even(0)}, 14, 4), p, 12.0);
  const auto pn = or_::pnd_single(s, 1);
  for (int n = 0; n < 8; ++n) EXPECT_NEAR(pn[n], std::pow(nbar, n) / std::pow(1 + nbar, n + 1), 1e-6);
  EXPECT_GT(s.min_eigenvalue(), -1e-10);
}

TEST(Oracle, StepHalving) {
  const CatPair cats{CatSpec::even(0.8), CatSpec::odd(0.6)};
  const auto p = AmplifierParams::symmetric(1, 0.5, 1.0, 0.5);
  const auto a = or_::evolve(or_::build_initial(cats, 12, 12), p, 0.3, 2e-3);
  const auto b = or_::evolve(or_::build_initial(cats, 12, 12), p, 0.3, 1e-3);
  EXPECT_LT((a.rho - b.rho).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Oracle, FockWignerOfCoherentCat) {
  const auto s = or_::build_initial({CatSpec::odd(1.0), CatSpec::even(0)}, 24, 2);
  EXPECT_NEAR(or_::wigner(s, {0, 0}), -2 / kPi, 1e-12);
}

TEST(Oracle, UndampedEquivalence) {
  const or_::Case c{"undamped", {CatSpec::make(0.8, 0.3, 0.0), CatSpec::make(0.7, -0.2, kPi / 2)},
                    AmplifierParams::undamped(1, 0.4), 0.3, 30, 30};
  const auto r = or_::compare(c);
  for (const auto& d : r.devs) EXPECT_LT(d.max_abs, 1e-8) << d.observable;
}

TEST(Oracle, DampedEquivalenceSmall) {
  const or_::Case c{"damped", {CatSpec::make(0.8, 0.3, 0.0), CatSpec::make(0.7, -0.2, kPi / 2)},
                    AmplifierParams::make(1, 0.4, 1.0, 0.6, 0.5, 0.2), 0.3, 16, 16};
  const auto r = or_::compare(c);
  for (const auto& d : r.devs) EXPECT_LT(d.max_abs, 1e-6) << d.observable;
}

TEST(Oracle, FactorialMomentsFromDistribution) {
  const CatPair cats{CatSpec::even(0.9), CatSpec::odd(0.7)};
  const auto p = AmplifierParams::undamped(1, 0.2);
  const auto s = or_::evolve(or_::build_initial(cats, 30, 30), p, 0.3);
  const auto pn = or_::pnd_single(s, 1);
  for (int k = 1; k <= 3; ++k)
    EXPECT_NEAR(or_::factorial_moment(pn, k), factorial_moment(cats, p, 0.3, k, Scope::Single).moment, 1e-8);
}
