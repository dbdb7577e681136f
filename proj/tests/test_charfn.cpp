#include <gtest/gtest.h>

#include "catamp/charfn.hpp"

using namespace catamp;
using cd = std::complex<double>;

namespace {

const CatPair kCats{CatSpec::make(1.1, 0.4, 0.9), CatSpec::make(0.8, -0.7, 2.3)};
const AmplifierParams kDamped = AmplifierParams::make(1, 0.6, 0.8, 1.3, 0.4, 0.9);

}  // namespace

TEST(CharFn, UnityAtOrigin) {
  for (double t : {0.0, 0.3, 1.2}) {
    const auto s = evolve<double>(kCats, kDamped, t);
    const auto c = char_function(s, cd{}, cd{});
    EXPECT_NEAR(c.real(), 1.0, 1e-14);
    EXPECT_NEAR(c.imag(), 0.0, 1e-14);
  }
}

TEST(CharFn, ReflectionGivesConjugate) {
  const auto s = evolve<double>(kCats, kDamped, 0.7);
  for (cd z1 : {cd(0.3, -0.2), cd(-1.1, 0.4)})
    for (cd z2 : {cd(0.5, 0.5), cd(0.0, -0.9)}) {
      const auto a = char_function(s, z1, z2), b = char_function(s, -z1, -z2);
      EXPECT_NEAR(std::abs(a - std::conj(b)), 0.0, 1e-13);
    }
}

TEST(CharFn, SingleModeIsTheMarginal) {
  const auto s = evolve<double>(kCats, kDamped, 0.7);
  const cd z(0.4, -0.3);
  cd acc{};
  for (const auto& t : s.set.terms) acc += single_mode_char(t, s.coeffs, z);
  EXPECT_NEAR(std::abs(s.set.norm * acc - char_function(s, z, cd{})), 0.0, 1e-14);
}

TEST(CharFn, FirstMomentsMatchFiniteDifferences) {
  const auto s = evolve<double>(kCats, kDamped, 0.5);
  const double h = 1e-5;
  for (int mode : {1, 2}) {
    auto C = [&](cd z) { return mode == 1 ? char_function(s, z, cd{}) : char_function(s, cd{}, z); };
    const cd re = (C(h) - C(-h)) / (2 * h);              // <A^dag> - <A>
    const cd im = (C(cd(0, h)) - C(cd(0, -h))) / cd(0, 2 * h);  // <A^dag> + <A>
    const cd a = mode == 1 ? moment(s, 0, 1, 0, 0) : moment(s, 0, 0, 0, 1);
    const cd ad = mode == 1 ? moment(s, 1, 0, 0, 0) : moment(s, 0, 0, 1, 0);
    EXPECT_NEAR(std::abs((im - re) / 2.0 - a), 0.0, 1e-8);
    EXPECT_NEAR(std::abs((im + re) / 2.0 - ad), 0.0, 1e-8);
  }
}

TEST(CharFn, NumberMomentFromSecondDerivative) {
  // <A^dag A> = -d^2 C / d zeta d zeta^*, i.e. minus the Laplacian / 4 at 0
  const auto s = evolve<double>(kCats, kDamped, 0.5);
  const double h = 1e-4;
  auto C = [&](cd z) { return char_function(s, z, cd{}); };
  const cd lap = (C(h) + C(-h) + C(cd(0, h)) + C(cd(0, -h)) - 4.0 * C(0)) / (h * h);
  EXPECT_NEAR(std::abs(-lap / 4.0 - moment(s, 1, 1, 0, 0)), 0.0, 1e-5);
}

TEST(CharFn, MomentSymmetries) {
  const auto s = evolve<double>(kCats, kDamped, 0.9);
  EXPECT_NEAR(std::abs(moment(s, 1, 0, 0, 0) - std::conj(moment(s, 0, 1, 0, 0))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(moment(s, 2, 1, 0, 1) - std::conj(moment(s, 1, 2, 1, 0))), 0.0, 1e-13);
  EXPECT_NEAR(moment(s, 1, 1, 0, 0).imag(), 0.0, 1e-14);
  EXPECT_GT(moment(s, 1, 1, 0, 0).real(), 0.0);
  EXPECT_GT(moment(s, 2, 2, 0, 0).real(), 0.0);
  EXPECT_EQ(moment(s, 0, 0, 0, 0), cd(1.0));
}

TEST(CharFn, OrderLimit) {
  const auto s = evolve<double>(kCats, kDamped, 0.2);
  EXPECT_NO_THROW(moment(s, 1, 1, 1, 1));
  EXPECT_THROW(moment(s, 2, 1, 1, 1), OrderTooHigh);
  EXPECT_THROW(moment(s, -1, 0, 0, 0), DomainError);
}

TEST(CharFn, CoherentLimit) {
  // amplitude-zero even cats are the vacuum: <n_1> = B_1, <A_1 A_2> = D^*
  const auto p = AmplifierParams::symmetric(1, 0.3, 0.5, 0.2);
  const auto s = evolve<double>({CatSpec::even(0), CatSpec::even(0)}, p, 0.8);
  EXPECT_NEAR(moment(s, 1, 1, 0, 0).real(), s.coeffs.B1N, 1e-14);
  EXPECT_NEAR(std::abs(moment(s, 0, 1, 0, 1) - std::conj(s.coeffs.D)), 0.0, 1e-14);
}
