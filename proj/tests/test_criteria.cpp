#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gspgate/criteria.hpp"
#include "gspgate/errors.hpp"

namespace gspgate {
namespace {

GseeModel model(double alpha, double beta) {
  return {"m", alpha, beta, DepthUnit::circuit_layers(), 1.0};
}

GspCandidate candidate(double depth, double gamma, double p_succ = 1.0) {
  return {"c", depth, gamma, p_succ, DepthUnit::circuit_layers()};
}

TEST(VerdictGeneral, ZeroDepthSameOverlapIsBoundaryReject) {
  const Verdict v = verdict_general(model(0, 1), candidate(0, 0.72), Reference{0.72}, Accuracy{1e-3});
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.lhs, 1.0);
  EXPECT_EQ(v.rhs, 1.0);
  EXPECT_EQ(v.margin, 0.0);
  EXPECT_EQ(v.detail.at("runtime"), v.detail.at("runtime_ref"));
}

TEST(VerdictGeneral, ZeroDepthReducesToOverlapComparison) {
  const Verdict v = verdict_general(model(0, 1), candidate(0, 0.9), Reference{0.72}, Accuracy{1e-3});
  EXPECT_TRUE(v.accepted);
  const Verdict w = verdict_general(model(2, 2), candidate(0, 0.7), Reference{0.72}, Accuracy{1e-3});
  EXPECT_FALSE(w.accepted);
}

TEST(VerdictGeneral, BoosterWithoutRepetitions) {
  const Verdict v = verdict_general(model(0, 1), candidate(1e3, 1.0, 0.5), Reference{0.72}, Accuracy{5e-5});
  EXPECT_NEAR(v.lhs, 21000.0 / 20000.0, 1e-12);
  EXPECT_NEAR(v.rhs, 1.0 / 0.72, 1e-12);
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(v.regime, Regime::general);
  EXPECT_NEAR(v.detail.at("runtime"), 21000.0, 1e-8);
  EXPECT_NEAR(v.detail.at("runtime_ref"), 27777.777777777777, 1e-8);
  EXPECT_EQ(v.detail.at("runtime_accepted"), 1.0);
}

TEST(VerdictGeneral, UnitMismatch) {
  GspCandidate c = candidate(10, 0.9);
  c.depth_unit = DepthUnit::t_count();
  EXPECT_THROW(verdict_general(model(0, 1), c, Reference{0.5}, Accuracy{1e-3}), UnitMismatchError);
}

TEST(VerdictWithReps, N2Booster) {
  const GspCandidate c = candidate(1e3, 1.0, 0.5);
  const Verdict v = verdict_with_reps(model(0, 1), c, Reference{0.72}, GseeDepth{2e4});
  EXPECT_NEAR(v.lhs, 1.1, 1e-12);
  EXPECT_NEAR(v.rhs, 1.3888888888888888, 1e-12);
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(v.regime, Regime::with_repetitions);

  const Verdict v4 = verdict_with_reps(model(2, 2), c, Reference{0.72}, GseeDepth{2e4});
  EXPECT_NEAR(v4.rhs, 3.721088629782046, 1e-12);
  EXPECT_TRUE(v4.accepted);
}

TEST(VerdictWithReps, UnitSuccessProbabilityEqualsGeneral) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int k = 0; k < 500; ++k) {
    const auto m = model(k % 3 * 2.0, k % 2 + 1.0);
    const auto c = candidate(1e3 * u(rng), u(rng), 1.0);
    const Reference ref{u(rng)};
    const Accuracy acc{1e-3 * u(rng)};
    const Verdict a = verdict_general(m, c, ref, acc);
    const Verdict b = verdict_with_reps(m, c, ref, acc);
    EXPECT_EQ(a.accepted, b.accepted);
    EXPECT_EQ(a.lhs, b.lhs);
    EXPECT_EQ(a.rhs, b.rhs);
    EXPECT_EQ(a.margin, b.margin);
    EXPECT_EQ(a.regime, b.regime);
    EXPECT_EQ(a.warnings, b.warnings);
    EXPECT_EQ(a.detail, b.detail);
  }
}

TEST(VerdictSimplified, N2Spa) {
  const Verdict v = verdict_simplified(model(0, 1), candidate(3, 0.85), Reference{0.72}, Accuracy{1e-3});
  EXPECT_TRUE(v.accepted);
  EXPECT_EQ(v.lhs, 1.0);
  EXPECT_NEAR(v.rhs, 0.85 / 0.72, 1e-12);
  EXPECT_NEAR(v.rhs, 1.18, 0.005);
  EXPECT_EQ(v.regime, Regime::simplified);
}

TEST(VerdictSimplified, EqualOverlapRejects) {
  const Verdict v = verdict_simplified(model(0, 1), candidate(0, 0.6), Reference{0.6}, Accuracy{1e-3});
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.lhs, 1.0);
  EXPECT_EQ(v.rhs, 1.0);
}

TEST(VerdictSimplified, RegimeGuard) {
  try {
    verdict_simplified(model(0, 0), candidate(1e3, 0.9), Reference{0.5}, Accuracy{1e-3});
    FAIL() << "expected RegimeError";
  } catch (const RegimeError& e) {
    EXPECT_DOUBLE_EQ(e.measured_ratio(), 1.0);
    EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
  }
  EXPECT_NO_THROW(verdict_simplified(model(0, 0), candidate(1e3, 0.9), Reference{0.5}, Accuracy{1e-3}, 2.0));
}

TEST(VerdictSimplified, ZeroExponentSumWarns) {
  const Verdict v = verdict_simplified(model(0, 0), candidate(1, 0.9), Reference{0.5}, Accuracy{1e-3});
  EXPECT_FALSE(v.accepted);
  EXPECT_FALSE(v.warnings.empty());
}

TEST(VerdictFromRatio, UsesWorstCaseGuard) {
  const Verdict v = verdict_from_ratio(model(0, 1), 1.005, 3, Accuracy{1e-3});
  EXPECT_TRUE(v.accepted);
  EXPECT_DOUBLE_EQ(v.rhs, 1.005);
  EXPECT_THROW(verdict_from_ratio(model(0, 1), 1.5, 1e3, Accuracy{1e-3}), RegimeError);
  EXPECT_THROW(verdict_from_ratio(model(0, 1), -1.0, 3, Accuracy{1e-3}), DomainError);
}

TEST(MaxDepth, Examples) {
  EXPECT_EQ(max_depth(model(0, 1), 0.72, Reference{0.72}, Accuracy{1e-3}).value, 0.0);
  const DepthBound b = max_depth(model(0, 1), 1.0, Reference{0.72}, Accuracy{5e-5});
  EXPECT_NEAR(b.value, 7777.7777777777765, 1e-8);
  EXPECT_TRUE(b.warnings.empty());
  const DepthBound below = max_depth(model(0, 1), 0.5, Reference{0.72}, Accuracy{5e-5});
  EXPECT_EQ(below.value, 0.0);
  EXPECT_FALSE(below.warnings.empty());
  EXPECT_NEAR(max_depth(model(0, 1), 1.0, Reference{0.72}, GseeDepth{2e4}, 0.5).value, 3888.888888888889, 1e-8);
}

TEST(MaxDepthStrict, Examples) {
  EXPECT_DOUBLE_EQ(max_depth_strict(1.0, 0.5, 1.8e7).value, 1.8e7);
  EXPECT_EQ(max_depth_strict(0.6, 0.6, 1.8e7).value, 0.0);
  EXPECT_NEAR(max_depth_strict(1.0, 0.1, 1.8e7).value, 1.62e8, 1e-6);
  const DepthBound b = max_depth_strict(0.7, 0.8, 1e6);
  EXPECT_EQ(b.value, 0.0);
  EXPECT_EQ(b.warnings.size(), 1u);
  EXPECT_THROW(max_depth_strict(1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(max_depth_strict(1.0, 0.5, -1.0), DomainError);
}

TEST(MaxDepthStrict, AgreesWithGeneralBoundWhenExponentsSumToOne) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int k = 0; k < 1000; ++k) {
    double g0 = u(rng), g = u(rng);
    if (g < g0) std::swap(g, g0);
    const double d = 1e7 * u(rng);
    const double strict = max_depth_strict(g, g0, d).value;
    const double general = max_depth(model(0, 1), g, Reference{g0}, GseeDepth{d}).value;
    EXPECT_NEAR(strict, general, 1e-9 * std::max(1.0, d));
  }
}

TEST(BoosterDepthModel, Examples) {
  EXPECT_DOUBLE_EQ(booster_depth_model({1.0, 1.0}), 1.0);
  EXPECT_NEAR(booster_depth_model({0.01, 0.5}), 200.0, 1e-9);
  EXPECT_THROW(booster_depth_model({0.0, 0.5}), DomainError);
  EXPECT_THROW(booster_depth_model({0.1, 0.0}), DomainError);
}

TEST(BoosterDepthModel, ReproducesQpeCriterionLhs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double g0 = u(rng), delta = u(rng), eps = 1e-3 * u(rng);
    const double g = g0 + (1.0 - g0) * u(rng);
    const double d = booster_depth_model({delta, g0});
    const Verdict v = verdict_general(model(2, 2), candidate(d, g), Reference{g0}, Accuracy{eps});
    const double expected = (eps * g * g + delta * g0) / (delta * g0);
    EXPECT_NEAR(v.lhs, expected, 1e-12 * expected);
  }
}

TEST(StrictnessOrder, QpeVersusLt20) {
  const auto qpe = *find_gsee("qpe");
  const auto lt20 = *find_gsee("lt20");
  const double d = booster_depth_model({0.1, 0.72});
  const StrictnessReport r = strictness_order(qpe, lt20, candidate(d, 0.9), Reference{0.72}, Accuracy{1e-3});
  EXPECT_GE(r.b.lhs, r.a.lhs);
  EXPECT_LE(r.b.rhs, r.a.rhs);
  EXPECT_EQ(r.stricter, 1);
  EXPECT_TRUE(r.implication_holds);
  EXPECT_EQ(r.a.model, "qpe");
}

TEST(StrictnessOrder, SameModelGivesIdenticalTriples) {
  const auto lt20 = *find_gsee("lt20");
  const StrictnessReport r = strictness_order(lt20, lt20, candidate(50, 0.9), Reference{0.6}, Accuracy{1e-3});
  EXPECT_EQ(r.a.lhs, r.b.lhs);
  EXPECT_EQ(r.a.rhs, r.b.rhs);
  EXPECT_EQ(r.a.accepted, r.b.accepted);
  EXPECT_EQ(r.stricter, -1);
  EXPECT_TRUE(r.implication_holds);
}

// --- properties ------------------------------------------------------------

TEST(CriteriaProperties, RuntimeAndRatioFormsAgree) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double alphas[] = {0, 2, 4};
  const double betas[] = {0, 1, 2};
  for (int k = 0; k < 10000; ++k) {
    const auto m = model(alphas[k % 3], betas[(k / 3) % 3]);
    const auto c = candidate(std::pow(10.0, 6.0 * u(rng)) - 1.0, 0.01 + 0.99 * u(rng), 0.05 + 0.95 * u(rng));
    const Reference ref{0.01 + 0.99 * u(rng)};
    const Accuracy acc{std::pow(10.0, -6.0 + 4.0 * u(rng))};
    const Verdict v = verdict_with_reps(m, c, ref, acc);
    EXPECT_EQ(v.accepted, v.detail.at("runtime_accepted") == 1.0);
    EXPECT_EQ(v.margin, v.rhs - v.lhs);
    EXPECT_EQ(v.accepted, v.lhs < v.rhs);
  }
}

TEST(CriteriaProperties, MonotoneInGammaDepthAndSuccess) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 300; ++k) {
    const auto m = model(2.0 * (k % 3), 1.0 + k % 2);
    const Reference ref{0.1 + 0.8 * u(rng)};
    const Accuracy acc{1e-3};
    const double depth = 2e3 * u(rng);
    const double p = 0.1 + 0.9 * u(rng);
    int flips = 0;
    bool prev = false;
    for (int i = 1; i <= 100; ++i) {
      const bool a = verdict_with_reps(m, candidate(depth, i / 100.0, p), ref, acc).accepted;
      if (i > 1 && a != prev) {
        ++flips;
        EXPECT_TRUE(a) << "acceptance must not be lost as gamma grows";
      }
      prev = a;
    }
    EXPECT_LE(flips, 1);

    const double g = ref.gamma0 + (1.0 - ref.gamma0) * u(rng);
    prev = true;
    for (int i = 0; i <= 100; ++i) {
      const bool a = verdict_with_reps(m, candidate(50.0 * i, g, p), ref, acc).accepted;
      if (!prev) EXPECT_FALSE(a) << "acceptance must not reappear as depth grows";
      prev = a;
    }
    prev = false;
    for (int i = 1; i <= 100; ++i) {
      const bool a = verdict_with_reps(m, candidate(depth, g, i / 100.0), ref, acc).accepted;
      if (prev) EXPECT_TRUE(a) << "acceptance must persist as p_succ grows";
      prev = a;
    }
  }
}

TEST(CriteriaProperties, SmallerEpsilonNeverShrinksMaxDepth) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const auto m = model(2.0 * (k % 3), (k / 3) % 3);
    const Reference ref{0.05 + 0.9 * u(rng)};
    const double g = ref.gamma0 + (1.0 - ref.gamma0) * u(rng);
    double e1 = std::pow(10.0, -6.0 + 4.0 * u(rng));
    double e2 = std::pow(10.0, -6.0 + 4.0 * u(rng));
    if (e1 > e2) std::swap(e1, e2);
    EXPECT_GE(max_depth(m, g, ref, Accuracy{e1}).value, max_depth(m, g, ref, Accuracy{e2}).value);
  }
}

TEST(CriteriaProperties, BoundaryFlipsAtMaxDepth) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const auto m = model(2.0 * (k % 3), 1.0 + (k / 3) % 2);
    const Reference ref{0.05 + 0.9 * u(rng)};
    const double g = ref.gamma0 + (1.0 - ref.gamma0) * (0.01 + 0.99 * u(rng));
    const double p = 0.05 + 0.95 * u(rng);
    const Accuracy acc{std::pow(10.0, -6.0 + 4.0 * u(rng))};
    const double bound = max_depth(m, g, ref, acc, p).value;
    ASSERT_GT(bound, 0.0);
    EXPECT_TRUE(verdict_with_reps(m, candidate(bound * (1 - 1e-9), g, p), ref, acc).accepted);
    EXPECT_FALSE(verdict_with_reps(m, candidate(bound * (1 + 1e-9), g, p), ref, acc).accepted);
  }
}

TEST(CriteriaProperties, Lt20AcceptanceImpliesQpeAcceptance) {
  const auto qpe = *find_gsee("qpe");
  const auto lt20 = *find_gsee("lt20");
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int counterexamples = 0;
  for (int k = 0; k < 10000; ++k) {
    const double g0 = 0.01 + 0.99 * u(rng);
    const double g = g0 + (1.0 - g0) * u(rng);
    const Accuracy acc{std::pow(10.0, -6.0 + 4.0 * u(rng))};
    const double delta = std::pow(10.0, -3.0 + 3.0 * u(rng));
    const auto c = candidate(booster_depth_model({delta, g0}), g);
    const StrictnessReport r = strictness_order(qpe, lt20, c, Reference{g0}, acc);
    if (r.b.accepted && !r.a.accepted) ++counterexamples;
    EXPECT_GE(r.b.lhs, r.a.lhs);
  }
  EXPECT_EQ(counterexamples, 0);
}

}  // namespace
}  // namespace gspgate
