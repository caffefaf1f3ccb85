#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gspgate/errors.hpp"
#include "gspgate/runtime_model.hpp"

namespace gspgate {
namespace {

GseeModel model(double alpha, double beta, DepthUnit unit = DepthUnit::circuit_layers()) {
  return {"m", alpha, beta, unit, 1.0};
}

GspCandidate candidate(double depth, double gamma, double p_succ = 1.0,
                       DepthUnit unit = DepthUnit::circuit_layers()) {
  return {"c", depth, gamma, p_succ, unit};
}

TEST(GseeDepth, Examples) {
  EXPECT_DOUBLE_EQ(gsee_depth(model(0, 1), Accuracy{1e-3}, 1.0), 1000.0);
  EXPECT_DOUBLE_EQ(gsee_depth(model(0, 0), Accuracy{0.0016}, 0.3), 625.0);
  // 1/(1e-3 * 0.25)
  EXPECT_NEAR(gsee_depth(model(0, 2), Accuracy{1e-3}, 0.5), 4000.0, 1e-9);
}

TEST(GseeDepth, DomainErrors) {
  EXPECT_THROW(gsee_depth(model(0, 1), Accuracy{1e-3}, 0.0), DomainError);
  EXPECT_THROW(gsee_depth(model(0, 1), Accuracy{1e-3}, 1.5), DomainError);
  EXPECT_THROW(gsee_depth(model(0, 1), Accuracy{0.0}, 0.5), DomainError);
  EXPECT_THROW(gsee_depth(model(0, 1), Accuracy{-1.0}, 0.5), DomainError);
}

TEST(Repetitions, Examples) {
  EXPECT_DOUBLE_EQ(repetitions(model(2, 0), 0.5), 4.0);
  EXPECT_DOUBLE_EQ(repetitions(model(0, 0), 0.3), 1.0);
  EXPECT_NEAR(repetitions(model(4, 0), 0.72), 3.721088629782046, 1e-12);
  EXPECT_THROW(repetitions(model(2, 0), -0.1), DomainError);
}

TEST(RuntimeTotal, Examples) {
  EXPECT_DOUBLE_EQ(runtime_total(model(0, 1), candidate(0, 1.0), Accuracy{1e-3}), 1000.0);
  EXPECT_NEAR(runtime_total(model(2, 2), candidate(1e3, 0.72), Accuracy{1e-3}), 5650.100975461059, 1e-8);
  EXPECT_NEAR(runtime_total(model(0, 1), candidate(1e3, 1.0), Accuracy{5e-5}), 21000.0, 1e-9);
}

TEST(RuntimeTotal, UnitMismatch) {
  EXPECT_THROW(runtime_total(model(0, 1, DepthUnit::t_count()), candidate(10, 0.9), Accuracy{1e-3}),
               UnitMismatchError);
  const auto a = DepthUnit::parse("custom:rotations");
  EXPECT_NO_THROW(runtime_total(model(0, 1, a), candidate(10, 0.9, 1.0, a), Accuracy{1e-3}));
}

TEST(RuntimeReference, Examples) {
  EXPECT_DOUBLE_EQ(runtime_reference(model(0, 1), Reference{1.0}, Accuracy{1e-3}), 1000.0);
  EXPECT_NEAR(runtime_reference(model(2, 2), Reference{0.5}, Accuracy{1e-3}), 16000.0, 1e-9);
  EXPECT_NEAR(runtime_reference(model(0, 1), Reference{0.72}, Accuracy{5e-5}), 27777.777777777777, 1e-8);
  EXPECT_THROW(runtime_reference(model(0, 1), Reference{0.0}, Accuracy{1e-3}), DomainError);
}

TEST(RuntimeWithReps, Examples) {
  EXPECT_NEAR(runtime_with_reps(model(0, 1), candidate(1e3, 1.0, 0.5), Accuracy{5e-5}), 22000.0, 1e-9);
  // 4 * (100/0.25 + 1/(1e-2 * 0.5))
  EXPECT_NEAR(runtime_with_reps(model(2, 1), candidate(100, 0.5, 0.25), Accuracy{1e-2}), 2400.0, 1e-9);
  EXPECT_THROW(runtime_with_reps(model(0, 1), candidate(1, 0.5, 0.0), Accuracy{1e-2}), DomainError);
  EXPECT_THROW(runtime_with_reps(model(0, 1), candidate(1, 0.5, 1.5), Accuracy{1e-2}), DomainError);
}

TEST(RuntimeWithReps, GivenGseeDepthMatchesDerivedDepth) {
  const auto m = model(2, 1);
  const auto c = candidate(50, 0.6, 0.4);
  const Accuracy acc{1e-3};
  const double g = gsee_depth(m, acc, c.gamma);
  EXPECT_NEAR(runtime_with_reps(m, c, GseeDepth{g}), runtime_with_reps(m, c, acc), 1e-9);
  EXPECT_NEAR(runtime_reference(m, c, Reference{0.3}, GseeDepth{g}),
              runtime_reference(m, Reference{0.3}, acc), 1e-6);
}

TEST(Catalog, QpeAndLt20) {
  const auto qpe = find_gsee("QPE");
  ASSERT_TRUE(qpe);
  EXPECT_EQ(qpe->alpha, 2.0);
  EXPECT_EQ(qpe->beta, 2.0);
  const auto lt20 = find_gsee("lt20", DepthUnit::controlled_evolutions());
  ASSERT_TRUE(lt20);
  EXPECT_EQ(lt20->alpha, 0.0);
  EXPECT_EQ(lt20->beta, 1.0);
  EXPECT_EQ(lt20->depth_unit, DepthUnit::controlled_evolutions());
  EXPECT_FALSE(find_gsee("vqe"));
  for (const auto& m : gsee_catalog()) EXPECT_GE(m.exponent_sum(), 1.0);
}

TEST(DepthUnit, Parse) {
  EXPECT_EQ(DepthUnit::parse("t-count"), DepthUnit::t_count());
  EXPECT_THROW(DepthUnit::parse("seconds"), DomainError);
  EXPECT_THROW(DepthUnit::parse("custom:"), DomainError);
  EXPECT_FALSE(DepthUnit::parse("custom:a") == DepthUnit::parse("custom:b"));
}

TEST(RuntimeProperties, MonotoneAndPositive) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  const double alphas[] = {0, 2, 4};
  const double betas[] = {0, 1, 2};
  for (int k = 0; k < 2000; ++k) {
    const auto m = model(alphas[k % 3], betas[(k / 3) % 3]);
    const Accuracy acc{std::pow(10.0, -6.0 + 4.0 * u(rng))};
    const double d = 1e4 * u(rng);
    double g1 = u(rng), g2 = u(rng);
    if (g1 > g2) std::swap(g1, g2);
    const double t1 = runtime_total(m, candidate(d, g1), acc);
    const double t2 = runtime_total(m, candidate(d, g2), acc);
    EXPECT_GT(t1, 0.0);
    EXPECT_GE(t1, t2);
    double p1 = u(rng), p2 = u(rng);
    if (p1 > p2) std::swap(p1, p2);
    EXPECT_GE(runtime_with_reps(m, candidate(d, g1, p1), acc), runtime_with_reps(m, candidate(d, g1, p2), acc));
  }
}

TEST(RuntimeProperties, PrefactorScalesBothRuntimes) {
  auto m = model(2, 1);
  m.prefactor = 3.0;
  const Accuracy acc{1e-3};
  EXPECT_NEAR(runtime_total(m, candidate(10, 0.5), acc), 3.0 * runtime_total(model(2, 1), candidate(10, 0.5), acc), 1e-9);
  EXPECT_NEAR(runtime_reference(m, Reference{0.5}, acc), 3.0 * runtime_reference(model(2, 1), Reference{0.5}, acc), 1e-9);
  m.prefactor = 0.0;
  EXPECT_THROW(runtime_total(m, candidate(10, 0.5), acc), DomainError);
}

}  // namespace
}  // namespace gspgate
