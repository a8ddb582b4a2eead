#include <random>

#include <gtest/gtest.h>

#include "ciobs/error.hpp"
#include "ciobs/lifting.hpp"
#include "ciobs/orientation.hpp"
#include "support.hpp"

namespace ciobs {
namespace {

using testing::ideal;
using testing::P;
using testing::ring_q;

std::vector<Polynomial> polys(const RingPtr& r, std::vector<std::string> texts) {
  std::vector<Polynomial> out;
  for (auto& t : texts) out.push_back(P(r, t));
  return out;
}

QuadricPoint point(const RingPtr& r, std::vector<std::string> f, std::vector<std::string> g, const std::string& s) {
  return QuadricPoint(r, polys(r, std::move(f)), polys(r, std::move(g)), P(r, s));
}

QuadricPoint standard_point(const RingPtr& r) { return point(r, {"x + x^2", "y"}, {"-1", "0"}, "-x"); }

void expect_to_zero(const HomotopyChain& c, const QuadricPoint& v) {
  auto [start, end] = chain_validate(c);
  EXPECT_EQ(start, v);
  EXPECT_TRUE(end.is_zero());
}

TEST(VerifyRLift, Examples) {
  auto rx = ring_q({"x"});
  auto z = point(rx, {"x^2", "0"}, {"0", "0"}, "0");
  for (unsigned r : {1u, 3u}) {
    auto c = verify_r_lift(z, polys(rx, {"0", "0"}), r);
    EXPECT_FALSE(check_lift(c));
    EXPECT_EQ(c.lifted(), z.f);
  }

  auto r = ring_q({"x", "y"});
  auto v = standard_point(r);
  auto c = verify_r_lift(v, polys(r, {"-1", "0"}), 2);
  EXPECT_EQ(c.lifted(), polys(r, {"x", "y"}));
  EXPECT_FALSE(check_lift(c));
  EXPECT_EQ(c.r, 2u);

  try {
    verify_r_lift(v, polys(r, {"0", "0"}), 2);
    FAIL();
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.residual(), "-x");  // normal form of -x modulo (x + x^2, y)
  }
  EXPECT_THROW(verify_r_lift(v, polys(r, {"0", "0"}), 0), InputError);
}

TEST(VerifyLift, Examples) {
  auto r = ring_q({"x", "y"});
  auto v = standard_point(r);
  auto c = verify_lift(v, polys(r, {"-x^2", "0"}));
  EXPECT_TRUE(c.plain());
  EXPECT_FALSE(check_lift(c));
  ASSERT_EQ(c.mu_in_square.size(), 2u);
  EXPECT_TRUE(c.mu_in_square[0].holds(ideal_square(ideal_of(v))));

  auto w = point(r, {"x", "y"}, {"0", "0"}, "0");
  EXPECT_FALSE(check_lift(verify_lift(w, polys(r, {"0", "0"}))));
  EXPECT_THROW(verify_lift(w, polys(r, {"x", "0"})), VerificationError);

  auto tampered = c;
  tampered.mu[0] = P(r, "-x^2 + y^2");
  EXPECT_TRUE(check_lift(tampered));
}

TEST(LiftToChain, Examples) {
  auto rx = ring_q({"x"});
  auto z = point(rx, {"x^2", "0"}, {"0", "0"}, "0");
  auto c0 = lift_to_chain(verify_lift(z, polys(rx, {"0", "0"})));
  ASSERT_EQ(c0.steps.size(), 1u);
  EXPECT_EQ(c0.steps[0], scale_f_to_zero(z));
  expect_to_zero(c0, z);

  auto r = ring_q({"x", "y"});
  auto v = standard_point(r);
  expect_to_zero(lift_to_chain(verify_lift(v, polys(r, {"-x^2", "0"}))), v);

  auto u = point(rx, {"1", "0"}, {"0", "0"}, "0");
  expect_to_zero(lift_to_chain(verify_lift(u, polys(rx, {"0", "0"}))), u);
  expect_to_zero(unit_collapse(u), u);

  EXPECT_THROW(lift_to_chain(verify_r_lift(v, polys(r, {"-1", "0"}), 2)), InputError);
}

TEST(VerifyDeformation, Examples) {
  auto r = ring_q({"x", "T"});
  auto h = HomotopyPoint(point(r, {"x + x*T", "0"}, {"0", "0"}, "0"), "T");
  EXPECT_FALSE(verify_deformation(h, h.point.f));

  auto c = HomotopyPoint(point(r, {"x^2", "x"}, {"0", "0"}, "0"), "T");
  EXPECT_FALSE(verify_deformation(c, polys(r, {"x^2", "x"})));
  EXPECT_TRUE(verify_deformation(c, polys(r, {"x^2", "x + x*T"})));

  // s = x: f_2 - F_2 = -s is not divisible by s^2.
  auto v = HomotopyPoint(point(r, {"x", "0"}, {"1 - x", "0"}, "x"), "T");
  ASSERT_FALSE(validate_homotopy(v));
  auto bad = verify_deformation(v, polys(r, {"0", "x"}));
  ASSERT_TRUE(bad);
  EXPECT_NE(bad->what.find("divisible"), std::string::npos) << bad->what;
  EXPECT_TRUE(verify_deformation(v, polys(r, {"x + x^2", "0"})));  // (x + x^2) misses x
  EXPECT_FALSE(verify_deformation(v, polys(r, {"x + x^2", "x^2"})));

  auto moving = HomotopyPoint(point(r, {"x", "0"}, {"1 - x*T", "0"}, "x*T"), "T");
  EXPECT_TRUE(verify_deformation(moving, moving.point.f));
}

TEST(SearchLift, FindsHandSolution) {
  auto r = ring_q({"x", "y"});
  auto v = standard_point(r);
  auto res = search_lift(v, {.degree_bound = 2, .pool = {Coef(-1), Coef(0), Coef(1)}});
  ASSERT_TRUE(res.certificate);
  EXPECT_EQ(res.certificate->mu, polys(r, {"-x^2", "0"}));
  EXPECT_EQ(res.products, polys(r, {"y^2", "-x*y", "x^2"}));
  EXPECT_EQ(res.space_size, 729u);
  EXPECT_FALSE(check_lift(*res.certificate));
}

TEST(SearchLift, ZeroCorrectionAndExhaustion) {
  auto rx = ring_q({"x"});
  auto z = point(rx, {"x^2", "0"}, {"0", "0"}, "0");
  auto res = search_lift(z);
  ASSERT_TRUE(res.certificate);
  EXPECT_EQ(res.tried, 1u);
  EXPECT_EQ(res.certificate->mu, polys(rx, {"0", "0"}));

  auto r = ring_q({"x", "y"});
  auto none = search_lift(standard_point(r), {.degree_bound = 2, .pool = {Coef(0)}});
  EXPECT_FALSE(none.certificate);
  EXPECT_EQ(none.space_size, 1u);
  EXPECT_EQ(none.tried, 1u);

  auto capped = search_lift(standard_point(r), {.degree_bound = 2, .pool = {Coef(1)}, .max_candidates = 2});
  EXPECT_FALSE(capped.certificate);
  EXPECT_EQ(capped.tried, 2u);
}

TEST(LiftProperty, SearchedLiftsGiveChains) {
  std::mt19937_64 rng(21);
  auto r = ring_q({"x", "y"});
  int found = 0;
  for (int iter = 0; iter < 6; ++iter) {
    Polynomial h1 = testing::random_poly(rng, r, 2, 2);
    Polynomial h2 = testing::random_poly(rng, r, 1, 2);
    if (h1.is_zero() || h2.is_zero()) continue;
    IdealPresentation I(r, {h1, h2});
    auto v = to_point(verify_orientation(I, {h1 + h2 * h2, h2}));
    auto res = search_lift(v, {.degree_bound = 4, .pool = {Coef(-1), Coef(1)}, .max_candidates = 500});
    if (!res.certificate) continue;
    ++found;
    expect_to_zero(lift_to_chain(*res.certificate), v);
  }
  EXPECT_GT(found, 0);
}

}  // namespace
}  // namespace ciobs
