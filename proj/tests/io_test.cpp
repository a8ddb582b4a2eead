#include <gtest/gtest.h>

#include "ciobs/error.hpp"
#include "ciobs/io.hpp"
#include "support.hpp"

namespace ciobs {
namespace {

using testing::P;
using testing::ring_q;

TEST(Io, RingAndIdealRoundTrip) {
  auto r = PolyRing::make(CoefField::prime(7), {"x", "y"});
  auto I = IdealPresentation::parse(r, {"x^2 + 3*y", "x*y - 1"});
  auto back = io::ideal_from_json(io::parse_json(io::dump(io::ideal_to_json(I)), "mem"));
  EXPECT_TRUE(same_ring(back.ring, r));
  EXPECT_EQ(back.gens, I.gens);
}

TEST(Io, ChainRoundTrip) {
  auto r = ring_q({"x"});
  QuadricPoint v(r, {P(r, "1"), P(r, "x")}, {P(r, "x - 2*x^2"), P(r, "x")}, P(r, "x"));
  auto c = unit_collapse(v);
  auto back = io::chain_from_json(io::parse_json(io::dump(io::chain_to_json(c)), "mem"));
  EXPECT_EQ(back.steps, c.steps);
  EXPECT_EQ(back.start, c.start);
  EXPECT_EQ(chain_validate(back).second, QuadricPoint::zero(r, 2));
}

TEST(Io, LiftRoundTrip) {
  auto r = ring_q({"x", "y"});
  QuadricPoint v(r, {P(r, "x + x^2"), P(r, "y")}, {P(r, "-1"), P(r, "0")}, P(r, "-x"));
  for (auto cert : {verify_lift(v, {P(r, "-x^2"), P(r, "0")}), verify_r_lift(v, {P(r, "-1"), P(r, "0")}, 2)}) {
    auto back = io::lift_from_json(io::parse_json(io::dump(io::lift_to_json(cert)), "mem"));
    EXPECT_EQ(back.mu, cert.mu);
    EXPECT_EQ(back.r, cert.r);
    EXPECT_FALSE(check_lift(back));
  }
}

TEST(Io, ErrorsCarryLocation) {
  try {
    io::parse_json("{\n  \"a\": [1,\n  2,,\n]}", "f.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("f.json:3:"), std::string::npos) << e.what();
  }
  auto j = io::parse_json(R"({"ring": {"vars": ["x"]}, "gens": ["x", "x +"]})", "mem");
  try {
    io::ideal_from_json(j);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("gens[1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::ideal_from_json(io::parse_json(R"({"gens": ["x"]})", "mem")), InputError);
  EXPECT_THROW(io::point_from_json(io::parse_json(R"({"ring": {"vars": ["x"]}, "f": ["x"], "g": [], "s": "0"})", "mem")),
               InputError);
}

}  // namespace
}  // namespace ciobs
