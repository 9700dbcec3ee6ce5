#include <gtest/gtest.h>

#include "sixvertex/actions.hpp"
#include "sixvertex/boundary.hpp"
#include "sixvertex/random.hpp"

using namespace sixvertex;

namespace {

Vec2<Scalar> vec(long a, long b) { return {Scalar(a), Scalar(b)}; }

TEST(Boundary, DomainWallTraces) {
  const auto cfg = build_boundary(vec(1, 0), vec(0, 1), vec(1, 0), vec(0, 1));
  EXPECT_EQ(det(cfg.B), Scalar(0));
  EXPECT_EQ(cfg.tr_B, Scalar(0));
  EXPECT_EQ(cfg.tr_BBhat, Scalar(1));
}

TEST(Boundary, AlignedWestEast) {
  const auto cfg = build_boundary(vec(1, 0), vec(1, 0), vec(1, 3), vec(1, 2));
  EXPECT_EQ(cfg.B, Matrix<Scalar>::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}}));
  EXPECT_EQ(cfg.tr_B, Scalar(1));
}

TEST(Boundary, WorkedExampleTraces) {
  const auto cfg = build_boundary(vec(1, 1), vec(1, 0), vec(1, 3), vec(1, 2));
  EXPECT_EQ(cfg.tr_B, Scalar(1));
  EXPECT_EQ(cfg.tr_Bhat, Scalar(7));
  EXPECT_EQ(cfg.tr_BBhat, Scalar(4));
  EXPECT_EQ(cfg.tr_BBhat, cfg.w_n * cfg.s_e);
  EXPECT_TRUE(cfg.degenerate_flags().empty());
}

TEST(Boundary, ZeroVectorIsRejected) {
  try {
    build_boundary(vec(1, 0), vec(0, 0), vec(1, 0), vec(0, 1));
    FAIL() << "expected DegenerateError";
  } catch (const DegenerateError& e) {
    EXPECT_EQ(e.quantity(), "e");
  }
}

TEST(Boundary, FlagsNameVanishingBrackets) {
  // <w|n> = 0 and hence tr(B Bhat) = 0
  const auto cfg = build_boundary(vec(1, 0), vec(1, 1), vec(0, 1), vec(1, 2));
  const auto flags = cfg.degenerate_flags();
  EXPECT_NE(std::find(flags.begin(), flags.end(), "<w|n>"), flags.end());
  EXPECT_NE(std::find(flags.begin(), flags.end(), "tr(B Bhat)"), flags.end());
  const auto k = derive_constants(cfg);
  EXPECT_FALSE(k.has("beta"));
  try {
    k.require("beta");
    FAIL();
  } catch (const DegenerateError& e) {
    EXPECT_EQ(e.quantity(), "tr(B Bhat)");
  }
}

TEST(Constants, WorkedExample) {
  const auto k = derive_constants(build_boundary(vec(1, 1), vec(1, 0), vec(1, 3), vec(1, 2)));
  EXPECT_EQ(k.require("beta"), Scalar(Rational(-3, 4)));
  EXPECT_EQ(k.require("chi"), Scalar(Rational(7, 4)));
}

TEST(Constants, DomainWall) {
  const auto k = derive_constants(build_boundary(vec(1, 0), vec(0, 1), vec(1, 0), vec(0, 1)));
  EXPECT_EQ(k.require("beta"), Scalar(1));
  EXPECT_EQ(k.require("chi"), Scalar(0));
}

TEST(Constants, RescalingLeavesBetaAndChi) {
  InstanceGenerator gen(12);
  for (int rep = 0; rep < 10; ++rep) {
    const auto cfg = gen.boundary(rep % 2 == 1);
    const auto k = derive_constants(cfg);
    const Scalar lam(gen.nonzero_rational());
    auto sc = [&](const Vec2<Scalar>& x) { return Vec2<Scalar>{lam * x[0], lam * x[1]}; };
    for (int which = 0; which < 4; ++which) {
      const auto other = build_boundary(which == 0 ? sc(cfg.w) : cfg.w, which == 1 ? sc(cfg.e) : cfg.e,
                                        which == 2 ? sc(cfg.n) : cfg.n, which == 3 ? sc(cfg.s) : cfg.s);
      const auto k2 = derive_constants(other);
      EXPECT_EQ(k2.require("beta"), k.require("beta"));
      EXPECT_EQ(k2.require("chi"), k.require("chi"));
    }
  }
}

TEST(Constants, RealForRealInput) {
  InstanceGenerator gen(13);
  for (int rep = 0; rep < 10; ++rep) {
    const auto k = derive_constants(gen.boundary(false));
    for (const char* name : {"a_N", "c_N", "d_N", "f_N", "a_S", "c_S", "d_S", "f_S", "beta", "chi"}) {
      EXPECT_TRUE(k.require(name).is_real()) << name;
    }
  }
}

TEST(Actions, WorkedExampleSingleSite) {
  const auto p = ParamSet<Scalar>::make({}, {Scalar(0)}, Scalar(1));
  const auto cfg = build_boundary(vec(1, 1), vec(1, 0), vec(1, 3), vec(1, 2));
  const auto k = derive_constants(cfg);
  for (ActionSide side : {ActionSide::right, ActionSide::left}) {
    for (AuxKind op : {AuxKind::A, AuxKind::D}) {
      EXPECT_TRUE(is_zero(action_check(side, op, Scalar(2), p, cfg, k)));
    }
  }
}

TEST(Actions, RandomThreeSites) {
  InstanceGenerator gen(14);
  for (int rep = 0; rep < 3; ++rep) {
    const Instance in = gen.instance(0, 3, rep == 2);
    const auto k = derive_constants(in.cfg);
    const Scalar u = gen.extra_parameter(in.params);
    EXPECT_TRUE(is_zero(action_check(ActionSide::right, AuxKind::A, u, in.params, in.cfg, k)));
    EXPECT_TRUE(is_zero(action_check(ActionSide::right, AuxKind::D, u, in.params, in.cfg, k)));
    EXPECT_TRUE(is_zero(action_check(ActionSide::left, AuxKind::A, u, in.params, in.cfg, k)));
  }
  const Instance two = gen.instance(0, 2);
  const auto k = derive_constants(two.cfg);
  EXPECT_TRUE(is_zero(action_check(ActionSide::left, AuxKind::D, gen.extra_parameter(two.params), two.params,
                                   two.cfg, k)));
}

TEST(Actions, ModifiedExchangeRelations) {
  InstanceGenerator gen(15);
  const Instance in = gen.instance(0, 3, true);
  const Scalar u = gen.extra_parameter(in.params, true);
  const Scalar v = gen.extra_parameter(ParamSet<Scalar>{{u}, in.params.v, in.params.c}, true);
  EXPECT_TRUE(modified_exchange_residual(AuxKind::A, u, v, in.params, in.cfg).is_zero());
  EXPECT_TRUE(modified_exchange_residual(AuxKind::D, u, v, in.params, in.cfg).is_zero());
}

}  // namespace
