#include <gtest/gtest.h>

#include "independent.hpp"
#include "sixvertex/izergin.hpp"
#include "sixvertex/lattice.hpp"
#include "sixvertex/random.hpp"

using namespace sixvertex;

namespace {

Vec2<Scalar> vec(long a, long b) { return {Scalar(a), Scalar(b)}; }

TEST(ModIzergin, SmallShapes) {
  const Scalar u(Rational(5, 2)), v(Rational(-1, 3)), c(Rational(3, 4)), z(Rational(2, 7));
  for (IzerginMethod m : kIzerginMethods) {
    EXPECT_EQ(mod_izergin(ParamSet<Scalar>::make({u}, {v}, c), z, m), f(u, v, c) - z) << method_name(m);
    EXPECT_EQ(mod_izergin(ParamSet<Scalar>::make({}, {v}, c), z, m), Scalar(1) - z) << method_name(m);
    EXPECT_EQ(mod_izergin(ParamSet<Scalar>::make({u}, {}, c), z, m), Scalar(1)) << method_name(m);
    EXPECT_EQ(mod_izergin(ParamSet<Scalar>::make({}, {}, c), z, m), Scalar(1)) << method_name(m);
  }
}

TEST(ModIzergin, DeterminantFormMatchesLeibnizExpansion) {
  InstanceGenerator gen(31);
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto p = gen.params(m, n, (m * n) % 2 == 1);
      const Scalar z = gen.scalar();
      std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          a[j][k] = kernel_product(Kernel::f, p.v[j], p.u, Side::right, p.c) *
                    kernel_product(Kernel::f, p.v[j], without(p.v, j), Side::left, p.c) / h(p.v[j], p.v[k], p.c);
          if (j == k) a[j][k] -= z;
        }
      }
      EXPECT_EQ(mod_izergin(p, z, IzerginMethod::det_v), oracle::leibniz_det(a)) << m << "x" << n;
    }
  }
}

TEST(ModIzergin, FourRepresentationsAgree) {
  InstanceGenerator gen(32);
  for (std::size_t m = 0; m <= 5; ++m) {
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto p = gen.params(m, n, (m + n) % 3 == 0);
      const Scalar z = gen.scalar((m + n) % 2 == 0);
      const Scalar ref = mod_izergin(p, z, IzerginMethod::det_v);
      for (IzerginMethod meth : kIzerginMethods) EXPECT_EQ(mod_izergin(p, z, meth), ref) << m << "x" << n;
    }
  }
}

TEST(ModIzergin, VanishesAtOneWhenRowsAreFewer) {
  InstanceGenerator gen(33);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 0; m < n; ++m) {
      const auto p = gen.params(m, n);
      for (IzerginMethod meth : kIzerginMethods) EXPECT_TRUE(mod_izergin(p, Scalar(1), meth).is_zero());
    }
  }
}

TEST(ModIzergin, NegativePowerOfZeroIsDegenerate) {
  InstanceGenerator gen(34);
  const auto p = gen.params(3, 1);
  try {
    mod_izergin(p, Scalar(1), IzerginMethod::det_u);
    FAIL();
  } catch (const DegenerateError& e) {
    EXPECT_EQ(e.quantity(), "1 - z");
  }
}

TEST(ModIzergin, SumSizeGuard) {
  std::vector<Scalar> v;
  for (long k = 0; k < 21; ++k) v.emplace_back(3 * k);
  const auto p = ParamSet<Scalar>::make({}, v, Scalar(1));
  EXPECT_THROW(mod_izergin(p, Scalar(2), IzerginMethod::sum_v), CeilingError);
}

TEST(OrdinaryIzergin, SingleSiteAndAgreement) {
  const Scalar u(4), v(Rational(1, 2)), c(2);
  EXPECT_EQ(ordinary_izergin(ParamSet<Scalar>::make({u}, {v}, c)), g(u, v, c));
  InstanceGenerator gen(35);
  const auto p = gen.params(2, 2);
  EXPECT_EQ(ordinary_izergin(p, IzerginMethod::det_v), ordinary_izergin(p, IzerginMethod::det_u));
}

TEST(OrdinaryIzergin, DomainWallPartitionFunction) {
  const auto cfg = build_boundary(vec(1, 0), vec(0, 1), vec(1, 0), vec(0, 1));
  InstanceGenerator gen(36);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto p = gen.params(n, n, n == 3);
    EXPECT_EQ(partition_expectation(p, cfg), lambda2(p.u, p.v, p.c) * ordinary_izergin(p)) << n;
  }
}

TEST(Limits, SingleSite) {
  const auto p = ParamSet<Scalar>::make({Scalar(3)}, {Scalar(Rational(1, 2))}, Scalar(1));
  const Scalar z(Rational(-2, 3));
  EXPECT_TRUE(izergin_limit_check(p, z, LimitVariable::v, 0).pass);
  EXPECT_TRUE(izergin_limit_check(p, z, LimitVariable::u, 0).pass);
}

TEST(Limits, TwoByTwoRowToInfinity) {
  InstanceGenerator gen(37);
  const auto p = gen.params(2, 2);
  const auto r = izergin_limit_check(p, Scalar(Rational(3, 5)), LimitVariable::u, 0);
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_LT(r.rel_errors[2], r.rel_errors[1]);
  EXPECT_LT(r.rel_errors[1], r.rel_errors[0]);
}

TEST(Limits, RejectsNonConvergentSample) {
  const auto r = limit_check(Complex(1.0), [](double mag) { return Complex(1.0 + 1e-3 + 1.0 / mag); });
  EXPECT_FALSE(r.pass);
}

TEST(ClosedForm, WorkedExample) {
  const auto p = ParamSet<Scalar>::make({Scalar(2)}, {Scalar(0)}, Scalar(1));
  const auto cfg = build_boundary(vec(1, 1), vec(1, 0), vec(1, 3), vec(1, 2));
  const auto k = derive_constants(cfg);
  EXPECT_EQ(closed_form_prefactor(cfg, k, 1, 1, FormSide::v), Scalar(4));
  EXPECT_EQ(mod_izergin(p, k.require("beta"), IzerginMethod::det_v), Scalar(Rational(9, 4)));
  for (IzerginMethod m : kIzerginMethods) EXPECT_EQ(closed_form_Z(p, cfg, k, m), Scalar(18)) << method_name(m);
}

TEST(ClosedForm, RectangularAgreesWithContraction) {
  InstanceGenerator gen(38);
  const Instance in = gen.instance(3, 2, true);
  const auto k = derive_constants(in.cfg);
  const Scalar z = partition_expectation(in.params, in.cfg);
  for (IzerginMethod m : kIzerginMethods) EXPECT_EQ(closed_form_Z(in.params, in.cfg, k, m), z) << method_name(m);
}

TEST(ClosedForm, DomainWallUsesRewrittenPrefactor) {
  const auto cfg = build_boundary(vec(1, 0), vec(0, 1), vec(1, 0), vec(0, 1));
  const auto k = derive_constants(cfg);
  InstanceGenerator gen(39);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto p = gen.params(n, n);
    EXPECT_EQ(closed_form_prefactor(cfg, k, n, n, FormSide::v), Scalar(1));
    for (IzerginMethod m : kIzerginMethods) EXPECT_EQ(closed_form_Z(p, cfg, k, m), partition_expectation(p, cfg));
  }
}

TEST(ClosedForm, VanishingTraceOffTheDiagonal) {
  // tr(B) = 0 with chi = 0 and tr(Bhat) != 0
  const auto cfg = build_boundary(vec(1, 0), vec(0, 1), vec(1, 1), vec(1, 2));
  const auto k = derive_constants(cfg);
  ASSERT_TRUE(k.has("chi"));
  ASSERT_TRUE(k.require("chi").is_zero());
  InstanceGenerator gen(40);
  // more rows than columns: the v-side rewrite applies and gives zero
  const auto tall = gen.params(3, 2);
  EXPECT_EQ(closed_form_Z(tall, cfg, k, IzerginMethod::det_v), partition_expectation(tall, cfg));
  EXPECT_EQ(closed_form_Z(tall, cfg, k, IzerginMethod::sum_u), partition_expectation(tall, cfg));
  // more columns than rows: the v-side form is unavailable, the u-side one is not
  const auto wide = gen.params(1, 3);
  try {
    closed_form_Z(wide, cfg, k, IzerginMethod::det_v);
    FAIL();
  } catch (const DegenerateError& e) {
    EXPECT_EQ(e.quantity(), "tr(B)");
  }
  EXPECT_EQ(closed_form_Z(wide, cfg, k, IzerginMethod::det_u), partition_expectation(wide, cfg));
}

TEST(ClosedForm, VanishingBracketProductIsDegenerate) {
  const auto cfg = build_boundary(vec(1, 0), vec(1, 1), vec(0, 1), vec(1, 2));
  const auto k = derive_constants(cfg);
  const auto p = ParamSet<Scalar>::make({Scalar(1)}, {Scalar(5)}, Scalar(1));
  try {
    closed_form_Z(p, cfg, k, IzerginMethod::det_v);
    FAIL();
  } catch (const DegenerateError& e) {
    EXPECT_EQ(e.quantity(), "tr(B Bhat)");
  }
}

TEST(FloatMode, ClosedFormMatchesExact) {
  InstanceGenerator gen(41);
  const Instance in = gen.instance(4, 3, true);
  const auto k = derive_constants(in.cfg);
  const auto pf = convert<Complex>(in.params);
  const auto cf = convert<Complex>(in.cfg);
  const auto kf = derive_constants(cf);
  for (IzerginMethod m : kIzerginMethods) {
    const Complex exact = closed_form_Z(in.params, in.cfg, k, m).to_complex();
    EXPECT_LE(std::abs(closed_form_Z(pf, cf, kf, m) - exact), 1e-9 * std::abs(exact));
  }
}

}  // namespace
