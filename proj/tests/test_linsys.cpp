#include <gtest/gtest.h>

#include "sixvertex/izergin.hpp"
#include "sixvertex/linsys.hpp"
#include "sixvertex/random.hpp"

using namespace sixvertex;

namespace {

Vec2<Scalar> vec(long a, long b) { return {Scalar(a), Scalar(b)}; }

// n generic columns and n+1 generic rows
Instance extended(InstanceGenerator& gen, std::size_t n, bool complex = false) {
  Instance in = gen.instance(n, n, complex);
  in.params.u.push_back(gen.extra_parameter(in.params, complex));
  return in;
}

TEST(LinearSystems, SingularWithBruteForceKernel) {
  InstanceGenerator gen(51);
  for (std::size_t n = 0; n <= 3; ++n) {
    const Instance in = extended(gen, n, n == 2);
    const auto k = derive_constants(in.cfg);
    const auto sys = build_systems(in.params, k);
    EXPECT_EQ(det(sys.L_A), Scalar(0)) << n;
    EXPECT_EQ(det(sys.L_D), Scalar(0)) << n;
    EXPECT_EQ(rank(sys.L_A), n);
    EXPECT_EQ(rank(sys.L_D), n);
    const auto X = kernel_vector(in.params, in.cfg);
    EXPECT_TRUE(is_zero(sys.L_A * X));
    EXPECT_TRUE(is_zero(sys.L_D * X));
  }
}

TEST(LinearSystems, ShapeIsChecked) {
  InstanceGenerator gen(52);
  const Instance in = gen.instance(2, 2);
  EXPECT_THROW(build_systems(in.params, derive_constants(in.cfg)), DimensionError);
}

TEST(WTransform, InterpolationIdentities) {
  InstanceGenerator gen(53);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Instance in = extended(gen, n);
    const auto sys = build_systems(in.params, derive_constants(in.cfg));
    std::vector<Scalar> w;
    ParamSet<Scalar> acc{in.params.u, {}, in.params.c};
    for (std::size_t k = 0; k <= n; ++k) {
      w.push_back(gen.extra_parameter(acc));
      acc.v.push_back(w.back());
    }
    const auto t = w_transform(sys, w);
    EXPECT_TRUE(t.failed_identities.empty()) << t.failed_identities.front();
    EXPECT_EQ(t.det_W, t.det_W_closed);
    for (std::size_t i = 0; i <= n; ++i) {
      Scalar s(0);
      for (std::size_t k = 0; k <= n; ++k) s += t.W(i, k);
      EXPECT_EQ(s, Scalar(1));
    }
  }
}

TEST(WTransform, SpecializationKillsLastRow) {
  InstanceGenerator gen(54);
  for (std::size_t n = 1; n <= 3; ++n) {
    const Instance in = extended(gen, n);
    const auto k = derive_constants(in.cfg);
    const auto sys = build_systems(in.params, k);
    const Matrix<Scalar> common = common_system(in.params, k.require("beta"));
    for (SystemKind kind : {SystemKind::A, SystemKind::D}) {
      for (const Scalar& wf : {default_w_free(in.params.v, in.params.c), gen.extra_parameter(in.params)}) {
        const auto t = w_transform(sys, specialized_w(in.params.v, in.params.c, kind, wf));
        const Matrix<Scalar>& L = kind == SystemKind::A ? t.LA_tilde : t.LD_tilde;
        EXPECT_TRUE(L.block(n, 0, 1, L.cols()).is_zero());
        EXPECT_EQ(renormalized_rows(L, in.params.v, in.params.c, kind, wf), common);
      }
    }
  }
}

TEST(Cramer, WorkedExample) {
  const auto p = ParamSet<Scalar>::make({Scalar(2)}, {Scalar(0)}, Scalar(1));
  const auto cfg = build_boundary(vec(1, 1), vec(1, 0), vec(1, 3), vec(1, 2));
  EXPECT_EQ(cramer_Z(p, cfg, derive_constants(cfg)), Scalar(18));
}

TEST(Cramer, AgreesWithOtherRoutes) {
  InstanceGenerator gen(55);
  const Instance two = gen.instance(2, 2);
  const auto k2 = derive_constants(two.cfg);
  EXPECT_EQ(cramer_Z(two.params, two.cfg, k2), closed_form_Z(two.params, two.cfg, k2, IzerginMethod::det_v));
  const Instance three = gen.instance(3, 3, true);
  EXPECT_EQ(cramer_Z(three.params, three.cfg, derive_constants(three.cfg)),
            partition_expectation(three.params, three.cfg));
  const Instance rect = gen.instance(2, 3);
  EXPECT_THROW(cramer_Z(rect.params, rect.cfg, derive_constants(rect.cfg)), DimensionError);
}

TEST(Recursion, BothSidesAgree) {
  InstanceGenerator gen(56);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto r = recursion_check(extended(gen, n, n == 3).params, gen.boundary());
    EXPECT_TRUE(r.equal()) << n;
  }
}

TEST(MultipleActions, VanishingResiduals) {
  InstanceGenerator gen(57);
  struct Shape {
    std::size_t m, n;
    AuxKind op;
  };
  for (Shape s : {Shape{1, 1, AuxKind::A}, Shape{1, 1, AuxKind::D}, Shape{2, 2, AuxKind::A}, Shape{2, 2, AuxKind::D},
                  Shape{2, 3, AuxKind::D}}) {
    Instance in = gen.instance(s.m - 1, s.n);
    in.params.u.push_back(gen.extra_parameter(in.params));
    for (std::size_t i = 0; i < in.params.m(); ++i) {
      EXPECT_TRUE(multiple_action_check(s.op, i, in.params, in.cfg).is_zero()) << s.m << "x" << s.n;
    }
  }
}

TEST(Offshell, SumIndexReadingHolds) {
  InstanceGenerator gen(58);
  struct Shape {
    std::size_t m, n;
  };
  for (Shape s : {Shape{1, 1}, Shape{1, 2}, Shape{2, 2}}) {
    Instance in = gen.instance(s.m, s.n);
    in.params.u.push_back(gen.extra_parameter(in.params));
    const auto k = derive_constants(in.cfg);
    for (std::size_t i = 0; i <= s.m; ++i) {
      const auto r = offshell_system_check(i, in.params, in.cfg, k);
      EXPECT_EQ(r.lhs_A, r.rhs);
      EXPECT_EQ(r.lhs_D_sum_index, r.rhs);
    }
  }
}

TEST(Offshell, FixedIndexReadingFails) {
  InstanceGenerator gen(59);
  Instance in = gen.instance(2, 2);
  in.params.u.push_back(gen.extra_parameter(in.params));
  const auto k = derive_constants(in.cfg);
  bool refuted = false;
  for (std::size_t i = 0; i < in.params.m(); ++i) {
    const auto r = offshell_system_check(i, in.params, in.cfg, k);
    refuted = refuted || r.lhs_D_fixed_index != r.rhs;
  }
  EXPECT_TRUE(refuted);
}

}  // namespace
