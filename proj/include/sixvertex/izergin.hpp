#pragma once

// Modified Izergin determinant K^(z)_{mn}(u|v) in its two determinant and two
// partition-sum representations, and the closed-form partition function
// built on it.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sixvertex/boundary.hpp"
#include "sixvertex/error.hpp"
#include "sixvertex/matrix.hpp"
#include "sixvertex/scalar.hpp"

namespace sixvertex {

enum class IzerginMethod { det_v, det_u, sum_v, sum_u };

inline const char* method_name(IzerginMethod m) {
  switch (m) {
    case IzerginMethod::det_v: return "det-v";
    case IzerginMethod::det_u: return "det-u";
    case IzerginMethod::sum_v: return "sum-v";
    case IzerginMethod::sum_u: return "sum-u";
  }
  return "?";
}

inline constexpr std::array<IzerginMethod, 4> kIzerginMethods{
    IzerginMethod::det_v, IzerginMethod::det_u, IzerginMethod::sum_v, IzerginMethod::sum_u};

// Subset enumeration is refused above this many elements.
inline constexpr std::size_t kMaxSumSize = 20;

namespace detail {

template <FieldScalar T>
void split(const std::vector<T>& xs, std::uint32_t mask, std::vector<T>& in, std::vector<T>& out) {
  in.clear();
  out.clear();
  for (std::size_t k = 0; k < xs.size(); ++k) ((mask >> k) & 1U ? in : out).push_back(xs[k]);
}

inline void check_sum_size(std::size_t size) {
  if (size > kMaxSumSize) {
    throw CeilingError("partition sum over " + std::to_string(size) + " elements exceeds the limit of " +
                       std::to_string(kMaxSumSize));
  }
}

// det_m(delta_jk f(u_j, v) - z f(u_j, u^j)/h(u_j, u_k)), without the (1-z) power.
template <FieldScalar T>
T det_u_core(const ParamSet<T>& p, const T& z) {
  const std::size_t m = p.m();
  Matrix<T> a(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const T fj = kernel_product(Kernel::f, p.u[j], without(p.u, j), Side::left, p.c);
    for (std::size_t k = 0; k < m; ++k) {
      a(j, k) = -z * fj / h(p.u[j], p.u[k], p.c);
      if (j == k) a(j, k) += kernel_product(Kernel::f, p.u[j], p.v, Side::left, p.c);
    }
  }
  return det(std::move(a));
}

// sum over u => {I, II} of (-z)^#I f(u_II, v) f(u_I, u_II), without the (1-z) power.
template <FieldScalar T>
T sum_u_core(const ParamSet<T>& p, const T& z) {
  check_sum_size(p.m());
  T acc(0);
  std::vector<T> in, out;
  for (std::uint32_t mask = 0; mask < (1U << p.m()); ++mask) {
    split(p.u, mask, in, out);
    acc += power(-z, static_cast<long>(in.size())) * kernel_product(Kernel::f, out, p.v, p.c) *
           kernel_product(Kernel::f, in, out, p.c);
  }
  return acc;
}

// (1 - z)^excess, refusing a negative power of zero.
template <FieldScalar T>
T one_minus_z_power(const T& z, long excess) {
  const T base = T(1) - z;
  if (excess < 0 && is_zero(base)) {
    throw DegenerateError("1 - z", "u-representation needs (1 - z)^(n - m) with m > n at z = 1");
  }
  return power(base, excess);
}

}  // namespace detail

// K^(z)_{mn}(u|v). The u-representations carry (1 - z)^{n - m}; for m > n at
// z = 1 that factor is singular and those methods throw.
template <FieldScalar T>
T mod_izergin(const ParamSet<T>& p, const T& z, IzerginMethod method) {
  const long excess = static_cast<long>(p.n()) - static_cast<long>(p.m());
  switch (method) {
    case IzerginMethod::det_v: {
      const std::size_t n = p.n();
      Matrix<T> a(n, n);
      for (std::size_t j = 0; j < n; ++j) {
        const T fj = kernel_product(Kernel::f, p.v[j], p.u, Side::right, p.c) *
                     kernel_product(Kernel::f, p.v[j], without(p.v, j), Side::left, p.c);
        for (std::size_t k = 0; k < n; ++k) {
          a(j, k) = fj / h(p.v[j], p.v[k], p.c);
          if (j == k) a(j, k) -= z;
        }
      }
      return det(std::move(a));
    }
    case IzerginMethod::sum_v: {
      detail::check_sum_size(p.n());
      T acc(0);
      std::vector<T> in, out;
      for (std::uint32_t mask = 0; mask < (1U << p.n()); ++mask) {
        detail::split(p.v, mask, in, out);
        acc += power(-z, static_cast<long>(out.size())) * kernel_product(Kernel::f, p.u, in, p.c) *
               kernel_product(Kernel::f, in, out, p.c);
      }
      return acc;
    }
    case IzerginMethod::det_u:
      return detail::one_minus_z_power(z, excess) * detail::det_u_core(p, z);
    case IzerginMethod::sum_u:
      return detail::one_minus_z_power(z, excess) * detail::sum_u_core(p, z);
  }
  throw Error("unknown Izergin method");
}

// K_n(u|v) = K^(1)_{nn}(u|v).
template <FieldScalar T>
T ordinary_izergin(const ParamSet<T>& p, IzerginMethod method = IzerginMethod::det_v) {
  if (p.m() != p.n()) {
    throw DimensionError("ordinary Izergin determinant needs #u = #v, got " + std::to_string(p.m()) +
                         " and " + std::to_string(p.n()));
  }
  return mod_izergin(p, T(1), method);
}

// ---------------------------------------------------------------------------
// Limits v_j -> infinity and u_j -> infinity, sampled in floating point.

enum class LimitVariable { v, u };

struct LimitReport {
  bool pass = false;
  double expected_re = 0, expected_im = 0;
  std::array<double, 3> magnitudes{1e4, 1e6, 1e8};
  std::array<double, 3> rel_errors{};
  std::string detail;
};

inline constexpr double kLimitTolerance = 1e-6;

// Checks the sampled values against the limit: the relative error must
// shrink across the magnitudes and be within tolerance at the largest one.
template <class Sample>
LimitReport limit_check(const Complex& expected, Sample&& sample) {
  LimitReport r;
  r.expected_re = expected.real();
  r.expected_im = expected.imag();
  const double scale = std::max(std::abs(expected), 1e-300);
  for (std::size_t k = 0; k < 3; ++k) r.rel_errors[k] = std::abs(sample(r.magnitudes[k]) - expected) / scale;
  const bool shrinking = r.rel_errors[1] <= r.rel_errors[0] && r.rel_errors[2] <= r.rel_errors[1];
  r.pass = shrinking && r.rel_errors[2] <= kLimitTolerance;
  if (!r.pass) {
    r.detail = "relative errors " + std::to_string(r.rel_errors[0]) + ", " +
               std::to_string(r.rel_errors[1]) + ", " + std::to_string(r.rel_errors[2]);
  }
  return r;
}

// lim_{v_j -> inf} K_{mn} = (1 - z) K_{m,n-1}(u|v^j) and
// lim_{u_j -> inf} K_{mn} = K_{m-1,n}(u^j|v). The variable is sent along its
// own direction (x_j * M, or M if x_j = 0).
inline LimitReport izergin_limit_check(const ParamSet<Scalar>& p, const Scalar& z, LimitVariable which,
                                       std::size_t j, IzerginMethod method = IzerginMethod::det_v) {
  const std::size_t size = which == LimitVariable::v ? p.n() : p.m();
  if (j >= size) throw DimensionError("limit index out of range");
  Scalar expected = which == LimitVariable::v ? (Scalar(1) - z) * mod_izergin(p.without_v(j), z, method)
                                              : mod_izergin(p.without_u(j), z, method);
  const ParamSet<Complex> base = convert<Complex>(p);
  const Complex zf = z.to_complex();
  auto sample = [&](double mag) {
    ParamSet<Complex> q = base;
    auto& slot = which == LimitVariable::v ? q.v[j] : q.u[j];
    const double dir = std::abs(slot) == 0 ? 1.0 : std::abs(slot);
    slot = slot == Complex{} ? Complex(mag) : slot * (mag / dir);
    return mod_izergin(q, zf, method);
  };
  return limit_check(expected.to_complex(), sample);
}

// ---------------------------------------------------------------------------
// Closed-form partition function

enum class FormSide { v, u };

inline FormSide side_of(IzerginMethod m) {
  return m == IzerginMethod::det_v || m == IzerginMethod::sum_v ? FormSide::v : FormSide::u;
}

// tr(B)^m tr(Bhat)^n / chi^k with k = n (v-forms) or k = m (u-forms). At chi = 0
// this is rewritten with chi = tr(Bhat) tr(B) / tr(B Bhat):
//   v-forms: tr(B)^{m-n} tr(B Bhat)^n, needs m >= n or tr(B) != 0
//   u-forms: tr(Bhat)^{n-m} tr(B Bhat)^m, needs n >= m or tr(Bhat) != 0
template <FieldScalar T>
T closed_form_prefactor(const BoundaryConfig<T>& cfg, const DerivedConstants<T>& k, std::size_t m,
                        std::size_t n, FormSide side) {
  if (!k.chi) {
    throw DegenerateError("tr(B Bhat)",
                          "closed form unavailable: tr(B Bhat) = 0; use contraction-expectation");
  }
  const long ml = static_cast<long>(m), nl = static_cast<long>(n);
  const long denom_power = side == FormSide::v ? nl : ml;
  if (!is_zero(*k.chi)) {
    return power(cfg.tr_B, ml) * power(cfg.tr_Bhat, nl) / power(*k.chi, denom_power);
  }
  if (side == FormSide::v) {
    if (ml < nl && is_zero(cfg.tr_B)) {
      throw DegenerateError("tr(B)", "closed form (v-side) unavailable: tr(B) = 0 with m < n; use a "
                                     "u-side method or contraction-expectation");
    }
    return power(cfg.tr_B, ml - nl) * power(cfg.tr_BBhat, nl);
  }
  if (nl < ml && is_zero(cfg.tr_Bhat)) {
    throw DegenerateError("tr(Bhat)", "closed form (u-side) unavailable: tr(Bhat) = 0 with m > n; "
                                      "use a v-side method or contraction-expectation");
  }
  return power(cfg.tr_Bhat, nl - ml) * power(cfg.tr_BBhat, ml);
}

// Z = prefactor * lambda2(u) * K^(beta), with the u-forms using their core
// (the (1 - beta)^{n-m} power is folded into the prefactor).
template <FieldScalar T>
T closed_form_Z(const ParamSet<T>& p, const BoundaryConfig<T>& cfg, const DerivedConstants<T>& k,
                IzerginMethod method) {
  const FormSide side = side_of(method);
  const T pref = closed_form_prefactor(cfg, k, p.m(), p.n(), side);
  const T& beta = k.require("beta");
  const T lam = lambda2(p.u, p.v, p.c);
  T core;
  switch (method) {
    case IzerginMethod::det_v:
    case IzerginMethod::sum_v:
      core = mod_izergin(p, beta, method);
      break;
    case IzerginMethod::det_u:
      core = detail::det_u_core(p, beta);
      break;
    case IzerginMethod::sum_u:
      core = detail::sum_u_core(p, beta);
      break;
  }
  return pref * lam * core;
}

}  // namespace sixvertex
