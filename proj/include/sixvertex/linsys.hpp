#pragma once

// Homogeneous linear systems for the partition function: L_A, L_D and their
// W-transformed forms, the Cramer solution, and the brute-force checks of the
// relations they are built from.

#include <cstddef>
#include <string>
#include <vector>

#include "sixvertex/actions.hpp"
#include "sixvertex/boundary.hpp"
#include "sixvertex/error.hpp"
#include "sixvertex/lattice.hpp"
#include "sixvertex/matrix.hpp"
#include "sixvertex/scalar.hpp"

namespace sixvertex {

// `u` holds the n+1 row parameters, `v` the n column parameters.
template <FieldScalar T>
struct LinearSystem {
  std::size_t size = 0;
  Matrix<T> L_A, L_D;
  ParamSet<T> params;
  T beta, chi;
};

namespace detail {

template <FieldScalar T>
T g_self(const std::vector<T>& u, std::size_t j, const T& c) {
  return kernel_product(Kernel::g, u[j], without(u, j), Side::left, c);
}

template <FieldScalar T>
void require_extended(const ParamSet<T>& p) {
  if (p.m() != p.n() + 1) {
    throw DimensionError("linear systems need #u = #v + 1, got " + std::to_string(p.m()) + " and " +
                         std::to_string(p.n()));
  }
  p.validate(Genericity::generic);
}

}  // namespace detail

// (L_A)_ij = -beta l2(u_j) delta_ij + g(u_j, u^j) (ht(u_j, u^i) l1(u_j) - chi l1 l2)
// (L_D)_ij =  l1(u_j) delta_ij - g(u_j, u^j) (beta h(u_j, u^i) l2(u_j) + chi l1 l2)
// where x^i is the set with x_i removed.
template <FieldScalar T>
LinearSystem<T> build_systems(const ParamSet<T>& p, const DerivedConstants<T>& k) {
  detail::require_extended(p);
  const T& beta = k.require("beta");
  const T& chi = k.require("chi");
  const std::size_t N = p.m();
  LinearSystem<T> sys{N, Matrix<T>(N, N), Matrix<T>(N, N), p, beta, chi};
  for (std::size_t j = 0; j < N; ++j) {
    const T l1 = lambda1(p.u[j], p.v, p.c), l2 = lambda2(p.u[j], p.v, p.c);
    const T gj = detail::g_self(p.u, j, p.c);
    for (std::size_t i = 0; i < N; ++i) {
      const std::vector<T> ui = without(p.u, i);
      const T ht = kernel_product(Kernel::htilde, p.u[j], ui, Side::left, p.c);
      const T hh = kernel_product(Kernel::h, p.u[j], ui, Side::left, p.c);
      sys.L_A(i, j) = gj * (ht * l1 - chi * l1 * l2);
      sys.L_D(i, j) = -gj * (beta * hh * l2 + chi * l1 * l2);
      if (i == j) {
        sys.L_A(i, j) -= beta * l2;
        sys.L_D(i, j) += l1;
      }
    }
  }
  return sys;
}

// X_j = Z_nn(u^j|v), each by contraction.
template <FieldScalar T>
std::vector<T> kernel_vector(const ParamSet<T>& p, const BoundaryConfig<T>& cfg) {
  std::vector<T> x;
  for (std::size_t j = 0; j < p.m(); ++j) x.push_back(partition_expectation(p.without_u(j), cfg));
  return x;
}

// W_ij = g(u_j, u^j) / g(u_j, w^i).
template <FieldScalar T>
Matrix<T> w_matrix(const std::vector<T>& u, const std::vector<T>& w, const T& c) {
  if (u.size() != w.size()) throw DimensionError("W needs #w = #u");
  ParamSet<T>::make(w, {}, c);  // pairwise distinct w
  const std::size_t N = u.size();
  Matrix<T> W(N, N);
  for (std::size_t j = 0; j < N; ++j) {
    const T gj = detail::g_self(u, j, c);
    for (std::size_t i = 0; i < N; ++i) {
      W(i, j) = gj / kernel_product(Kernel::g, u[j], without(w, i), Side::left, c);
    }
  }
  return W;
}

template <FieldScalar T>
struct WTransform {
  Matrix<T> W, LA_tilde, LD_tilde;
  T det_W, det_W_closed;
  std::vector<std::string> failed_identities;
};

template <FieldScalar T>
WTransform<T> w_transform(const LinearSystem<T>& sys, const std::vector<T>& w) {
  const auto& p = sys.params;
  WTransform<T> out;
  out.W = w_matrix(p.u, w, p.c);
  out.LA_tilde = out.W * sys.L_A;
  out.LD_tilde = out.W * sys.L_D;
  out.det_W = det(out.W);
  out.det_W_closed = vandermonde(w, false, p.c) / vandermonde(p.u, false, p.c);
  const std::size_t N = p.m();
  for (std::size_t i = 0; i < N; ++i) {
    const std::vector<T> wi = without(w, i);
    T row_sum(0);
    for (std::size_t k = 0; k < N; ++k) row_sum += out.W(i, k);
    if (row_sum != T(1)) out.failed_identities.push_back("sum_k W_ik = 1 at i=" + std::to_string(i));
    for (std::size_t j = 0; j < N; ++j) {
      T s_ht(0), s_h(0);
      for (std::size_t k = 0; k < N; ++k) {
        const std::vector<T> uk = without(p.u, k);
        s_ht += out.W(i, k) * kernel_product(Kernel::htilde, p.u[j], uk, Side::left, p.c);
        s_h += out.W(i, k) * kernel_product(Kernel::h, p.u[j], uk, Side::left, p.c);
      }
      if (s_ht != kernel_product(Kernel::htilde, p.u[j], wi, Side::left, p.c)) {
        out.failed_identities.push_back("htilde interpolation at i=" + std::to_string(i) +
                                        ", j=" + std::to_string(j));
      }
      if (s_h != kernel_product(Kernel::h, p.u[j], wi, Side::left, p.c)) {
        out.failed_identities.push_back("h interpolation at i=" + std::to_string(i) +
                                        ", j=" + std::to_string(j));
      }
    }
  }
  return out;
}

enum class SystemKind { A, D };

// w_j = v_j - c (A system) or v_j (D system) for j <= n, and w_{n+1} = w_free.
template <FieldScalar T>
std::vector<T> specialized_w(const std::vector<T>& v, const T& c, SystemKind kind, const T& w_free) {
  std::vector<T> w;
  for (const auto& x : v) w.push_back(kind == SystemKind::A ? x - c : x);
  w.push_back(w_free);
  return w;
}

template <FieldScalar T>
T default_w_free(const std::vector<T>& v, const T& c) {
  return (v.empty() ? T(0) : v.back()) + T(7) * c;
}

// Diagonal renormalization of rows 1..n: 1/ht(v_i, w) for A, g(v_i, w) for D.
template <FieldScalar T>
Matrix<T> renormalized_rows(const Matrix<T>& L_tilde, const std::vector<T>& v, const T& c,
                            SystemKind kind, const T& w_free) {
  const std::size_t n = v.size();
  Matrix<T> out = L_tilde.block(0, 0, n, L_tilde.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const T factor = kind == SystemKind::A ? T(1) / htilde(v[i], w_free, c) : g(v[i], w_free, c);
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) *= factor;
  }
  return out;
}

// L~_ij = g(u_j, u^j) l1(u_j) l2(u_j) (-beta/h(u_j, v_i) + g(u_j, v_i)), i <= n.
template <FieldScalar T>
Matrix<T> common_system(const ParamSet<T>& p, const T& beta) {
  const std::size_t n = p.n(), N = p.m();
  Matrix<T> out(n, N);
  for (std::size_t j = 0; j < N; ++j) {
    const T pref = detail::g_self(p.u, j, p.c) * lambda1(p.u[j], p.v, p.c) * lambda2(p.u[j], p.v, p.c);
    for (std::size_t i = 0; i < n; ++i) {
      out(i, j) = pref * (-beta / h(p.u[j], p.v[i], p.c) + g(p.u[j], p.v[i], p.c));
    }
  }
  return out;
}

// M_ij = h(u_j, v) (-beta/h(u_j, v_i) + g(u_j, v_i)) for #u = #v.
template <FieldScalar T>
Matrix<T> reduced_matrix(const ParamSet<T>& p, const T& beta) {
  const std::size_t n = p.n();
  Matrix<T> M(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const T hj = kernel_product(Kernel::h, p.u[j], p.v, Side::left, p.c);
    for (std::size_t i = 0; i < n; ++i) M(i, j) = hj * (-beta / h(p.u[j], p.v[i], p.c) + g(p.u[j], p.v[i], p.c));
  }
  return M;
}

// Z_nn = phi det M / det C with phi = (tr(Bhat) tr(B)/chi)^n.
template <FieldScalar T>
T cramer_Z(const ParamSet<T>& p, const BoundaryConfig<T>& cfg, const DerivedConstants<T>& k) {
  if (p.m() != p.n()) {
    throw DimensionError("cramer needs m = n, got m=" + std::to_string(p.m()) + ", n=" + std::to_string(p.n()));
  }
  p.validate(Genericity::generic);
  const T& chi = k.require("chi");
  if (is_zero(chi)) throw DegenerateError("chi", "cramer route needs chi != 0 (tr(B) tr(Bhat) = 0)");
  const T phi = power(cfg.tr_Bhat * cfg.tr_B / chi, static_cast<long>(p.n()));
  return phi * det(reduced_matrix(p, k.require("beta"))) / cauchy_det(p);
}

// ---------------------------------------------------------------------------
// Brute-force checks

template <FieldScalar T>
struct Comparison {
  T lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// Z_{n+1,n}(u|v) against tr(B) sum_j g(u_j, u^j) l1(u_j) l2(u_j) Z_nn(u^j|v).
template <FieldScalar T>
Comparison<T> recursion_check(const ParamSet<T>& p, const BoundaryConfig<T>& cfg) {
  detail::require_extended(p);
  T rhs(0);
  for (std::size_t j = 0; j < p.m(); ++j) {
    rhs += detail::g_self(p.u, j, p.c) * lambda1(p.u[j], p.v, p.c) * lambda2(p.u[j], p.v, p.c) *
           partition_expectation(p.without_u(j), cfg);
  }
  return {partition_expectation(p, cfg), cfg.tr_B * rhs};
}

// B(u_1)...B(u_k) as one operator.
template <FieldScalar T>
Matrix<T> b_product(const std::vector<T>& u, const ParamSet<T>& p, const BoundaryConfig<T>& cfg) {
  Matrix<T> out = Matrix<T>::identity(std::size_t{1} << p.n());
  for (const auto& x : u) out = out * twisted_operator(OperatorKind::B, x, p, cfg);
  return out;
}

// A(u_i)B(u^i) - sum_j f(u^j, u_j)/h(u_i, u_j) B(u^j)A(u_j), or
// D(u_i)B(u^i) - sum_j f(u_j, u^j)/h(u_j, u_i) B(u^j)D(u_j), over the m+1
// parameters in p.u.
template <FieldScalar T>
Matrix<T> multiple_action_check(AuxKind op, std::size_t i, const ParamSet<T>& p, const BoundaryConfig<T>& cfg) {
  const OperatorKind kind = op == AuxKind::A ? OperatorKind::A : OperatorKind::D;
  Matrix<T> res = twisted_operator(kind, p.u[i], p, cfg) * b_product(without(p.u, i), p, cfg);
  for (std::size_t j = 0; j < p.m(); ++j) {
    const std::vector<T> uj = without(p.u, j);
    const T coeff = op == AuxKind::A
                        ? kernel_product(Kernel::f, p.u[j], uj, Side::right, p.c) / h(p.u[i], p.u[j], p.c)
                        : kernel_product(Kernel::f, p.u[j], uj, Side::left, p.c) / h(p.u[j], p.u[i], p.c);
    res -= coeff * (b_product(uj, p, cfg) * twisted_operator(kind, p.u[j], p, cfg));
  }
  return res;
}

// Off-shell relations behind the linear systems, for fixed i over the m+1
// parameters in p.u:
//   A: tr(B)/chi sum_j (-beta l2(u_i) d_ij + l1(u_j) f(u^j,u_j)/h(u_i,u_j)) Z(u^j) = Z(u)
//   D: tr(B)/chi sum_j (l1(u_i) d_ij - beta l2(u_j) f(u_j,u^j)/h(u_j,u_i)) Z(u^?) = Z(u)
// The D relation is evaluated with Z(u^j) and with Z(u^i) inside the sum.
template <FieldScalar T>
struct OffshellReport {
  T rhs;
  T lhs_A;
  T lhs_D_sum_index;    // Z(u^j) inside the sum
  T lhs_D_fixed_index;  // Z(u^i) inside the sum
};

template <FieldScalar T>
OffshellReport<T> offshell_system_check(std::size_t i, const ParamSet<T>& p, const BoundaryConfig<T>& cfg,
                                        const DerivedConstants<T>& k) {
  if (p.m() == 0 || i >= p.m()) throw DimensionError("offshell check index out of range");
  const T& beta = k.require("beta");
  const T& chi = k.require("chi");
  if (is_zero(chi)) throw DegenerateError("chi", "off-shell relations divide by chi");
  std::vector<T> z;
  for (std::size_t j = 0; j < p.m(); ++j) z.push_back(partition_expectation(p.without_u(j), cfg));

  OffshellReport<T> r{partition_expectation(p, cfg), T(0), T(0), T(0)};
  for (std::size_t j = 0; j < p.m(); ++j) {
    const std::vector<T> uj = without(p.u, j);
    T a = lambda1(p.u[j], p.v, p.c) * kernel_product(Kernel::f, p.u[j], uj, Side::right, p.c) /
          h(p.u[i], p.u[j], p.c);
    T d = -beta * lambda2(p.u[j], p.v, p.c) * kernel_product(Kernel::f, p.u[j], uj, Side::left, p.c) /
          h(p.u[j], p.u[i], p.c);
    if (i == j) {
      a -= beta * lambda2(p.u[i], p.v, p.c);
      d += lambda1(p.u[i], p.v, p.c);
    }
    r.lhs_A += a * z[j];
    r.lhs_D_sum_index += d * z[j];
    r.lhs_D_fixed_index += d * z[i];
  }
  const T scale = cfg.tr_B / chi;
  r.lhs_A *= scale;
  r.lhs_D_sum_index *= scale;
  r.lhs_D_fixed_index *= scale;
  return r;
}

}  // namespace sixvertex
