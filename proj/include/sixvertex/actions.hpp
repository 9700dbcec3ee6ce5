#pragma once

// Residuals of the operator identities satisfied by A(u), B(u), D(u) and by
// the monodromy blocks t_ij(u). Every function returns something that must
// vanish identically.

#include <cstddef>
#include <vector>

#include "sixvertex/boundary.hpp"
#include "sixvertex/lattice.hpp"
#include "sixvertex/matrix.hpp"
#include "sixvertex/scalar.hpp"

namespace sixvertex {

enum class ActionSide { right, left };
enum class AuxKind { A, D };

// Right:  A(u)|N> - a_N l1 |N> - c_N B(u)|N>,   D(u)|N> - d_N l2 |N> - f_N B(u)|N>
// Left:   <S|A(u) - a_S l2 <S| - c_S <S|B(u),   <S|D(u) - d_S l1 <S| - f_S <S|B(u)
template <FieldScalar T>
std::vector<T> action_check(ActionSide side, AuxKind op, const T& u, const ParamSet<T>& p,
                            const BoundaryConfig<T>& cfg, const DerivedConstants<T>& k) {
  const Matrix<T> X = twisted_operator(op == AuxKind::A ? OperatorKind::A : OperatorKind::D, u, p, cfg);
  const Matrix<T> Bu = twisted_operator(OperatorKind::B, u, p, cfg);
  const T l1 = lambda1(u, p.v, p.c);
  const T l2 = lambda2(u, p.v, p.c);
  if (side == ActionSide::right) {
    const std::vector<T> N = product_state(cfg.n, p.n());
    const bool is_a = op == AuxKind::A;
    const T& diag = k.require(is_a ? "a_N" : "d_N");
    const T& off = k.require(is_a ? "c_N" : "f_N");
    return X * N - (diag * (is_a ? l1 : l2)) * N - off * (Bu * N);
  }
  const std::vector<T> S = product_state(cfg.s, p.n());
  const bool is_a = op == AuxKind::A;
  const T& diag = k.require(is_a ? "a_S" : "d_S");
  const T& off = k.require(is_a ? "c_S" : "f_S");
  return S * X - (diag * (is_a ? l2 : l1)) * S - off * (S * Bu);
}

// A(u)B(v) - f(v,u)B(v)A(u) - g(u,v)B(u)A(v), and
// D(u)B(v) - f(u,v)B(v)D(u) - g(v,u)B(u)D(v).
template <FieldScalar T>
Matrix<T> modified_exchange_residual(AuxKind op, const T& u, const T& v, const ParamSet<T>& p,
                                     const BoundaryConfig<T>& cfg) {
  const OperatorKind kind = op == AuxKind::A ? OperatorKind::A : OperatorKind::D;
  const Matrix<T> Xu = twisted_operator(kind, u, p, cfg), Xv = twisted_operator(kind, v, p, cfg);
  const Matrix<T> Bu = twisted_operator(OperatorKind::B, u, p, cfg);
  const Matrix<T> Bv = twisted_operator(OperatorKind::B, v, p, cfg);
  if (op == AuxKind::A) return Xu * Bv - f(v, u, p.c) * (Bv * Xu) - g(u, v, p.c) * (Bu * Xv);
  return Xu * Bv - f(u, v, p.c) * (Bv * Xu) - g(v, u, p.c) * (Bu * Xv);
}

// ---------------------------------------------------------------------------
// Monodromy-block identities

// t_11(u)t_12(v) - f(v,u)t_12(v)t_11(u) - g(u,v)t_12(u)t_11(v), the t_22
// analogue, and [t_12(u), t_12(v)].
template <FieldScalar T>
std::vector<Matrix<T>> generator_exchange_residuals(const T& u, const T& v, const std::vector<T>& vs,
                                                    const T& c) {
  const Matrix<T> Tu = monodromy_row(u, vs, c), Tv = monodromy_row(v, vs, c);
  auto t = [](const Matrix<T>& mono, std::size_t i, std::size_t j) { return generator_row(mono, i, j); };
  std::vector<Matrix<T>> out;
  out.push_back(t(Tu, 0, 0) * t(Tv, 0, 1) - f(v, u, c) * (t(Tv, 0, 1) * t(Tu, 0, 0)) -
                g(u, v, c) * (t(Tu, 0, 1) * t(Tv, 0, 0)));
  out.push_back(t(Tu, 1, 1) * t(Tv, 0, 1) - f(u, v, c) * (t(Tv, 0, 1) * t(Tu, 1, 1)) -
                g(v, u, c) * (t(Tu, 0, 1) * t(Tv, 1, 1)));
  out.push_back(t(Tu, 0, 1) * t(Tv, 0, 1) - t(Tv, 0, 1) * t(Tu, 0, 1));
  return out;
}

// R_ab(u,v) T_a(u) T_b(v) - T_b(v) T_a(u) R_ab(u,v) on a (x) b (x) quantum.
template <FieldScalar T>
Matrix<T> rtt_residual(const T& ua, const T& ub, const std::vector<T>& v, const T& c) {
  const std::size_t nsites = v.size() + 2;
  const auto q = detail::site_range(2, v.size());
  const Matrix<T> Ta = row_chain(ua, v, c, 0, q, nsites);
  const Matrix<T> Tb = row_chain(ub, v, c, 1, q, nsites);
  const Matrix<T> R = embed(r_matrix(ua, ub, c), {0, 1}, nsites);
  return R * Ta * Tb - Tb * Ta * R;
}

// R_ba(v_b,v_a) That_a(v_a) That_b(v_b) - That_b(v_b) That_a(v_a) R_ba(v_b,v_a)
// on quantum (x) a (x) b.
template <FieldScalar T>
Matrix<T> rtt_hat_residual(const T& va, const T& vb, const std::vector<T>& u, const T& c) {
  const std::size_t m = u.size(), nsites = m + 2;
  const auto q = detail::site_range(0, m);
  const Matrix<T> Ta = col_chain(u, va, c, q, m, nsites);
  const Matrix<T> Tb = col_chain(u, vb, c, q, m + 1, nsites);
  const Matrix<T> R = embed(r_matrix(vb, va, c), {m + 1, m}, nsites);
  return R * Ta * Tb - Tb * Ta * R;
}

// [T_a(u), T_b(v)] - g(v,u) P_ab (T_a(u)T_b(v) - T_a(v)T_b(u)).
template <FieldScalar T>
Matrix<T> aux_form_rtt_residual(const T& u, const T& v, const std::vector<T>& vs, const T& c) {
  const std::size_t nsites = vs.size() + 2;
  const auto q = detail::site_range(2, vs.size());
  const Matrix<T> Tau = row_chain(u, vs, c, 0, q, nsites), Tav = row_chain(v, vs, c, 0, q, nsites);
  const Matrix<T> Tbu = row_chain(u, vs, c, 1, q, nsites), Tbv = row_chain(v, vs, c, 1, q, nsites);
  const Matrix<T> P = embed(permutation_matrix<T>(), {0, 1}, nsites);
  return Tau * Tbv - Tbv * Tau - g(v, u, c) * (P * (Tau * Tbv - Tav * Tbu));
}

// [R_ab(u,v), X_a X_b] for an arbitrary 2x2 X.
template <FieldScalar T>
Matrix<T> twist_invariance_residual(const T& u, const T& v, const T& c, const Matrix<T>& x) {
  const Matrix<T> R = r_matrix(u, v, c), XX = kron(x, x);
  return R * XX - XX * R;
}

// R12(u,v)R13(u,w)R23(v,w) - R23(v,w)R13(u,w)R12(u,v).
template <FieldScalar T>
Matrix<T> ybe_residual(const T& u, const T& v, const T& w, const T& c) {
  const Matrix<T> r12 = embed(r_matrix(u, v, c), {0, 1}, 3);
  const Matrix<T> r13 = embed(r_matrix(u, w, c), {0, 2}, 3);
  const Matrix<T> r23 = embed(r_matrix(v, w, c), {1, 2}, 3);
  return r12 * r13 * r23 - r23 * r13 * r12;
}

// Rows:    R_{a_i a_{i+1}} Z(.., a_i, a_{i+1}, ..) - Z(.., a_{i+1}, a_i, ..) R_{a_i a_{i+1}}.
// Columns: R_{b_i b_{i+1}} Z(.., b_{i+1}, b_i, ..) - Z(.., b_i, b_{i+1}, ..) R_{b_i b_{i+1}}.
// The column form has the two orders the other way round, because the YBE
// puts R_{b_i b_{i+1}} on the side opposite to R_{a_i a_{i+1}}.
template <FieldScalar T>
Matrix<T> yba_residual(const ParamSet<T>& p, std::size_t i, bool columns) {
  std::vector<std::size_t> rows = detail::site_range(0, p.m()), cols = detail::site_range(0, p.n());
  const std::size_t nsites = p.m() + p.n();
  const Matrix<T> Z = full_partition_matrix(p, rows, cols);
  Matrix<T> R;
  if (columns) {
    std::swap(cols[i], cols[i + 1]);
    R = embed(r_matrix(p.v[i], p.v[i + 1], p.c), {p.m() + i, p.m() + i + 1}, nsites);
  } else {
    std::swap(rows[i], rows[i + 1]);
    R = embed(r_matrix(p.u[i], p.u[i + 1], p.c), {i, i + 1}, nsites);
  }
  const Matrix<T> swapped = full_partition_matrix(p, rows, cols);
  return columns ? R * swapped - Z * R : R * Z - swapped * R;
}

// Highest/lowest weight actions on |0>, |0hat> and their duals: the returned
// vectors are t_21|0>, t_11|0> - l1|0>, t_22|0> - l2|0>, and the analogues.
template <FieldScalar T>
std::vector<std::vector<T>> highest_weight_residuals(const T& u, const std::vector<T>& v, const T& c) {
  const Matrix<T> mono = monodromy_row(u, v, c);
  auto t = [&](std::size_t i, std::size_t j) { return generator_row(mono, i, j); };
  const T l1 = lambda1(u, v, c), l2 = lambda2(u, v, c);
  const std::vector<T> up = product_state(Vec2<T>{T(1), T(0)}, v.size());
  const std::vector<T> down = product_state(Vec2<T>{T(0), T(1)}, v.size());
  return {
      t(1, 0) * up,   t(0, 0) * up - l1 * up,     t(1, 1) * up - l2 * up,
      t(0, 1) * down, t(0, 0) * down - l2 * down, t(1, 1) * down - l1 * down,
      up * t(0, 1),   up * t(0, 0) - l1 * up,     up * t(1, 1) - l2 * up,
      down * t(1, 0), down * t(0, 0) - l2 * down, down * t(1, 1) - l1 * down,
  };
}

// Actions of t_ij(u) on |X> = |x>^n (right) or <X| = <x|^n (left), in the
// branch x_1 != 0 (`first_branch`) or x_2 != 0. Returns the three residuals.
template <FieldScalar T>
std::vector<std::vector<T>> product_state_action_residuals(const T& u, const std::vector<T>& v,
                                                           const T& c, const Vec2<T>& x,
                                                           bool first_branch, ActionSide side) {
  const Matrix<T> mono = monodromy_row(u, v, c);
  const T l1 = lambda1(u, v, c), l2 = lambda2(u, v, c);
  const std::vector<T> X = product_state(x, v.size());
  auto act = [&](std::size_t i, std::size_t j) {
    const Matrix<T> t = generator_row(mono, i, j);
    return side == ActionSide::right ? t * X : X * t;
  };
  // In the first branch the "raising" block is t_12 on kets and t_21 on bras;
  // the second branch swaps them.
  const bool raise_12 = first_branch == (side == ActionSide::right);
  const T r = first_branch ? x[1] / x[0] : x[0] / x[1];
  const std::vector<T> raised = raise_12 ? act(0, 1) : act(1, 0);
  const std::vector<T> lowered = raise_12 ? act(1, 0) : act(0, 1);
  std::vector<std::vector<T>> out;
  if (first_branch) {
    out.push_back(act(0, 0) - l1 * X + r * raised);
    out.push_back(act(1, 1) - l2 * X - r * raised);
  } else {
    out.push_back(act(0, 0) - l2 * X - r * raised);
    out.push_back(act(1, 1) - l1 * X + r * raised);
  }
  out.push_back(lowered - (r * (l1 - l2)) * X + (r * r) * raised);
  return out;
}

}  // namespace sixvertex
