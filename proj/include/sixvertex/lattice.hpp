#pragma once

// R-matrix, monodromy matrices, twisted transfer operators and the
// brute-force partition functions.
//
// Site ordering: in any tensor product of 2-dim spaces, site 0 is the slowest
// index (see kron). The row monodromy lives on V_a (x) V_b1 (x) ... (x) V_bn
// with the auxiliary space first; the column monodromy lives on
// V_a1 (x) ... (x) V_am (x) V_b with the auxiliary space last.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sixvertex/boundary.hpp"
#include "sixvertex/error.hpp"
#include "sixvertex/matrix.hpp"
#include "sixvertex/scalar.hpp"

namespace sixvertex {

// R(u, v) = ((u - v)/c) I + P. Weights: a = (u - v + c)/c on aligned states,
// b = (u - v)/c otherwise, and 1 for the two exchange entries.
template <FieldScalar T>
Matrix<T> r_matrix(const T& u, const T& v, const T& c) {
  if (is_zero(c)) throw DegenerateError("c", "crossing parameter c must be nonzero");
  return ((u - v) / c) * Matrix<T>::identity(4) + permutation_matrix<T>();
}

// Lifts `op`, acting on the ordered sites `sites`, to the full space of
// `nsites` 2-dim sites.
template <FieldScalar T>
Matrix<T> embed(const Matrix<T>& op, const std::vector<std::size_t>& sites, std::size_t nsites) {
  const std::size_t k = sites.size();
  if (op.rows() != (std::size_t{1} << k) || !op.square()) {
    throw DimensionError("embed: operator does not act on " + std::to_string(k) + " sites");
  }
  std::size_t mask = 0;
  for (std::size_t s : sites) {
    if (s >= nsites) throw DimensionError("embed: site out of range");
    const std::size_t bit = std::size_t{1} << (nsites - 1 - s);
    if (mask & bit) throw DimensionError("embed: repeated site");
    mask |= bit;
  }
  // Full index with the op's local index spread over the chosen bits.
  auto spread = [&](std::size_t local) {
    std::size_t out = 0;
    for (std::size_t q = 0; q < k; ++q) {
      if (local & (std::size_t{1} << (k - 1 - q))) out |= std::size_t{1} << (nsites - 1 - sites[q]);
    }
    return out;
  };
  const std::size_t dim = std::size_t{1} << nsites;
  std::vector<std::size_t> offsets(std::size_t{1} << k);
  for (std::size_t l = 0; l < offsets.size(); ++l) offsets[l] = spread(l);

  Matrix<T> out(dim, dim);
  for (std::size_t rest = 0; rest < dim; ++rest) {
    if (rest & mask) continue;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      for (std::size_t j = 0; j < offsets.size(); ++j) {
        if (!is_zero(op(i, j))) out(rest | offsets[i], rest | offsets[j]) = op(i, j);
      }
    }
  }
  return out;
}

// prod_k R_{aux, q_k}(u, v_k) in the given order.
template <FieldScalar T>
Matrix<T> row_chain(const T& u, const std::vector<T>& v, const T& c, std::size_t aux,
                    const std::vector<std::size_t>& quantum, std::size_t nsites) {
  if (quantum.size() != v.size()) throw DimensionError("row_chain: site/parameter count mismatch");
  Matrix<T> out = Matrix<T>::identity(std::size_t{1} << nsites);
  for (std::size_t k = 0; k < v.size(); ++k) out = out * embed(r_matrix(u, v[k], c), {aux, quantum[k]}, nsites);
  return out;
}

// prod_k R_{q_k, aux}(u_k, v) in the given order.
template <FieldScalar T>
Matrix<T> col_chain(const std::vector<T>& u, const T& v, const T& c,
                    const std::vector<std::size_t>& quantum, std::size_t aux, std::size_t nsites) {
  if (quantum.size() != u.size()) throw DimensionError("col_chain: site/parameter count mismatch");
  Matrix<T> out = Matrix<T>::identity(std::size_t{1} << nsites);
  for (std::size_t k = 0; k < u.size(); ++k) out = out * embed(r_matrix(u[k], v, c), {quantum[k], aux}, nsites);
  return out;
}

namespace detail {
inline std::vector<std::size_t> site_range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}
}  // namespace detail

// T_a(u|v) on V_a (x) (C^2)^n, auxiliary space slowest.
template <FieldScalar T>
Matrix<T> monodromy_row(const T& u, const std::vector<T>& v, const T& c) {
  return row_chain(u, v, c, 0, detail::site_range(1, v.size()), v.size() + 1);
}

// That_b(v|u) on (C^2)^m (x) V_b, auxiliary space fastest.
template <FieldScalar T>
Matrix<T> monodromy_col(const T& v, const std::vector<T>& u, const T& c) {
  return col_chain(u, v, c, detail::site_range(0, u.size()), u.size(), u.size() + 1);
}

// Block t_ij (0-based) of a row monodromy: the auxiliary index is the slow one.
template <FieldScalar T>
Matrix<T> generator_row(const Matrix<T>& mono, std::size_t i, std::size_t j) {
  const std::size_t d = mono.rows() / 2;
  return mono.block(i * d, j * d, d, d);
}

// Block that_ij of a column monodromy: the auxiliary index is the fast one.
template <FieldScalar T>
Matrix<T> generator_col(const Matrix<T>& mono, std::size_t i, std::size_t j) {
  const std::size_t d = mono.rows() / 2;
  Matrix<T> out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) out(r, s) = mono(2 * r + i, 2 * s + j);
  }
  return out;
}

// Per-site b-weights: (u - v_k)/c along a row, (u_k - v)/c down a column.
template <FieldScalar T>
std::vector<T> row_weights(const T& u, const std::vector<T>& v, const T& c) {
  std::vector<T> b;
  b.reserve(v.size());
  for (const auto& x : v) b.push_back((u - x) / c);
  return b;
}

template <FieldScalar T>
std::vector<T> col_weights(const T& v, const std::vector<T>& u, const T& c) {
  std::vector<T> b;
  b.reserve(u.size());
  for (const auto& x : u) b.push_back((x - v) / c);
  return b;
}

// The pair (tau_0, tau_1) with tau_i = sum_j t_ij y_j, for the chain whose
// site weights are `b`. Built from the last site inwards: peeling one R off
// the front gives <i|R|j>_aux = b delta_ij + E_ji on that site.
template <FieldScalar T>
std::pair<Matrix<T>, Matrix<T>> contract_right(const std::vector<T>& b, const Vec2<T>& y) {
  Matrix<T> t0(1, 1, {y[0]});
  Matrix<T> t1(1, 1, {y[1]});
  for (std::size_t k = b.size(); k-- > 0;) {
    const std::size_t d = t0.rows();
    const T a = b[k] + T(1);
    Matrix<T> n0(2 * d, 2 * d), n1(2 * d, 2 * d);
    n0.set_block(0, 0, a * t0);
    n0.set_block(d, 0, t1);
    n0.set_block(d, d, b[k] * t0);
    n1.set_block(0, 0, b[k] * t1);
    n1.set_block(0, d, t0);
    n1.set_block(d, d, a * t1);
    t0 = std::move(n0);
    t1 = std::move(n1);
  }
  return {std::move(t0), std::move(t1)};
}

// <x|T|y> = sum_ij x_i y_j t_ij without forming the monodromy matrix.
template <FieldScalar T>
Matrix<T> sandwich(const std::vector<T>& b, const Vec2<T>& x, const Vec2<T>& y) {
  auto [t0, t1] = contract_right(b, y);
  return x[0] * t0 + x[1] * t1;
}

// tr_aux(X T) = sum_ij X_ji t_ij for an arbitrary 2x2 twist.
template <FieldScalar T>
Matrix<T> twisted_transfer(const std::vector<T>& b, const Matrix<T>& twist) {
  if (twist.rows() != 2 || twist.cols() != 2) throw DimensionError("twist must be 2x2");
  Matrix<T> first = contract_right(b, Vec2<T>{twist(0, 0), twist(1, 0)}).first;
  Matrix<T> second = contract_right(b, Vec2<T>{twist(0, 1), twist(1, 1)}).second;
  return first + second;
}

enum class OperatorKind { B, Bhat, A, D };

// B, A, D act on the 2^n column space as functions of a row parameter u;
// Bhat acts on the 2^m row space as a function of a column parameter v.
template <FieldScalar T>
Matrix<T> twisted_operator(OperatorKind kind, const T& spectral, const ParamSet<T>& params,
                           const BoundaryConfig<T>& cfg) {
  switch (kind) {
    case OperatorKind::B:
      return sandwich(row_weights(spectral, params.v, params.c), cfg.w, cfg.e);
    case OperatorKind::A:
      return sandwich(row_weights(spectral, params.v, params.c), cfg.w, cfg.a);
    case OperatorKind::D:
      return sandwich(row_weights(spectral, params.v, params.c), cfg.d_tilde, cfg.e);
    case OperatorKind::Bhat:
      return sandwich(col_weights(spectral, params.u, params.c), cfg.s, cfg.n);
  }
  throw Error("unknown operator kind");
}

template <FieldScalar T>
std::vector<T> product_state(const Vec2<T>& x, std::size_t sites) {
  std::vector<T> out{T(1)};
  for (std::size_t k = 0; k < sites; ++k) out = kron(out, std::vector<T>{x[0], x[1]});
  return out;
}

template <FieldScalar T>
Matrix<T> kron_power(const Matrix<T>& x, std::size_t times) {
  Matrix<T> out = Matrix<T>::identity(1);
  for (std::size_t k = 0; k < times; ++k) out = kron(out, x);
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force partition functions

// Contraction sizes beyond these are refused. The limit applies to the
// smaller lattice side, since contractions run along whichever side is
// shorter.
struct Ceilings {
  std::size_t exact_expectation = 10;
  std::size_t exact_trace = 7;
  std::size_t float_expectation = 11;
  std::size_t float_trace = 9;
};

enum class Orientation { automatic, rows, columns };

template <FieldScalar T>
struct LatticeSpec {
  ParamSet<T> params;
  Matrix<T> twist_row;  // B
  Matrix<T> twist_col;  // Bhat

  static LatticeSpec make(ParamSet<T> params, Matrix<T> twist_row, Matrix<T> twist_col,
                          bool claim_rank1 = false) {
    if (twist_row.rows() != 2 || twist_row.cols() != 2 || twist_col.rows() != 2 ||
        twist_col.cols() != 2) {
      throw DimensionError("twist matrices must be 2x2");
    }
    if (claim_rank1 && (!is_zero(det(twist_row)) || !is_zero(det(twist_col)))) {
      throw DegenerateError("det(twist)", "rank-1 twist claimed but det(twist) != 0");
    }
    return {std::move(params), std::move(twist_row), std::move(twist_col)};
  }

  static LatticeSpec from_boundary(ParamSet<T> params, const BoundaryConfig<T>& cfg) {
    return make(std::move(params), cfg.B, cfg.Bhat, true);
  }
};

namespace detail {

inline Orientation resolve(Orientation o, std::size_t m, std::size_t n) {
  if (o != Orientation::automatic) return o;
  return n <= m ? Orientation::rows : Orientation::columns;
}

template <FieldScalar T>
void check_ceiling(std::size_t size, bool trace, const Ceilings& ceil) {
  const std::size_t limit = is_exact_v<T> ? (trace ? ceil.exact_trace : ceil.exact_expectation)
                                          : (trace ? ceil.float_trace : ceil.float_expectation);
  if (size > limit) {
    throw CeilingError(std::string(trace ? "contraction-trace" : "contraction-expectation") +
                       " refuses operator size 2^" + std::to_string(size) + " in " +
                       (is_exact_v<T> ? "exact" : "float") + " mode (ceiling 2^" +
                       std::to_string(limit) + ")");
  }
}

}  // namespace detail

// tr_b((prod Bhat_b) B(u_1)...B(u_m)) in the row orientation, or
// tr_a((prod B_a) Bhat(v_1)...Bhat(v_n)) in the column orientation.
template <FieldScalar T>
T partition_trace(const LatticeSpec<T>& spec, Orientation orient = Orientation::automatic,
                  const Ceilings& ceil = {}) {
  const auto& p = spec.params;
  orient = detail::resolve(orient, p.m(), p.n());
  const bool rows = orient == Orientation::rows;
  detail::check_ceiling<T>(rows ? p.n() : p.m(), true, ceil);

  const std::size_t sites = rows ? p.n() : p.m();
  const std::size_t factors = rows ? p.m() : p.n();
  Matrix<T> product = Matrix<T>::identity(std::size_t{1} << sites);
  for (std::size_t k = 0; k < factors; ++k) {
    const auto b = rows ? row_weights(p.u[k], p.v, p.c) : col_weights(p.v[k], p.u, p.c);
    product = product * twisted_transfer(b, rows ? spec.twist_row : spec.twist_col);
  }
  return trace_of_product(kron_power(rows ? spec.twist_col : spec.twist_row, sites), product);
}

// <S|B(u_1)...B(u_m)|N> (rows) or <W|Bhat(v_1)...Bhat(v_n)|E> (columns).
template <FieldScalar T>
T partition_expectation(const ParamSet<T>& p, const BoundaryConfig<T>& cfg,
                        Orientation orient = Orientation::automatic, const Ceilings& ceil = {}) {
  orient = detail::resolve(orient, p.m(), p.n());
  const bool rows = orient == Orientation::rows;
  detail::check_ceiling<T>(rows ? p.n() : p.m(), false, ceil);

  if (rows) {
    std::vector<T> state = product_state(cfg.n, p.n());
    for (std::size_t k = p.m(); k-- > 0;) state = sandwich(row_weights(p.u[k], p.v, p.c), cfg.w, cfg.e) * state;
    return dot(product_state(cfg.s, p.n()), state);
  }
  std::vector<T> state = product_state(cfg.e, p.m());
  for (std::size_t k = p.n(); k-- > 0;) state = sandwich(col_weights(p.v[k], p.u, p.c), cfg.s, cfg.n) * state;
  return dot(product_state(cfg.w, p.m()), state);
}

// prod_i prod_j R_{a_i b_j}(u_i, v_j) on a_1..a_m (x) b_1..b_n, with the rows
// and columns multiplied in the given orders. The space layout is fixed.
template <FieldScalar T>
Matrix<T> full_partition_matrix(const ParamSet<T>& p, const std::vector<std::size_t>& row_order,
                                const std::vector<std::size_t>& col_order) {
  const std::size_t nsites = p.m() + p.n();
  Matrix<T> out = Matrix<T>::identity(std::size_t{1} << nsites);
  for (std::size_t i : row_order) {
    for (std::size_t j : col_order) {
      out = out * embed(r_matrix(p.u[i], p.v[j], p.c), {i, p.m() + j}, nsites);
    }
  }
  return out;
}

// Top coefficient of a matrix polynomial of the given degree, by Lagrange
// interpolation at the points 0, 1, ..., degree.
template <FieldScalar T>
Matrix<T> leading_coefficient(const std::function<Matrix<T>(const T&)>& poly, std::size_t degree) {
  Matrix<T> acc;
  for (std::size_t k = 0; k <= degree; ++k) {
    T denom(1);
    for (std::size_t l = 0; l <= degree; ++l) {
      if (l != k) denom *= T(static_cast<long>(k) - static_cast<long>(l));
    }
    Matrix<T> term = (T(1) / denom) * poly(T(static_cast<long>(k)));
    acc = k == 0 ? term : acc + term;
  }
  return acc;
}

}  // namespace sixvertex
