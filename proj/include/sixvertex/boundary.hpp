#pragma once

// Rank-1 boundary twists built from the four compass vectors, plus the two
// auxiliary twists used to define A(u) and D(u).
//
// Layout convention: a twist X enters a trace as tr(X T), and for
// X = outer(y, x) (the column vector y times the row vector x) this equals
// <x|T|y> = sum_ij x_i y_j t_ij. Hence
//   B    = outer(e, w)    B(u)    = <w|T(u)|e>
//   Bhat = outer(n, s)    Bhat(v) = <s|That(v)|n>
//   A    = outer(a, w)    A(u)    = <w|T(u)|a>
//   D    = outer(e, dt)   D(u)    = <dt|T(u)|e>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sixvertex/error.hpp"
#include "sixvertex/matrix.hpp"
#include "sixvertex/scalar.hpp"

namespace sixvertex {

template <FieldScalar T>
struct BoundaryConfig {
  Vec2<T> w, e, n, s;
  Vec2<T> a{T(1), T(1)};
  Vec2<T> d_tilde{T(1), T(1)};

  Matrix<T> B, Bhat, A, D;

  T tr_B, tr_Bhat, tr_BBhat, tr_A, tr_D;

  // Brackets that show up in denominators. A zero here disables the
  // constants that divide by it but is never fatal on its own.
  T w_n, s_e, e_sy_n, s_sy_w;

  std::vector<std::string> degenerate_flags() const {
    std::vector<std::string> out;
    if (is_zero(w_n)) out.emplace_back("<w|n>");
    if (is_zero(s_e)) out.emplace_back("<s|e>");
    if (is_zero(e_sy_n)) out.emplace_back("<e|sigma_y|n>");
    if (is_zero(s_sy_w)) out.emplace_back("<s|sigma_y|w>");
    if (is_zero(tr_BBhat)) out.emplace_back("tr(B Bhat)");
    return out;
  }
};

template <FieldScalar T>
BoundaryConfig<T> build_boundary(const Vec2<T>& w, const Vec2<T>& e, const Vec2<T>& n,
                                 const Vec2<T>& s, const Vec2<T>& a = {T(1), T(1)},
                                 const Vec2<T>& d_tilde = {T(1), T(1)}) {
  auto require_nonzero = [](const Vec2<T>& x, const char* name) {
    if (is_zero(x[0]) && is_zero(x[1])) {
      throw DegenerateError(name, std::string("boundary vector ") + name + " is zero");
    }
  };
  require_nonzero(w, "w");
  require_nonzero(e, "e");
  require_nonzero(n, "n");
  require_nonzero(s, "s");
  require_nonzero(a, "a");
  require_nonzero(d_tilde, "d_tilde");

  BoundaryConfig<T> cfg;
  cfg.w = w;
  cfg.e = e;
  cfg.n = n;
  cfg.s = s;
  cfg.a = a;
  cfg.d_tilde = d_tilde;
  cfg.B = outer(e, w);
  cfg.Bhat = outer(n, s);
  cfg.A = outer(a, w);
  cfg.D = outer(e, d_tilde);
  cfg.tr_B = trace(cfg.B);
  cfg.tr_Bhat = trace(cfg.Bhat);
  cfg.tr_BBhat = trace(cfg.B * cfg.Bhat);
  cfg.tr_A = trace(cfg.A);
  cfg.tr_D = trace(cfg.D);
  cfg.w_n = pairing(w, n);
  cfg.s_e = pairing(s, e);
  cfg.e_sy_n = sigma_y_pairing(e, n);
  cfg.s_sy_w = sigma_y_pairing(s, w);
  return cfg;
}

template <FieldScalar T>
BoundaryConfig<T> convert(const BoundaryConfig<Scalar>& b) {
  auto v = [](const Vec2<Scalar>& x) { return Vec2<T>{convert<T>(x[0]), convert<T>(x[1])}; };
  return build_boundary<T>(v(b.w), v(b.e), v(b.n), v(b.s), v(b.a), v(b.d_tilde));
}

// Pauli sigma_y as a matrix.
template <FieldScalar T>
Matrix<T> sigma_y() {
  const T i = imaginary_unit<T>();
  Matrix<T> m(2, 2);
  m(0, 1) = -i;
  m(1, 0) = i;
  return m;
}

// Constants of the triangular actions on the compass states. Each constant is
// absent when its denominator vanishes; `missing` records the reason.
template <FieldScalar T>
struct DerivedConstants {
  std::optional<T> a_N, c_N, d_N, f_N;
  std::optional<T> a_S, c_S, d_S, f_S;
  std::optional<T> beta, chi;
  std::map<std::string, std::string> missing;

  const T& require(const std::string& name) const {
    const std::optional<T>* slot = lookup(name);
    if (slot == nullptr) throw Error("unknown constant " + name);
    if (!slot->has_value()) {
      auto it = missing.find(name);
      const std::string why = it == missing.end() ? "undefined" : it->second;
      throw DegenerateError(why, "constant " + name + " is undefined: " + why + " = 0");
    }
    return **slot;
  }

  bool has(const std::string& name) const {
    const std::optional<T>* slot = lookup(name);
    return slot != nullptr && slot->has_value();
  }

 private:
  const std::optional<T>* lookup(const std::string& name) const {
    if (name == "a_N") return &a_N;
    if (name == "c_N") return &c_N;
    if (name == "d_N") return &d_N;
    if (name == "f_N") return &f_N;
    if (name == "a_S") return &a_S;
    if (name == "c_S") return &c_S;
    if (name == "d_S") return &d_S;
    if (name == "f_S") return &f_S;
    if (name == "beta") return &beta;
    if (name == "chi") return &chi;
    return nullptr;
  }
};

namespace detail {

template <FieldScalar T>
void require_equal(const T& lhs, const T& rhs, const std::string& what) {
  bool ok;
  if constexpr (is_exact_v<T>) {
    ok = lhs == rhs;
  } else {
    ok = std::abs(lhs - rhs) <= 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  }
  if (!ok) throw Error("internal consistency check failed: " + what);
}

template <FieldScalar T>
bool has_zero_imag(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x.is_real();
  } else {
    return std::abs(x.imag()) <= 1e-9 * std::max(1.0, std::abs(x));
  }
}

template <FieldScalar T>
bool is_real_vector(const Vec2<T>& x) {
  return has_zero_imag(x[0]) && has_zero_imag(x[1]);
}

}  // namespace detail

template <FieldScalar T>
DerivedConstants<T> derive_constants(const BoundaryConfig<T>& cfg) {
  DerivedConstants<T> k;
  const auto& [w, e, n, s, a, dt] = std::tie(cfg.w, cfg.e, cfg.n, cfg.s, cfg.a, cfg.d_tilde);
  auto sy = [](const Vec2<T>& x, const Vec2<T>& y) { return sigma_y_pairing(x, y); };

  // Right action on |N>.
  const T n_sy_e = sy(n, e);
  if (!is_zero(n_sy_e)) {
    k.a_N = sy(a, e) * cfg.w_n / n_sy_e;
    k.c_N = sy(a, n) / cfg.e_sy_n;
  } else {
    k.missing["a_N"] = k.missing["c_N"] = "<e|sigma_y|n>";
  }
  if (!is_zero(cfg.w_n)) {
    k.d_N = cfg.e_sy_n * sy(w, dt) / cfg.w_n;
    k.f_N = pairing(dt, n) / cfg.w_n;
  } else {
    k.missing["d_N"] = k.missing["f_N"] = "<w|n>";
  }

  // Left action on <S|.
  if (!is_zero(cfg.s_e)) {
    k.a_S = sy(a, e) * cfg.s_sy_w / cfg.s_e;
    k.c_S = pairing(s, a) / cfg.s_e;
  } else {
    k.missing["a_S"] = k.missing["c_S"] = "<s|e>";
  }
  if (!is_zero(cfg.s_sy_w)) {
    k.d_S = cfg.s_e * sy(dt, w) / cfg.s_sy_w;
    k.f_S = sy(s, dt) / cfg.s_sy_w;
  } else {
    k.missing["d_S"] = k.missing["f_S"] = "<s|sigma_y|w>";
  }

  if (!is_zero(cfg.tr_BBhat)) {
    // tr(B Bhat) = <w|n><s|e>, so both bracket denominators are nonzero here.
    k.beta = sy(w, s) * cfg.e_sy_n / (pairing(e, s) * cfg.w_n);
    k.chi = T(1) - *k.beta;
    const Matrix<T> sy_m = sigma_y<T>();
    const T twisted = trace(cfg.B * sy_m * transpose(cfg.Bhat) * sy_m);
    detail::require_equal(*k.beta, -twisted / cfg.tr_BBhat, "beta bracket vs trace form");
    detail::require_equal(*k.chi, cfg.tr_Bhat * cfg.tr_B / cfg.tr_BBhat, "chi = 1 - beta");
    detail::require_equal(twisted + cfg.tr_BBhat, cfg.tr_B * cfg.tr_Bhat, "trace sum rule");
  } else {
    k.missing["beta"] = k.missing["chi"] = "tr(B Bhat)";
  }

  if (k.a_N && k.c_N) detail::require_equal(*k.a_N + cfg.tr_B * *k.c_N, cfg.tr_A, "a_N + tr(B) c_N = tr(A)");
  if (k.d_N && k.f_N) detail::require_equal(*k.d_N + cfg.tr_B * *k.f_N, cfg.tr_D, "d_N + tr(B) f_N = tr(D)");
  if (k.a_S && k.c_S) detail::require_equal(*k.a_S + cfg.tr_B * *k.c_S, cfg.tr_A, "a_S + tr(B) c_S = tr(A)");
  if (k.d_S && k.f_S) detail::require_equal(*k.d_S + cfg.tr_B * *k.f_S, cfg.tr_D, "d_S + tr(B) f_S = tr(D)");
  if (k.beta && k.a_N && k.a_S && !is_zero(*k.a_N)) {
    detail::require_equal(*k.beta, *k.a_S / *k.a_N, "beta = a_S / a_N");
  }
  if (k.beta && k.d_N && k.d_S && !is_zero(*k.d_S)) {
    detail::require_equal(*k.beta, *k.d_N / *k.d_S, "beta = d_N / d_S");
  }

  const bool real_input = detail::is_real_vector(w) && detail::is_real_vector(e) &&
                          detail::is_real_vector(n) && detail::is_real_vector(s) &&
                          detail::is_real_vector(a) && detail::is_real_vector(dt);
  if (real_input) {
    for (const auto* slot : {&k.a_N, &k.c_N, &k.d_N, &k.f_N, &k.a_S, &k.c_S, &k.d_S, &k.f_S,
                             &k.beta, &k.chi}) {
      if (slot->has_value() && !detail::has_zero_imag(**slot)) {
        throw Error("internal consistency check failed: constant with nonzero imaginary part");
      }
    }
  }
  return k;
}

}  // namespace sixvertex
