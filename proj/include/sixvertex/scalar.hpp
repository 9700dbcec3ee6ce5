#pragma once

// Field arithmetic and the elementary rational functions of the rational
// six-vertex model.
//
// Two scalar types share one interface:
//   Scalar   exact Gaussian rational (re, im in Q), canonical after every op
//   Complex  std::complex<double>, used by benchmarks and limit sampling
//
// Set conventions: for a kernel k and sets xs, ys
//   k(z, xs)  = prod_{x in xs} k(z, x)
//   k(xs, z)  = prod_{x in xs} k(x, z)
//   k(xs, ys) = prod_{x in xs, y in ys} k(x, y)
// Empty products are 1.

#include <gmpxx.h>

#include <array>
#include <complex>
#include <concepts>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sixvertex/error.hpp"

namespace sixvertex {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Accepts "p", "p/q" with an optional sign; p, q decimal integers.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) {
    throw ParseError("invalid rational literal '" + std::string(text) + "': " + why);
  };
  if (text.empty()) fail("empty");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  const auto slash = text.find('/', pos);
  const std::string_view num =
      text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  if (!digits(num)) fail("numerator is not a decimal integer");
  if (!digits(den)) fail("denominator is not a decimal integer");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) fail("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  // mpq_class(p, q) does not reduce, and equality assumes reduced form.
  explicit Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar parse(std::string_view re, std::string_view im = "0") {
    return Scalar(parse_rational(re), parse_rational(im));
  }

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar inverse() const {
    if (is_zero()) throw SingularityError("division by zero");
    if (is_real()) return Scalar(Rational(Rational(1) / re_));
    Rational norm = re_ * re_ + im_ * im_;
    return Scalar(Rational(re_ / norm), Rational(-im_ / norm));
  }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  std::string str() const {
    if (is_real()) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "i";
    std::string out = re_.get_str();
    out += sgn(im_) < 0 ? "-" : "+";
    out += Rational(abs(im_)).get_str();
    out += "i";
    return out;
  }

  Scalar operator-() const { return Scalar(Rational(-re_), Rational(-im_)); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (sgn(o.im_) == 0) {
      re_ *= o.re_;
      if (sgn(im_) != 0) im_ *= o.re_;
      return *this;
    }
    if (sgn(im_) == 0) {
      im_ = re_ * o.im_;
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw SingularityError("division by zero");
    if (o.is_real()) {
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

template <class T>
concept FieldScalar = std::same_as<T, Scalar> || std::same_as<T, Complex>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Scalar>;

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const Complex& x) { return x == Complex{}; }

inline double magnitude(const Scalar& x) { return std::abs(x.to_complex()); }
inline double magnitude(const Complex& x) { return std::abs(x); }

inline std::string to_string(const Scalar& x) { return x.str(); }
inline std::string to_string(const Complex& x) {
  std::ostringstream os;
  os.precision(17);
  os << x.real();
  if (x.imag() != 0.0) os << (x.imag() < 0 ? "-" : "+") << std::abs(x.imag()) << "i";
  return os.str();
}

// Lossless for Scalar, rounding for Complex.
template <FieldScalar T>
T convert(const Scalar& x) {
  if constexpr (is_exact_v<T>) {
    return x;
  } else {
    return x.to_complex();
  }
}

template <FieldScalar T>
std::vector<T> convert(const std::vector<Scalar>& xs) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(convert<T>(x));
  return out;
}

template <FieldScalar T>
T imaginary_unit() {
  if constexpr (is_exact_v<T>) {
    return Scalar::i();
  } else {
    return Complex{0.0, 1.0};
  }
}

template <FieldScalar T>
T checked_div(const T& num, const T& den, std::string_view what) {
  if (is_zero(den)) throw SingularityError(std::string(what) + ": division by zero");
  return num / den;
}

// Integer power; negative exponents require a nonzero base.
template <FieldScalar T>
T power(const T& base, long exponent) {
  if (exponent < 0) return checked_div(T(1), power(base, -exponent), "negative power");
  T result(1);
  T b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

template <class T>
using Vec2 = std::array<T, 2>;

template <class T>
std::vector<T> without(const std::vector<T>& xs, std::size_t index) {
  std::vector<T> out;
  out.reserve(xs.empty() ? 0 : xs.size() - 1);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k != index) out.push_back(xs[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernels

enum class Kernel { g, f, h, htilde };

inline const char* kernel_name(Kernel kind) {
  switch (kind) {
    case Kernel::g: return "g";
    case Kernel::f: return "f";
    case Kernel::h: return "h";
    case Kernel::htilde: return "htilde";
  }
  return "?";
}

//   g = c/(u-v)   f = (u-v+c)/(u-v)   h = (u-v+c)/c   htilde = (u-v-c)/c
template <FieldScalar T>
T kernel(Kernel kind, const T& u, const T& v, const T& c) {
  if (is_zero(c)) throw DegenerateError("c", "crossing parameter c must be nonzero");
  T diff = u - v;
  switch (kind) {
    case Kernel::g:
    case Kernel::f:
      if (is_zero(diff)) {
        throw SingularityError(std::string(kernel_name(kind)) + "(u, v) is singular at u = v = " +
                               to_string(u));
      }
      if (kind == Kernel::g) return c / diff;
      return (diff + c) / diff;
    case Kernel::h:
      return (diff + c) / c;
    case Kernel::htilde:
      return (diff - c) / c;
  }
  return T(0);
}

template <FieldScalar T>
T g(const T& u, const T& v, const T& c) {
  return kernel(Kernel::g, u, v, c);
}
template <FieldScalar T>
T f(const T& u, const T& v, const T& c) {
  return kernel(Kernel::f, u, v, c);
}
template <FieldScalar T>
T h(const T& u, const T& v, const T& c) {
  return kernel(Kernel::h, u, v, c);
}
template <FieldScalar T>
T htilde(const T& u, const T& v, const T& c) {
  return kernel(Kernel::htilde, u, v, c);
}

// Which argument slot the lone variable z occupies.
enum class Side { left, right };

template <FieldScalar T>
T kernel_product(Kernel kind, const T& z, const std::vector<T>& set, Side side, const T& c) {
  T acc(1);
  for (std::size_t k = 0; k < set.size(); ++k) {
    try {
      acc *= side == Side::left ? kernel(kind, z, set[k], c) : kernel(kind, set[k], z, c);
    } catch (const SingularityError&) {
      throw SingularityError(std::string(kernel_name(kind)) + " product is singular: z = " +
                             to_string(z) + " coincides with set element " + std::to_string(k));
    }
  }
  return acc;
}

template <FieldScalar T>
T kernel_product(Kernel kind, const std::vector<T>& lhs, const std::vector<T>& rhs, const T& c) {
  T acc(1);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      try {
        acc *= kernel(kind, lhs[i], rhs[j], c);
      } catch (const SingularityError&) {
        throw SingularityError(std::string(kernel_name(kind)) + " product is singular at pair (" +
                               std::to_string(i) + ", " + std::to_string(j) + "), value " +
                               to_string(lhs[i]));
      }
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Weight functions of the highest-weight vector.

template <FieldScalar T>
T lambda1(const T& u, const std::vector<T>& v, const T& c) {
  return kernel_product(Kernel::h, u, v, Side::left, c);
}

// prod_j (u - v_j)/c, i.e. 1/g(u, v); u = v_j is rejected as the pole of 1/g.
template <FieldScalar T>
T lambda2(const T& u, const std::vector<T>& v, const T& c) {
  if (is_zero(c)) throw DegenerateError("c", "crossing parameter c must be nonzero");
  T acc(1);
  for (std::size_t j = 0; j < v.size(); ++j) {
    T diff = u - v[j];
    if (is_zero(diff)) {
      throw SingularityError("lambda2 is singular: u = v_" + std::to_string(j + 1) + " = " +
                             to_string(u));
    }
    acc *= diff / c;
  }
  return acc;
}

// prod_i lambda2(u_i)
template <FieldScalar T>
T lambda2(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
  T acc(1);
  for (const auto& x : u) acc *= lambda2(x, v, c);
  return acc;
}

// <x|y> = x1 y1 + x2 y2 (bilinear, no conjugation)
template <FieldScalar T>
T pairing(const Vec2<T>& x, const Vec2<T>& y) {
  return x[0] * y[0] + x[1] * y[1];
}

// <x|sigma_y|y> = i (x2 y1 - x1 y2)
template <FieldScalar T>
T sigma_y_pairing(const Vec2<T>& x, const Vec2<T>& y) {
  return imaginary_unit<T>() * (x[1] * y[0] - x[0] * y[1]);
}

// Delta(u) = (prod_{i<j} g(u_i, u_j))^{-1}; primed uses i > j.
template <FieldScalar T>
T vandermonde(const std::vector<T>& set, bool primed, const T& c) {
  T acc(1);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (is_zero(set[i] - set[j])) {
        throw SingularityError("vandermonde: repeated entries at positions " + std::to_string(i) +
                               " and " + std::to_string(j));
      }
      acc *= primed ? g(set[j], set[i], c) : g(set[i], set[j], c);
    }
  }
  return T(1) / acc;
}

// ---------------------------------------------------------------------------
// Spectral data

enum class Genericity { generic, relaxed };

template <FieldScalar T>
struct ParamSet {
  std::vector<T> u;  // row inhomogeneities, size m
  std::vector<T> v;  // column inhomogeneities, size n
  T c{1};

  std::size_t m() const noexcept { return u.size(); }
  std::size_t n() const noexcept { return v.size(); }

  // Throws DegenerateError naming the first violated condition.
  static ParamSet make(std::vector<T> u, std::vector<T> v, T c,
                       Genericity mode = Genericity::generic) {
    ParamSet p{std::move(u), std::move(v), std::move(c)};
    p.validate(mode);
    return p;
  }

  void validate(Genericity mode) const {
    if (is_zero(c)) throw DegenerateError("c", "crossing parameter c must be nonzero");
    if (mode == Genericity::relaxed) return;
    auto distinct = [](const std::vector<T>& xs, const char* name) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          if (is_zero(xs[i] - xs[j])) {
            throw DegenerateError(std::string(name) + "_" + std::to_string(i + 1) + " - " + name +
                                      "_" + std::to_string(j + 1),
                                  std::string("repeated ") + name + " entries " +
                                      std::to_string(i + 1) + " and " + std::to_string(j + 1));
          }
        }
      }
    };
    distinct(u, "u");
    distinct(v, "v");
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (is_zero(u[i] - v[j])) {
          const std::string pair = "u_" + std::to_string(i + 1) + " - v_" + std::to_string(j + 1);
          throw DegenerateError(pair, "lambda2 is singular: " + pair + " = 0");
        }
      }
    }
  }

  ParamSet without_u(std::size_t i) const { return {without(u, i), v, c}; }
  ParamSet without_v(std::size_t j) const { return {u, without(v, j), c}; }
};

template <FieldScalar T>
ParamSet<T> convert(const ParamSet<Scalar>& p) {
  return {convert<T>(p.u), convert<T>(p.v), convert<T>(p.c)};
}

}  // namespace sixvertex
