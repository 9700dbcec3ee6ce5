#pragma once

// Seeded generator of small rational (or Gaussian rational) test instances.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "sixvertex/boundary.hpp"
#include "sixvertex/scalar.hpp"

namespace sixvertex {

struct Instance {
  ParamSet<Scalar> params;
  BoundaryConfig<Scalar> cfg;
};

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  // Rational p/q with |p| <= bound and 1 <= q <= max_den.
  Rational rational(int bound = 12, int max_den = 5) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, max_den);
    const int p = num(rng_);
    const int q = den(rng_);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(int bound = 12, int max_den = 5) {
    Rational r;
    do r = rational(bound, max_den);
    while (sgn(r) == 0);
    return r;
  }

  Scalar scalar(bool complex = false) {
    return complex ? Scalar(rational(), rational()) : Scalar(rational());
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  std::size_t index(std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_); }

  std::mt19937_64& engine() { return rng_; }

  // Spectral parameters with no difference between distinct entries equal to
  // k*c for an integer |k| <= 8, which keeps every kernel, lambda and Cauchy
  // quantity finite and nonzero.
  ParamSet<Scalar> params(std::size_t m, std::size_t n, bool complex = false) {
    for (;;) {
      const Scalar c(nonzero_rational(3, 3));
      std::vector<Scalar> all;
      for (std::size_t k = 0; k < m + n; ++k) all.push_back(scalar(complex));
      if (!generic(all, c)) continue;
      return ParamSet<Scalar>::make(std::vector<Scalar>(all.begin(), all.begin() + static_cast<long>(m)),
                                    std::vector<Scalar>(all.begin() + static_cast<long>(m), all.end()), c);
    }
  }

  // One extra spectral parameter generic with respect to everything in p.
  Scalar extra_parameter(const ParamSet<Scalar>& p, bool complex = false) {
    std::vector<Scalar> all = p.u;
    all.insert(all.end(), p.v.begin(), p.v.end());
    for (;;) {
      all.push_back(scalar(complex));
      if (generic(all, p.c)) return all.back();
      all.pop_back();
    }
  }

  Vec2<Scalar> vector2(bool complex = false) {
    for (;;) {
      Vec2<Scalar> v{Scalar(rational(6, 3)), Scalar(rational(6, 3))};
      if (complex) {
        v[0] += Scalar(Rational(0), rational(6, 3));
        v[1] += Scalar(Rational(0), rational(6, 3));
      }
      if (!v[0].is_zero() || !v[1].is_zero()) return v;
    }
  }

  // Compass vectors with every bracket, trace and constant nonzero.
  BoundaryConfig<Scalar> boundary(bool complex = false) {
    for (;;) {
      auto cfg = build_boundary(vector2(complex), vector2(complex), vector2(complex), vector2(complex),
                                vector2(complex), vector2(complex));
      if (!cfg.degenerate_flags().empty()) continue;
      if (cfg.tr_B.is_zero() || cfg.tr_Bhat.is_zero()) continue;
      const auto k = derive_constants(cfg);
      bool ok = true;
      for (const char* name : {"a_N", "c_N", "d_N", "f_N", "a_S", "c_S", "d_S", "f_S", "beta", "chi"}) {
        ok = ok && k.has(name) && !k.require(name).is_zero();
      }
      if (ok && (Scalar(1) - *k.beta).is_zero()) ok = false;
      if (ok) return cfg;
    }
  }

  Instance instance(std::size_t m, std::size_t n, bool complex = false) {
    return {params(m, n, complex), boundary(complex)};
  }

  static bool generic(const std::vector<Scalar>& xs, const Scalar& c) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        const Scalar q = (xs[i] - xs[j]) / c;
        if (!q.is_real()) continue;
        const Rational& r = q.re();
        if (r.get_den() == 1 && abs(r) <= 8) return false;
      }
    }
    return true;
  }

 private:
  std::mt19937_64 rng_;
};

// A random permutation of 0..n-1.
inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = k;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

template <class T>
std::vector<T> permuted(const std::vector<T>& xs, const std::vector<std::size_t>& perm) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (std::size_t k : perm) out.push_back(xs[k]);
  return out;
}

}  // namespace sixvertex
