#pragma once

// Dense matrices over a FieldScalar.
//
// Kronecker convention: kron(A, B) makes A's index the slow (most
// significant) one, so (A (x) B)(i*rB + k, j*cB + l) = A(i, j) B(k, l).
// Every tensor-space layout in the library is stated against this.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sixvertex/error.hpp"
#include "sixvertex/scalar.hpp"

namespace sixvertex {

template <FieldScalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionError("matrix data length " + std::to_string(data_.size()) + " != " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<T> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ragged row in matrix literal");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const noexcept { return data_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    }
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw DimensionError("block out of range");
    for (std::size_t i = 0; i < src.rows_; ++i) {
      for (std::size_t j = 0; j < src.cols_; ++j) (*this)(r0 + i, c0 + j) = src(i, j);
    }
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return sixvertex::is_zero(x); });
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "subtract");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionError(std::string(op) + ": shape " + std::to_string(rows_) + "x" +
                           std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                           std::to_string(o.cols_));
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <FieldScalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& bkj = b(k, j);
        if (is_zero(bkj)) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

template <FieldScalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b;
}

template <FieldScalar T>
Matrix<T> scale(const T& s, const Matrix<T>& m) {
  return s * m;
}

template <FieldScalar T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw DimensionError("matvec: shape mismatch");
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(x[k]) || is_zero(a(i, k))) continue;
      out[i] += a(i, k) * x[k];
    }
  }
  return out;
}

// Row vector times matrix.
template <FieldScalar T>
std::vector<T> operator*(const std::vector<T>& x, const Matrix<T>& a) {
  if (a.rows() != x.size()) throw DimensionError("vecmat: shape mismatch");
  std::vector<T> out(a.cols(), T(0));
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (is_zero(x[k])) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(k, j))) continue;
      out[j] += x[k] * a(k, j);
    }
  }
  return out;
}

template <FieldScalar T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size()) throw DimensionError("dot: length mismatch");
  T acc(0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (is_zero(x[k]) || is_zero(y[k])) continue;
    acc += x[k] * y[k];
  }
  return acc;
}

template <FieldScalar T>
bool is_zero(const std::vector<T>& x) {
  return std::all_of(x.begin(), x.end(), [](const T& e) { return is_zero(e); });
}

template <FieldScalar T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector subtract: length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

template <FieldScalar T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector add: length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

template <FieldScalar T>
std::vector<T> operator*(const T& s, std::vector<T> x) {
  for (auto& e : x) e *= s;
  return x;
}

template <FieldScalar T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (is_zero(b(k, l))) continue;
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

template <FieldScalar T>
std::vector<T> kron(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out(a.size() * b.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

template <FieldScalar T>
T trace(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("trace of non-square matrix");
  T acc(0);
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

// tr(A B) without forming the product.
template <FieldScalar T>
T trace_of_product(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw DimensionError("trace_of_product: shape");
  T acc(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)) || is_zero(b(k, i))) continue;
      acc += a(i, k) * b(k, i);
    }
  }
  return acc;
}

template <FieldScalar T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

// Permutation on C^2 (x) C^2: P(x (x) y) = y (x) x.
template <FieldScalar T>
Matrix<T> permutation_matrix() {
  Matrix<T> p(4, 4);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) p(2 * b + a, 2 * a + b) = T(1);
  }
  return p;
}

template <FieldScalar T>
Matrix<T> outer(const Vec2<T>& x, const Vec2<T>& y) {
  Matrix<T> out(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) out(i, j) = x[i] * y[j];
  }
  return out;
}

namespace detail {

// Exact fields pivot on the first nonzero entry; floats use partial pivoting.
template <FieldScalar T>
std::size_t find_pivot(const Matrix<T>& a, std::size_t col, std::size_t start) {
  std::size_t best = a.rows();
  if constexpr (is_exact_v<T>) {
    for (std::size_t r = start; r < a.rows(); ++r) {
      if (!is_zero(a(r, col))) return r;
    }
  } else {
    double best_mag = 0.0;
    for (std::size_t r = start; r < a.rows(); ++r) {
      const double mag = magnitude(a(r, col));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
  }
  return best;
}

template <FieldScalar T>
void swap_rows(Matrix<T>& a, std::size_t r1, std::size_t r2) {
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

}  // namespace detail

// Gaussian elimination; det of the 0x0 matrix is 1.
template <FieldScalar T>
T det(Matrix<T> a) {
  if (!a.square()) throw DimensionError("det of non-square matrix");
  const std::size_t n = a.rows();
  T result(1);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t pivot = detail::find_pivot(a, col, col);
    if (pivot == n) return T(0);
    if (pivot != col) {
      detail::swap_rows(a, pivot, col);
      result = -result;
    }
    result *= a(col, col);
    const T inv = T(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const T factor = a(r, col) * inv;
      for (std::size_t k = col + 1; k < n; ++k) {
        if (is_zero(a(col, k))) continue;
        a(r, k) -= factor * a(col, k);
      }
    }
  }
  return result;
}

template <FieldScalar T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t pivot = detail::find_pivot(a, col, col);
    if (pivot == n) throw SingularityError("inverse: matrix is singular");
    if (pivot != col) {
      detail::swap_rows(a, pivot, col);
      detail::swap_rows(inv, pivot, col);
    }
    const T p = T(1) / a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) *= p;
      inv(col, k) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const T factor = a(r, col);
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(a(col, k))) a(r, k) -= factor * a(col, k);
        if (!is_zero(inv(col, k))) inv(r, k) -= factor * inv(col, k);
      }
    }
  }
  return inv;
}

// Exact rank (row echelon form). For Complex, entries below `tol` count as zero.
template <FieldScalar T>
std::size_t rank(Matrix<T> a, double tol = 0.0) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = detail::find_pivot(a, col, r);
    if (pivot == a.rows() || magnitude(a(pivot, col)) <= tol) continue;
    detail::swap_rows(a, pivot, r);
    const T inv = T(1) / a(r, col);
    for (std::size_t row = r + 1; row < a.rows(); ++row) {
      if (is_zero(a(row, col))) continue;
      const T factor = a(row, col) * inv;
      for (std::size_t k = col; k < a.cols(); ++k) a(row, k) -= factor * a(r, k);
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cauchy matrix C_ij = g(u_i, v_j)

namespace detail {

template <FieldScalar T>
void require_cauchy_generic(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
  if (u.size() != v.size()) {
    throw DimensionError("Cauchy matrix needs #u = #v, got " + std::to_string(u.size()) + " and " +
                         std::to_string(v.size()));
  }
  ParamSet<T>::make(u, v, c);
}

}  // namespace detail

template <FieldScalar T>
Matrix<T> cauchy_matrix(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
  detail::require_cauchy_generic(u, v, c);
  Matrix<T> out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = g(u[i], v[j], c);
  }
  return out;
}

// det C = g(u, v) Delta(u) Delta'(v)
template <FieldScalar T>
T cauchy_det(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
  detail::require_cauchy_generic(u, v, c);
  return kernel_product(Kernel::g, u, v, c) * vandermonde(u, false, c) * vandermonde(v, true, c);
}

// (C^{-1})_kl = g(u_l, v_k) g(v_k^c, v_k) g(u_l, u_l^c) / (g(u, v_k) g(u_l, v)),
// where x_k^c is the set with x_k removed.
template <FieldScalar T>
Matrix<T> cauchy_inverse(const std::vector<T>& u, const std::vector<T>& v, const T& c) {
  detail::require_cauchy_generic(u, v, c);
  const std::size_t n = u.size();
  Matrix<T> out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<T> v_k = without(v, k);
    const T g_vk = kernel_product(Kernel::g, v[k], v_k, Side::right, c);
    const T g_u_vk = kernel_product(Kernel::g, v[k], u, Side::right, c);
    for (std::size_t l = 0; l < n; ++l) {
      const T g_ul = kernel_product(Kernel::g, u[l], without(u, l), Side::left, c);
      const T g_ul_v = kernel_product(Kernel::g, u[l], v, Side::left, c);
      out(k, l) = g(u[l], v[k], c) * g_vk * g_ul / (g_u_vk * g_ul_v);
    }
  }
  return out;
}

template <FieldScalar T>
Matrix<T> cauchy_matrix(const ParamSet<T>& p) {
  return cauchy_matrix(p.u, p.v, p.c);
}
template <FieldScalar T>
T cauchy_det(const ParamSet<T>& p) {
  return cauchy_det(p.u, p.v, p.c);
}
template <FieldScalar T>
Matrix<T> cauchy_inverse(const ParamSet<T>& p) {
  return cauchy_inverse(p.u, p.v, p.c);
}

}  // namespace sixvertex
