#include <gtest/gtest.h>

#include "independent.hpp"
#include "sixvertex/matrix.hpp"
#include "sixvertex/random.hpp"

using namespace sixvertex;

namespace {

Matrix<Scalar> random_matrix(InstanceGenerator& gen, std::size_t n, bool complex = false) {
  Matrix<Scalar> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gen.scalar(complex);
  }
  return m;
}

std::vector<std::vector<Scalar>> rows_of(const Matrix<Scalar>& m) {
  std::vector<std::vector<Scalar>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j));
  }
  return out;
}

TEST(MatrixBasics, TraceKronPermutation) {
  EXPECT_EQ(trace(Matrix<Scalar>::identity(5)), Scalar(5));
  EXPECT_EQ(kron(Matrix<Scalar>::identity(2), Matrix<Scalar>::identity(2)), Matrix<Scalar>::identity(4));
  const auto P = permutation_matrix<Scalar>();
  EXPECT_EQ(P * P, Matrix<Scalar>::identity(4));
}

TEST(MatrixBasics, KronPutsFirstFactorOnTheSlowIndex) {
  const auto a = Matrix<Scalar>::from_rows({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}});
  const auto k = kron(a, Matrix<Scalar>::identity(2));
  EXPECT_EQ(k(0, 2), Scalar(2));
  EXPECT_EQ(k(1, 3), Scalar(2));
  EXPECT_EQ(k(0, 1), Scalar(0));
  const std::vector<Scalar> x{Scalar(1), Scalar(2)}, y{Scalar(3), Scalar(5)};
  EXPECT_EQ(kron(x, y), (std::vector<Scalar>{Scalar(3), Scalar(5), Scalar(6), Scalar(10)}));
}

TEST(MatrixBasics, DimensionErrors) {
  Matrix<Scalar> a(2, 3), b(2, 3);
  EXPECT_THROW(a * b, DimensionError);
  EXPECT_THROW(det(a), DimensionError);
  EXPECT_THROW(trace(a), DimensionError);
}

TEST(Determinant, Examples) {
  EXPECT_EQ(det(Matrix<Scalar>::from_rows({{Scalar(7)}})), Scalar(7));
  EXPECT_EQ(det(Matrix<Scalar>(0, 0)), Scalar(1));
  EXPECT_EQ(det(Matrix<Scalar>::from_rows({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(6)}})), Scalar(0));
}

TEST(Determinant, AgreesWithPermutationExpansion) {
  InstanceGenerator gen(11);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      auto m = random_matrix(gen, n, rep == 2);
      if (rep == 1 && n > 1) {
        for (std::size_t j = 0; j < n; ++j) m(0, j) = Scalar(0);  // forces pivoting
        m(0, n - 1) = Scalar(3);
      }
      EXPECT_EQ(det(m), oracle::leibniz_det(rows_of(m))) << "n=" << n;
    }
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(Matrix<Scalar>::identity(3)), Matrix<Scalar>::identity(3));
  const auto d = Matrix<Scalar>::from_rows({{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(4)}});
  const auto di = Matrix<Scalar>::from_rows({{Scalar(Rational(1, 2)), Scalar(0)}, {Scalar(0), Scalar(Rational(1, 4))}});
  EXPECT_EQ(inverse(d), di);
  EXPECT_THROW(inverse(Matrix<Scalar>::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}})), SingularityError);
}

TEST(Inverse, IsAnInvolution) {
  InstanceGenerator gen(5);
  for (int rep = 0; rep < 10; ++rep) {
    const auto m = random_matrix(gen, 3, rep % 2 == 1);
    if (det(m).is_zero()) continue;
    EXPECT_EQ(inverse(inverse(m)), m);
    EXPECT_EQ(m * inverse(m), Matrix<Scalar>::identity(3));
  }
}

TEST(Rank, ExactAndFloat) {
  const auto m = Matrix<Scalar>::from_rows(
      {{Scalar(1), Scalar(2), Scalar(3)}, {Scalar(2), Scalar(4), Scalar(6)}, {Scalar(0), Scalar(1), Scalar(1)}});
  EXPECT_EQ(rank(m), 2U);
  Matrix<Complex> mf(2, 2);
  mf(0, 0) = 1.0;
  mf(1, 1) = 1e-15;
  EXPECT_EQ(rank(mf, 1e-12), 1U);
}

TEST(Cauchy, SingleEntry) {
  const auto p = ParamSet<Scalar>::make({Scalar(3)}, {Scalar(1)}, Scalar(2));
  EXPECT_EQ(cauchy_matrix(p)(0, 0), g(Scalar(3), Scalar(1), Scalar(2)));
  EXPECT_EQ(cauchy_det(p), g(Scalar(3), Scalar(1), Scalar(2)));
  EXPECT_EQ(cauchy_inverse(p)(0, 0), Scalar(1) / g(Scalar(3), Scalar(1), Scalar(2)));
}

TEST(Cauchy, ClosedFormDeterminantSmallExample) {
  const auto p = ParamSet<Scalar>::make({Scalar(2), Scalar(3)}, {Scalar(0), Scalar(1)}, Scalar(1));
  EXPECT_EQ(cauchy_det(p), det(cauchy_matrix(p)));
  EXPECT_EQ(cauchy_det(p), oracle::leibniz_det(rows_of(cauchy_matrix(p))));
}

TEST(Cauchy, ClosedFormsOnRandomInput) {
  InstanceGenerator gen(21);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      const auto p = gen.params(n, n, rep % 2 == 1);
      EXPECT_EQ(cauchy_det(p), det(cauchy_matrix(p)));
      EXPECT_EQ(cauchy_inverse(p) * cauchy_matrix(p), Matrix<Scalar>::identity(n));
    }
  }
}

TEST(FloatMode, DeterminantMatchesExact) {
  InstanceGenerator gen(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto m = random_matrix(gen, n, true);
    Matrix<Complex> mf(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mf(i, j) = m(i, j).to_complex();
    }
    const Complex exact = det(m).to_complex();
    EXPECT_LE(std::abs(det(mf) - exact), 1e-9 * std::max(1.0, std::abs(exact)));
  }
}

}  // namespace
