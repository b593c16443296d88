#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace vfrac {

// Opaque pure evaluation rules. All maps handed to the library must be
// re-entrant and side-effect free; operators report DomainError when a map
// returns a non-finite value at a probed point.
using ScalarMap = std::function<double(double)>;
using Field2D = std::function<double(double, double)>;

using Point = std::vector<double>;

struct VectorMap {
  int input_dim = 0;
  int output_dim = 0;
  std::function<std::vector<double>(const std::vector<double>&)> eval;
};

// Small dense row-major matrix; just enough linear algebra for Jacobians.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0.0) {}

  double& at(int i, int j) { return a[size_t(i) * cols + j]; }
  double at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
  }
};

inline Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  Matrix out(lhs.rows, rhs.cols);
  for (int i = 0; i < lhs.rows; ++i) {
    for (int k = 0; k < lhs.cols; ++k) {
      double v = lhs.at(i, k);
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  }
  return out;
}

inline Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
  Matrix out = lhs;
  for (size_t i = 0; i < out.a.size(); ++i) out.a[i] -= rhs.a[i];
  return out;
}

inline std::vector<double> operator*(const Matrix& m,
                                     const std::vector<double>& v) {
  std::vector<double> out(m.rows, 0.0);
  for (int i = 0; i < m.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

inline double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace vfrac
