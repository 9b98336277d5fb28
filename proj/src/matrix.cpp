#include "meannorm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "meannorm/kahan.hpp"

namespace meannorm {

DenseMatrix DenseSymMatrix::to_dense() const {
  DenseMatrix full(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = data_[index(i, j)];
      full(i, j) = v;
      full(j, i) = v;
    }
  return full;
}

DenseSymMatrix DenseSymMatrix::from_dense(const DenseMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("from_dense: matrix not square");
  const std::size_t n = a.rows();
  double scale = 1.0;
  for (double v : a.data()) scale = std::max(scale, std::abs(v));
  DenseSymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double lower = a(i, j);
      const double upper = a(j, i);
      if (std::abs(lower - upper) > tol * scale)
        throw std::invalid_argument("from_dense: asymmetry beyond tolerance");
      s.set(i, j, 0.5 * (lower + upper));
    }
  return s;
}

std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("matvec: size mismatch");
  std::vector<double> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> matvec(const DenseSymMatrix& a, const std::vector<double>& x) {
  if (x.size() != a.size()) throw std::invalid_argument("matvec: size mismatch");
  const std::size_t n = a.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> matvec_transposed(const DenseMatrix& a, const std::vector<double>& x) {
  if (x.size() != a.rows()) throw std::invalid_argument("matvec_transposed: size mismatch");
  std::vector<double> y(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double xi = x[i];
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += a(i, j) * xi;
  }
  return y;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

DenseSymMatrix gram(const DenseMatrix& b) {
  const std::size_t n = b.cols();
  DenseSymMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      KahanSum acc;
      for (std::size_t k = 0; k < b.rows(); ++k) acc += b(k, i) * b(k, j);
      g.set(i, j, acc);
    }
  return g;
}

DenseSymMatrix gram_transposed(const DenseMatrix& b) {
  const std::size_t n = b.rows();
  DenseSymMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      KahanSum acc;
      for (std::size_t k = 0; k < b.cols(); ++k) acc += b(i, k) * b(j, k);
      g.set(i, j, acc);
    }
  return g;
}

DenseMatrix hadamard_product(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("hadamard_product: shape mismatch");
  DenseMatrix z(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) = x(i, j) * y(i, j);
  return z;
}

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

double max_abs_diff(const DenseSymMatrix& a, const DenseSymMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace meannorm
