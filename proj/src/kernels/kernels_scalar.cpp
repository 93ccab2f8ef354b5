#include <cmath>
#include <cstddef>
#include <cstdint>

#include "absa/kernels/kernels.hpp"

namespace absa::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void relu_scalar(double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void conv1d_forward_scalar(const double* input, std::size_t rows, std::size_t dim,
                           const double* filters, const double* bias,
                           std::size_t n_filters, std::size_t kernel, double* out) {
  const std::size_t out_rows = rows - kernel + 1;
  const std::size_t window = kernel * dim;
  // Filter-major loop keeps one filter row hot while streaming the input.
  for (std::size_t f = 0; f < n_filters; ++f) {
    const double* w = filters + f * window;
    const double b = bias[f];
    for (std::size_t t = 0; t < out_rows; ++t) {
      out[t * n_filters + f] = b + dot_scalar(w, input + t * dim, window);
    }
  }
}

void max_pool_columns_scalar(const double* m, std::size_t rows, std::size_t cols,
                             double* out_max, std::uint32_t* out_argmax) {
  for (std::size_t c = 0; c < cols; ++c) {
    out_max[c] = m[c];
    out_argmax[c] = 0;
  }
  for (std::size_t r = 1; r < rows; ++r) {
    const double* row = m + r * cols;
    for (std::size_t c = 0; c < cols; ++c) {
      // Strict > keeps the smallest row index on ties.
      if (row[c] > out_max[c]) {
        out_max[c] = row[c];
        out_argmax[c] = static_cast<std::uint32_t>(r);
      }
    }
  }
}

void adam_update_scalar(double* p, double* m, double* v, const double* g,
                        std::size_t n, double lr, double beta1, double beta2,
                        double eps, double c1, double c2) {
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    const double m_hat = m[i] * c1;
    const double v_hat = v[i] * c2;
    p[i] -= lr * m_hat / (std::sqrt(v_hat) + eps);
  }
}

void sgd_update_scalar(double* p, const double* g, std::size_t n, double lr) {
  for (std::size_t i = 0; i < n; ++i) p[i] -= lr * g[i];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{
      dot_scalar,        axpy_scalar,        relu_scalar,
      conv1d_forward_scalar, max_pool_columns_scalar,
      adam_update_scalar, sgd_update_scalar,
  };
  return table;
}

}  // namespace absa::kernels
