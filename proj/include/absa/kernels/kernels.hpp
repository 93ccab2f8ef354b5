#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace absa::kernels {

// Hot numeric inner loops, dispatched at startup to the widest instruction
// set the CPU supports. Every entry has a scalar reference implementation;
// SIMD variants are equivalence-tested against it. Reduction order inside
// each kernel is fixed, so results are reproducible on a given machine.
struct Ops {
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);

  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  // x[i] = max(0, x[i])
  void (*relu)(double* x, std::size_t n);

  // Valid 1-D convolution over a row-major (rows x dim) input.
  // filters: (n_filters x kernel*dim) row-major, bias: n_filters.
  // out: ((rows - kernel + 1) x n_filters) row-major,
  //   out[t][f] = bias[f] + <filters[f], input rows t..t+kernel-1>.
  void (*conv1d_forward)(const double* input, std::size_t rows, std::size_t dim,
                         const double* filters, const double* bias,
                         std::size_t n_filters, std::size_t kernel, double* out);

  // Per-column max over a row-major (rows x cols) matrix, plus the smallest
  // row index attaining it.
  void (*max_pool_columns)(const double* m, std::size_t rows, std::size_t cols,
                           double* out_max, std::uint32_t* out_argmax);

  // In-place Adam step. c1 = 1/(1-beta1^t), c2 = 1/(1-beta2^t).
  void (*adam_update)(double* p, double* m, double* v, const double* g,
                      std::size_t n, double lr, double beta1, double beta2,
                      double eps, double c1, double c2);

  // p[i] -= lr * g[i]
  void (*sgd_update)(double* p, const double* g, std::size_t n, double lr);
};

enum class Backend { kScalar, kAvx2 };

const Ops& ops();
Backend active_backend();
std::string_view backend_name(Backend b);

// True when the running CPU supports the AVX2+FMA path.
bool avx2_supported();

// Forces a backend (tests, or the ABSA_KERNELS=scalar|avx2 env override).
// Throws ConfigError if the backend is unavailable on this CPU.
void select_backend(Backend b);

// Reference and SIMD tables, exposed for equivalence testing.
const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when unsupported at build or run time

}  // namespace absa::kernels
