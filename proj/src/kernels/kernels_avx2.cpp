// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma on x86-64 and degrades to a stub elsewhere; the dispatcher
// only installs the table when the running CPU agrees.

#include <cstddef>
#include <cstdint>

#include "absa/kernels/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

namespace absa::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    acc2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), acc2);
    acc3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), acc3);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  acc0 = _mm256_add_pd(_mm256_add_pd(acc0, acc1), _mm256_add_pd(acc2, acc3));
  double s = hsum(acc0);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void relu_avx2(double* x, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
  }
  for (; i < n; ++i) x[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void conv1d_forward_avx2(const double* input, std::size_t rows, std::size_t dim,
                         const double* filters, const double* bias,
                         std::size_t n_filters, std::size_t kernel, double* out) {
  const std::size_t out_rows = rows - kernel + 1;
  const std::size_t window = kernel * dim;
  for (std::size_t f = 0; f < n_filters; ++f) {
    const double* w = filters + f * window;
    const double b = bias[f];
    for (std::size_t t = 0; t < out_rows; ++t) {
      out[t * n_filters + f] = b + dot_avx2(w, input + t * dim, window);
    }
  }
}

void max_pool_columns_avx2(const double* m, std::size_t rows, std::size_t cols,
                           double* out_max, std::uint32_t* out_argmax) {
  std::size_t c = 0;
  for (; c + 4 <= cols; c += 4) {
    __m256d best = _mm256_loadu_pd(m + c);
    __m256i best_idx = _mm256_setzero_si256();
    for (std::size_t r = 1; r < rows; ++r) {
      const __m256d v = _mm256_loadu_pd(m + r * cols + c);
      // Strict > keeps the smallest row index on ties.
      const __m256d gt = _mm256_cmp_pd(v, best, _CMP_GT_OQ);
      best = _mm256_blendv_pd(best, v, gt);
      const __m256i ri = _mm256_set1_epi64x(static_cast<long long>(r));
      best_idx = _mm256_blendv_epi8(best_idx, ri, _mm256_castpd_si256(gt));
    }
    _mm256_storeu_pd(out_max + c, best);
    alignas(32) std::int64_t idx[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(idx), best_idx);
    for (int k = 0; k < 4; ++k) {
      out_argmax[c + k] = static_cast<std::uint32_t>(idx[k]);
    }
  }
  for (; c < cols; ++c) {
    double best = m[c];
    std::uint32_t best_idx = 0;
    for (std::size_t r = 1; r < rows; ++r) {
      const double v = m[r * cols + c];
      if (v > best) {
        best = v;
        best_idx = static_cast<std::uint32_t>(r);
      }
    }
    out_max[c] = best;
    out_argmax[c] = best_idx;
  }
}

void adam_update_avx2(double* p, double* m, double* v, const double* g,
                      std::size_t n, double lr, double beta1, double beta2,
                      double eps, double c1, double c2) {
  const __m256d vb1 = _mm256_set1_pd(beta1);
  const __m256d vb2 = _mm256_set1_pd(beta2);
  const __m256d vomb1 = _mm256_set1_pd(1.0 - beta1);
  const __m256d vomb2 = _mm256_set1_pd(1.0 - beta2);
  const __m256d vc1 = _mm256_set1_pd(c1);
  const __m256d vc2 = _mm256_set1_pd(c2);
  const __m256d vlr = _mm256_set1_pd(lr);
  const __m256d veps = _mm256_set1_pd(eps);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vg = _mm256_loadu_pd(g + i);
    __m256d vm = _mm256_loadu_pd(m + i);
    __m256d vv = _mm256_loadu_pd(v + i);
    vm = _mm256_fmadd_pd(vb1, vm, _mm256_mul_pd(vomb1, vg));
    vv = _mm256_fmadd_pd(vb2, vv, _mm256_mul_pd(vomb2, _mm256_mul_pd(vg, vg)));
    _mm256_storeu_pd(m + i, vm);
    _mm256_storeu_pd(v + i, vv);
    const __m256d m_hat = _mm256_mul_pd(vm, vc1);
    const __m256d v_hat = _mm256_mul_pd(vv, vc2);
    const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(v_hat), veps);
    const __m256d step = _mm256_div_pd(_mm256_mul_pd(vlr, m_hat), denom);
    _mm256_storeu_pd(p + i, _mm256_sub_pd(_mm256_loadu_pd(p + i), step));
  }
  for (; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    p[i] -= lr * (m[i] * c1) / (std::sqrt(v[i] * c2) + eps);
  }
}

void sgd_update_avx2(double* p, const double* g, std::size_t n, double lr) {
  const __m256d vlr = _mm256_set1_pd(lr);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vp = _mm256_loadu_pd(p + i);
    vp = _mm256_fnmadd_pd(vlr, _mm256_loadu_pd(g + i), vp);
    _mm256_storeu_pd(p + i, vp);
  }
  for (; i < n; ++i) p[i] -= lr * g[i];
}

const Ops kAvx2Table{
    dot_avx2,        axpy_avx2,        relu_avx2,
    conv1d_forward_avx2, max_pool_columns_avx2,
    adam_update_avx2, sgd_update_avx2,
};

}  // namespace

const Ops* avx2_ops_compiled() { return &kAvx2Table; }

}  // namespace absa::kernels

#else  // no AVX2 at build time

namespace absa::kernels {
const Ops* avx2_ops_compiled() { return nullptr; }
}  // namespace absa::kernels

#endif
