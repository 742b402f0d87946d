#include "fedcl/kernels.hpp"

#include <algorithm>

// Reference backend. The reduction loops below define the numerical contract
// (fixed 4-lane tree) that the SIMD backends replicate bit-for-bit.

namespace fedcl::kern {
namespace {

void s_add(double* dst, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

void s_sub(double* dst, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

void s_mul(double* dst, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void s_scale(double* dst, const double* a, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * s;
}

void s_axpy(double* dst, double s, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += s * x[i];
}

void s_relu(double* dst, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void s_relu_grad(double* dst, const double* x, const double* g, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += x[i] > 0.0 ? g[i] : 0.0;
}

double s_dot(const double* x, const double* y, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc[0] += x[i] * y[i];
    acc[1] += x[i + 1] * y[i + 1];
    acc[2] += x[i + 2] * y[i + 2];
    acc[3] += x[i + 3] * y[i + 3];
  }
  for (; i < n; ++i) acc[i & 3] += x[i] * y[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double s_sum(const double* x, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc[0] += x[i];
    acc[1] += x[i + 1];
    acc[2] += x[i + 2];
    acc[3] += x[i + 3];
  }
  for (; i < n; ++i) acc[i & 3] += x[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double s_sqdist(const double* x, const double* y, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const double d0 = x[i] - y[i];
    const double d1 = x[i + 1] - y[i + 1];
    const double d2 = x[i + 2] - y[i + 2];
    const double d3 = x[i + 3] - y[i + 3];
    acc[0] += d0 * d0;
    acc[1] += d1 * d1;
    acc[2] += d2 * d2;
    acc[3] += d3 * d3;
  }
  for (; i < n; ++i) {
    const double d = x[i] - y[i];
    acc[i & 3] += d * d;
  }
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

double s_max(const double* x, std::size_t n) {
  double m = x[0];
  for (std::size_t i = 1; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

void s_matmul_nn(double* C, const double* A, const double* B, std::size_t m,
                 std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = C + i * n;
    std::fill(crow, crow + n, 0.0);
    const double* arow = A + i * k;
    for (std::size_t p = 0; p < k; ++p) s_axpy(crow, arow[p], B + p * n, n);
  }
}

void s_matmul_nt(double* C, const double* A, const double* B, std::size_t m,
                 std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = A + i * k;
    for (std::size_t j = 0; j < n; ++j) C[i * n + j] = s_dot(arow, B + j * k, k);
  }
}

void s_matmul_tn(double* C, const double* A, const double* B, std::size_t m,
                 std::size_t k, std::size_t n) {
  std::fill(C, C + k * n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = A + i * k;
    const double* brow = B + i * n;
    for (std::size_t p = 0; p < k; ++p) s_axpy(C + p * n, arow[p], brow, n);
  }
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{
      "scalar",   s_add,    s_sub,    s_mul,       s_scale,
      s_axpy,     s_relu,   s_relu_grad, s_dot,    s_sum,
      s_sqdist,   s_max,    s_matmul_nn, s_matmul_nt, s_matmul_tn,
  };
  return b;
}

}  // namespace fedcl::kern
