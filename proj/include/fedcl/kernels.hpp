#pragma once

#include <cstddef>
#include <string>

namespace fedcl::kern {

// Dense double-precision kernels behind the tensor ops. Two backends: a
// scalar reference implementation and an AVX2 variant selected at runtime.
//
// Bitwise-equality contract between backends:
//   - Elementwise kernels (add/sub/mul/scale/axpy/relu/relu_grad) round each
//     element independently; scalar and vector lanes perform the identical
//     mul/add sequence (no FMA anywhere, enforced by -ffp-contract=off).
//   - Reductions (dot/sum/sqdist) use a fixed 4-lane tree: lane-strided
//     partial accumulators acc[j] += term(i*4+j), remainder elements folded
//     into lanes 0..r-1 of the final partial block, final fold
//     (acc0+acc1)+(acc2+acc3). The scalar backend implements the same tree.
//   - matmul_nn / matmul_tn keep the reduction over k strictly sequential
//     (vectorization runs across independent output columns); matmul_nt
//     reduces with the fixed-tree dot.
// The equivalence tests assert bitwise-identical outputs, so backend
// selection never changes any result.

enum class Isa { scalar, avx2 };

struct Backend {
  const char* name;

  // dst[i] = a[i] op b[i]; dst may alias a or b
  void (*add)(double* dst, const double* a, const double* b, std::size_t n);
  void (*sub)(double* dst, const double* a, const double* b, std::size_t n);
  void (*mul)(double* dst, const double* a, const double* b, std::size_t n);
  // dst[i] = a[i] * s
  void (*scale)(double* dst, const double* a, double s, std::size_t n);
  // dst[i] += s * x[i]
  void (*axpy)(double* dst, double s, const double* x, std::size_t n);
  // dst[i] = x[i] > 0 ? x[i] : 0
  void (*relu)(double* dst, const double* x, std::size_t n);
  // dst[i] += x[i] > 0 ? g[i] : 0
  void (*relu_grad)(double* dst, const double* x, const double* g, std::size_t n);

  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  // sum of (x[i] - y[i])^2, fixed-tree order
  double (*sqdist)(const double* x, const double* y, std::size_t n);
  // n >= 1
  double (*max)(const double* x, std::size_t n);

  // C(m x n) = A(m x k) * B(k x n)
  void (*matmul_nn)(double* C, const double* A, const double* B,
                    std::size_t m, std::size_t k, std::size_t n);
  // C(m x n) = A(m x k) * B(n x k)^T
  void (*matmul_nt)(double* C, const double* A, const double* B,
                    std::size_t m, std::size_t k, std::size_t n);
  // C(k x n) = A(m x k)^T * B(m x n)
  void (*matmul_tn)(double* C, const double* A, const double* B,
                    std::size_t m, std::size_t k, std::size_t n);
};

const Backend& scalar_backend();
#if FEDCL_HAVE_AVX2_TU
const Backend& avx2_backend();
#endif

// Active backend. Chosen once at first use: AVX2 when the CPU supports it
// and the FEDCL_SIMD env var does not say otherwise ("scalar"/"avx2"/"auto").
const Backend& backend();

// Force a backend (tests). Throws std::invalid_argument if unsupported here.
void set_backend(Isa isa);
Isa active_isa();
bool cpu_has_avx2();

}  // namespace fedcl::kern
