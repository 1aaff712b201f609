#include "backends.hpp"

#if defined(GRIDWALK_HAVE_NEON)

#include <arm_neon.h>

namespace gridwalk::kernels::detail {

// Two rows per iteration. NEON has no gather; the two x loads are scalar.
// mul+add (no fused unless contracted, which the build disables) keeps the
// result bit-identical to the scalar kernel.
void spmv_neon(const EllMatrix& m, const double* x, double* y) {
    const std::int32_t n = m.rows;
    const std::int32_t n2 = n & ~std::int32_t(1);
    for (std::int32_t i = 0; i < n; ++i) {
        y[i] = 0.0;
    }
    const std::int32_t* c = m.cols.data();
    const double* v = m.vals.data();
    for (std::int32_t j = 0; j < m.width; ++j, c += n, v += n) {
        std::int32_t i = 0;
        for (; i < n2; i += 2) {
            const float64x2_t gathered = {x[c[i]], x[c[i + 1]]};
            const float64x2_t vals = vld1q_f64(v + i);
            float64x2_t acc = vld1q_f64(y + i);
            acc = vaddq_f64(acc, vmulq_f64(vals, gathered));
            vst1q_f64(y + i, acc);
        }
        for (; i < n; ++i) {
            y[i] += v[i] * x[c[i]];
        }
    }
}

void complement_product_neon(std::size_t n, const double* p, double* q) {
    const float64x2_t one = vdupq_n_f64(1.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t pp = vld1q_f64(p + i);
        float64x2_t qq = vld1q_f64(q + i);
        qq = vmulq_f64(qq, vsubq_f64(one, pp));
        vst1q_f64(q + i, qq);
    }
    for (; i < n; ++i) {
        q[i] *= (1.0 - p[i]);
    }
}

} // namespace gridwalk::kernels::detail

#endif // GRIDWALK_HAVE_NEON
