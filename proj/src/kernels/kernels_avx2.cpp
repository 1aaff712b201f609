#include "backends.hpp"

#if defined(GRIDWALK_HAVE_AVX2)

#include <immintrin.h>

namespace gridwalk::kernels::detail {

// Four rows per iteration; slot values are contiguous in slot-major storage,
// the x accesses go through a 32-bit index gather. mul+add (no FMA) keeps the
// result bit-identical to the scalar kernel.
void spmv_avx2(const EllMatrix& m, const double* x, double* y) {
    const std::int32_t n = m.rows;
    const std::int32_t n4 = n & ~std::int32_t(3);
    for (std::int32_t i = 0; i < n4; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_setzero_pd());
    }
    for (std::int32_t i = n4; i < n; ++i) {
        y[i] = 0.0;
    }
    const std::int32_t* c = m.cols.data();
    const double* v = m.vals.data();
    for (std::int32_t j = 0; j < m.width; ++j, c += n, v += n) {
        std::int32_t i = 0;
        for (; i < n4; i += 4) {
            const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(c + i));
            const __m256d gathered = _mm256_i32gather_pd(x, idx, 8);
            const __m256d vals = _mm256_loadu_pd(v + i);
            __m256d acc = _mm256_loadu_pd(y + i);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(vals, gathered));
            _mm256_storeu_pd(y + i, acc);
        }
        for (; i < n; ++i) {
            y[i] += v[i] * x[c[i]];
        }
    }
}

void complement_product_avx2(std::size_t n, const double* p, double* q) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d pp = _mm256_loadu_pd(p + i);
        __m256d qq = _mm256_loadu_pd(q + i);
        qq = _mm256_mul_pd(qq, _mm256_sub_pd(one, pp));
        _mm256_storeu_pd(q + i, qq);
    }
    for (; i < n; ++i) {
        q[i] *= (1.0 - p[i]);
    }
}

} // namespace gridwalk::kernels::detail

#endif // GRIDWALK_HAVE_AVX2
