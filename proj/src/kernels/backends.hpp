#pragma once

#include "gridwalk/kernels.hpp"

namespace gridwalk::kernels::detail {

void spmv_scalar(const EllMatrix& m, const double* x, double* y);
void complement_product_scalar(std::size_t n, const double* p, double* q);

#if defined(GRIDWALK_HAVE_AVX2)
void spmv_avx2(const EllMatrix& m, const double* x, double* y);
void complement_product_avx2(std::size_t n, const double* p, double* q);
#endif

#if defined(GRIDWALK_HAVE_NEON)
void spmv_neon(const EllMatrix& m, const double* x, double* y);
void complement_product_neon(std::size_t n, const double* p, double* q);
#endif

} // namespace gridwalk::kernels::detail
