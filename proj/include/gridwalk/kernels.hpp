#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace gridwalk::kernels {

/// Padded ELLPACK storage in slot-major order: entry j of row i lives at
/// position j*rows + i. Padding entries carry val 0 and col = own row, so a
/// gather through them is always in bounds and contributes exactly +0.0.
///
/// The chain code stores the transpose of the transition matrix here, which
/// turns the row-vector product x -> x*P into a per-row gather.
struct EllMatrix {
    std::int32_t rows = 0;
    std::int32_t width = 0;
    std::vector<std::int32_t> cols;
    std::vector<double> vals;
};

enum class Backend { Scalar, Avx2, Neon };

bool backend_available(Backend b) noexcept;
std::string_view backend_name(Backend b) noexcept;

/// Backend in use by spmv/complement_product. Picked once at first use:
/// GRIDWALK_SIMD=scalar|avx2|neon|auto overrides the CPU probe.
Backend active_backend();

/// Forces a backend (tests, debugging). Throws std::invalid_argument if the
/// backend is not available on this machine. Not safe to call concurrently
/// with running kernels.
void set_backend(Backend b);

/// y = gather-product of m against x: y[i] = sum_j vals[j][i] * x[cols[j][i]],
/// slots accumulated in ascending j. All backends produce bit-identical
/// results (plain mul+add, no FMA). x and y must not alias; y is overwritten.
void spmv(const EllMatrix& m, const double* x, double* y);

/// q[i] *= (1 - p[i]) for i in [0, n). Bit-identical across backends.
void complement_product(std::size_t n, const double* p, double* q);

} // namespace gridwalk::kernels
