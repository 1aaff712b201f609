#include "gridwalk/kernels.hpp"

#include "backends.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gridwalk::kernels {

namespace detail {

void spmv_scalar(const EllMatrix& m, const double* x, double* y) {
    const std::int32_t n = m.rows;
    for (std::int32_t i = 0; i < n; ++i) {
        y[i] = 0.0;
    }
    const std::int32_t* c = m.cols.data();
    const double* v = m.vals.data();
    for (std::int32_t j = 0; j < m.width; ++j, c += n, v += n) {
        for (std::int32_t i = 0; i < n; ++i) {
            y[i] += v[i] * x[c[i]];
        }
    }
}

void complement_product_scalar(std::size_t n, const double* p, double* q) {
    for (std::size_t i = 0; i < n; ++i) {
        q[i] *= (1.0 - p[i]);
    }
}

} // namespace detail

namespace {

struct KernelTable {
    void (*spmv)(const EllMatrix&, const double*, double*);
    void (*complement_product)(std::size_t, const double*, double*);
};

KernelTable table_for(Backend b) {
    switch (b) {
#if defined(GRIDWALK_HAVE_AVX2)
        case Backend::Avx2:
            return {detail::spmv_avx2, detail::complement_product_avx2};
#endif
#if defined(GRIDWALK_HAVE_NEON)
        case Backend::Neon:
            return {detail::spmv_neon, detail::complement_product_neon};
#endif
        default:
            return {detail::spmv_scalar, detail::complement_product_scalar};
    }
}

Backend parse_backend(const std::string& name) {
    if (name == "scalar") return Backend::Scalar;
    if (name == "avx2") return Backend::Avx2;
    if (name == "neon") return Backend::Neon;
    throw std::invalid_argument("GRIDWALK_SIMD: unknown backend '" + name +
                                "' (expected scalar, avx2, neon or auto)");
}

Backend detect_backend() {
    if (const char* env = std::getenv("GRIDWALK_SIMD")) {
        const std::string name(env);
        if (!name.empty() && name != "auto") {
            const Backend b = parse_backend(name);
            if (!backend_available(b)) {
                throw std::invalid_argument("GRIDWALK_SIMD: backend '" + name +
                                            "' is not available on this machine");
            }
            return b;
        }
    }
#if defined(GRIDWALK_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) {
        return Backend::Avx2;
    }
#elif defined(GRIDWALK_HAVE_NEON)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

struct Dispatch {
    Backend backend;
    KernelTable table;
    Dispatch() : backend(detect_backend()), table(table_for(backend)) {}
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

} // namespace

bool backend_available(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(GRIDWALK_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::Neon:
#if defined(GRIDWALK_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::string_view backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "unknown";
}

Backend active_backend() {
    return dispatch().backend;
}

void set_backend(Backend b) {
    if (!backend_available(b)) {
        throw std::invalid_argument("kernel backend '" + std::string(backend_name(b)) +
                                    "' is not available on this machine");
    }
    dispatch().backend = b;
    dispatch().table = table_for(b);
}

void spmv(const EllMatrix& m, const double* x, double* y) {
    dispatch().table.spmv(m, x, y);
}

void complement_product(std::size_t n, const double* p, double* q) {
    dispatch().table.complement_product(n, p, q);
}

} // namespace gridwalk::kernels
