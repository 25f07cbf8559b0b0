#include "crossbi/kernels.hpp"

#include <exception>

#ifdef CROSSBI_HAVE_OPENMP
#include <omp.h>
#endif

namespace crossbi::kernels {

namespace {

using Index = long long;

// C[i, :] += sum_k F[i, k] G[k, :], skipping zero entries of F.
void matmul_row(const LinMap &f, const LinMap &g, Vec &out, std::size_t i) {
    const std::size_t n = g.cols();
    for (std::size_t k = 0; k < f.cols(); ++k) {
        const Scalar &a = f(i, k);
        if (a.is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar &b = g(k, j);
            if (!b.is_zero())
                out[i * n + j].add_product(a, b);
        }
    }
}

void kron_row(const LinMap &f, const LinMap &g, Vec &out, std::size_t fr) {
    const std::size_t gr = g.rows(), gc = g.cols(), cols = f.cols() * gc;
    for (std::size_t fc = 0; fc < f.cols(); ++fc) {
        const Scalar &a = f(fr, fc);
        if (a.is_zero())
            continue;
        for (std::size_t r = 0; r < gr; ++r)
            for (std::size_t c = 0; c < gc; ++c)
                if (!g(r, c).is_zero())
                    out[(fr * gr + r) * cols + fc * gc + c] = a * g(r, c);
    }
}

void scatter_column(const Tensor &t, Vec &out, std::size_t cols, std::size_t j) {
    for (const auto &[r, v] : t.terms())
        out[r * cols + j] = v;
}

} // namespace

namespace serial {

void for_each_index(std::size_t n, const IndexFn &body) {
    for (std::size_t i = 0; i < n; ++i)
        body(i);
}

Vec matmul(const LinMap &f, const LinMap &g) {
    Vec out(f.rows() * g.cols(), f.field().zero());
    for (std::size_t i = 0; i < f.rows(); ++i)
        matmul_row(f, g, out, i);
    return out;
}

Vec kron(const LinMap &f, const LinMap &g) {
    Vec out(f.rows() * g.rows() * f.cols() * g.cols(), f.field().zero());
    for (std::size_t i = 0; i < f.rows(); ++i)
        kron_row(f, g, out, i);
    return out;
}

Vec map_columns(const LinMap &g, std::size_t rows, const ColumnFn &fn) {
    Vec out(rows * g.cols(), g.field().zero());
    for (std::size_t j = 0; j < g.cols(); ++j)
        scatter_column(fn(Tensor::column(g, j)), out, g.cols(), j);
    return out;
}

} // namespace serial

namespace parallel {

void for_each_index(std::size_t n, const IndexFn &body) {
    std::exception_ptr failure;
    const Index count = static_cast<Index>(n);
#pragma omp parallel for schedule(dynamic)
    for (Index i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(crossbi_for_each_index)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

Vec matmul(const LinMap &f, const LinMap &g) {
    Vec out(f.rows() * g.cols(), f.field().zero());
    const Index rows = static_cast<Index>(f.rows());
#pragma omp parallel for schedule(dynamic)
    for (Index i = 0; i < rows; ++i)
        matmul_row(f, g, out, static_cast<std::size_t>(i));
    return out;
}

Vec kron(const LinMap &f, const LinMap &g) {
    Vec out(f.rows() * g.rows() * f.cols() * g.cols(), f.field().zero());
    const Index rows = static_cast<Index>(f.rows());
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < rows; ++i)
        kron_row(f, g, out, static_cast<std::size_t>(i));
    return out;
}

// fn must not throw; callers validate shapes before dispatching.
Vec map_columns(const LinMap &g, std::size_t rows, const ColumnFn &fn) {
    Vec out(rows * g.cols(), g.field().zero());
    const Index cols = static_cast<Index>(g.cols());
#pragma omp parallel for schedule(dynamic)
    for (Index j = 0; j < cols; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        scatter_column(fn(Tensor::column(g, jj)), out, g.cols(), jj);
    }
    return out;
}

} // namespace parallel

void for_each_index(std::size_t n, const IndexFn &body) {
#ifdef CROSSBI_HAVE_OPENMP
    parallel::for_each_index(n, body);
#else
    serial::for_each_index(n, body);
#endif
}

bool openmp_enabled() {
#ifdef CROSSBI_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() {
#ifdef CROSSBI_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace crossbi::kernels
