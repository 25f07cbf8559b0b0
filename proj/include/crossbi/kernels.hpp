#pragma once

// Dense exact kernels. Each comes in a serial reference form and an OpenMP
// form; the parallel versions must agree with the serial ones entry for entry
// (tests/test_kernels.cpp). Inputs are validated by the callers in linmap.cpp.

#include <functional>

#include "crossbi/linmap.hpp"
#include "crossbi/tensor.hpp"

namespace crossbi::kernels {

// Maps one column (as a sparse element of the input codomain) to its image.
using ColumnFn = std::function<Tensor(const Tensor &)>;

// Runs body(i) for i in [0, n). The parallel form captures the first
// exception thrown by any iteration and rethrows it after the loop.
using IndexFn = std::function<void(std::size_t)>;

namespace serial {
void for_each_index(std::size_t n, const IndexFn &body);
Vec matmul(const LinMap &f, const LinMap &g);
Vec kron(const LinMap &f, const LinMap &g);
// Output column j is fn(column j of g) scattered into a dense matrix with
// `rows` rows.
Vec map_columns(const LinMap &g, std::size_t rows, const ColumnFn &fn);
} // namespace serial

namespace parallel {
void for_each_index(std::size_t n, const IndexFn &body);
Vec matmul(const LinMap &f, const LinMap &g);
Vec kron(const LinMap &f, const LinMap &g);
Vec map_columns(const LinMap &g, std::size_t rows, const ColumnFn &fn);
} // namespace parallel

// Dispatches to the parallel form when built with OpenMP.
void for_each_index(std::size_t n, const IndexFn &body);

bool openmp_enabled();
int max_threads();

} // namespace crossbi::kernels
