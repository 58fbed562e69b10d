#pragma once

// Inner loops of the dependence iteration. Each kernel has a serial reference
// version and an OpenMP version. The OpenMP versions give bitwise identical
// results for every thread count: propagation parallelizes over independent
// output rows, and reductions use a fixed block partition that does not depend
// on the number of workers.

#include <cstddef>

#include "citeflow/matrix.hpp"
#include "citeflow/operator.hpp"

namespace citeflow::kernels {

// Rows per block in the blocked reduction of project().
inline constexpr std::size_t kReductionBlock = 4096;

namespace serial {

// out = DA * in
void propagate(const CitationOperator& op, const DenseMatrix& in, DenseMatrix& out);
// sum += increment
void accumulate(DenseMatrix& sum, const DenseMatrix& increment);
// Returns Q^T * x (k x cols).
DenseMatrix project(const SparseRowMatrix& q, const DenseMatrix& x);
bool all_zero(const DenseMatrix& m);

} // namespace serial

namespace omp {

void propagate(const CitationOperator& op, const DenseMatrix& in, DenseMatrix& out);
void accumulate(DenseMatrix& sum, const DenseMatrix& increment);
DenseMatrix project(const SparseRowMatrix& q, const DenseMatrix& x);
bool all_zero(const DenseMatrix& m);

} // namespace omp

int max_threads();
void set_threads(int threads);

} // namespace citeflow::kernels
