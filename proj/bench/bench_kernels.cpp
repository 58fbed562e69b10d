// Serial reference kernels against their OpenMP counterparts on a synthetic DAG.
// Arguments: number of disciplines k (columns of the propagated block).

#include <benchmark/benchmark.h>

#include <memory>

#include "citeflow/dependence.hpp"
#include "citeflow/kernels.hpp"
#include "citeflow/refkit.hpp"

using namespace citeflow;

namespace {

struct Fixture {
    refkit::SynthGraph synth;
    std::unique_ptr<CitationOperator> op;
};

const Fixture& fixture() {
    static const Fixture f = [] {
        Fixture x{refkit::random_dag({200000, 1000000, 30, 7, 120}), nullptr};
        x.op = std::make_unique<CitationOperator>(x.synth.graph);
        return x;
    }();
    return f;
}

DenseMatrix block(std::size_t n, std::size_t k) {
    DenseMatrix m(n, k);
    for (std::size_t i = 0; i < n; ++i) m(i, i % k) = 1.0;
    return m;
}

template <void (*Propagate)(const CitationOperator&, const DenseMatrix&, DenseMatrix&)>
void bm_propagate(benchmark::State& state) {
    const auto& f = fixture();
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto in = block(f.op->size(), k);
    DenseMatrix out(f.op->size(), k);
    for (auto _ : state) {
        Propagate(*f.op, in, out);
        benchmark::DoNotOptimize(out.values().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(f.synth.graph.edge_count() * k));
}

template <DenseMatrix (*Project)(const SparseRowMatrix&, const DenseMatrix&)>
void bm_project(benchmark::State& state) {
    const auto& f = fixture();
    const auto x = block(f.op->size(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Project(f.synth.membership.weights, x));
}

void bm_compute_flows(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(compute_flows(*f.op, f.synth.membership));
}

} // namespace

BENCHMARK(bm_propagate<kernels::serial::propagate>)->Name("propagate/serial")->Arg(8)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_propagate<kernels::omp::propagate>)->Name("propagate/omp")->Arg(8)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_project<kernels::serial::project>)->Name("project/serial")->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_project<kernels::omp::project>)->Name("project/omp")->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_compute_flows)->Name("compute_flows")->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
