// Serial reference vs OpenMP kernels on generator/discriminator layer shapes.
// Thread count follows SDECONV_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sdeconv/kernels.hpp"

namespace k = sdeconv::kernels;

namespace {

struct Shape {
  std::size_t n, c, h, kout;
};

// batch 32, 4x4 stride-2 pad-1 convs as used by the default discriminator
constexpr Shape kShapes[] = {{32, 11, 32, 32}, {32, 32, 16, 64}, {32, 64, 8, 128}, {32, 128, 4, 256}};

struct Buffers {
  k::ConvGeometry g;
  std::vector<float> x, w, y;

  explicit Buffers(const Shape& s)
      : g(k::ConvGeometry::forward(s.n, s.c, s.h, s.h, s.kout, 4, 4, 2, 1)),
        x(g.input_size()),
        w(g.filter_size()),
        y(g.output_size()) {
    std::mt19937 rng(1);
    std::normal_distribution<float> d;
    for (auto& v : x) v = d(rng);
    for (auto& v : w) v = d(rng);
    for (auto& v : y) v = d(rng);
  }

  double macs() const {
    return static_cast<double>(g.output_size()) * g.in_channels * g.kernel_h * g.kernel_w;
  }
};

template <bool Reference>
void BM_ConvForward(benchmark::State& state) {
  Buffers b(kShapes[state.range(0)]);
  std::vector<float> out(b.g.output_size());
  for (auto _ : state) {
    if constexpr (Reference) k::reference::conv2d_forward<float>(b.x, b.w, out, b.g);
    else k::conv2d_forward<float>(b.x, b.w, out, b.g);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["MAC/s"] = benchmark::Counter(b.macs(), benchmark::Counter::kIsIterationInvariantRate);
}

template <bool Reference>
void BM_ConvBackwardInput(benchmark::State& state) {
  Buffers b(kShapes[state.range(0)]);
  std::vector<float> out(b.g.input_size());
  for (auto _ : state) {
    if constexpr (Reference) k::reference::conv2d_backward_input<float>(b.y, b.w, out, b.g);
    else k::conv2d_backward_input<float>(b.y, b.w, out, b.g);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["MAC/s"] = benchmark::Counter(b.macs(), benchmark::Counter::kIsIterationInvariantRate);
}

template <bool Reference>
void BM_ConvBackwardFilter(benchmark::State& state) {
  Buffers b(kShapes[state.range(0)]);
  std::vector<float> out(b.g.filter_size());
  for (auto _ : state) {
    if constexpr (Reference) k::reference::conv2d_backward_filter<float>(b.x, b.y, out, b.g);
    else k::conv2d_backward_filter<float>(b.x, b.y, out, b.g);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["MAC/s"] = benchmark::Counter(b.macs(), benchmark::Counter::kIsIterationInvariantRate);
}

template <bool Reference>
void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<float> a(n * n, 0.5f), b(n * n, 0.25f), c(n * n);
  for (auto _ : state) {
    if constexpr (Reference) k::reference::matmul<float>(a, b, c, n, n, n, false, false);
    else k::matmul<float>(a, b, c, n, n, n, false, false);
    benchmark::DoNotOptimize(c.data());
  }
  state.counters["MAC/s"] = benchmark::Counter(static_cast<double>(n * n * n),
                                               benchmark::Counter::kIsIterationInvariantRate);
}

}  // namespace

BENCHMARK(BM_ConvForward<true>)->Name("conv_forward/reference")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvForward<false>)->Name("conv_forward/openmp")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvBackwardInput<true>)->Name("conv_backward_input/reference")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvBackwardInput<false>)->Name("conv_backward_input/openmp")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvBackwardFilter<true>)->Name("conv_backward_filter/reference")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvBackwardFilter<false>)->Name("conv_backward_filter/openmp")->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Matmul<true>)->Name("matmul/reference")->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Matmul<false>)->Name("matmul/openmp")->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  k::configure_threads_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
