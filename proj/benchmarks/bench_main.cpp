// Desk-scale hot paths: exact spin action, twisted differential assembly,
// exact rank on the 64-dimensional form space, Laplacian kernels, projectors.
#include <benchmark/benchmark.h>

#include <random>

#include "gengeo/algebroid.hpp"
#include "gengeo/clifford.hpp"
#include "gengeo/frame.hpp"
#include "gengeo/gc.hpp"
#include "gengeo/hodge.hpp"

using namespace gengeo;

namespace {

std::mt19937 rng(1234);

GaussianRational rnd_scalar() {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  return {Rational(num(rng)) / Rational(den(rng)),
          Rational(num(rng)) / Rational(den(rng))};
}

GMatrix rnd_antisym(int m) {
  GMatrix b = GMatrix::zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      b(i, j) = rnd_scalar();
      b(j, i) = -b(i, j);
    }
  return b;
}

FormSpinor rnd_form(int m) {
  FormSpinor f(m);
  std::uniform_int_distribution<Mask> mask(0, (Mask{1} << m) - 1);
  for (int t = 0; t < 6; ++t) f.add_term(mask(rng), rnd_scalar());
  return f;
}

FrameSpec kodaira_thurston() {
  FrameSpec f(4);
  f.add_bracket(0, 1, 2, 1);
  return f;
}

FrameSpec twisted_abelian6() {
  FrameSpec f = FrameSpec::abelian(6);
  FormSpinor h = FormSpinor::one(6);
  for (int i : {0, 1, 2}) h = wedge(h, FormSpinor::basis_one_form(6, i));
  f.H = h;
  return f;
}

QMatrix diag_j() {
  QMatrix j = QMatrix::zero(4, 4);
  j(1, 0) = 1, j(0, 1) = -1, j(3, 2) = 1, j(2, 3) = -1;
  return j;
}

void BM_SpinApply(benchmark::State& state) {
  SoElement q = SoElement::zero(6);
  q.two_form = rnd_antisym(6);
  q.bivector = rnd_antisym(6);
  FormSpinor f = rnd_form(6);
  for (auto _ : state) benchmark::DoNotOptimize(spin_apply(q, f));
}
BENCHMARK(BM_SpinApply);

void BM_TwistedD(benchmark::State& state) {
  FrameSpec f = twisted_abelian6();
  for (auto _ : state) benchmark::DoNotOptimize(twisted_d(f));
}
BENCHMARK(BM_TwistedD);

void BM_ExactRank64(benchmark::State& state) {
  GMatrix d = twisted_d(twisted_abelian6());
  for (auto _ : state) benchmark::DoNotOptimize(d.rank());
}
BENCHMARK(BM_ExactRank64);

void BM_LaplacianKernels(benchmark::State& state) {
  FrameSpec kt = kodaira_thurston();
  GenMetric gm = make_gen_metric(QMatrix::identity(4), QMatrix::zero(4, 4));
  for (auto _ : state) {
    BISpace sp = make_bispace(kt, gm);
    benchmark::DoNotOptimize(laplacian_kernel_dims(sp));
  }
}
BENCHMARK(BM_LaplacianKernels);

void BM_UkProjectors(benchmark::State& state) {
  GCStructure j = gc_from_complex(diag_j());
  for (auto _ : state) benchmark::DoNotOptimize(uk_projectors(j));
}
BENCHMARK(BM_UkProjectors);

void BM_AlgebroidBetti(benchmark::State& state) {
  FrameSpec kt = kodaira_thurston();
  GCStructure j = gc_from_complex(diag_j());
  for (auto _ : state) {
    AlgebroidComplex cx = build_algebroid(j, kt);
    benchmark::DoNotOptimize(algebroid_betti(cx));
  }
}
BENCHMARK(BM_AlgebroidBetti);

}  // namespace

BENCHMARK_MAIN();
