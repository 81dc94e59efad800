#include <benchmark/benchmark.h>

#include "curled2/classify.hpp"
#include "curled2/iso.hpp"
#include "curled2/poly.hpp"
#include "curled2/verify.hpp"

using namespace curled2;

namespace {

StructureMatrix c2_matrix(const FieldSpec& spec, int a) {
  FieldElem one = FieldElem::one(spec), zero = FieldElem::zero(spec);
  FieldElem av = FieldElem::of_int(spec, a);
  return StructureMatrix(spec,
                         {one, zero, zero, zero, zero, av, zero, one - av});
}

void BM_FieldMulF5(benchmark::State& state) {
  FieldSpec f5 = FieldSpec::prime(5);
  FieldElem a = FieldElem::of_int(f5, 3), b = FieldElem::of_int(f5, 4);
  for (auto _ : state) {
    FieldElem c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_FieldMulF5);

void BM_TransformF5(benchmark::State& state) {
  FieldSpec f5 = FieldSpec::prime(5);
  StructureMatrix A = c2_matrix(f5, 3);
  Transform2 X = Transform2::parse(f5, "[[1,2],[3,2]]");
  for (auto _ : state) {
    StructureMatrix moved = transform(A, X);
    benchmark::DoNotOptimize(moved);
  }
}
BENCHMARK(BM_TransformF5);

void BM_Gl2ScanNonIsomorphic(benchmark::State& state) {
  // worst case: the scan has to exhaust GL2(F5) to prove non-isomorphism
  FieldSpec f5 = FieldSpec::prime(5);
  StructureMatrix A = c2_matrix(f5, 0), B = c2_matrix(f5, 1);
  std::vector<Transform2> gl2 = gl2_elements(f5);
  for (auto _ : state) {
    auto witness = find_isomorphism_in(gl2, A, B);
    benchmark::DoNotOptimize(witness);
  }
}
BENCHMARK(BM_Gl2ScanNonIsomorphic);

void BM_EcCriterionSweepF3(benchmark::State& state) {
  FieldSpec f3 = FieldSpec::prime(3);
  std::vector<FieldElem> elems = elements(f3);
  for (auto _ : state) {
    std::uint64_t ec_count = 0;
    std::array<std::size_t, 8> index{};
    while (true) {
      std::array<FieldElem, 8> entries = {
          elems[index[0]], elems[index[1]], elems[index[2]], elems[index[3]],
          elems[index[4]], elems[index[5]], elems[index[6]], elems[index[7]]};
      StructureMatrix A(f3, std::move(entries));
      if (ec_criterion_general(A)) ++ec_count;
      std::size_t v = 0;
      while (v < 8 && ++index[v] == elems.size()) index[v++] = 0;
      if (v == 8) break;
    }
    benchmark::DoNotOptimize(ec_count);
  }
}
BENCHMARK(BM_EcCriterionSweepF3)->Unit(benchmark::kMillisecond);

void BM_EcDefectExpansion(benchmark::State& state) {
  FieldSpec q = FieldSpec::rationals();
  StructureMatrix A =
      StructureMatrix::parse(q, "[[1,2],[3,4],[5,6],[7,8]]");
  for (auto _ : state) {
    auto defect = ec_defect(A);
    benchmark::DoNotOptimize(defect);
  }
}
BENCHMARK(BM_EcDefectExpansion);

void BM_ClassifyF5(benchmark::State& state) {
  FieldSpec f5 = FieldSpec::prime(5);
  StructureMatrix A = StructureMatrix::parse(f5, "[[2,0],[0,3],[1,3],[2,4]]");
  for (auto _ : state) {
    Classification cls = classify(A);
    benchmark::DoNotOptimize(cls);
  }
}
BENCHMARK(BM_ClassifyF5);

void BM_ClassificationCheckF3(benchmark::State& state) {
  FieldSpec f3 = FieldSpec::prime(3);
  for (auto _ : state) {
    CheckResult result = check_classification(f3);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ClassificationCheckF3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
