#include <benchmark/benchmark.h>

#include "pairlin/determinant.hpp"
#include "pairlin/rank.hpp"
#include "pairlin/solvers.hpp"
#include "pairlin_cli/fixtures.hpp"

using namespace pairlin;

namespace {

void BM_DetSupertropical(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto st = make_pair("supertropical");
    cli::Rng rng(cli::kDefaultSeed);
    auto a = cli::random_supertropical(st, n, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(det_doubled(a));
}
BENCHMARK(BM_DetSupertropical)->DenseRange(2, 8);

void BM_CayleyHamiltonSign(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto s = make_pair("sign");
    Matrix a(s, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.set(i, j, (i * 7 + j * 3) % 2 ? s->one() : s->parse("-1"));
    for (auto _ : state) benchmark::DoNotOptimize(cayley_hamilton_check(a));
}
BENCHMARK(BM_CayleyHamiltonSign)->DenseRange(2, 5);

void BM_RowRankSign(benchmark::State& state) {
    auto a = cli::sign_a2_fixture();
    auto dom = exact_domain(a.alg());
    for (auto _ : state) benchmark::DoNotOptimize(row_rank(a, dom));
}
BENCHMARK(BM_RowRankSign);

void BM_SubmatrixRankTruncated(benchmark::State& state) {
    auto a = cli::truncated_fixture();
    for (auto _ : state) benchmark::DoNotOptimize(submatrix_rank(a));
}
BENCHMARK(BM_SubmatrixRankTruncated);

void BM_FindDependenceHeuristic(benchmark::State& state) {
    auto st = make_pair("supertropical");
    cli::Rng rng(cli::kDefaultSeed);
    auto a = cli::forced_singular_supertropical(st, 3, rng);
    auto dom = heuristic_domain(a);
    for (auto _ : state) benchmark::DoNotOptimize(find_dependence(a.alg(), a.row_vectors(), dom));
}
BENCHMARK(BM_FindDependenceHeuristic);

void BM_Jacobi(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto st = make_pair("supertropical");
    cli::Rng rng(cli::kDefaultSeed);
    auto a = cli::random_jacobi_matrix(st, n, rng);
    Vector v(n, st->one());
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_solve(a, v));
}
BENCHMARK(BM_Jacobi)->DenseRange(2, 6);

void BM_CramerSupertropical(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto st = make_pair("supertropical");
    cli::Rng rng(cli::kDefaultSeed);
    auto a = cli::random_supertropical(st, n, n, rng);
    Vector v(n, st->one());
    for (auto _ : state) benchmark::DoNotOptimize(cramer_solve(a, v));
}
BENCHMARK(BM_CramerSupertropical)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
