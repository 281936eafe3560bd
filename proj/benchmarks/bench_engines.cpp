#include <benchmark/benchmark.h>

#include "sip/chartab/table.hpp"
#include "sip/ffrep/ffrep.hpp"
#include "sip/help/help.hpp"
#include "sip/modhelp/modhelp.hpp"
#include "sip/papercases/papercases.hpp"

using namespace sip;

namespace {

void BM_CyclotomicProduct(benchmark::State& state) {
  long n = state.range(0);
  Cyclotomic a = Cyclotomic::E(n) + Cyclotomic::root_of_unity(n, 3) + 2;
  Cyclotomic b = Cyclotomic::root_of_unity(n, n - 1) - Cyclotomic::root_of_unity(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicProduct)->Arg(8)->Arg(24)->Arg(60);

void BM_SolveEps(benchmark::State& state, const char* table, long order) {
  auto t = load_ctab(table);
  for (auto _ : state) {
    HelpProblem p{order, t, {}};
    benchmark::DoNotOptimize(solve_eps(p));
  }
}
BENCHMARK_CAPTURE(BM_SolveEps, table4_order4, "table4.ctab", 4L);
BENCHMARK_CAPTURE(BM_SolveEps, table5_order4, "table5.ctab", 4L);
BENCHMARK_CAPTURE(BM_SolveEps, table1_order4, "table1.ctab", 4L);

void BM_SearchAssignments(benchmark::State& state, const char* table, const char* target) {
  auto host = load_ctab(table);
  auto U = TargetGroup::make(parse_group_spec(target));
  HelpProblem p{U.group.exponent(), host, {}};
  auto chains = solve_eps(p).by_order;
  for (auto _ : state) benchmark::DoNotOptimize(search_assignments(U, host, chains));
}
BENCHMARK_CAPTURE(BM_SearchAssignments, c4xc2_table3, "table3.ctab", "c4xc2");
BENCHMARK_CAPTURE(BM_SearchAssignments, e2cubed_table1, "table1.ctab", "e2^3");
BENCHMARK_CAPTURE(BM_SearchAssignments, d8_table2, "table2.ctab", "d8");

void BM_DixonTable(benchmark::State& state, const char* spec) {
  auto G = group_build(parse_group_spec(spec));
  for (auto _ : state) benchmark::DoNotOptimize(dixon_table(G));
}
BENCHMARK_CAPTURE(BM_DixonTable, sd16, "sd16");
BENCHMARK_CAPTURE(BM_DixonTable, s4, "perm:[(1,2),(1,2,3,4)]");
BENCHMARK_CAPTURE(BM_DixonTable, a5, "perm:[(1,2,3),(1,2,3,4,5)]");

void BM_PslValues(benchmark::State& state) {
  long q = state.range(0);
  bool in_psl = q % 8 == 1 || q % 8 == 7;
  for (auto _ : state) benchmark::DoNotOptimize(psl_values(q, in_psl));
}
BENCHMARK(BM_PslValues)->Arg(5)->Arg(7)->Arg(25);

void BM_RunCase(benchmark::State& state, CaseId id) {
  CaseParams p;
  p.id = id;
  p.q = std::vector<long>{};
  for (auto _ : state) benchmark::DoNotOptimize(run_case(p));
}
BENCHMARK_CAPTURE(BM_RunCase, qd_case, CaseId::QdCase)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunCase, thm2_q8, CaseId::Thm2Q8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
