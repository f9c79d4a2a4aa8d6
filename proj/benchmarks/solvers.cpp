#include <benchmark/benchmark.h>

#include "cgame/fixtures.hpp"
#include "cgame/gadgets.hpp"
#include "cgame/oracle.hpp"
#include "cgame/solver.hpp"
#include "cgame/streett.hpp"
#include "cgame/text_format.hpp"
#include "cgame/unfolding.hpp"

using namespace cgame;

namespace {

Game random_one_player(int states, int d)
{
    RandomGameFlags f;
    f.one_player = true;
    f.omega_density = 0.4;
    return random_game(7, states, d, 3, f);
}

void BM_SafeMinimalGeneral(benchmark::State& st)
{
    const Game g = random_one_player(static_cast<int>(st.range(0)), 2);
    for (auto _ : st) benchmark::DoNotOptimize(safe_minimal_elements_all(g));
    st.counters["states"] = static_cast<double>(g.num_states());
}
BENCHMARK(BM_SafeMinimalGeneral)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SafeMinimalPermutation(benchmark::State& st)
{
    const Game g = random_one_player(static_cast<int>(st.range(0)), 2);
    for (auto _ : st) benchmark::DoNotOptimize(min_safe_one_player(g, 0));
}
BENCHMARK(BM_SafeMinimalPermutation)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_OracleSafeMinimals(benchmark::State& st)
{
    const Game g = random_one_player(static_cast<int>(st.range(0)), 2);
    const std::int64_t D = global_bound(g);
    for (auto _ : st) benchmark::DoNotOptimize(oracle_safe_minimals_all(g, D));
}
BENCHMARK(BM_OracleSafeMinimals)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_QbfGadgetDecreasing(benchmark::State& st)
{
    const Game g = fixture("F9");
    for (auto _ : st) benchmark::DoNotOptimize(min_safe_decreasing(g, g.state("s1")));
}
BENCHMARK(BM_QbfGadgetDecreasing)->Unit(benchmark::kMillisecond);

void BM_QbfGadgetMembership(benchmark::State& st)
{
    const Game g = fixture("F9");
    const LoadVector v({7, 7, 7});
    for (auto _ : st) benchmark::DoNotOptimize(safe_membership(g, g.state("s1"), v));
}
BENCHMARK(BM_QbfGadgetMembership)->Unit(benchmark::kMillisecond);

void BM_SatUnsatPermutation(benchmark::State& st)
{
    const Game g = fixture("F10");
    MinSafeOptions o;
    o.jobs = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(min_safe_one_player(g, g.state("s1"), o));
}
BENCHMARK(BM_SatUnsatPermutation)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_StreettGame(benchmark::State& st)
{
    const Game g = random_game(11, static_cast<int>(st.range(0)), 3, 2);
    const StreettGame sg = to_streett(g);
    for (auto _ : st) benchmark::DoNotOptimize(solve_streett_game(sg));
}
BENCHMARK(BM_StreettGame)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_CoverMinimal(benchmark::State& st)
{
    const Game g = random_one_player(6, 2);
    StateId s = 0;
    while (s + 1 < g.num_states() && safe_emptiness(g, s)) ++s;
    CoverOptions o;
    o.bound_override = st.range(0);
    std::size_t found = 0;
    for (auto _ : st) found = cover_minimal_elements(g, s, o).minimals.size();
    st.counters["minimals"] = static_cast<double>(found);
}
BENCHMARK(BM_CoverMinimal)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ParseSerialize(benchmark::State& st)
{
    const std::string text = serialize_game(random_game(3, 200, 4, 5));
    for (auto _ : st) benchmark::DoNotOptimize(serialize_game(parse_game(text)));
    st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations() * text.size()));
}
BENCHMARK(BM_ParseSerialize);

}  // namespace

BENCHMARK_MAIN();
