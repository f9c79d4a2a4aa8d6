#include <gtest/gtest.h>

#include "cgame/arena.hpp"
#include "cgame/buchi.hpp"
#include "cgame/capped_arena.hpp"
#include "cgame/fixtures.hpp"
#include "cgame/parity.hpp"
#include "cgame/solver.hpp"
#include "cgame/streett.hpp"
#include "cgame/text_format.hpp"
#include "helpers.hpp"

using namespace cgame;
using cgame::testing::chain;
using cgame::testing::load;

namespace {

std::vector<char> all(std::size_t n, char v) { return std::vector<char>(n, v); }

}  // namespace

TEST(Attractor, Trivial)
{
    const Arena a({Player::Box, Player::Diamond}, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}, {1, 1}});
    EXPECT_EQ(attractor(a, Player::Box, all(2, 1)), all(2, 1));
    EXPECT_EQ(attractor(a, Player::Box, all(2, 0)), all(2, 0));
    // diamond at 1 can stay on 1, box at 0 must move to 1
    EXPECT_EQ(attractor(a, Player::Diamond, VertexSet{0, 1}), (VertexSet{1, 1}));
    EXPECT_EQ(attractor(a, Player::Box, VertexSet{1, 0}), (VertexSet{1, 0}));
}

TEST(CappedArena, F5DiamondAttractsLowLoads)
{
    const Game g = fixture("F5");
    const auto a = build_capped_arena(g, {global_bound(g)});
    VertexSet fail(a.size(), 0);
    fail[a.fail()] = 1;
    const VertexSet attr = attractor(a.arena(), Player::Diamond, fail);
    const StateId q = g.state("q");
    EXPECT_TRUE(attr[*a.vertex(q, load({1}))]);
    EXPECT_TRUE(attr[*a.vertex(q, load({2}))]);
    EXPECT_FALSE(attr[*a.vertex(q, load({3}))]);
}

TEST(CappedArena, Steps)
{
    {
        const Game g = fixture("F1");
        const auto a = build_capped_arena(g, {3});
        const Vertex v = *a.vertex(0, load({1}));
        ASSERT_EQ(a.arena().successors(v).size(), 1u);
        EXPECT_EQ(a.config(a.arena().successors(v)[0]), Config(0, load({3})));
    }
    {
        const Game g = fixture("F2");
        const auto a = build_capped_arena(g, {3});
        EXPECT_EQ(a.arena().successors(*a.vertex(0, load({1})))[0], a.fail());
    }
    {
        const Game g = fixture("F4");
        const auto a = build_capped_arena(g, {15});
        const StateId u = g.state("u"), t = g.state("t");
        EXPECT_EQ(a.arena().successors(*a.vertex(u, load({5})))[0], a.fail());
        EXPECT_EQ(a.config(a.arena().successors(*a.vertex(u, load({6})))[0]), Config(t, load({1})));
    }
}

TEST(CappedArena, LimitEnforced)
{
    EXPECT_KIND(build_capped_arena(fixture("F8"), {100, 100}, 1000), ErrorKind::ArenaTooLarge);
}

TEST(SafeMembership, Examples)
{
    const Game f4 = fixture("F4"), f5 = fixture("F5"), f9 = fixture("F9");
    EXPECT_TRUE(safe_membership(f4, f4.state("s"), load({2})));
    EXPECT_FALSE(safe_membership(f4, f4.state("s"), load({1})));
    EXPECT_TRUE(safe_membership(f5, f5.state("q"), load({3})));
    EXPECT_FALSE(safe_membership(f5, f5.state("q"), load({2})));
    EXPECT_TRUE(safe_membership(f9, f9.state("s1"), load({7, 7, 7})));
    EXPECT_FALSE(safe_membership(f9, f9.state("s1"), load({7, 7, 6})));
}

TEST(SafeMembership, LargeLoadsAreCapped)
{
    const Game f4 = fixture("F4");
    EXPECT_TRUE(safe_membership(f4, 0, load({1'000'000})));
    EXPECT_KIND(safe_membership(f4, 0, load({1, 2})), ErrorKind::DimensionMismatch);
}

TEST(SafeMinimal, Fixtures)
{
    const Game f4 = fixture("F4");
    EXPECT_EQ(safe_minimal_elements(f4, f4.state("s")), chain({{2}}));
    EXPECT_EQ(safe_minimal_elements(f4, f4.state("u")), chain({{6}}));
    EXPECT_EQ(safe_minimal_elements(fixture("F8"), 0), chain({{2, 4}}));
    EXPECT_TRUE(safe_minimal_elements(fixture("F2"), 0).empty());
    EXPECT_EQ(safe_minimal_elements(fixture("F1"), 0), chain({{1}}));
    EXPECT_EQ(safe_minimal_elements(fixture("F3"), 0), chain({{4}}));
    EXPECT_EQ(safe_minimal_elements(fixture("F5"), 0), chain({{3}}));
    EXPECT_EQ(safe_minimal_elements(fixture("F6"), 0), chain({{2, 3}, {3, 2}}));
    EXPECT_EQ(safe_minimal_elements(fixture("F7"), 0), chain({{4}}));
}

TEST(CoverMembership, Examples)
{
    const Game f4 = fixture("F4");
    EXPECT_TRUE(cover_membership(f4, 0, load({6})));
    EXPECT_FALSE(cover_membership(f4, 0, load({5})));
    EXPECT_TRUE(cover_membership(fixture("F1"), 0, load({1})));
    const Game f9 = fixture("F9");
    EXPECT_TRUE(cover_membership(f9, f9.state("s1"), load({7, 7, 7})));
}

TEST(CoverMinimal, Fixtures)
{
    EXPECT_EQ(cover_minimal_elements(fixture("F4"), 0).minimals, chain({{6}}));
    EXPECT_EQ(cover_minimal_elements(fixture("F1"), 0).minimals, chain({{1}}));
    const auto f8 = cover_minimal_elements(fixture("F8"), 0);
    EXPECT_EQ(f8.minimals, chain({{2, 4}}));
    EXPECT_FALSE(f8.truncated);
    EXPECT_TRUE(cover_minimal_elements(fixture("F2"), 0).minimals.empty());
}

TEST(CoverMinimal, TruncationFlag)
{
    CoverOptions o;
    o.bound_override = 4;
    const auto res = cover_minimal_elements(fixture("F4"), 0, o);
    EXPECT_TRUE(res.truncated);
    EXPECT_EQ(res.box, 4);
    EXPECT_TRUE(res.minimals.empty());
    EXPECT_EQ(cover_bound(fixture("F4")), 15);
}

TEST(CoverMinimal, JobsDoNotChangeResult)
{
    CoverOptions one, four;
    four.jobs = 4;
    for (const char* name : {"F6", "F8"})
        EXPECT_EQ(cover_minimal_elements(fixture(name), 0, one).minimals,
                  cover_minimal_elements(fixture(name), 0, four).minimals);
}

TEST(SafeEmptiness, Dispatcher)
{
    EXPECT_TRUE(safe_emptiness(fixture("F2"), 0));
    EXPECT_FALSE(safe_emptiness(fixture("F5"), 0));
    const Game f9 = fixture("F9");
    for (StateId s = 0; s < f9.num_states(); ++s) EXPECT_FALSE(safe_emptiness(f9, s)) << f9.name(s);

    EXPECT_EQ(safe_emptiness_detail(fixture("F4"), 0).method, EmptinessMethod::GeneralizedBuchi);
    EXPECT_EQ(safe_emptiness_detail(fixture("F8"), 0).method, EmptinessMethod::StreettAutomaton);
    const Game two = parse_game("dimension 1\nstate q diamond\nstate a box\nedge q a 0\nedge q q 0\nedge a a w\n");
    EXPECT_EQ(safe_emptiness_detail(two, 0).method, EmptinessMethod::StreettGame);
    EXPECT_FALSE(safe_emptiness(two, 0));
}

TEST(SafeEmptiness, CappedArenaRouteAgrees)
{
    for (const auto& name : fixture_names()) {
        const Game g = fixture(name);
        if (name == "F9" || name == "F10") continue;
        for (StateId s = 0; s < g.num_states(); ++s)
            EXPECT_EQ(capped_arena_emptiness(g, s), safe_emptiness(g, s)) << name << " " << g.name(s);
    }
}

TEST(Streett, ToStreett)
{
    const auto f1 = to_streett(fixture("F1"));
    ASSERT_EQ(f1.pairs.size(), 1u);
    EXPECT_EQ(f1.pairs[0].trigger, (std::vector<char>{0}));
    EXPECT_EQ(f1.pairs[0].response, (std::vector<char>{1}));

    const Game f4 = fixture("F4");
    const auto sg = to_streett(f4);
    for (std::size_t k = 0; k < sg.edges.size(); ++k) {
        const auto [a, b] = sg.edges[k];
        const bool reload = f4.name(a) == "t" && f4.name(b) == "u";
        EXPECT_EQ(bool(sg.pairs[0].response[k]), reload);
        EXPECT_EQ(bool(sg.pairs[0].trigger[k]), !reload);
    }

    const Game f9 = fixture("F9");
    const auto s9 = to_streett(f9);
    EXPECT_EQ(s9.pairs.size(), 3u);
    for (std::size_t k = 0; k < s9.edges.size(); ++k)
        if (f9.name(s9.edges[k].first) == "s1" && f9.name(s9.edges[k].second) == "s_x1") {
            EXPECT_TRUE(s9.pairs[0].trigger[k]);
        }
}

TEST(Streett, FromStreett)
{
    StreettGame sg;
    sg.names = {"s"};
    sg.owners = {Player::Box};
    sg.edges = {{0, 0}};
    sg.pairs = {{{1}, {0}}};
    EXPECT_EQ(serialize_game(from_streett(sg)), "dimension 1\nstate s box\nedge s s -1\n");
    sg.pairs = {{{0}, {1}}};
    EXPECT_EQ(serialize_game(from_streett(sg)), "dimension 1\nstate s box\nedge s s w\n");
    sg.pairs = {{{0}, {0}}};
    EXPECT_EQ(serialize_game(from_streett(sg)), "dimension 1\nstate s box\nedge s s 0\n");
    sg.pairs = {{{1}, {1}}};
    EXPECT_KIND(from_streett(sg), ErrorKind::AmbiguousStreettEdge);
}

TEST(Streett, SolveFixtures)
{
    EXPECT_EQ(solve_streett_game(to_streett(fixture("F2"))), (std::vector<char>{0}));
    EXPECT_EQ(solve_streett_game(to_streett(fixture("F4"))), all(3, 1));
    EXPECT_EQ(solve_streett_game(to_streett(fixture("F5"))), all(3, 1));
}

TEST(Streett, TooManyPairs)
{
    RawGame raw;
    raw.dimension = 9;
    raw.add_state("s", Player::Box).add_edge("s", "s", Label(9, Delta::omega()));
    EXPECT_KIND(solve_streett_game(to_streett(validate_game(raw))), ErrorKind::TooManyPairs);
}

TEST(Streett, RoundTripPreservesWinner)
{
    const Game f4 = fixture("F4");
    const Game back = from_streett(to_streett(f4));
    EXPECT_EQ(solve_streett_game(to_streett(back)), solve_streett_game(to_streett(f4)));
}

TEST(Parity, SmallGame)
{
    // 0 (box) chooses between a loop of priority 1 and moving to 1 (priority 2 loop)
    ParityGame pg{Arena({Player::Box, Player::Box, Player::Diamond},
                        std::vector<std::pair<Vertex, Vertex>>{{0, 0}, {0, 1}, {1, 1}, {2, 2}}),
                  {1, 2, 3}};
    EXPECT_EQ(solve_parity(pg), (VertexSet{1, 1, 0}));
}

TEST(GeneralizedBuchi, Fixtures)
{
    EXPECT_EQ(solve_generalized_buchi(to_generalized_buchi(fixture("F4"))), all(3, 1));
    EXPECT_EQ(solve_generalized_buchi(to_generalized_buchi(fixture("F2"))), all(1, 0));
    EXPECT_EQ(solve_generalized_buchi(to_generalized_buchi(fixture("F5"))), all(3, 1));
    EXPECT_FALSE(emptiness_decreasing(fixture("F4"), 0));
    EXPECT_TRUE(emptiness_decreasing(fixture("F2"), 0));
    EXPECT_FALSE(emptiness_decreasing(fixture("F5"), 0));
    EXPECT_KIND(emptiness_decreasing(fixture("F8"), 0), ErrorKind::NotDecreasing);
}
