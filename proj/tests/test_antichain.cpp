#include <gtest/gtest.h>

#include "cgame/antichain.hpp"
#include "cgame/fixtures.hpp"
#include "cgame/min_dist.hpp"
#include "cgame/text_format.hpp"
#include "helpers.hpp"

using namespace cgame;
using cgame::testing::chain;

namespace {

ExtVector ev(std::vector<std::int64_t> v) { return ExtVector(std::move(v)); }

std::vector<ExtVector> sorted(std::vector<ExtVector> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

DistanceGame dist(const char* fixture_name)
{
    const Game g = fixture(fixture_name);
    return make_distance_game(g, g.state("s"), g.state("r"));
}

}  // namespace

TEST(ExtVector, RejectsMixedComponents)
{
    EXPECT_KIND(ExtVector({1, kInfinity}), ErrorKind::MixedExtVector);
    EXPECT_TRUE(ExtVector::infinite(2).is_infinite());
}

TEST(MinSet, DropsDominated)
{
    const Antichain a = min_set({ev({2, 3}), ev({3, 2}), ev({3, 3})});
    EXPECT_EQ(a.elements(), (std::vector<ExtVector>{ev({2, 3}), ev({3, 2})}));
}

TEST(MinSet, KeepsInfinity)
{
    const Antichain a = min_set({ExtVector::infinite(2)});
    EXPECT_TRUE(a.is_unreachable());
}

TEST(MinSet, IncomparableUnion)
{
    const Antichain a = min_set({ev({2, 3}), ev({3, 2}), ev({1, 5})});
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a.elements().front(), ev({1, 5}));
}

TEST(MinSet, Idempotent)
{
    const Antichain a = min_set({ev({4, 1}), ev({2, 2}), ev({1, 4}), ev({3, 3}), ev({2, 2})});
    EXPECT_EQ(min_set(a.elements()), a);
    EXPECT_TRUE(a.covers(ev({3, 3})));
    EXPECT_FALSE(a.covers(ev({1, 3})));
}

TEST(Cwm, Examples)
{
    EXPECT_EQ(cwm({ev({2})}, {ev({4})}), (std::vector<ExtVector>{ev({4})}));
    EXPECT_EQ(sorted(cwm({ev({2, 3}), ev({3, 2})}, {ev({1, 1})})), (std::vector<ExtVector>{ev({2, 3}), ev({3, 2})}));
    EXPECT_EQ(cwm({ev({2})}, {ExtVector::infinite(1)}), (std::vector<ExtVector>{ExtVector::infinite(1)}));
}

TEST(SubtractLabel, Examples)
{
    EXPECT_EQ(subtract_label(std::vector{ev({3})}, {Delta::finite(-2)}), (std::vector<ExtVector>{ev({5})}));
    EXPECT_EQ(subtract_label(std::vector{ExtVector::infinite(2)}, {Delta::finite(-1), Delta::finite(-9)}),
              (std::vector<ExtVector>{ExtVector::infinite(2)}));
    EXPECT_EQ(subtract_label(std::vector{ev({1, 1})}, {Delta::finite(-1), Delta::finite(-2)}),
              (std::vector<ExtVector>{ev({2, 3})}));
}

TEST(MinDist, F6)
{
    EXPECT_EQ(min_dist(dist("F6")).distances, chain({{2, 3}, {3, 2}}));
}

TEST(MinDist, F7DiamondTakesWorse)
{
    EXPECT_EQ(min_dist(dist("F7")).distances, chain({{4}}));
}

TEST(MinDist, TargetToItself)
{
    const auto dg = dist("F6");
    EXPECT_EQ(min_dist(dg, dg.target, dg.target), chain({{1, 1}}));
}

TEST(MinDist, Unreachable)
{
    const Game g = parse_game("dimension 1\nstate s box\nstate r box\nedge s s -1\nedge r r 0\n");
    const auto res = min_dist(make_distance_game(g, 0, 1));
    EXPECT_TRUE(res.distances.is_unreachable());
}

TEST(MinDist, RejectsReloads)
{
    EXPECT_KIND(make_distance_game(fixture("F1"), 0, 0), ErrorKind::OmegaInDistanceLabel);
}

TEST(MinDist, IterationsWithinLongestPath)
{
    for (const char* name : {"F6", "F7"}) {
        const auto dg = dist(name);
        const auto res = min_dist(dg);
        EXPECT_LE(res.stats.iterations, longest_acyclic_path(dg.game) + 1) << name;
    }
}

TEST(MinDist, ObserverSeesEveryRound)
{
    int rounds = 0;
    const auto res = min_dist(dist("F6"), [&](int k, std::span<const Antichain>) { rounds = k; });
    EXPECT_GE(rounds, res.stats.iterations);
}
