#include <gtest/gtest.h>

#include "cgame/fixtures.hpp"
#include "cgame/game.hpp"
#include "cgame/solver.hpp"
#include "cgame/text_format.hpp"
#include "helpers.hpp"

using namespace cgame;

TEST(Delta, FiniteRejectsPositive)
{
    EXPECT_EQ(Delta::finite(-3).value(), -3);
    EXPECT_TRUE(Delta::finite(0).is_zero());
    EXPECT_TRUE(Delta::omega().is_omega());
    EXPECT_KIND(Delta::finite(1), ErrorKind::PositiveFiniteDelta);
}

TEST(Labels, CanonicalOrderPutsOmegaLast)
{
    const Label a{Delta::finite(-1)}, b{Delta::finite(-3)}, w{Delta::omega()};
    EXPECT_EQ(compare_labels(a, b), std::strong_ordering::less);
    EXPECT_EQ(compare_labels(b, w), std::strong_ordering::less);
    EXPECT_EQ(to_string(Label{Delta::finite(-1), Delta::omega()}), "-1,w");
}

TEST(ValidateGame, AcceptsF5)
{
    const Game g = fixture("F5");
    EXPECT_EQ(g.num_states(), 3u);
    EXPECT_EQ(g.owner(g.state("q")), Player::Diamond);
}

TEST(ValidateGame, OmegaOnDiamond)
{
    RawGame raw = fixture("F5").to_raw();
    raw.add_edge("q", "a", {Delta::omega()});
    EXPECT_KIND(validate_game(raw), ErrorKind::OmegaOnDiamond);
}

TEST(ValidateGame, MissingOutgoingEdge)
{
    RawGame raw = fixture("F3").to_raw();
    std::erase_if(raw.edges, [](const auto& e) { return e.source == "t"; });
    EXPECT_KIND(validate_game(raw), ErrorKind::MissingOutgoingEdge);
}

TEST(ValidateGame, StructuralErrors)
{
    RawGame raw;
    raw.dimension = 1;
    EXPECT_KIND(validate_game(raw), ErrorKind::EmptyGame);
    raw.add_state("s", Player::Box).add_state("s", Player::Box);
    EXPECT_KIND(validate_game(raw), ErrorKind::DuplicateState);

    RawGame dup;
    dup.dimension = 1;
    dup.add_state("s", Player::Box).add_edge("s", "s", {Delta::omega()}).add_edge("s", "s", {Delta::omega()});
    EXPECT_KIND(validate_game(dup), ErrorKind::DuplicateEdge);

    RawGame unknown;
    unknown.dimension = 1;
    unknown.add_state("s", Player::Box).add_edge("s", "x", {Delta::omega()});
    EXPECT_KIND(validate_game(unknown), ErrorKind::UnknownState);

    RawGame dim;
    dim.dimension = 2;
    dim.add_state("s", Player::Box).add_edge("s", "s", {Delta::omega()});
    EXPECT_KIND(validate_game(dim), ErrorKind::DimensionMismatch);
}

TEST(Classify, Fixtures)
{
    EXPECT_EQ(classify(fixture("F4")), (GameClass{true, true}));
    EXPECT_EQ(classify(fixture("F8")), (GameClass{true, false}));
    EXPECT_EQ(classify(fixture("F5")), (GameClass{false, true}));
    EXPECT_TRUE(classify(fixture("F9")).decreasing);
    EXPECT_TRUE(classify(fixture("F10")).one_player);
}

TEST(MaxFiniteDrop, Fixtures)
{
    EXPECT_EQ(max_finite_drop(fixture("F4")), 5);
    EXPECT_EQ(max_finite_drop(fixture("F1")), 0);
    EXPECT_EQ(max_finite_drop(fixture("F9")), 6);
}

TEST(GlobalBound, UsesMaxOfDropAndOne)
{
    EXPECT_EQ(global_bound(fixture("F4")), 15);
    EXPECT_EQ(global_bound(fixture("F1")), 1);
    EXPECT_EQ(global_bound(fixture("F8")), 2 * 2 * 4);
}

TEST(PruneUnsafe, Fixtures)
{
    EXPECT_EQ(prune_unsafe_states(fixture("F4")), fixture("F4"));
    EXPECT_KIND(prune_unsafe_states(fixture("F2")), ErrorKind::AllStatesUnsafe);

    const Game with_z =
        parse_game("dimension 1\nstate s box\nstate t box\nstate z box\nedge s t -3\nedge t t w\nedge z z -1\n");
    EXPECT_EQ(prune_unsafe_states(with_z), fixture("F3"));
}

TEST(LoadVector, RejectsNonPositive)
{
    EXPECT_KIND(LoadVector({1, 0}), ErrorKind::InvalidVector);
    EXPECT_TRUE(leq(LoadVector({1, 2}), LoadVector({2, 2})));
    EXPECT_FALSE(leq(LoadVector({3, 1}), LoadVector({2, 2})));
    EXPECT_EQ(LoadVector({5, 1}).capped(3), LoadVector({3, 1}));
}

TEST(ErrorCategories, MapToExitClasses)
{
    EXPECT_EQ(category(ErrorKind::SyntaxError), ErrorCategory::Input);
    EXPECT_EQ(category(ErrorKind::ArenaTooLarge), ErrorCategory::Resource);
    EXPECT_EQ(category(ErrorKind::NotDecreasing), ErrorCategory::Precondition);
    const GameError e(ErrorKind::SyntaxError, "bad", 3, 7);
    EXPECT_STREQ(e.what(), "SyntaxError at line 3, column 7: bad");
}
