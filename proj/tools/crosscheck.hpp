#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgame/game.hpp"

namespace cgame::check {

struct Options {
    int jobs = 1;
    /// Corrupts the general solver's minimal antichains; used to exercise the
    /// disagreement path.
    bool inject_fault = false;
    /// Largest explicit oracle arena (vertices) attempted before skipping.
    std::size_t oracle_budget = 200'000;
};

struct Outcome {
    std::size_t checks = 0;
    std::size_t skipped = 0;
    std::vector<std::string> disagreements;

    bool agree() const { return disagreements.empty(); }
    void merge(const Outcome& o);
};

/// Every applicable solver pair on g, for all states: emptiness routes,
/// general vs oracle vs restricted minimal antichains, bounded deciders,
/// cover minimals vs oracle, and the size bounds.
Outcome check_game(const Game& g, const Options& options);

/// Greedy edge and state deletion keeping check_game in disagreement.
Game minimize(const Game& g, const Options& options);

struct SuiteReport {
    Outcome outcome;
    std::size_t instances = 0;
    /// Text of the first failing instance, already minimized when possible.
    std::optional<std::string> counterexample;
    std::string counterexample_name;
};

SuiteReport run_fixtures(const Options& options);
SuiteReport run_random(std::uint64_t seed, int count, const Options& options);
/// QBF bridge on `count` formulas with n, m <= 3 plus SAT-UNSAT bridge on
/// `count` pairs with n, m <= 2.
SuiteReport run_gadgets(std::uint64_t seed, int count, const Options& options);

}  // namespace cgame::check
