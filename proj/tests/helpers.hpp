#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "cgame/antichain.hpp"
#include "cgame/errors.hpp"

#define EXPECT_KIND(expr, expected_kind)                                         \
    do {                                                                         \
        try {                                                                    \
            (void)(expr);                                                        \
            ADD_FAILURE() << #expr " did not throw";                             \
        } catch (const ::cgame::GameError& caught_) {                            \
            EXPECT_EQ(caught_.kind(), expected_kind) << caught_.what();          \
        }                                                                        \
    } while (0)

namespace cgame::testing {

inline Antichain chain(std::vector<std::vector<std::int64_t>> vs)
{
    std::vector<ExtVector> out;
    for (auto& v : vs) out.emplace_back(std::move(v));
    return min_set(std::move(out));
}

inline LoadVector load(std::vector<std::int64_t> v) { return LoadVector(std::move(v)); }

}  // namespace cgame::testing
