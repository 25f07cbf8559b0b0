#include <gtest/gtest.h>

#include "support.hpp"

using namespace crossbi;
using namespace crossbi::testing;

TEST(Solve, IdentityIsUnique) {
    const Vec b{Q.one(), Q.from_fraction(-2, 3), Q.zero()};
    const auto r = solve_linear(LinMap::identity(Q, Shape{3}), b);
    ASSERT_EQ(r.kind, SolveResult::Kind::Unique);
    EXPECT_EQ(r.particular, b);
    EXPECT_TRUE(r.nullspace.empty());
}

TEST(Solve, ZeroMapHomogeneousIsMany) {
    const auto r = solve_linear(LinMap(Q, Shape{3}, Shape{3}), Vec(3, Q.zero()));
    ASSERT_EQ(r.kind, SolveResult::Kind::Many);
    EXPECT_EQ(r.particular, Vec(3, Q.zero()));
    EXPECT_EQ(r.nullspace.size(), 3u);
}

TEST(Solve, ZeroMapInconsistentIsNone) {
    const auto r = solve_linear(LinMap(Q, Shape{3}, Shape{3}), basis_vec(Q, 3, 0));
    EXPECT_EQ(r.kind, SolveResult::Kind::None);
}

TEST(Solve, FieldMismatch) {
    EXPECT_THROW(solve_linear(LinMap::identity(Q, Shape{2}), Vec(2, F5.zero())), FieldMismatch);
}

TEST(Solve, RandomSystemsSatisfySolutions) {
    for (const auto &f : {Q, F5}) {
        Gen g(99);
        int unique = 0, many = 0, none = 0;
        for (int i = 0; i < 300; ++i) {
            const std::size_t rows = 1 + g.below(5), cols = 1 + g.below(5);
            auto m = g.map(f, Shape{cols}, Shape{rows});
            // Low-rank systems often enough to see every verdict.
            if (g.below(3) == 0 && rows > 1)
                for (std::size_t c = 0; c < cols; ++c)
                    m.at(rows - 1, c) = m(0, c);
            Vec b(rows);
            for (auto &x : b)
                x = g.scalar(f);
            const auto r = solve_linear(m, b);
            switch (r.kind) {
            case SolveResult::Kind::Unique:
                ++unique;
                EXPECT_EQ(m.apply(r.particular), b);
                EXPECT_EQ(rank(m), cols);
                break;
            case SolveResult::Kind::Many:
                ++many;
                EXPECT_EQ(m.apply(r.particular), b);
                EXPECT_EQ(r.nullspace.size(), cols - rank(m));
                for (const auto &n : r.nullspace)
                    EXPECT_EQ(m.apply(n), Vec(rows, f.zero()));
                break;
            case SolveResult::Kind::None: {
                ++none;
                // Inconsistent: appending b raises the rank.
                LinMap aug(f, Shape{cols + 1}, Shape{rows});
                for (std::size_t rr = 0; rr < rows; ++rr) {
                    for (std::size_t c = 0; c < cols; ++c)
                        aug.at(rr, c) = m(rr, c);
                    aug.at(rr, cols) = b[rr];
                }
                EXPECT_EQ(rank(aug), rank(m) + 1);
                break;
            }
            }
        }
        EXPECT_GT(unique, 10);
        EXPECT_GT(many, 10);
        EXPECT_GT(none, 10);
    }
}

TEST(Solve, InverseIsTwoSided) {
    Gen g(4);
    int inverted = 0, singular = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + g.below(4);
        const auto m = g.map(F5, Shape{n}, Shape{n});
        const auto inv = inverse(m);
        if (!inv) {
            ++singular;
            EXPECT_LT(rank(m), n);
            continue;
        }
        ++inverted;
        EXPECT_EQ(compose(m, *inv), LinMap::identity(F5, Shape{n}));
        EXPECT_EQ(compose(*inv, m), LinMap::identity(F5, Shape{n}));
    }
    EXPECT_GT(inverted, 50);
    EXPECT_GT(singular, 10);
}

TEST(Solve, RankExamples) {
    EXPECT_EQ(rank(LinMap::identity(Q, Shape{2, 2})), 4u);
    EXPECT_EQ(rank(LinMap(Q, Shape{3}, Shape{2})), 0u);
    EXPECT_EQ(rank(zn(3, Q).mult), 3u);
}
