// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "intdec/presburger.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "intdec/error.hpp"
#include "support.hpp"

namespace intdec {
namespace {

using namespace presburger;
using testing::Rng;

IntegerSet constraint(std::vector<long> coeffs, Relation rel, long c) {
    return IntegerSet::from_constraint({testing::to_integers(coeffs), rel, Integer(c)});
}

std::set<std::vector<long>> members(const IntegerSet& s, long bound) {
    std::set<std::vector<long>> out;
    for (const auto& z : s.enumerate(bound)) {
        std::vector<long> v;
        for (const auto& x : z) v.push_back(x.get_si());
        out.insert(v);
    }
    return out;
}

TEST(IntegerSetConstraint, LessOrEqualMembership) {
    auto s = constraint({1, -1}, Relation::kLe, 0);
    EXPECT_TRUE(s.contains({2, 3}));
    EXPECT_FALSE(s.contains({3, 2}));
    EXPECT_TRUE(s.is_canonical());
}

TEST(IntegerSetConstraint, EqualityMembership) {
    auto s = constraint({1, 1, -1}, Relation::kEq, 0);
    EXPECT_TRUE(s.contains({1, 2, 3}));
    EXPECT_FALSE(s.contains({1, 2, 4}));
}

TEST(IntegerSetConstraint, DimensionZero) {
    EXPECT_TRUE(constraint({}, Relation::kLe, -1).is_empty());
    EXPECT_TRUE(constraint({}, Relation::kLe, 0).is_universal());
    auto one = IntegerSet::universe(0);
    EXPECT_EQ(one.letter_count(), 1u);
    EXPECT_TRUE(one.contains(std::span<const Integer>{}));
}

TEST(IntegerSetConstraint, LargeCoefficients) {
    const Integer big("123456789012345678901234567890");
    auto s = IntegerSet::from_constraint({{Integer(1)}, Relation::kLe, big});
    EXPECT_TRUE(s.contains(IntegerVector{big}));
    EXPECT_FALSE(s.contains(IntegerVector{big + 1}));
    EXPECT_TRUE(s.contains(IntegerVector{-big}));
}

TEST(IntegerSetBoolean, Examples) {
    EXPECT_TRUE(equals(complement(IntegerSet::empty(1)), IntegerSet::universe(1)));
    auto nonneg = constraint({-1}, Relation::kLe, 0);
    auto nonpos = constraint({1}, Relation::kLe, 0);
    EXPECT_EQ(intersection(nonneg, nonpos), IntegerSet::point(IntegerVector{Integer(0)}));
    auto le = constraint({1, -1}, Relation::kLe, 0);
    auto eq = constraint({1, -1}, Relation::kEq, 0);
    EXPECT_EQ(difference(le, eq), constraint({1, -1}, Relation::kLe, -1));
    auto pos = constraint({-1}, Relation::kLe, -1);
    EXPECT_EQ(union_of(nonpos, pos), IntegerSet::universe(1));
}

TEST(IntegerSetBoolean, DifferenceMatchesEnumeration) {
    auto d = difference(constraint({1, -1}, Relation::kLe, 0), constraint({1, -1}, Relation::kEq, 0));
    for (const auto& z : testing::integer_box(2, 8)) {
        EXPECT_EQ(d.contains(testing::to_integers(z)), z[0] <= z[1] - 1);
    }
}

TEST(IntegerSetBoolean, DimensionMismatchThrows) {
    EXPECT_THROW(intersection(IntegerSet::universe(1), IntegerSet::universe(2)), DimensionError);
}

TEST(IntegerSetProduct, Examples) {
    auto zero = IntegerSet::point(IntegerVector{Integer(0)});
    auto p = product(zero, IntegerSet::universe(1));
    EXPECT_TRUE(p.contains({0, 17}));
    EXPECT_FALSE(p.contains({1, 0}));
    EXPECT_TRUE(product(IntegerSet::empty(1), p).is_empty());
    auto q = product(constraint({1}, Relation::kLe, 2), constraint({-1}, Relation::kLe, -5));
    EXPECT_TRUE(q.contains({2, 5}));
    EXPECT_FALSE(q.contains({3, 5}));
}

TEST(IntegerSetProject, Examples) {
    EXPECT_EQ(project(constraint({1, -1}, Relation::kEq, 0), 0), IntegerSet::universe(1));
    auto evens = project(constraint({2, -1}, Relation::kEq, 0), 0);
    for (long z = -8; z <= 8; ++z) EXPECT_EQ(evens.contains({z}), z % 2 == 0) << z;
    EXPECT_TRUE(project(IntegerSet::empty(2), 0).is_empty());
    EXPECT_THROW(project(IntegerSet::universe(1), 1), Error);
}

TEST(IntegerSetProject, SignExtensionNeeded) {
    // x = 2y + 1 with y < 0 forces x <= -1; the witness needs a long encoding
    auto s = intersection(constraint({1, -2}, Relation::kEq, 1), constraint({0, 1}, Relation::kLe, -1));
    auto p = project(s, 1);
    for (long x = -9; x <= 9; ++x) EXPECT_EQ(p.contains({x}), x <= -1 && (x - 1) % 2 == 0) << x;
}

TEST(IntegerSetReorder, Examples) {
    auto le = constraint({1, -1}, Relation::kLe, 0);
    std::vector<std::size_t> id{0, 1}, swap{1, 0};
    EXPECT_EQ(reorder(le, id), le);
    EXPECT_EQ(reorder(le, swap), constraint({-1, 1}, Relation::kLe, 0));
    std::vector<std::size_t> bad{0, 0};
    EXPECT_THROW(reorder(le, bad), Error);
}

TEST(IntegerSetReorder, InverseRestores) {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        auto s = testing::random_zexpr(rng, 3, 2).build(3);
        std::vector<std::size_t> p{2, 0, 1}, inv{1, 2, 0};
        EXPECT_EQ(reorder(reorder(s, p), inv), s);
    }
}

TEST(IntegerSetQueries, Examples) {
    EXPECT_TRUE(is_empty(constraint({}, Relation::kLe, -1)));
    auto le0 = constraint({1}, Relation::kLe, 0);
    auto ge1 = constraint({-1}, Relation::kLe, -1);
    EXPECT_TRUE(equals(union_of(le0, ge1), IntegerSet::universe(1)));
    auto diag = members(constraint({1, -1}, Relation::kEq, 0), 1);
    EXPECT_EQ(diag, (std::set<std::vector<long>>{{-1, -1}, {0, 0}, {1, 1}}));
    auto w = constraint({1, 1}, Relation::kEq, 5).witness();
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ((*w)[0] + (*w)[1], 5);
    EXPECT_FALSE(IntegerSet::empty(2).witness().has_value());
}

TEST(IntegerSetEncoding, RoundTrip) {
    for (const auto& z : testing::integer_box(2, 9)) {
        auto v = testing::to_integers(z);
        const std::size_t len = encoding_length(v);
        EXPECT_EQ(decode(encode(v, len), 2), v);
        EXPECT_EQ(decode(encode(v, len + 3), 2), v);
    }
}

TEST(IntegerSetEncoding, FromAutomatonValidates) {
    // an accepting initial state, then a transition target out of range
    EXPECT_THROW(IntegerSet::from_automaton(1, 0, {true}, {0, 0}), Error);
    EXPECT_THROW(IntegerSet::from_automaton(1, 0, {false, true}, {1, 5, 1, 1}), Error);
}

TEST(IntegerSetCapacity, LimitIsEnforced) {
    const std::size_t saved = dimension_limit();
    set_dimension_limit(2);
    EXPECT_THROW(IntegerSet::universe(3), CapacityError);
    set_dimension_limit(saved);
    EXPECT_NO_THROW(IntegerSet::universe(3));
}

// Every constructed set agrees with direct evaluation on the |z| <= 8 box.
TEST(IntegerSetProperty, EnumerationOracle) {
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 2));
        auto e = testing::random_zexpr(rng, n, 2);
        auto s = e.build(n);
        std::set<std::vector<long>> expected;
        for (const auto& z : testing::integer_box(n, 8)) {
            if (e.holds(z)) expected.insert(z);
        }
        EXPECT_EQ(members(s, 8), expected);
        EXPECT_TRUE(is_saturated(s));
    }
}

TEST(IntegerSetProperty, BooleanAlgebraLaws) {
    Rng rng(77);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        auto a = testing::random_zexpr(rng, n, 1).build(n);
        auto b = testing::random_zexpr(rng, n, 1).build(n);
        EXPECT_EQ(complement(union_of(a, b)), intersection(complement(a), complement(b)));
        EXPECT_EQ(complement(complement(a)), a);
        EXPECT_EQ(union_of(a, intersection(a, b)), a);
        EXPECT_EQ(intersection(a, union_of(a, b)), a);
        EXPECT_EQ(canonicalize(canonicalize(a)), a);
    }
}

TEST(IntegerSetProperty, SaturatedWordsAreStable) {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        auto s = testing::random_zexpr(rng, 2, 2).build(2);
        for (int k = 0; k < 20; ++k) {
            std::vector<Letter> w;
            const long len = testing::uniform(rng, 1, 7);
            for (long i = 0; i < len; ++i) w.push_back(static_cast<Letter>(testing::uniform(rng, 0, 3)));
            auto longer = w;
            longer.push_back(w.back());
            EXPECT_EQ(s.accepts(w), s.accepts(longer));
        }
    }
}

// A member of the projection has a witness of small norm for these magnitudes.
TEST(IntegerSetProperty, ProjectionAgainstBoundedWitness) {
    Rng rng(99);
    for (int t = 0; t < 30; ++t) {
        auto e = testing::random_zexpr(rng, 2, 1);
        auto s = e.build(2);
        const std::size_t i = static_cast<std::size_t>(testing::uniform(rng, 0, 1));
        auto p = project(s, i);
        for (long x = -8; x <= 8; ++x) {
            bool witnessed = false;
            for (long w = -16; w <= 16 && !witnessed; ++w) {
                witnessed = e.holds(i == 0 ? std::vector<long>{w, x} : std::vector<long>{x, w});
            }
            if (witnessed) {
                EXPECT_TRUE(p.contains({x}));
            }
            if (p.contains({x})) {
                // the bounded box can miss far witnesses only if the set is unbounded in w
                bool far = false;
                for (long w = 17; w <= 200 && !far && !witnessed; ++w) {
                    far = e.holds(i == 0 ? std::vector<long>{w, x} : std::vector<long>{x, w}) ||
                          e.holds(i == 0 ? std::vector<long>{-w, x} : std::vector<long>{x, -w});
                }
                EXPECT_TRUE(witnessed || far) << "x=" << x;
            }
        }
    }
}

TEST(IntersectsBox, MatchesIntersection) {
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        auto s = testing::random_zexpr(rng, 2, 2).build(2);
        std::vector<IntegerSet> box{constraint({1}, Relation::kLe, testing::uniform(rng, -3, 3)),
                                    constraint({-1}, Relation::kLe, testing::uniform(rng, -3, 3))};
        EXPECT_EQ(intersects_box(s, box), !intersection(s, product(box[0], box[1])).is_empty());
    }
}

}  // namespace
}  // namespace intdec
