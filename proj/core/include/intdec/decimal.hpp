// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Subsets of the decimal cube [0,1)^n given as finite unions of convex
// polyhedral regions with integer coefficients. All arithmetic is exact.
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "intdec/numeric.hpp"

namespace intdec::decimal {

enum class Relation { kLe, kLt, kEq };

/// coeffs . d  (<= | < | =)  constant
struct LinearConstraint {
    IntegerVector coeffs;
    Relation relation = Relation::kLe;
    Integer constant;

    bool satisfied_by(std::span<const Rational> point) const;

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

std::strong_ordering compare(const LinearConstraint& a, const LinearConstraint& b);

/// Conjunction of constraints. The cube constraints 0 <= d_i and d_i < 1 are
/// always part of the list.
class ConvexRegion {
  public:
    explicit ConvexRegion(std::size_t dimension = 0);
    ConvexRegion(std::size_t dimension, std::vector<LinearConstraint> constraints);

    std::size_t dimension() const { return dimension_; }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    /// Constraints other than the cube bounds.
    std::vector<LinearConstraint> proper_constraints() const;

    ConvexRegion intersect(const ConvexRegion& other) const;
    ConvexRegion with(const LinearConstraint& c) const;

    bool is_empty() const;
    bool contains(std::span<const Rational> point) const;
    std::optional<RationalVector> witness() const;

    friend bool operator==(const ConvexRegion&, const ConvexRegion&) = default;

  private:
    std::size_t dimension_;
    std::vector<LinearConstraint> constraints_;
};

bool is_cube_bound(const LinearConstraint& c);

class DecimalSet {
  public:
    explicit DecimalSet(std::size_t dimension = 0) : dimension_(dimension) {}

    static DecimalSet empty(std::size_t dimension) { return DecimalSet(dimension); }
    static DecimalSet full(std::size_t dimension);
    /// Region list with empty regions pruned.
    static DecimalSet from_regions(std::size_t dimension, std::vector<ConvexRegion> regions);
    static DecimalSet from_constraints(std::size_t dimension, std::vector<LinearConstraint> constraints);

    std::size_t dimension() const { return dimension_; }
    const std::vector<ConvexRegion>& regions() const { return regions_; }

    bool is_empty() const { return regions_.empty(); }
    /// Throws InvalidArgument when the point lies outside [0,1)^n.
    bool contains(std::span<const Rational> point) const;
    std::optional<RationalVector> witness() const;

  private:
    friend struct DecimalAccess;

    std::size_t dimension_;
    std::vector<ConvexRegion> regions_;
};

DecimalSet intersection(const DecimalSet& a, const DecimalSet& b);
DecimalSet union_of(const DecimalSet& a, const DecimalSet& b);
DecimalSet complement(const DecimalSet& a);
DecimalSet difference(const DecimalSet& a, const DecimalSet& b);

DecimalSet project(const DecimalSet& a, std::size_t index);
/// Result coordinate k is the input coordinate permutation[k].
DecimalSet reorder(const DecimalSet& a, std::span<const std::size_t> permutation);
DecimalSet product(const DecimalSet& a, const DecimalSet& b);

/// Drops regions contained in another region of the same set.
DecimalSet simplify(const DecimalSet& a);

bool is_empty(const DecimalSet& a);
bool subset(const DecimalSet& a, const DecimalSet& b);
bool equals(const DecimalSet& a, const DecimalSet& b);
bool disjoint(const DecimalSet& a, const DecimalSet& b);

}  // namespace intdec::decimal
