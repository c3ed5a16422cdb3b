// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Integer-decimal functions: a set R of real vectors is stored as a finite
// list of cells (Z_k, D_k) whose decimal parts partition [0,1)^n and whose
// integer labels are pairwise distinct, with R = union of Z_k + D_k. The
// decomposition of every real r into floor(r) + frac(r) makes this
// representation unique up to the syntax of the decimal parts.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "intdec/decimal.hpp"
#include "intdec/presburger.hpp"

namespace intdec {

using presburger::IntegerSet;
using decimal::DecimalSet;

struct Cell {
    IntegerSet zpart;
    DecimalSet dpart;
};

/// One summand Z + D of a set written as a finite union of sums.
using SumPair = std::pair<IntegerSet, DecimalSet>;

struct IdfStats {
    std::size_t cells = 0;
    std::size_t automaton_states = 0;
    std::size_t regions = 0;
};

class IdfSet {
  public:
    /// The empty subset of R^0.
    IdfSet() : IdfSet(empty(0)) {}

    /// Canonical IDF of the union of Z_i + D_i over all pairs.
    static IdfSet normalize(std::size_t dimension, std::span<const SumPair> pairs);
    static IdfSet empty(std::size_t dimension);
    static IdfSet universe(std::size_t dimension);
    /// Z^n, i.e. every decimal coordinate is zero.
    static IdfSet integers(std::size_t dimension);

    /// Merges cells with equal labels, drops empty decimal parts and sorts.
    /// The decimal parts must already partition the cube.
    static IdfSet from_cells(std::size_t dimension, std::vector<Cell> cells);

    std::size_t dimension() const { return dimension_; }
    const std::vector<Cell>& cells() const { return cells_; }

    /// Index of the cell whose decimal part holds `fraction` (in [0,1)^n).
    std::size_t locate(std::span<const Rational> fraction) const;
    bool contains(std::span<const Rational> point) const;
    bool is_empty() const;
    bool is_universal() const;
    /// Some member, built from the first cell with a nonempty label.
    std::optional<RationalVector> witness() const;
    IdfStats stats() const;

    /// Members whose decimal part is zero.
    IntegerSet integer_points() const;

    /// Throws Error describing the first violated representation invariant.
    void check_invariants() const;

  private:
    // Cells already known to partition the cube, as produced by the operations.
    static IdfSet from_partition(std::size_t dimension, std::vector<Cell> cells);
    friend IdfSet union_of(const IdfSet&, const IdfSet&);
    friend IdfSet intersection(const IdfSet&, const IdfSet&);
    friend IdfSet difference(const IdfSet&, const IdfSet&);
    friend IdfSet complement(const IdfSet&);
    friend IdfSet product(const IdfSet&, const IdfSet&);
    friend IdfSet reorder(const IdfSet&, std::span<const std::size_t>);

    IdfSet(std::size_t dimension, std::vector<Cell> cells) : dimension_(dimension), cells_(std::move(cells)) {}

    std::size_t dimension_ = 0;
    std::vector<Cell> cells_;
};

IdfSet union_of(const IdfSet& f, const IdfSet& g);
IdfSet intersection(const IdfSet& f, const IdfSet& g);
IdfSet difference(const IdfSet& f, const IdfSet& g);
IdfSet complement(const IdfSet& f);
IdfSet product(const IdfSet& f, const IdfSet& g);
IdfSet project(const IdfSet& f, std::size_t index);
IdfSet reorder(const IdfSet& f, std::span<const std::size_t> permutation);

/// Cell-by-cell comparison; equivalent to equality of the denoted sets.
bool equals(const IdfSet& f, const IdfSet& g);
bool subset(const IdfSet& f, const IdfSet& g);

/// Decimal coordinate `index` is zero; everything else unconstrained.
IdfSet integral_coordinate(std::size_t dimension, std::size_t index);

}  // namespace intdec
