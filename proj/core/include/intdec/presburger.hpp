// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Presburger-definable subsets of Z^n represented by complete deterministic
// automata over the alphabet {0,1}^n.
//
// Encoding: a word b_0 ... b_{l-1} (l >= 1) is read least significant digit
// first in two's complement, so component k of the encoded vector is
//     sum_{i < l-1} b_i[k] 2^i  -  b_{l-1}[k] 2^{l-1}.
// The empty word encodes nothing. A letter is stored as an index in
// [0, 2^n) whose bit k carries the digit of component k; letters are ordered
// by that index. Every automaton is saturated: a nonempty word w ending with
// letter s is accepted iff w.s is accepted, hence acceptance only depends on
// the encoded vector.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "intdec/numeric.hpp"

namespace intdec::presburger {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Default bound on the number of coordinates of an automaton.
inline constexpr std::size_t kDefaultDimensionLimit = 12;

/// Process-wide capacity limit; operations producing a wider automaton throw
/// CapacityError.
std::size_t dimension_limit();
void set_dimension_limit(std::size_t limit);

enum class Relation { kLe, kEq };

/// coeffs . z  (<= | =)  constant
struct LinearConstraint {
    IntegerVector coeffs;
    Relation relation = Relation::kLe;
    Integer constant;
};

class IntegerSet {
  public:
    /// The empty subset of Z^0.
    IntegerSet();

    static IntegerSet empty(std::size_t dimension);
    static IntegerSet universe(std::size_t dimension);
    static IntegerSet from_constraint(const LinearConstraint& constraint);
    /// Conjunction of constraints of the given dimension (universe when empty).
    static IntegerSet from_constraints(std::size_t dimension, std::span<const LinearConstraint> constraints);
    static IntegerSet point(std::span<const Integer> z);

    /// Builds a set from a raw complete DFA. The result is not canonical until
    /// canonicalize() is applied. Throws InvalidArgument when the table is not a
    /// complete DFA or the initial state is accepting.
    static IntegerSet from_automaton(std::size_t dimension, State initial, std::vector<bool> accepting,
                                     std::vector<State> transitions);

    std::size_t dimension() const { return dimension_; }
    std::size_t letter_count() const { return std::size_t{1} << dimension_; }
    std::size_t state_count() const { return accepting_.size(); }
    State initial() const { return initial_; }
    bool accepting(State s) const { return accepting_[s] != 0; }
    State next(State s, Letter a) const { return transitions_[s * letter_count() + a]; }
    bool is_canonical() const { return canonical_; }

    bool contains(std::span<const Integer> z) const;
    bool contains(std::initializer_list<long> z) const;
    bool is_empty() const;
    bool is_universal() const;

    /// Some member of the set, found along a shortest accepted word.
    std::optional<IntegerVector> witness() const;

    /// Members with max-norm <= bound, in lexicographic order.
    std::vector<IntegerVector> enumerate(long bound) const;

    /// Runs the automaton; returns whether the word is accepted.
    bool accepts(std::span<const Letter> word) const;

    /// Structural comparison; meaningful as set comparison on canonical values.
    friend bool operator==(const IntegerSet&, const IntegerSet&) = default;
    friend std::strong_ordering operator<=>(const IntegerSet&, const IntegerSet&) = default;

  private:
    friend IntegerSet canonicalize(const IntegerSet& s);
    friend struct AutomatonAccess;

    std::size_t dimension_ = 0;
    State initial_ = 0;
    std::vector<std::uint8_t> accepting_;
    std::vector<State> transitions_;
    bool canonical_ = true;
};

/// Minimal complete DFA with breadth-first state numbering.
IntegerSet canonicalize(const IntegerSet& s);

IntegerSet complement(const IntegerSet& s);
IntegerSet intersection(const IntegerSet& a, const IntegerSet& b);
IntegerSet union_of(const IntegerSet& a, const IntegerSet& b);
IntegerSet difference(const IntegerSet& a, const IntegerSet& b);

/// Cartesian product; coordinates of a come first.
IntegerSet product(const IntegerSet& a, const IntegerSet& b);

/// Existential projection of coordinate `index`.
IntegerSet project(const IntegerSet& s, std::size_t index);

/// Result coordinate k is the input coordinate permutation[k].
IntegerSet reorder(const IntegerSet& s, std::span<const std::size_t> permutation);

/// Whether w accepted <=> w.s accepted for every nonempty word w ending
/// with letter s, the invariant making acceptance encoding-independent.
bool is_saturated(const IntegerSet& s);

bool is_empty(const IntegerSet& s);
bool equals(const IntegerSet& a, const IntegerSet& b);

/// Whether a intersected with the cartesian product of one-dimensional sets
/// is nonempty, explored lazily without building the intersection.
bool intersects_box(const IntegerSet& a, std::span<const IntegerSet> coordinate_sets);

/// Encodes z with `length` digits (length must be large enough).
std::vector<Letter> encode(std::span<const Integer> z, std::size_t length);
/// Shortest digit count able to encode every component of z.
std::size_t encoding_length(std::span<const Integer> z);
IntegerVector decode(std::span<const Letter> word, std::size_t dimension);

}  // namespace intdec::presburger
