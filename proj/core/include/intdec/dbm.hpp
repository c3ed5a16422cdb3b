// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Difference bound matrices and their Presburger-parametric extension.
// Clock 0 is the fictive clock pinned to 0; entry (i, j) bounds r_i - r_j.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "intdec/decimal.hpp"
#include "intdec/formula.hpp"
#include "intdec/idf.hpp"
#include "intdec/numeric.hpp"
#include "intdec/presburger.hpp"

namespace intdec::dbm {

/// value (< | <=) or +infinity.
struct Bound {
    std::optional<Integer> value;  // nullopt is +infinity
    bool strict = false;

    static Bound infinity() { return {}; }
    static Bound le(Integer v) { return {std::move(v), false}; }
    static Bound lt(Integer v) { return {std::move(v), true}; }

    bool is_infinite() const { return !value.has_value(); }

    friend bool operator==(const Bound& a, const Bound& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
        return *a.value == *b.value && a.strict == b.strict;
    }
};

/// Sum of two bounds along a path: values add, strictness is inherited.
Bound operator+(const Bound& a, const Bound& b);
/// Whether a is strictly tighter than b.
bool tighter(const Bound& a, const Bound& b);

class Dbm {
  public:
    /// n clocks with every difference unconstrained (diagonal 0, non-strict).
    explicit Dbm(std::size_t n = 0);

    std::size_t clocks() const { return n_; }
    const Bound& at(std::size_t i, std::size_t j) const { return bounds_[i * (n_ + 1) + j]; }
    void set(std::size_t i, std::size_t j, Bound b) { bounds_.at(i * (n_ + 1) + j) = std::move(b); }

    /// Whether r (length n, clock 0 implicit) satisfies every bound.
    bool contains(std::span<const Rational> r) const;

    friend bool operator==(const Dbm&, const Dbm&) = default;

  private:
    std::size_t n_;
    std::vector<Bound> bounds_;
};

/// Shortest-path closure; nullopt when the constraints are unsatisfiable.
std::optional<Dbm> canonical(const Dbm& m);

/// The decimal set of points of the cube satisfying m.
decimal::DecimalSet to_decimal(const Dbm& m);

/// Union over parameter matrices c in phi of the DBM (c, relations).
/// Parameter c_i_j lives at coordinate i*(n+1)+j of phi. Entries marked
/// infinite are unconstrained whatever phi says.
class CpDbmPlus {
  public:
    CpDbmPlus(std::size_t n, std::vector<bool> strict, std::vector<bool> infinite, presburger::IntegerSet phi);

    std::size_t clocks() const { return n_; }
    bool strict(std::size_t i, std::size_t j) const { return strict_[i * (n_ + 1) + j]; }
    bool infinite(std::size_t i, std::size_t j) const { return infinite_[i * (n_ + 1) + j]; }
    const presburger::IntegerSet& phi() const { return phi_; }

    /// Finite off-diagonal entries (i, j) in row-major order.
    const std::vector<std::pair<std::size_t, std::size_t>>& kept() const { return kept_; }
    /// phi with the diagonal requirements 0 (< | <=) c_i_i imposed and every
    /// coordinate outside kept() projected away.
    const presburger::IntegerSet& reduced_phi() const { return reduced_; }

  private:
    std::size_t n_;
    std::vector<bool> strict_;
    std::vector<bool> infinite_;
    presburger::IntegerSet phi_;
    std::vector<std::pair<std::size_t, std::size_t>> kept_;
    presburger::IntegerSet reduced_;
};

/// m as a parametric DBM whose parameter set is the single matrix of m.
CpDbmPlus constant(const Dbm& m);

/// Parameter coordinate of entry (i, j).
inline std::size_t parameter_index(std::size_t n, std::size_t i, std::size_t j) { return i * (n + 1) + j; }

/// Z + to_decimal(m) as a parametric DBM: phi = { p | exists z in Z with
/// p_i_j = c_i_j + z_i - z_j, z_0 = 0 }. Bounds of m are first tightened to
/// the cube so that m describes a decimal set.
CpDbmPlus compose(const presburger::IntegerSet& z, const Dbm& m);

/// One term of the decomposition: the sign matrix of a weak order of the
/// fractional parts, its decimal region and integer label.
struct SignCell {
    std::vector<int> signs;       // (n+1)^2 entries, 0 or 1; infinite entries are 0
    decimal::DecimalSet region;   // D_m
    presburger::IntegerSet label;  // I_m
};

/// Decimal regions of the weak orders of {d_0 = 0, d_1, ..., d_n}.
std::vector<decimal::DecimalSet> order_regions(std::size_t n);

std::vector<SignCell> sign_cells(const CpDbmPlus& p);
IdfSet decompose(const CpDbmPlus& p);
/// Union of the decompositions.
IdfSet decompose(std::span<const CpDbmPlus> ps);

/// Exact membership of r (length n) in the parametric DBM.
bool contains(const CpDbmPlus& p, std::span<const Rational> r);

/// The reachable clock values of a two-clock timed automaton with maximal
/// constant M, in three forms.
struct TimedDemo {
    CpDbmPlus zones;                // abstracted zone family as one parametric DBM
    IdfSet shapes;                  // line, triangle and square shapes repeated along x
    frontend::FormulaPtr formula;   // free variables x and y
};

TimedDemo timed_demo(const Integer& max_constant);

}  // namespace intdec::dbm
