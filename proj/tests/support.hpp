// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Seeded generators and independent oracles shared by the test binaries.
// Oracles here never call into the engine: they evaluate constraints with
// plain integers or exact rationals.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "intdec/compile.hpp"
#include "intdec/dbm.hpp"
#include "intdec/decimal.hpp"
#include "intdec/formula.hpp"
#include "intdec/idf.hpp"
#include "intdec/presburger.hpp"

namespace intdec::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

/// Vector of `n` integers in [lo, hi], not all zero when `nonzero`.
std::vector<long> random_coeffs(Rng& rng, std::size_t n, long bound, bool nonzero = true);

// ---------------------------------------------------------------- integers

/// A boolean combination of integer linear constraints together with its
/// direct evaluation.
struct ZExpr {
    enum class Op { kAtom, kNot, kAnd, kOr };
    Op op = Op::kAtom;
    std::vector<long> coeffs;
    bool equality = false;
    long constant = 0;
    std::vector<ZExpr> children;

    bool holds(const std::vector<long>& z) const;
    presburger::IntegerSet build(std::size_t n) const;
};

/// Random expression over n coordinates with |coeffs| <= 3, |const| <= 4.
ZExpr random_zexpr(Rng& rng, std::size_t n, int depth);

/// Every integer vector of dimension n with max-norm <= bound.
std::vector<std::vector<long>> integer_box(std::size_t n, long bound);

IntegerVector to_integers(const std::vector<long>& v);

// ---------------------------------------------------------------- decimals

/// Union of conjunctions of constraints over the cube, evaluated exactly.
struct DExpr {
    std::vector<std::vector<decimal::LinearConstraint>> regions;

    bool holds(const RationalVector& d) const;
    decimal::DecimalSet build(std::size_t n) const;
};

DExpr random_dexpr(Rng& rng, std::size_t n);

/// Every point of [0,1)^n whose coordinates have denominator `den`.
std::vector<RationalVector> fraction_grid(std::size_t n, long den);

bool satisfies(const decimal::LinearConstraint& c, const RationalVector& d);

// ---------------------------------------------------------------- formulas

/// Variable names used by the random formula generators, in context order.
inline const std::vector<std::string> kNames = {"x", "y", "z"};

/// Random quantifier-free formula over the first n names (all n occur free),
/// |coeffs| <= 3, |consts| <= 4.
frontend::FormulaPtr random_formula(Rng& rng, std::size_t n, int depth);

/// Randomized logically equivalent rewrite (De Morgan, double negation, atom
/// commutation and scaling, connective and conjunct reordering).
frontend::FormulaPtr rewrite(Rng& rng, const frontend::FormulaPtr& f);

/// Quantifier-free formula compiled to fixed-width integer arithmetic over
/// points scaled by a common denominator.
class ScaledEvaluator {
  public:
    ScaledEvaluator(const frontend::Formula& f, const std::vector<std::string>& names);
    /// Truth at the point num / den (componentwise).
    bool holds(const std::vector<std::int64_t>& num, std::int64_t den) const;

  private:
    struct Node {
        frontend::Formula::Kind kind;
        std::vector<std::int64_t> coeffs;
        frontend::Relation relation;
        std::int64_t constant = 0;
        std::vector<int> children;
    };
    int add(const frontend::Formula& f, const std::vector<std::string>& names);
    bool eval(int node, const std::vector<std::int64_t>& num, std::int64_t den) const;
    std::vector<Node> nodes_;
    int root_ = 0;
};

/// Exact evaluation of a quantifier-free formula at a rational point.
bool evaluate_at(const frontend::Formula& f, const std::vector<std::string>& names, const RationalVector& r);

/// Atoms of a quantifier-free formula.
std::vector<frontend::Atom> atoms_of(const frontend::Formula& f);

/// Values of `var` worth testing when the other variables are fixed: every
/// atom's crossing point, midpoints between consecutive crossings and one
/// step beyond the extremes. A one-variable linear condition holds somewhere
/// iff it holds at one of these (integers near them when `integral`).
std::vector<Rational> candidate_values(const std::vector<frontend::Atom>& atoms, const std::string& var,
                                       const std::map<std::string, Rational>& fixed, bool integral);

/// Random rational with |value| <= bound and denominator drawn from {1,2,3,4,6,8}.
Rational random_rational(Rng& rng, long bound);
RationalVector random_point(Rng& rng, std::size_t n, long bound);

std::map<std::string, Rational> assignment(const std::vector<std::string>& names, const RationalVector& r);

/// Context naming the first n variables, all real.
frontend::VarContext real_context(std::size_t n);

/// Cell lists identical entry by entry: structurally equal labels in the same
/// order and semantically equal decimal parts.
bool identical_cells(const IdfSet& a, const IdfSet& b);

// ---------------------------------------------------------------- DBMs

/// A parametric DBM whose parameter set is a small box cut by one optional
/// constraint, kept alongside the explicit list of its finite matrices.
struct ParamDbm {
    std::size_t n = 0;
    std::vector<bool> strict, infinite;
    std::vector<std::vector<long>> matrices;  // row-major (n+1)^2, infinite entries ignored
    presburger::IntegerSet phi;

    dbm::CpDbmPlus build() const { return dbm::CpDbmPlus(n, strict, infinite, phi); }
    /// Direct evaluation of the union at num / den, in 64-bit arithmetic.
    bool holds(const std::vector<std::int64_t>& num, std::int64_t den) const;
};

ParamDbm random_param_dbm(Rng& rng, std::size_t n);

/// Random DBM over n clocks with entries in [-3, 3], some infinite.
dbm::Dbm random_dbm(Rng& rng, std::size_t n);

/// Point with denominator dividing 24, as numerators over 24 and as rationals.
struct GridPoint {
    std::vector<std::int64_t> num;
    RationalVector value;
};
GridPoint random_grid_point(Rng& rng, std::size_t n, long bound);

}  // namespace intdec::testing
