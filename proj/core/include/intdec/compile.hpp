// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Compilation of formulas to integer-decimal sets. Each variable x is split
// as x = z + d with z integral and d in [0,1); an atom a.x REL c becomes a
// finite union over the integer carry k of s = a.d of pairs
// (integer atom over z, decimal region s ~ k).
#pragma once

#include <vector>

#include "intdec/formula.hpp"
#include "intdec/idf.hpp"

namespace intdec::frontend {

/// The (integer set, decimal set) pairs of the carry decomposition of
/// coeffs . x REL constant, before normalization. Pairs with an empty decimal
/// part are kept.
std::vector<SumPair> carry_pairs(const IntegerVector& coeffs, Relation relation, const Integer& constant);

/// Canonical set of x in R^n with coeffs . x REL constant.
IdfSet compile_atom(const IntegerVector& coeffs, Relation relation, const Integer& constant);

/// Set of assignments to ctx satisfying f. Integer-sorted context variables
/// are restricted to integer values.
IdfSet compile(const Formula& f, const VarContext& ctx);

/// Truth value of a closed formula. Throws SortError if f has free variables.
bool decide(const Formula& f);

}  // namespace intdec::frontend
