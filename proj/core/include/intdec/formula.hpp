// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Formulas of the first-order theory of reals and integers with addition
// and order. Atoms are kept normalized as  sum coeffs[v] * v  REL  constant
// with integer coefficients and REL one of <=, <, =.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "intdec/decimal.hpp"
#include "intdec/numeric.hpp"

namespace intdec::frontend {

enum class Sort { kReal, kInt };

using Relation = decimal::Relation;

struct Atom {
    std::map<std::string, Integer> coeffs;  // zero coefficients are never stored
    Relation relation = Relation::kLe;
    Integer constant;

    friend bool operator==(const Atom&, const Atom&) = default;
};

struct SourcePos {
    std::size_t line = 0;  // 1-based; 0 for formulas built in code
    std::size_t column = 0;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kImplies, kIff, kExists, kForall };

    Kind kind = Kind::kTrue;
    Atom atom;                         // kAtom
    std::string variable;              // kExists, kForall
    Sort sort = Sort::kReal;           // kExists, kForall
    std::vector<FormulaPtr> children;  // one for kNot and quantifiers, two for binary connectives
    SourcePos pos;
};

FormulaPtr make_true();
FormulaPtr make_false();
FormulaPtr make_atom(Atom atom);
FormulaPtr make_not(FormulaPtr f);
FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
FormulaPtr make_or(FormulaPtr a, FormulaPtr b);
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr make_iff(FormulaPtr a, FormulaPtr b);
FormulaPtr make_exists(std::string variable, Sort sort, FormulaPtr body);
FormulaPtr make_forall(std::string variable, Sort sort, FormulaPtr body);

struct Variable {
    std::string name;
    Sort sort = Sort::kReal;

    friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered free variables; variable k owns coordinate k of a compiled set.
using VarContext = std::vector<Variable>;

/// Parses formula text. Throws ParseError with line and column.
///
///   formula := ("exists" | "forall") ident ":" ("real" | "int") "." formula | iff
///   iff     := imp {("<->" | "iff") imp}
///   imp     := or [("->" | "implies") imp]
///   or      := and {"or" and}
///   and     := not {"and" not}
///   not     := "not" not | "(" formula ")" | "true" | "false" | atom
///   atom    := term rel term {rel term}
///   term    := ["-"] addend {("+" | "-") addend}
///   addend  := [number ["*"]] ident | number
///   number  := integer | integer "/" integer | "(" ["-"] number ")"
///
/// ">=" and ">" are flipped, "!=" becomes a disjunction of "<" and ">", and a
/// chain a <= b < c is the conjunction of its links. "#" starts a comment.
FormulaPtr parse(std::string_view text);

/// Free variables in alphabetical order, all of sort real.
VarContext free_vars(const Formula& f);

/// Text that parses back to an equivalent formula.
std::string to_string(const Formula& f);
std::string to_string(const Atom& a);

/// Exact truth value of a quantifier-free formula. Throws SortError on a
/// quantifier or a variable missing from the assignment.
bool evaluate(const Formula& f, const std::map<std::string, Rational>& assignment);

/// Throws SortError when a free variable is missing from ctx or a variable
/// is bound twice along one path (including rebinding a context variable).
void check_sorts(const Formula& f, const VarContext& ctx);

}  // namespace intdec::frontend
