// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "intdec/compile.hpp"

#include <string>

#include "intdec/error.hpp"

namespace intdec::frontend {

namespace {

using decimal::DecimalSet;
namespace dec = intdec::decimal;
namespace pres = intdec::presburger;

IntegerSet integer_atom(const IntegerVector& coeffs, pres::Relation relation, const Integer& constant) {
    return IntegerSet::from_constraint({coeffs, relation, constant});
}

IntegerVector negated(const IntegerVector& v) {
    IntegerVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = -v[k];
    return out;
}

class Compiler {
  public:
    explicit Compiler(const VarContext& ctx) {
        for (const auto& v : ctx) names_.push_back(v.name);
    }

    IdfSet run(const Formula& f) {
        const std::size_t n = names_.size();
        switch (f.kind) {
        case Formula::Kind::kTrue: return IdfSet::universe(n);
        case Formula::Kind::kFalse: return IdfSet::empty(n);
        case Formula::Kind::kAtom: return atom(f.atom);
        case Formula::Kind::kNot: return complement(run(*f.children[0]));
        case Formula::Kind::kAnd: return intersection(run(*f.children[0]), run(*f.children[1]));
        case Formula::Kind::kOr: return union_of(run(*f.children[0]), run(*f.children[1]));
        case Formula::Kind::kImplies: return union_of(complement(run(*f.children[0])), run(*f.children[1]));
        case Formula::Kind::kIff: {
            IdfSet a = run(*f.children[0]);
            IdfSet b = run(*f.children[1]);
            return complement(union_of(difference(a, b), difference(b, a)));
        }
        case Formula::Kind::kExists: return exists(f.variable, f.sort, *f.children[0], false);
        case Formula::Kind::kForall: return complement(exists(f.variable, f.sort, *f.children[0], true));
        }
        throw Error("unknown formula kind");
    }

  private:
    // exists x. body, or exists x. not body when `negate_body` is set
    IdfSet exists(const std::string& variable, Sort sort, const Formula& body, bool negate_body) {
        const std::size_t index = names_.size();
        if (index + 1 > pres::dimension_limit()) {
            throw CapacityError("formula needs " + std::to_string(index + 1) + " coordinates, the limit is " +
                                std::to_string(pres::dimension_limit()));
        }
        names_.push_back(variable);
        IdfSet inner = run(body);
        names_.pop_back();
        if (negate_body) inner = complement(inner);
        if (sort == Sort::kInt) inner = intersection(inner, integral_coordinate(index + 1, index));
        return project(inner, index);
    }

    IdfSet atom(const Atom& a) {
        IntegerVector coeffs(names_.size(), Integer(0));
        for (const auto& [name, c] : a.coeffs) {
            // innermost binding wins; rebinding is rejected by the sort check
            std::size_t k = names_.size();
            while (k > 0 && names_[k - 1] != name) --k;
            if (k == 0) throw SortError("unbound variable '" + name + "'");
            coeffs[k - 1] = c;
        }
        return compile_atom(coeffs, a.relation, a.constant);
    }

    std::vector<std::string> names_;
};

}  // namespace

std::vector<SumPair> carry_pairs(const IntegerVector& coeffs, Relation relation, const Integer& constant) {
    const std::size_t n = coeffs.size();
    Integer low = 0;
    Integer high = 0;
    for (const auto& a : coeffs) (a < 0 ? low : high) += a;
    const IntegerVector minus = negated(coeffs);
    // s = coeffs . d lies in [low, high], reaching high = 0 when no
    // coefficient is positive; each carry k covers s in [k, k+1)
    std::vector<SumPair> pairs;
    for (Integer k = low; k <= high; ++k) {
        const dec::LinearConstraint at_k{coeffs, Relation::kEq, k};
        const dec::LinearConstraint above_k{minus, Relation::kLt, -k};
        const dec::LinearConstraint from_k{minus, Relation::kLe, -k};
        const dec::LinearConstraint below_next{coeffs, Relation::kLt, k + 1};
        switch (relation) {
        case Relation::kLe:
            pairs.emplace_back(integer_atom(coeffs, pres::Relation::kLe, constant - k),
                               DecimalSet::from_constraints(n, {at_k}));
            pairs.emplace_back(integer_atom(coeffs, pres::Relation::kLe, constant - k - 1),
                               DecimalSet::from_constraints(n, {above_k, below_next}));
            break;
        case Relation::kLt:
            pairs.emplace_back(integer_atom(coeffs, pres::Relation::kLe, constant - k - 1),
                               DecimalSet::from_constraints(n, {from_k, below_next}));
            break;
        case Relation::kEq:
            pairs.emplace_back(integer_atom(coeffs, pres::Relation::kEq, constant - k),
                               DecimalSet::from_constraints(n, {at_k}));
            break;
        }
    }
    return pairs;
}

IdfSet compile_atom(const IntegerVector& coeffs, Relation relation, const Integer& constant) {
    return IdfSet::normalize(coeffs.size(), carry_pairs(coeffs, relation, constant));
}

IdfSet compile(const Formula& f, const VarContext& ctx) {
    check_sorts(f, ctx);
    if (ctx.size() > presburger::dimension_limit()) {
        throw CapacityError("formula needs " + std::to_string(ctx.size()) + " coordinates, the limit is " +
                            std::to_string(presburger::dimension_limit()));
    }
    IdfSet result = Compiler(ctx).run(f);
    for (std::size_t k = 0; k < ctx.size(); ++k) {
        if (ctx[k].sort == Sort::kInt) result = intersection(result, integral_coordinate(ctx.size(), k));
    }
    return result;
}

bool decide(const Formula& f) {
    VarContext free = free_vars(f);
    if (!free.empty()) {
        std::string names;
        for (const auto& v : free) names += (names.empty() ? "" : ", ") + v.name;
        throw SortError("formula is not closed; free variables: " + names);
    }
    return compile(f, {}).is_universal();
}

}  // namespace intdec::frontend
