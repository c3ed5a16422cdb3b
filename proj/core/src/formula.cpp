// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "intdec/formula.hpp"

#include <set>
#include <utility>

#include "intdec/error.hpp"

namespace intdec::frontend {

namespace {

FormulaPtr node(Formula::Kind kind, std::vector<FormulaPtr> children) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->children = std::move(children);
    return f;
}

FormulaPtr quantifier(Formula::Kind kind, std::string variable, Sort sort, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->variable = std::move(variable);
    f->sort = sort;
    f->children.push_back(std::move(body));
    return f;
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind) {
    case Formula::Kind::kAtom:
        for (const auto& [name, coeff] : f.atom.coeffs) {
            if (!bound.contains(name)) out.insert(name);
        }
        return;
    case Formula::Kind::kExists:
    case Formula::Kind::kForall: {
        const bool fresh = bound.insert(f.variable).second;
        collect_free(*f.children[0], bound, out);
        if (fresh) bound.erase(f.variable);
        return;
    }
    default:
        for (const auto& c : f.children) collect_free(*c, bound, out);
    }
}

const char* sort_name(Sort s) { return s == Sort::kInt ? "int" : "real"; }

void check(const Formula& f, std::map<std::string, Sort>& scope) {
    switch (f.kind) {
    case Formula::Kind::kAtom:
        for (const auto& [name, coeff] : f.atom.coeffs) {
            if (!scope.contains(name)) throw SortError("unbound variable '" + name + "'");
        }
        return;
    case Formula::Kind::kExists:
    case Formula::Kind::kForall: {
        auto it = scope.find(f.variable);
        if (it != scope.end()) {
            if (it->second != f.sort) {
                throw SortError("sort clash: '" + f.variable + "' is " + sort_name(it->second) +
                                " and rebound as " + sort_name(f.sort));
            }
            throw SortError("variable '" + f.variable + "' is bound twice");
        }
        scope.emplace(f.variable, f.sort);
        check(*f.children[0], scope);
        scope.erase(f.variable);
        return;
    }
    default:
        for (const auto& c : f.children) check(*c, scope);
    }
}

}  // namespace

FormulaPtr make_true() { return node(Formula::Kind::kTrue, {}); }
FormulaPtr make_false() { return node(Formula::Kind::kFalse, {}); }

FormulaPtr make_atom(Atom atom) {
    std::erase_if(atom.coeffs, [](const auto& entry) { return entry.second == 0; });
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::kAtom;
    f->atom = std::move(atom);
    return f;
}

FormulaPtr make_not(FormulaPtr f) { return node(Formula::Kind::kNot, {std::move(f)}); }
FormulaPtr make_and(FormulaPtr a, FormulaPtr b) { return node(Formula::Kind::kAnd, {std::move(a), std::move(b)}); }
FormulaPtr make_or(FormulaPtr a, FormulaPtr b) { return node(Formula::Kind::kOr, {std::move(a), std::move(b)}); }
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b) {
    return node(Formula::Kind::kImplies, {std::move(a), std::move(b)});
}
FormulaPtr make_iff(FormulaPtr a, FormulaPtr b) { return node(Formula::Kind::kIff, {std::move(a), std::move(b)}); }

FormulaPtr make_exists(std::string variable, Sort sort, FormulaPtr body) {
    return quantifier(Formula::Kind::kExists, std::move(variable), sort, std::move(body));
}

FormulaPtr make_forall(std::string variable, Sort sort, FormulaPtr body) {
    return quantifier(Formula::Kind::kForall, std::move(variable), sort, std::move(body));
}

VarContext free_vars(const Formula& f) {
    std::set<std::string> bound;
    std::set<std::string> names;
    collect_free(f, bound, names);
    VarContext ctx;
    for (const auto& n : names) ctx.push_back({n, Sort::kReal});
    return ctx;
}

void check_sorts(const Formula& f, const VarContext& ctx) {
    std::map<std::string, Sort> scope;
    for (const auto& v : ctx) {
        if (!scope.emplace(v.name, v.sort).second) throw SortError("variable '" + v.name + "' declared twice");
    }
    check(f, scope);
}

std::string to_string(const Atom& a) {
    std::string out;
    for (const auto& [name, coeff] : a.coeffs) {
        Integer magnitude = abs(coeff);
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        if (magnitude != 1) out += magnitude.get_str() + "*";
        out += name;
    }
    if (out.empty()) out = "0";
    switch (a.relation) {
    case Relation::kLe: out += " <= "; break;
    case Relation::kLt: out += " < "; break;
    case Relation::kEq: out += " = "; break;
    }
    return out + a.constant.get_str();
}

std::string to_string(const Formula& f) {
    auto binary = [&](const char* op) {
        return "(" + to_string(*f.children[0]) + " " + op + " " + to_string(*f.children[1]) + ")";
    };
    switch (f.kind) {
    case Formula::Kind::kTrue: return "true";
    case Formula::Kind::kFalse: return "false";
    case Formula::Kind::kAtom: return to_string(f.atom);
    case Formula::Kind::kNot: return "not " + to_string(*f.children[0]);
    case Formula::Kind::kAnd: return binary("and");
    case Formula::Kind::kOr: return binary("or");
    case Formula::Kind::kImplies: return binary("->");
    case Formula::Kind::kIff: return binary("<->");
    case Formula::Kind::kExists:
    case Formula::Kind::kForall:
        return std::string("(") + (f.kind == Formula::Kind::kExists ? "exists " : "forall ") + f.variable + ":" +
               sort_name(f.sort) + ". " + to_string(*f.children[0]) + ")";
    }
    return {};
}

bool evaluate(const Formula& f, const std::map<std::string, Rational>& assignment) {
    switch (f.kind) {
    case Formula::Kind::kTrue: return true;
    case Formula::Kind::kFalse: return false;
    case Formula::Kind::kAtom: {
        Rational lhs = 0;
        for (const auto& [name, coeff] : f.atom.coeffs) {
            auto it = assignment.find(name);
            if (it == assignment.end()) throw SortError("no value for variable '" + name + "'");
            lhs += Rational(coeff) * it->second;
        }
        const Rational rhs(f.atom.constant);
        switch (f.atom.relation) {
        case Relation::kLe: return lhs <= rhs;
        case Relation::kLt: return lhs < rhs;
        case Relation::kEq: return lhs == rhs;
        }
        return false;
    }
    case Formula::Kind::kNot: return !evaluate(*f.children[0], assignment);
    case Formula::Kind::kAnd: return evaluate(*f.children[0], assignment) && evaluate(*f.children[1], assignment);
    case Formula::Kind::kOr: return evaluate(*f.children[0], assignment) || evaluate(*f.children[1], assignment);
    case Formula::Kind::kImplies:
        return !evaluate(*f.children[0], assignment) || evaluate(*f.children[1], assignment);
    case Formula::Kind::kIff: return evaluate(*f.children[0], assignment) == evaluate(*f.children[1], assignment);
    case Formula::Kind::kExists:
    case Formula::Kind::kForall: throw SortError("cannot evaluate a quantified formula pointwise");
    }
    return false;
}

}  // namespace intdec::frontend
