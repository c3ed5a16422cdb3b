// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace intdec::testing {

using frontend::Formula;
using frontend::FormulaPtr;
using Kind = frontend::Formula::Kind;

std::vector<long> random_coeffs(Rng& rng, std::size_t n, long bound, bool nonzero) {
    std::vector<long> a(n);
    do {
        for (auto& x : a) x = uniform(rng, -bound, bound);
    } while (nonzero && n > 0 && std::all_of(a.begin(), a.end(), [](long x) { return x == 0; }));
    return a;
}

// ---------------------------------------------------------------- integers

bool ZExpr::holds(const std::vector<long>& z) const {
    switch (op) {
    case Op::kAtom: {
        long s = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * z[k];
        return equality ? s == constant : s <= constant;
    }
    case Op::kNot: return !children[0].holds(z);
    case Op::kAnd: return children[0].holds(z) && children[1].holds(z);
    case Op::kOr: return children[0].holds(z) || children[1].holds(z);
    }
    return false;
}

presburger::IntegerSet ZExpr::build(std::size_t n) const {
    switch (op) {
    case Op::kAtom: {
        presburger::LinearConstraint c{to_integers(coeffs),
                                       equality ? presburger::Relation::kEq : presburger::Relation::kLe, constant};
        return presburger::IntegerSet::from_constraint(c);
    }
    case Op::kNot: return presburger::complement(children[0].build(n));
    case Op::kAnd: return presburger::intersection(children[0].build(n), children[1].build(n));
    case Op::kOr: return presburger::union_of(children[0].build(n), children[1].build(n));
    }
    return presburger::IntegerSet::empty(n);
}

ZExpr random_zexpr(Rng& rng, std::size_t n, int depth) {
    ZExpr e;
    const long pick = depth <= 0 ? 0 : uniform(rng, 0, 3);
    if (pick == 0) {
        e.coeffs = random_coeffs(rng, n, 3);
        e.equality = uniform(rng, 0, 3) == 0;
        e.constant = uniform(rng, -4, 4);
        return e;
    }
    e.op = static_cast<ZExpr::Op>(pick);
    e.children.push_back(random_zexpr(rng, n, depth - 1));
    if (e.op != ZExpr::Op::kNot) e.children.push_back(random_zexpr(rng, n, depth - 1));
    return e;
}

std::vector<std::vector<long>> integer_box(std::size_t n, long bound) {
    std::vector<std::vector<long>> out;
    std::vector<long> z(n, -bound);
    while (true) {
        out.push_back(z);
        std::size_t k = 0;
        while (k < n && z[k] == bound) z[k++] = -bound;
        if (k == n) break;
        ++z[k];
    }
    return out;
}

IntegerVector to_integers(const std::vector<long>& v) {
    IntegerVector out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// ---------------------------------------------------------------- decimals

bool satisfies(const decimal::LinearConstraint& c, const RationalVector& d) {
    Rational s = 0;
    for (std::size_t k = 0; k < d.size(); ++k) s += Rational(c.coeffs[k]) * d[k];
    const Rational rhs(c.constant);
    switch (c.relation) {
    case decimal::Relation::kLe: return s <= rhs;
    case decimal::Relation::kLt: return s < rhs;
    case decimal::Relation::kEq: return s == rhs;
    }
    return false;
}

bool DExpr::holds(const RationalVector& d) const {
    return std::any_of(regions.begin(), regions.end(), [&](const auto& cs) {
        return std::all_of(cs.begin(), cs.end(), [&](const auto& c) { return satisfies(c, d); });
    });
}

decimal::DecimalSet DExpr::build(std::size_t n) const {
    std::vector<decimal::ConvexRegion> rs;
    for (const auto& cs : regions) rs.emplace_back(n, cs);
    return decimal::DecimalSet::from_regions(n, std::move(rs));
}

DExpr random_dexpr(Rng& rng, std::size_t n) {
    DExpr e;
    const long count = uniform(rng, 1, 2);
    for (long r = 0; r < count; ++r) {
        std::vector<decimal::LinearConstraint> cs;
        const long k = uniform(rng, 1, 4 / count);
        for (long i = 0; i < k; ++i) {
            decimal::LinearConstraint c;
            c.coeffs = to_integers(random_coeffs(rng, n, 3));
            c.relation = static_cast<decimal::Relation>(uniform(rng, 0, 5) == 0 ? 2 : uniform(rng, 0, 1));
            c.constant = uniform(rng, -4, 4);
            cs.push_back(std::move(c));
        }
        e.regions.push_back(std::move(cs));
    }
    return e;
}

std::vector<RationalVector> fraction_grid(std::size_t n, long den) {
    std::vector<RationalVector> out;
    for (const auto& z : integer_box(n, den)) {
        if (std::any_of(z.begin(), z.end(), [&](long v) { return v < 0 || v >= den; })) continue;
        RationalVector p;
        for (long v : z) p.emplace_back(v, den);
        for (auto& q : p) q.canonicalize();
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------- formulas

namespace {

FormulaPtr random_atom(Rng& rng, std::size_t n) {
    frontend::Atom a;
    const auto coeffs = random_coeffs(rng, n, 3);
    for (std::size_t k = 0; k < n; ++k) {
        if (coeffs[k] != 0) a.coeffs[kNames[k]] = coeffs[k];
    }
    const long rel = uniform(rng, 0, 4);
    a.relation = rel == 0 ? frontend::Relation::kEq : rel <= 2 ? frontend::Relation::kLe : frontend::Relation::kLt;
    a.constant = uniform(rng, -4, 4);
    return frontend::make_atom(std::move(a));
}

FormulaPtr random_tree(Rng& rng, std::size_t n, int depth) {
    if (depth <= 0 || uniform(rng, 0, 3) == 0) return random_atom(rng, n);
    switch (uniform(rng, 0, 5)) {
    case 0: return frontend::make_not(random_tree(rng, n, depth - 1));
    case 1:
    case 2: return frontend::make_and(random_tree(rng, n, depth - 1), random_tree(rng, n, depth - 1));
    case 3:
    case 4: return frontend::make_or(random_tree(rng, n, depth - 1), random_tree(rng, n, depth - 1));
    default: return frontend::make_implies(random_tree(rng, n, depth - 1), random_tree(rng, n, depth - 1));
    }
}

void collect(const Formula& f, std::set<std::string>& names) {
    if (f.kind == Kind::kAtom) {
        for (const auto& [v, c] : f.atom.coeffs) names.insert(v);
    }
    for (const auto& c : f.children) collect(*c, names);
}

frontend::Atom negated_atom(const frontend::Atom& a) {
    frontend::Atom b = a;
    for (auto& [v, c] : b.coeffs) c = -c;
    b.constant = -a.constant;
    return b;
}

// Equivalent forms of one atom built only from atoms and connectives.
FormulaPtr rewrite_atom(Rng& rng, const frontend::Atom& a) {
    using frontend::Relation;
    frontend::Atom scaled = a;
    const long k = uniform(rng, 1, 3);
    for (auto& [v, c] : scaled.coeffs) c *= k;
    scaled.constant *= k;
    const frontend::Atom flipped = negated_atom(scaled);  // -a.x  REL'  -c
    switch (uniform(rng, 0, 3)) {
    case 0: return frontend::make_atom(scaled);
    case 1:
        // commutation: a.x <= c  iff  not (c < a.x)
        if (a.relation == Relation::kLe) {
            frontend::Atom lt = flipped;
            lt.relation = Relation::kLt;
            return frontend::make_not(frontend::make_atom(lt));
        }
        if (a.relation == Relation::kLt) {
            frontend::Atom le = flipped;
            le.relation = Relation::kLe;
            return frontend::make_not(frontend::make_atom(le));
        }
        {
            frontend::Atom eq = flipped;  // -a.x = -c
            return frontend::make_atom(eq);
        }
    case 2:
        if (a.relation == Relation::kLe) {
            frontend::Atom lt = scaled, eq = scaled;
            lt.relation = Relation::kLt;
            eq.relation = Relation::kEq;
            return frontend::make_or(frontend::make_atom(eq), frontend::make_atom(lt));
        }
        if (a.relation == Relation::kEq) {
            frontend::Atom le = scaled, ge = flipped;
            le.relation = Relation::kLe;
            ge.relation = Relation::kLe;
            return frontend::make_and(frontend::make_atom(ge), frontend::make_atom(le));
        }
        return frontend::make_not(frontend::make_not(frontend::make_atom(scaled)));
    default: return frontend::make_not(frontend::make_not(frontend::make_atom(a)));
    }
}

}  // namespace

FormulaPtr random_formula(Rng& rng, std::size_t n, int depth) {
    while (true) {
        FormulaPtr f = random_tree(rng, n, depth);
        std::set<std::string> names;
        collect(*f, names);
        if (names.size() == n) return f;
    }
}

FormulaPtr rewrite(Rng& rng, const FormulaPtr& f) {
    using frontend::make_and;
    using frontend::make_not;
    using frontend::make_or;
    const auto& c = f->children;
    switch (f->kind) {
    case Kind::kAtom: return rewrite_atom(rng, f->atom);
    case Kind::kNot:
        if (c[0]->kind == Kind::kAnd && coin(rng)) {
            return make_or(make_not(rewrite(rng, c[0]->children[0])), make_not(rewrite(rng, c[0]->children[1])));
        }
        if (c[0]->kind == Kind::kOr && coin(rng)) {
            return make_and(make_not(rewrite(rng, c[0]->children[0])), make_not(rewrite(rng, c[0]->children[1])));
        }
        if (c[0]->kind == Kind::kNot && coin(rng)) return rewrite(rng, c[0]->children[0]);
        return make_not(rewrite(rng, c[0]));
    case Kind::kAnd:
        if (coin(rng)) return make_not(make_or(make_not(rewrite(rng, c[0])), make_not(rewrite(rng, c[1]))));
        return make_and(rewrite(rng, c[1]), rewrite(rng, c[0]));
    case Kind::kOr:
        if (coin(rng)) return make_not(make_and(make_not(rewrite(rng, c[1])), make_not(rewrite(rng, c[0]))));
        return make_or(rewrite(rng, c[1]), rewrite(rng, c[0]));
    case Kind::kImplies:
        if (coin(rng)) return make_or(rewrite(rng, c[1]), make_not(rewrite(rng, c[0])));
        return frontend::make_implies(make_not(rewrite(rng, c[1])), make_not(rewrite(rng, c[0])));
    case Kind::kIff:
        return make_and(frontend::make_implies(rewrite(rng, c[0]), rewrite(rng, c[1])),
                        frontend::make_implies(rewrite(rng, c[1]), rewrite(rng, c[0])));
    default: return f;
    }
}

ScaledEvaluator::ScaledEvaluator(const Formula& f, const std::vector<std::string>& names) { root_ = add(f, names); }

int ScaledEvaluator::add(const Formula& f, const std::vector<std::string>& names) {
    Node node{f.kind, std::vector<std::int64_t>(names.size(), 0), f.atom.relation, 0, {}};
    if (f.kind == Kind::kAtom) {
        for (const auto& [v, c] : f.atom.coeffs) {
            auto it = std::find(names.begin(), names.end(), v);
            if (it == names.end()) throw std::logic_error("unknown variable " + v);
            node.coeffs[static_cast<std::size_t>(it - names.begin())] = c.get_si();
        }
        node.constant = f.atom.constant.get_si();
    } else if (f.kind == Kind::kExists || f.kind == Kind::kForall) {
        throw std::logic_error("quantified formula");
    }
    for (const auto& c : f.children) node.children.push_back(add(*c, names));
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
}

bool ScaledEvaluator::holds(const std::vector<std::int64_t>& num, std::int64_t den) const {
    return eval(root_, num, den);
}

bool ScaledEvaluator::eval(int index, const std::vector<std::int64_t>& num, std::int64_t den) const {
    const Node& n = nodes_[static_cast<std::size_t>(index)];
    switch (n.kind) {
    case Kind::kTrue: return true;
    case Kind::kFalse: return false;
    case Kind::kAtom: {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < num.size(); ++k) s += n.coeffs[k] * num[k];
        const std::int64_t rhs = n.constant * den;
        switch (n.relation) {
        case frontend::Relation::kLe: return s <= rhs;
        case frontend::Relation::kLt: return s < rhs;
        case frontend::Relation::kEq: return s == rhs;
        }
        return false;
    }
    case Kind::kNot: return !eval(n.children[0], num, den);
    case Kind::kAnd: return eval(n.children[0], num, den) && eval(n.children[1], num, den);
    case Kind::kOr: return eval(n.children[0], num, den) || eval(n.children[1], num, den);
    case Kind::kImplies: return !eval(n.children[0], num, den) || eval(n.children[1], num, den);
    case Kind::kIff: return eval(n.children[0], num, den) == eval(n.children[1], num, den);
    default: return false;
    }
}

bool evaluate_at(const Formula& f, const std::vector<std::string>& names, const RationalVector& r) {
    switch (f.kind) {
    case Kind::kTrue: return true;
    case Kind::kFalse: return false;
    case Kind::kAtom: {
        Rational s = 0;
        for (const auto& [v, c] : f.atom.coeffs) {
            auto it = std::find(names.begin(), names.end(), v);
            if (it == names.end()) throw std::logic_error("unknown variable " + v);
            s += Rational(c) * r[static_cast<std::size_t>(it - names.begin())];
        }
        const Rational rhs(f.atom.constant);
        switch (f.atom.relation) {
        case frontend::Relation::kLe: return s <= rhs;
        case frontend::Relation::kLt: return s < rhs;
        case frontend::Relation::kEq: return s == rhs;
        }
        return false;
    }
    case Kind::kNot: return !evaluate_at(*f.children[0], names, r);
    case Kind::kAnd: return evaluate_at(*f.children[0], names, r) && evaluate_at(*f.children[1], names, r);
    case Kind::kOr: return evaluate_at(*f.children[0], names, r) || evaluate_at(*f.children[1], names, r);
    case Kind::kImplies: return !evaluate_at(*f.children[0], names, r) || evaluate_at(*f.children[1], names, r);
    case Kind::kIff: return evaluate_at(*f.children[0], names, r) == evaluate_at(*f.children[1], names, r);
    default: throw std::logic_error("quantified formula");
    }
}

std::vector<frontend::Atom> atoms_of(const Formula& f) {
    std::vector<frontend::Atom> out;
    if (f.kind == Kind::kAtom) out.push_back(f.atom);
    for (const auto& c : f.children) {
        auto sub = atoms_of(*c);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::vector<Rational> candidate_values(const std::vector<frontend::Atom>& atoms, const std::string& var,
                                       const std::map<std::string, Rational>& fixed, bool integral) {
    std::set<Rational> crossings;
    for (const auto& a : atoms) {
        auto it = a.coeffs.find(var);
        if (it == a.coeffs.end()) continue;
        Rational rest(a.constant);
        for (const auto& [v, c] : a.coeffs) {
            if (v != var) rest -= Rational(c) * fixed.at(v);
        }
        crossings.insert(rest / Rational(it->second));
    }
    std::vector<Rational> points(crossings.begin(), crossings.end());
    std::set<Rational> out;
    if (points.empty()) out.insert(0);
    for (std::size_t k = 0; k < points.size(); ++k) {
        out.insert(points[k]);
        if (k + 1 < points.size()) out.insert((points[k] + points[k + 1]) / 2);
    }
    if (!points.empty()) {
        out.insert(points.front() - 1);
        out.insert(points.back() + 1);
    }
    if (!integral) return {out.begin(), out.end()};
    std::set<Rational> ints;
    for (const auto& q : out) {
        const Integer fl = floor(q);
        for (long d = -1; d <= 2; ++d) ints.insert(Rational(fl + d));
    }
    return {ints.begin(), ints.end()};
}

Rational random_rational(Rng& rng, long bound) {
    static const long kDens[] = {1, 2, 3, 4, 6, 8};
    const long den = kDens[uniform(rng, 0, 5)];
    Rational q(uniform(rng, -bound * den, bound * den), den);
    q.canonicalize();
    return q;
}

RationalVector random_point(Rng& rng, std::size_t n, long bound) {
    RationalVector r;
    for (std::size_t k = 0; k < n; ++k) r.push_back(random_rational(rng, bound));
    return r;
}

std::map<std::string, Rational> assignment(const std::vector<std::string>& names, const RationalVector& r) {
    std::map<std::string, Rational> out;
    for (std::size_t k = 0; k < r.size(); ++k) out[names[k]] = r[k];
    return out;
}

frontend::VarContext real_context(std::size_t n) {
    frontend::VarContext ctx;
    for (std::size_t k = 0; k < n; ++k) ctx.push_back({kNames[k], frontend::Sort::kReal});
    return ctx;
}

bool identical_cells(const IdfSet& a, const IdfSet& b) {
    if (a.dimension() != b.dimension() || a.cells().size() != b.cells().size()) return false;
    for (std::size_t k = 0; k < a.cells().size(); ++k) {
        if (!(a.cells()[k].zpart == b.cells()[k].zpart)) return false;
        if (!decimal::equals(a.cells()[k].dpart, b.cells()[k].dpart)) return false;
    }
    return true;
}

// ---------------------------------------------------------------- DBMs

bool ParamDbm::holds(const std::vector<std::int64_t>& num, std::int64_t den) const {
    auto value = [&](std::size_t i) { return i == 0 ? std::int64_t{0} : num[i - 1]; };
    for (const auto& c : matrices) {
        bool inside = true;
        for (std::size_t i = 0; i <= n && inside; ++i) {
            for (std::size_t j = 0; j <= n && inside; ++j) {
                const std::size_t k = i * (n + 1) + j;
                if (infinite[k]) continue;
                const std::int64_t diff = value(i) - value(j);
                const std::int64_t bound = c[k] * den;
                inside = strict[k] ? diff < bound : diff <= bound;
            }
        }
        if (inside) return true;
    }
    return false;
}

ParamDbm random_param_dbm(Rng& rng, std::size_t n) {
    ParamDbm p;
    p.n = n;
    const std::size_t params = (n + 1) * (n + 1);
    p.strict.resize(params);
    p.infinite.resize(params);
    std::vector<long> lo(params), hi(params);
    std::vector<presburger::LinearConstraint> cs;
    auto bound = [&](std::size_t k, long sign, long c) {
        IntegerVector a(params, Integer(0));
        a[k] = sign;
        cs.push_back({std::move(a), presburger::Relation::kLe, Integer(c)});
    };
    for (std::size_t k = 0; k < params; ++k) {
        const bool diagonal = k / (n + 1) == k % (n + 1);
        p.strict[k] = uniform(rng, 0, 3) == 0;
        p.infinite[k] = !diagonal && uniform(rng, 0, 3) == 0;
        lo[k] = diagonal ? uniform(rng, -1, 0) : uniform(rng, -2, 2);
        hi[k] = lo[k] + uniform(rng, 0, 1);
        bound(k, 1, hi[k]);
        bound(k, -1, -lo[k]);
    }
    // optional cut a.c <= b over two finite coordinates
    std::vector<std::size_t> finite;
    for (std::size_t k = 0; k < params; ++k) {
        if (!p.infinite[k]) finite.push_back(k);
    }
    std::vector<long> cut(params, 0);
    long cut_bound = 0;
    if (finite.size() >= 2 && coin(rng)) {
        std::shuffle(finite.begin(), finite.end(), rng);
        cut[finite[0]] = uniform(rng, 0, 1) * 2 - 1;
        cut[finite[1]] = uniform(rng, 0, 1) * 2 - 1;
        cut_bound = uniform(rng, -2, 2);
        cs.push_back({to_integers(cut), presburger::Relation::kLe, Integer(cut_bound)});
    }
    p.phi = presburger::IntegerSet::from_constraints(params, cs);
    // enumerate the box; infinite coordinates range over their box too
    std::vector<long> c(lo);
    while (true) {
        long dot = 0;
        for (std::size_t k = 0; k < params; ++k) dot += cut[k] * c[k];
        if (dot <= cut_bound) p.matrices.push_back(c);
        std::size_t k = 0;
        while (k < params && c[k] == hi[k]) c[k] = lo[k], ++k;
        if (k == params) break;
        ++c[k];
    }
    return p;
}

dbm::Dbm random_dbm(Rng& rng, std::size_t n) {
    dbm::Dbm m(n);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            if (i == j || uniform(rng, 0, 3) == 0) continue;
            const Integer v(uniform(rng, -3, 3));
            m.set(i, j, coin(rng) ? dbm::Bound::lt(v) : dbm::Bound::le(v));
        }
    }
    return m;
}

GridPoint random_grid_point(Rng& rng, std::size_t n, long bound) {
    GridPoint g;
    for (std::size_t k = 0; k < n; ++k) {
        g.num.push_back(uniform(rng, -24 * bound, 24 * bound));
        Rational q(g.num.back(), 24);
        q.canonicalize();
        g.value.push_back(q);
    }
    return g;
}

}  // namespace intdec::testing
