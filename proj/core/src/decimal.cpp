// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "intdec/decimal.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "fourier_motzkin.hpp"
#include "intdec/error.hpp"

namespace intdec::decimal {

namespace {

void check_same_dimension(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        throw DimensionError(std::string(op) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

std::vector<LinearConstraint> cube_bounds(std::size_t n) {
    std::vector<LinearConstraint> out;
    for (std::size_t k = 0; k < n; ++k) {
        LinearConstraint lower{IntegerVector(n, 0), Relation::kLe, 0};
        lower.coeffs[k] = -1;
        LinearConstraint upper{IntegerVector(n, 0), Relation::kLt, 1};
        upper.coeffs[k] = 1;
        out.push_back(std::move(lower));
        out.push_back(std::move(upper));
    }
    return out;
}

const char* relation_order(Relation r) {
    switch (r) {
    case Relation::kLe: return "a";
    case Relation::kLt: return "b";
    case Relation::kEq: return "c";
    }
    return "";
}

std::vector<LinearConstraint> negate(const LinearConstraint& c) {
    IntegerVector neg(c.coeffs.size());
    for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -c.coeffs[k];
    switch (c.relation) {
    case Relation::kLe: return {LinearConstraint{neg, Relation::kLt, -c.constant}};
    case Relation::kLt: return {LinearConstraint{neg, Relation::kLe, -c.constant}};
    case Relation::kEq:
        return {LinearConstraint{c.coeffs, Relation::kLt, c.constant},
                LinearConstraint{neg, Relation::kLt, -c.constant}};
    }
    return {};
}

// Regions whose union is the complement of r inside the cube (not pruned).
std::vector<ConvexRegion> complement_pieces(const ConvexRegion& r) {
    std::vector<ConvexRegion> pieces;
    for (const auto& c : r.proper_constraints()) {
        for (auto& n : negate(c)) pieces.emplace_back(r.dimension(), std::vector<LinearConstraint>{std::move(n)});
    }
    return pieces;
}

bool region_subset(const ConvexRegion& a, const ConvexRegion& b) {
    for (const auto& c : b.proper_constraints()) {
        for (const auto& n : negate(c)) {
            if (!a.with(n).is_empty()) return false;
        }
    }
    return true;
}

// A region seen as one interval per primitive linear form f (first nonzero
// coefficient positive): lo (<|<=) f.d (<|<=) hi.
struct Interval {
    std::optional<Rational> lo, hi;  // nullopt is unbounded
    bool lo_strict = false, hi_strict = false;

    friend bool operator==(const Interval&, const Interval&) = default;
};
using FormMap = std::map<IntegerVector, Interval>;

FormMap forms_of(const ConvexRegion& r) {
    FormMap out;
    for (const auto& c : r.constraints()) {
        Integer g = 0;
        for (const auto& a : c.coeffs) g = gcd(g, a);
        if (g == 0) continue;
        IntegerVector f = c.coeffs;
        for (auto& a : f) a /= g;
        const bool flip = *std::find_if(f.begin(), f.end(), [](const Integer& a) { return a != 0; }) < 0;
        if (flip) {
            for (auto& a : f) a = -a;
        }
        Rational bound(c.constant, g);
        bound.canonicalize();
        Interval& iv = out[f];
        const bool strict = c.relation == Relation::kLt;
        auto tighten_hi = [&](const Rational& v, bool st) {
            if (!iv.hi || v < *iv.hi || (v == *iv.hi && st)) {
                iv.hi = v;
                iv.hi_strict = st;
            }
        };
        auto tighten_lo = [&](const Rational& v, bool st) {
            if (!iv.lo || v > *iv.lo || (v == *iv.lo && st)) {
                iv.lo = v;
                iv.lo_strict = st;
            }
        };
        if (c.relation == Relation::kEq) {
            tighten_hi(flip ? Rational(-bound) : bound, false);
            tighten_lo(flip ? Rational(-bound) : bound, false);
        } else if (flip) {
            tighten_lo(-bound, strict);
        } else {
            tighten_hi(bound, strict);
        }
    }
    return out;
}

// Union of two intervals when it is itself an interval.
std::optional<Interval> join(const Interval& a, const Interval& b) {
    auto gap = [](const Interval& below, const Interval& above) {
        return below.hi && above.lo &&
               (*below.hi < *above.lo || (*below.hi == *above.lo && below.hi_strict && above.lo_strict));
    };
    if (gap(a, b) || gap(b, a)) return std::nullopt;
    Interval h;
    if (a.lo && b.lo) {
        h.lo = std::min(*a.lo, *b.lo);
        h.lo_strict = (*a.lo == *h.lo ? a.lo_strict : true) && (*b.lo == *h.lo ? b.lo_strict : true);
    }
    if (a.hi && b.hi) {
        h.hi = std::max(*a.hi, *b.hi);
        h.hi_strict = (*a.hi == *h.hi ? a.hi_strict : true) && (*b.hi == *h.hi ? b.hi_strict : true);
    }
    return h;
}

// The forms of a and b differ in at most one interval whose join exists.
std::optional<FormMap> merge_forms(const FormMap& a, const FormMap& b) {
    static const Interval unbounded;
    std::optional<IntegerVector> differing;
    auto note = [&](const IntegerVector& f, const Interval& x, const Interval& y) {
        if (x == y) return true;
        if (differing) return false;
        differing = f;
        return true;
    };
    for (const auto& [f, iv] : a) {
        auto it = b.find(f);
        if (!note(f, iv, it == b.end() ? unbounded : it->second)) return std::nullopt;
    }
    for (const auto& [f, iv] : b) {
        if (!a.contains(f) && !note(f, unbounded, iv)) return std::nullopt;
    }
    FormMap out = a;
    if (!differing) return out;
    auto ia = a.find(*differing);
    auto ib = b.find(*differing);
    auto joined = join(ia == a.end() ? unbounded : ia->second, ib == b.end() ? unbounded : ib->second);
    if (!joined) return std::nullopt;
    out[*differing] = *joined;
    return out;
}

ConvexRegion region_of(std::size_t dimension, const FormMap& forms) {
    std::vector<LinearConstraint> cs;
    auto scaled = [](const IntegerVector& f, const Rational& v, bool negate) {
        IntegerVector a = f;
        for (auto& x : a) x *= negate ? Integer(-v.get_den()) : Integer(v.get_den());
        return std::make_pair(a, negate ? Integer(-v.get_num()) : Integer(v.get_num()));
    };
    for (const auto& [f, iv] : forms) {
        if (iv.lo && iv.hi && *iv.lo == *iv.hi) {
            auto [a, c] = scaled(f, *iv.lo, false);
            cs.push_back({a, Relation::kEq, c});
            continue;
        }
        if (iv.hi) {
            auto [a, c] = scaled(f, *iv.hi, false);
            cs.push_back({a, iv.hi_strict ? Relation::kLt : Relation::kLe, c});
        }
        if (iv.lo) {
            auto [a, c] = scaled(f, *iv.lo, true);
            cs.push_back({a, iv.lo_strict ? Relation::kLt : Relation::kLe, c});
        }
    }
    return ConvexRegion(dimension, std::move(cs));
}

// Merges pairs of regions whose union is convex because they only differ
// along one linear form.
std::vector<ConvexRegion> coalesce(std::size_t dimension, const std::vector<ConvexRegion>& regions) {
    std::vector<FormMap> forms;
    for (const auto& r : regions) forms.push_back(forms_of(r));
    bool changed = forms.size() > 1;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < forms.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < forms.size(); ++j) {
                if (auto m = merge_forms(forms[i], forms[j])) {
                    forms[i] = std::move(*m);
                    forms.erase(forms.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                    break;
                }
            }
        }
    }
    if (forms.size() == regions.size()) return regions;
    std::vector<ConvexRegion> out;
    for (const auto& f : forms) out.push_back(region_of(dimension, f));
    return out;
}

void push_unique(std::vector<ConvexRegion>& regions, ConvexRegion r) {
    if (std::find(regions.begin(), regions.end(), r) == regions.end()) regions.push_back(std::move(r));
}

}  // namespace

struct DecimalAccess {
    // Every region must already be known to be nonempty.
    static DecimalSet unchecked(std::size_t dimension, std::vector<ConvexRegion> regions) {
        DecimalSet s(dimension);
        for (auto& r : regions) push_unique(s.regions_, std::move(r));
        return s;
    }
};

// ---------------------------------------------------------------------------

bool LinearConstraint::satisfied_by(std::span<const Rational> point) const {
    Rational lhs = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] != 0) lhs += Rational(coeffs[k]) * point[k];
    }
    switch (relation) {
    case Relation::kLe: return lhs <= constant;
    case Relation::kLt: return lhs < constant;
    case Relation::kEq: return lhs == constant;
    }
    return false;
}

std::strong_ordering compare(const LinearConstraint& a, const LinearConstraint& b) {
    if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int r = std::string(relation_order(a.relation)).compare(relation_order(b.relation)); r != 0) {
        return r < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.constant != b.constant) {
        return a.constant < b.constant ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool is_cube_bound(const LinearConstraint& c) {
    std::size_t nonzero = 0;
    const Integer* coefficient = nullptr;
    for (const auto& a : c.coeffs) {
        if (a != 0) {
            ++nonzero;
            coefficient = &a;
        }
    }
    if (nonzero != 1) return false;
    if (*coefficient == -1) return c.relation == Relation::kLe && c.constant == 0;
    if (*coefficient == 1) return c.relation == Relation::kLt && c.constant == 1;
    return false;
}

// ---------------------------------------------------------------------------
// ConvexRegion
// ---------------------------------------------------------------------------

ConvexRegion::ConvexRegion(std::size_t dimension) : ConvexRegion(dimension, {}) {}

ConvexRegion::ConvexRegion(std::size_t dimension, std::vector<LinearConstraint> constraints)
    : dimension_(dimension), constraints_(std::move(constraints)) {
    for (const auto& c : constraints_) {
        if (c.coeffs.size() != dimension_) throw DimensionError("region constraint has the wrong dimension");
    }
    for (auto& c : cube_bounds(dimension_)) constraints_.push_back(std::move(c));
    if (!fm::tidy(constraints_)) {
        constraints_ = cube_bounds(dimension_);
        constraints_.push_back(LinearConstraint{IntegerVector(dimension_, 0), Relation::kLe, -1});
    }
}

std::vector<LinearConstraint> ConvexRegion::proper_constraints() const {
    std::vector<LinearConstraint> out;
    for (const auto& c : constraints_) {
        if (!is_cube_bound(c)) out.push_back(c);
    }
    return out;
}

ConvexRegion ConvexRegion::intersect(const ConvexRegion& other) const {
    check_same_dimension(dimension_, other.dimension_, "region intersection");
    std::vector<LinearConstraint> all = constraints_;
    all.insert(all.end(), other.constraints_.begin(), other.constraints_.end());
    return ConvexRegion(dimension_, std::move(all));
}

ConvexRegion ConvexRegion::with(const LinearConstraint& c) const {
    std::vector<LinearConstraint> all = constraints_;
    all.push_back(c);
    return ConvexRegion(dimension_, std::move(all));
}

bool ConvexRegion::is_empty() const { return !fm::feasible(constraints_, dimension_); }

bool ConvexRegion::contains(std::span<const Rational> point) const {
    if (point.size() != dimension_) throw DimensionError("region contains: wrong point dimension");
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const LinearConstraint& c) { return c.satisfied_by(point); });
}

std::optional<RationalVector> ConvexRegion::witness() const { return fm::solve(constraints_, dimension_); }

// ---------------------------------------------------------------------------
// DecimalSet
// ---------------------------------------------------------------------------

DecimalSet DecimalSet::full(std::size_t dimension) {
    DecimalSet s(dimension);
    s.regions_.emplace_back(dimension);
    return s;
}

DecimalSet DecimalSet::from_regions(std::size_t dimension, std::vector<ConvexRegion> regions) {
    DecimalSet s(dimension);
    for (auto& r : regions) {
        check_same_dimension(dimension, r.dimension(), "from_regions");
        if (!r.is_empty()) push_unique(s.regions_, std::move(r));
    }
    return s;
}

DecimalSet DecimalSet::from_constraints(std::size_t dimension, std::vector<LinearConstraint> constraints) {
    std::vector<ConvexRegion> regions;
    regions.emplace_back(dimension, std::move(constraints));
    return from_regions(dimension, std::move(regions));
}

bool DecimalSet::contains(std::span<const Rational> point) const {
    if (point.size() != dimension_) throw DimensionError("contains: wrong point dimension");
    for (const auto& p : point) {
        if (p < 0 || p >= 1) throw InvalidArgument("contains: point outside the decimal cube");
    }
    return std::any_of(regions_.begin(), regions_.end(), [&](const ConvexRegion& r) { return r.contains(point); });
}

std::optional<RationalVector> DecimalSet::witness() const {
    for (const auto& r : regions_) {
        if (auto w = r.witness()) return w;
    }
    return std::nullopt;
}

DecimalSet intersection(const DecimalSet& a, const DecimalSet& b) {
    check_same_dimension(a.dimension(), b.dimension(), "intersection");
    std::vector<ConvexRegion> out;
    for (const auto& ra : a.regions()) {
        for (const auto& rb : b.regions()) out.push_back(ra.intersect(rb));
    }
    return DecimalSet::from_regions(a.dimension(), std::move(out));
}

DecimalSet union_of(const DecimalSet& a, const DecimalSet& b) {
    check_same_dimension(a.dimension(), b.dimension(), "union");
    std::vector<ConvexRegion> out = a.regions();
    for (const auto& r : b.regions()) push_unique(out, r);
    // operands hold no empty regions
    return simplify(DecimalAccess::unchecked(a.dimension(), std::move(out)));
}

DecimalSet difference(const DecimalSet& a, const DecimalSet& b) {
    check_same_dimension(a.dimension(), b.dimension(), "difference");
    std::vector<ConvexRegion> current = a.regions();
    for (const auto& rb : b.regions()) {
        std::vector<ConvexRegion> next;
        const auto pieces = complement_pieces(rb);
        for (const auto& r : current) {
            ConvexRegion overlap = r.intersect(rb);
            if (overlap.is_empty()) {
                push_unique(next, r);
                continue;
            }
            for (const auto& p : pieces) {
                ConvexRegion q = r.intersect(p);
                if (!q.is_empty()) push_unique(next, std::move(q));
            }
        }
        current = std::move(next);
        if (current.empty()) break;
    }
    return simplify(DecimalAccess::unchecked(a.dimension(), std::move(current)));
}

DecimalSet complement(const DecimalSet& a) { return difference(DecimalSet::full(a.dimension()), a); }

DecimalSet project(const DecimalSet& a, std::size_t index) {
    const std::size_t n = a.dimension();
    if (index >= n) throw InvalidArgument("project: coordinate " + std::to_string(index) + " out of range");
    std::vector<ConvexRegion> out;
    for (const auto& r : a.regions()) {
        auto eliminated = fm::eliminate(r.constraints(), index);
        if (!eliminated) continue;
        out.emplace_back(n - 1, fm::drop_column(*eliminated, index));
    }
    // projections of nonempty regions are nonempty
    return simplify(DecimalAccess::unchecked(n - 1, std::move(out)));
}

DecimalSet reorder(const DecimalSet& a, std::span<const std::size_t> permutation) {
    const std::size_t n = a.dimension();
    if (permutation.size() != n) throw InvalidArgument("reorder: permutation has wrong length");
    std::vector<char> used(n, 0);
    for (std::size_t p : permutation) {
        if (p >= n || used[p]) throw InvalidArgument("reorder: not a permutation");
        used[p] = 1;
    }
    std::vector<ConvexRegion> out;
    for (const auto& r : a.regions()) {
        std::vector<LinearConstraint> cs;
        for (const auto& c : r.constraints()) {
            LinearConstraint moved{IntegerVector(n), c.relation, c.constant};
            for (std::size_t k = 0; k < n; ++k) moved.coeffs[k] = c.coeffs[permutation[k]];
            cs.push_back(std::move(moved));
        }
        out.emplace_back(n, std::move(cs));
    }
    return DecimalSet::from_regions(n, std::move(out));
}

DecimalSet product(const DecimalSet& a, const DecimalSet& b) {
    const std::size_t n1 = a.dimension();
    const std::size_t n2 = b.dimension();
    std::vector<ConvexRegion> out;
    for (const auto& ra : a.regions()) {
        for (const auto& rb : b.regions()) {
            std::vector<LinearConstraint> cs;
            for (const auto& c : ra.constraints()) {
                LinearConstraint w{c.coeffs, c.relation, c.constant};
                w.coeffs.resize(n1 + n2, 0);
                cs.push_back(std::move(w));
            }
            for (const auto& c : rb.constraints()) {
                LinearConstraint w{IntegerVector(n1, 0), c.relation, c.constant};
                w.coeffs.insert(w.coeffs.end(), c.coeffs.begin(), c.coeffs.end());
                cs.push_back(std::move(w));
            }
            out.emplace_back(n1 + n2, std::move(cs));
        }
    }
    return DecimalSet::from_regions(n1 + n2, std::move(out));
}

DecimalSet simplify(const DecimalSet& a) {
    const std::vector<ConvexRegion> regions = coalesce(a.dimension(), a.regions());
    // a region can only lie inside regions holding its witness point
    std::vector<RationalVector> witnesses;
    witnesses.reserve(regions.size());
    for (const auto& r : regions) witnesses.push_back(r.witness().value_or(RationalVector{}));
    std::vector<char> dropped(regions.size(), 0);
    for (std::size_t i = 0; i < regions.size(); ++i) {
        for (std::size_t j = 0; j < regions.size() && !dropped[i]; ++j) {
            if (i == j || dropped[j]) continue;
            if (!witnesses[i].empty() && !regions[j].contains(witnesses[i])) continue;
            if (region_subset(regions[i], regions[j])) dropped[i] = 1;
        }
    }
    std::vector<ConvexRegion> kept;
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (!dropped[i]) kept.push_back(regions[i]);
    }
    return DecimalAccess::unchecked(a.dimension(), std::move(kept));
}

bool is_empty(const DecimalSet& a) { return a.is_empty(); }

bool subset(const DecimalSet& a, const DecimalSet& b) { return difference(a, b).is_empty(); }

bool equals(const DecimalSet& a, const DecimalSet& b) {
    check_same_dimension(a.dimension(), b.dimension(), "equals");
    return subset(a, b) && subset(b, a);
}

bool disjoint(const DecimalSet& a, const DecimalSet& b) { return intersection(a, b).is_empty(); }

}  // namespace intdec::decimal
