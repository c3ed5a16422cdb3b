// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "intdec/dbm.hpp"

#include <map>
#include <string>
#include <utility>

#include "intdec/error.hpp"

namespace intdec::dbm {

namespace {

using decimal::DecimalSet;
using presburger::IntegerSet;
namespace dec = intdec::decimal;
namespace pres = intdec::presburger;

// Rank vectors of the weak orders on {0, 1, ..., n} in which 0 is minimal:
// rank[0] = 0 and the ranks in use form an interval starting at 0.
std::vector<std::vector<std::size_t>> weak_orders(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> rank(n + 1, 0);
    while (true) {
        std::vector<bool> used(n + 1, false);
        for (auto r : rank) used[r] = true;
        std::size_t top = 0;
        while (top + 1 <= n && used[top + 1]) ++top;
        bool contiguous = true;
        for (std::size_t r = top + 1; r <= n; ++r) contiguous = contiguous && !used[r];
        if (contiguous) out.push_back(rank);
        // next vector in {0..n}^n over positions 1..n
        std::size_t k = 1;
        while (k <= n && rank[k] == n) rank[k++] = 0;
        if (k > n) break;
        ++rank[k];
    }
    return out;
}

dec::LinearConstraint difference_constraint(std::size_t n, std::size_t i, std::size_t j, dec::Relation rel,
                                            Integer constant) {
    IntegerVector coeffs(n, Integer(0));
    if (i > 0) coeffs[i - 1] += 1;
    if (j > 0) coeffs[j - 1] -= 1;
    return {std::move(coeffs), rel, std::move(constant)};
}

DecimalSet order_region(std::size_t n, const std::vector<std::size_t>& rank) {
    std::vector<dec::LinearConstraint> cs;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (rank[i] == rank[j]) {
                cs.push_back(difference_constraint(n, i, j, dec::Relation::kEq, Integer(0)));
            } else if (rank[i] < rank[j]) {
                cs.push_back(difference_constraint(n, i, j, dec::Relation::kLt, Integer(0)));
            } else {
                cs.push_back(difference_constraint(n, j, i, dec::Relation::kLt, Integer(0)));
            }
        }
    }
    return DecimalSet::from_constraints(n, std::move(cs));
}

Integer ceil(const Rational& q) { return -floor(-q); }

pres::LinearConstraint z_constraint(std::size_t dim, std::vector<std::pair<std::size_t, long>> terms,
                                    pres::Relation rel, Integer constant) {
    IntegerVector coeffs(dim, Integer(0));
    for (const auto& [k, a] : terms) coeffs[k] += a;
    return {std::move(coeffs), rel, std::move(constant)};
}

IntegerSet project_range(IntegerSet s, std::size_t first, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) s = pres::project(s, first);
    return s;
}

}  // namespace

Bound operator+(const Bound& a, const Bound& b) {
    if (a.is_infinite() || b.is_infinite()) return Bound::infinity();
    return {*a.value + *b.value, a.strict || b.strict};
}

bool tighter(const Bound& a, const Bound& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    if (*a.value != *b.value) return *a.value < *b.value;
    return a.strict && !b.strict;
}

Dbm::Dbm(std::size_t n) : n_(n), bounds_((n + 1) * (n + 1)) {
    for (std::size_t i = 0; i <= n; ++i) bounds_[i * (n + 1) + i] = Bound::le(0);
}

bool Dbm::contains(std::span<const Rational> r) const {
    if (r.size() != n_) throw DimensionError("point has " + std::to_string(r.size()) + " clocks, expected " +
                                             std::to_string(n_));
    auto value = [&](std::size_t i) { return i == 0 ? Rational(0) : r[i - 1]; };
    for (std::size_t i = 0; i <= n_; ++i) {
        for (std::size_t j = 0; j <= n_; ++j) {
            const Bound& b = at(i, j);
            if (b.is_infinite()) continue;
            const Rational diff = value(i) - value(j);
            const Rational c(*b.value);
            if (b.strict ? !(diff < c) : !(diff <= c)) return false;
        }
    }
    return true;
}

std::optional<Dbm> canonical(const Dbm& m) {
    const std::size_t n = m.clocks();
    Dbm out = m;
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i <= n; ++i) {
            if (out.at(i, k).is_infinite()) continue;
            for (std::size_t j = 0; j <= n; ++j) {
                Bound via = out.at(i, k) + out.at(k, j);
                if (tighter(via, out.at(i, j))) out.set(i, j, std::move(via));
            }
        }
    }
    for (std::size_t i = 0; i <= n; ++i) {
        if (tighter(out.at(i, i), Bound::le(0))) return std::nullopt;
    }
    return out;
}

DecimalSet to_decimal(const Dbm& m) {
    const std::size_t n = m.clocks();
    std::vector<dec::LinearConstraint> cs;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            const Bound& b = m.at(i, j);
            if (b.is_infinite()) continue;
            cs.push_back(difference_constraint(n, i, j, b.strict ? dec::Relation::kLt : dec::Relation::kLe, *b.value));
        }
    }
    return DecimalSet::from_constraints(n, std::move(cs));
}

CpDbmPlus::CpDbmPlus(std::size_t n, std::vector<bool> strict, std::vector<bool> infinite, IntegerSet phi)
    : n_(n), strict_(std::move(strict)), infinite_(std::move(infinite)), phi_(std::move(phi)) {
    const std::size_t entries = (n + 1) * (n + 1);
    if (strict_.size() != entries || infinite_.size() != entries) {
        throw DimensionError("relation and infinity matrices need " + std::to_string(entries) + " entries");
    }
    if (phi_.dimension() != entries) {
        throw DimensionError("parameter set has dimension " + std::to_string(phi_.dimension()) + ", expected " +
                             std::to_string(entries));
    }
    // A diagonal entry only requires 0 (< | <=) c_i_i; once imposed, it and
    // the unconstrained entries drop out of the parameter space.
    std::vector<pres::LinearConstraint> diagonal;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            if (this->infinite(i, j)) continue;
            if (i == j) {
                const long least = this->strict(i, i) ? 1 : 0;
                diagonal.push_back(z_constraint(entries, {{parameter_index(n, i, i), -1}}, pres::Relation::kLe,
                                                Integer(-least)));
            } else {
                kept_.emplace_back(i, j);
            }
        }
    }
    reduced_ = pres::intersection(phi_, IntegerSet::from_constraints(entries, diagonal));
    for (std::size_t k = entries; k-- > 0;) {
        const std::size_t i = k / (n + 1);
        const std::size_t j = k % (n + 1);
        if (i == j || this->infinite(i, j)) reduced_ = pres::project(reduced_, k);
    }
}

CpDbmPlus constant(const Dbm& m) {
    const std::size_t n = m.clocks();
    const std::size_t params = (n + 1) * (n + 1);
    std::vector<bool> strict(params);
    std::vector<bool> infinite(params);
    IntegerVector c(params, Integer(0));
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            const Bound& b = m.at(i, j);
            const std::size_t p = parameter_index(n, i, j);
            strict[p] = b.strict;
            infinite[p] = b.is_infinite();
            if (!b.is_infinite()) c[p] = *b.value;
        }
    }
    return CpDbmPlus(n, std::move(strict), std::move(infinite), IntegerSet::point(c));
}

CpDbmPlus compose(const IntegerSet& z, const Dbm& m) {
    const std::size_t n = m.clocks();
    if (z.dimension() != n) throw DimensionError("integer set and DBM disagree on the clock count");
    Dbm cube = m;
    for (std::size_t i = 1; i <= n; ++i) {
        if (tighter(Bound::le(0), cube.at(0, i))) cube.set(0, i, Bound::le(0));
        if (tighter(Bound::lt(1), cube.at(i, 0))) cube.set(i, 0, Bound::lt(1));
    }

    const std::size_t params = (n + 1) * (n + 1);
    const std::size_t dim = params + n;
    std::vector<bool> strict(params);
    std::vector<bool> infinite(params);
    std::vector<pres::LinearConstraint> links;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            const Bound& b = cube.at(i, j);
            const std::size_t p = parameter_index(n, i, j);
            strict[p] = b.strict;
            infinite[p] = b.is_infinite();
            if (b.is_infinite()) continue;
            // p_i_j - z_i + z_j = c_i_j
            std::vector<std::pair<std::size_t, long>> terms{{p, 1}};
            if (i > 0) terms.emplace_back(params + i - 1, -1);
            if (j > 0) terms.emplace_back(params + j - 1, 1);
            links.push_back(z_constraint(dim, std::move(terms), pres::Relation::kEq, *b.value));
        }
    }
    IntegerSet joint = pres::intersection(IntegerSet::from_constraints(dim, links),
                                          pres::product(IntegerSet::universe(params), z));
    return CpDbmPlus(n, std::move(strict), std::move(infinite), project_range(std::move(joint), params, n));
}

std::vector<DecimalSet> order_regions(std::size_t n) {
    std::vector<DecimalSet> out;
    for (const auto& rank : weak_orders(n)) out.push_back(order_region(n, rank));
    return out;
}

std::vector<SignCell> sign_cells(const CpDbmPlus& p) {
    const std::size_t n = p.clocks();
    const std::size_t params = (n + 1) * (n + 1);

    const auto& kept = p.kept();
    const IntegerSet& reduced = p.reduced_phi();
    const std::size_t width = kept.size();
    const IntegerSet lifted = pres::product(reduced, IntegerSet::universe(n));
    std::map<std::vector<int>, IntegerSet> labels;
    std::vector<SignCell> cells;
    for (const auto& rank : weak_orders(n)) {
        std::vector<int> signs(params, 0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (!p.infinite(i, i) && p.strict(i, i)) signs[parameter_index(n, i, i)] = 1;
        }
        std::vector<int> key;
        for (const auto& [i, j] : kept) {
            const bool holds = p.strict(i, j) ? rank[i] < rank[j] : rank[i] <= rank[j];
            signs[parameter_index(n, i, j)] = holds ? 0 : 1;
            key.push_back(holds ? 0 : 1);
        }
        auto it = labels.find(key);
        if (it == labels.end()) {
            // I_m = { z | exists c in phi: z_i - z_j <= c_i_j - m_i_j }
            std::vector<pres::LinearConstraint> cs;
            for (std::size_t e = 0; e < width; ++e) {
                const auto [i, j] = kept[e];
                std::vector<std::pair<std::size_t, long>> terms{{e, -1}};
                if (i > 0) terms.emplace_back(width + i - 1, 1);
                if (j > 0) terms.emplace_back(width + j - 1, -1);
                cs.push_back(z_constraint(width + n, std::move(terms), pres::Relation::kLe, Integer(-key[e])));
            }
            IntegerSet label = pres::intersection(lifted, IntegerSet::from_constraints(width + n, cs));
            it = labels.emplace(key, project_range(std::move(label), 0, width)).first;
        }
        cells.push_back({std::move(signs), order_region(n, rank), it->second});
    }
    return cells;
}

IdfSet decompose(const CpDbmPlus& p) { return decompose(std::span<const CpDbmPlus>(&p, 1)); }

IdfSet decompose(std::span<const CpDbmPlus> ps) {
    if (ps.empty()) throw InvalidArgument("no parametric DBM to decompose");
    const std::size_t n = ps.front().clocks();
    std::vector<SumPair> pairs;
    for (const auto& p : ps) {
        if (p.clocks() != n) throw DimensionError("parametric DBMs disagree on the clock count");
        for (auto& cell : sign_cells(p)) pairs.emplace_back(std::move(cell.label), std::move(cell.region));
    }
    return IdfSet::normalize(n, pairs);
}

bool contains(const CpDbmPlus& p, std::span<const Rational> r) {
    const std::size_t n = p.clocks();
    if (r.size() != n) throw DimensionError("point has " + std::to_string(r.size()) + " clocks, expected " +
                                            std::to_string(n));
    auto value = [&](std::size_t i) { return i == 0 ? Rational(0) : r[i - 1]; };
    const auto& kept = p.kept();
    std::vector<IntegerSet> boxes;
    boxes.reserve(kept.size());
    for (const auto& [i, j] : kept) {
        // least integer c with r_i - r_j (< | <=) c
        const Rational diff = value(i) - value(j);
        const Integer least = p.strict(i, j) ? Integer(floor(diff) + 1) : ceil(diff);
        boxes.push_back(IntegerSet::from_constraint({{Integer(-1)}, pres::Relation::kLe, -least}));
    }
    return pres::intersects_box(p.reduced_phi(), boxes);
}

TimedDemo timed_demo(const Integer& max_constant) {
    const Integer& m = max_constant;
    if (m < 1) throw InvalidArgument("the maximal constant must be at least 1");

    // (a) zones: rows and columns ordered 0, x, y
    const std::size_t params = 9;
    auto c = [](std::size_t i, std::size_t j) { return parameter_index(2, i, j); };
    auto eq = [&](std::vector<std::pair<std::size_t, long>> terms, Integer v) {
        return z_constraint(params, std::move(terms), pres::Relation::kEq, std::move(v));
    };
    auto le = [&](std::vector<std::pair<std::size_t, long>> terms, Integer v) {
        return z_constraint(params, std::move(terms), pres::Relation::kLe, std::move(v));
    };
    // [[0, -i, 0], [i+1, 0, i], [1, -i, 0]] for 0 <= i <= M, with i = c_x_y
    const std::vector<pres::LinearConstraint> family{
        eq({{c(0, 0), 1}}, 0),
        eq({{c(0, 1), 1}, {c(1, 2), 1}}, 0),
        eq({{c(0, 2), 1}}, 0),
        eq({{c(1, 0), 1}, {c(1, 2), -1}}, 1),
        eq({{c(1, 1), 1}}, 0),
        le({{c(1, 2), -1}}, 0),
        le({{c(1, 2), 1}}, m),
        eq({{c(2, 0), 1}}, 1),
        eq({{c(2, 1), 1}, {c(1, 2), 1}}, 0),
        eq({{c(2, 2), 1}}, 0),
    };
    // [[0, inf, 0], [inf, 0, inf], [1, -M, 0]]; an infinite entry is any value
    const std::vector<pres::LinearConstraint> saturation{
        eq({{c(0, 0), 1}}, 0), eq({{c(0, 2), 1}}, 0), eq({{c(1, 1), 1}}, 0),
        eq({{c(2, 0), 1}}, 1), eq({{c(2, 1), 1}}, -m), eq({{c(2, 2), 1}}, 0),
    };
    IntegerSet phi = pres::union_of(IntegerSet::from_constraints(params, family),
                                    IntegerSet::from_constraints(params, saturation));
    CpDbmPlus zones(2, std::vector<bool>(params, false), std::vector<bool>(params, false), std::move(phi));

    // (b) shapes, closed in [0,1]^2 as a.(x,y) <= b
    struct HalfPlane {
        long a1, a2, b;
    };
    const std::vector<HalfPlane> square{{-1, 0, 0}, {1, 0, 1}, {0, -1, 0}, {0, 1, 1}};
    std::vector<HalfPlane> line = square;
    line.push_back({1, -1, 0});
    line.push_back({-1, 1, 0});
    std::vector<HalfPlane> triangle = square;
    triangle.push_back({-1, 1, 0});

    struct Repeat {
        std::vector<pres::LinearConstraint> z;  // over (z_x, z_y)
        const std::vector<HalfPlane>* shape;
    };
    auto zc = [](long a1, long a2, pres::Relation rel, Integer v) {
        return pres::LinearConstraint{{Integer(a1), Integer(a2)}, rel, std::move(v)};
    };
    const std::vector<Repeat> repeats{
        {{zc(-1, 0, pres::Relation::kLe, 0), zc(1, 0, pres::Relation::kLe, m - 1), zc(0, 1, pres::Relation::kEq, 0)},
         &line},
        {{zc(1, 0, pres::Relation::kEq, m), zc(0, 1, pres::Relation::kEq, 0)}, &triangle},
        {{zc(-1, 0, pres::Relation::kLe, -(m + 1)), zc(0, 1, pres::Relation::kEq, 0)}, &square},
    };
    // Z + S with S closed splits as the union over offsets e in {0,1}^2 of
    // (Z + e) + { d in [0,1)^2 | d + e in S }.
    std::vector<SumPair> pairs;
    for (const auto& rep : repeats) {
        for (long ex = 0; ex <= 1; ++ex) {
            for (long ey = 0; ey <= 1; ++ey) {
                std::vector<pres::LinearConstraint> shifted;
                for (const auto& k : rep.z) {
                    shifted.push_back({k.coeffs, k.relation, k.constant + k.coeffs[0] * ex + k.coeffs[1] * ey});
                }
                std::vector<dec::LinearConstraint> region;
                for (const auto& h : *rep.shape) {
                    region.push_back({{Integer(h.a1), Integer(h.a2)}, dec::Relation::kLe,
                                      Integer(h.b - h.a1 * ex - h.a2 * ey)});
                }
                pairs.emplace_back(IntegerSet::from_constraints(2, shifted),
                                   DecimalSet::from_constraints(2, std::move(region)));
            }
        }
    }
    IdfSet shapes = IdfSet::normalize(2, pairs);

    // (c) formula
    const std::string ms = m.get_str();
    const Integer below = m - 1;
    auto formula = frontend::parse("0 <= y and y <= 1 and ((exists i:int. 0 <= i and i <= " + below.get_str() +
                                   " and x - y = i) or x - y >= " + ms + ")");
    return {std::move(zones), std::move(shapes), std::move(formula)};
}

}  // namespace intdec::dbm
