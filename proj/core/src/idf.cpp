// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "intdec/idf.hpp"

#include <algorithm>
#include <string>

#include "intdec/error.hpp"

namespace intdec {

namespace {

void require_dimension(std::size_t expected, std::size_t actual, const char* what) {
    if (expected != actual) {
        throw DimensionError(std::string(what) + ": dimension " + std::to_string(actual) + " where " +
                             std::to_string(expected) + " was expected");
    }
}

// Canonical cell order: by label, with the empty label last.
bool cell_before(const Cell& a, const Cell& b) {
    const bool ae = a.zpart.is_empty();
    const bool be = b.zpart.is_empty();
    if (ae != be) return be;
    return a.zpart < b.zpart;
}

// Unions the decimal parts of cells sharing a label and drops empty cells.
// For a known partition a lone cell must be the whole cube, so it is reset to
// the single-region cube instead of keeping the fragments.
std::vector<Cell> merge_labels(std::size_t dimension, std::vector<Cell> cells, bool partition) {
    std::erase_if(cells, [](const Cell& c) { return c.dpart.is_empty(); });
    std::sort(cells.begin(), cells.end(), cell_before);
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size();) {
        std::size_t j = i + 1;
        while (j < cells.size() && cells[j].zpart == cells[i].zpart) ++j;
        if (j == i + 1) {
            out.push_back(std::move(cells[i]));
        } else {
            std::vector<decimal::ConvexRegion> regions;
            for (std::size_t k = i; k < j; ++k) {
                const auto& rs = cells[k].dpart.regions();
                regions.insert(regions.end(), rs.begin(), rs.end());
            }
            out.push_back({std::move(cells[i].zpart),
                           decimal::simplify(DecimalSet::from_regions(dimension, std::move(regions)))});
        }
        i = j;
    }
    if (partition && out.size() == 1) out[0].dpart = DecimalSet::full(dimension);
    return out;
}

template <class Op>
std::vector<Cell> refine(const IdfSet& f, const IdfSet& g, Op op) {
    std::vector<Cell> out;
    for (const auto& a : f.cells()) {
        for (const auto& b : g.cells()) {
            auto common = decimal::intersection(a.dpart, b.dpart);
            if (common.is_empty()) continue;
            out.push_back({op(a.zpart, b.zpart), std::move(common)});
        }
    }
    return out;
}

}  // namespace

IdfSet IdfSet::from_cells(std::size_t dimension, std::vector<Cell> cells) {
    for (auto& c : cells) {
        require_dimension(dimension, c.zpart.dimension(), "cell label");
        require_dimension(dimension, c.dpart.dimension(), "cell decimal part");
        if (!c.zpart.is_canonical()) c.zpart = presburger::canonicalize(c.zpart);
    }
    return IdfSet(dimension, merge_labels(dimension, std::move(cells), false));
}

IdfSet IdfSet::from_partition(std::size_t dimension, std::vector<Cell> cells) {
    return IdfSet(dimension, merge_labels(dimension, std::move(cells), true));
}

IdfSet IdfSet::normalize(std::size_t dimension, std::span<const SumPair> pairs) {
    std::vector<Cell> groups;
    for (const auto& [z, d] : pairs) {
        require_dimension(dimension, z.dimension(), "integer part");
        require_dimension(dimension, d.dimension(), "decimal part");
        if (z.is_empty() || d.is_empty()) continue;
        groups.push_back({z.is_canonical() ? z : presburger::canonicalize(z), d});
    }

    std::vector<Cell> cells{{IntegerSet::empty(dimension), DecimalSet::full(dimension)}};
    for (const auto& [z, d] : groups) {
        std::vector<Cell> next;
        next.reserve(cells.size() * 2);
        for (auto& cell : cells) {
            // adding z to a label that already contains it leaves the cell as is
            if (presburger::is_empty(presburger::difference(z, cell.zpart))) {
                next.push_back(std::move(cell));
                continue;
            }
            auto inside = decimal::intersection(cell.dpart, d);
            if (inside.is_empty()) {
                next.push_back(std::move(cell));
                continue;
            }
            auto outside = decimal::difference(cell.dpart, d);
            next.push_back({presburger::union_of(cell.zpart, z), std::move(inside)});
            if (!outside.is_empty()) next.push_back({std::move(cell.zpart), std::move(outside)});
        }
        cells = merge_labels(dimension, std::move(next), true);
    }
    return IdfSet(dimension, std::move(cells));
}

IdfSet IdfSet::empty(std::size_t dimension) {
    return IdfSet(dimension, {{IntegerSet::empty(dimension), DecimalSet::full(dimension)}});
}

IdfSet IdfSet::universe(std::size_t dimension) {
    return IdfSet(dimension, {{IntegerSet::universe(dimension), DecimalSet::full(dimension)}});
}

IdfSet IdfSet::integers(std::size_t dimension) {
    std::vector<decimal::LinearConstraint> origin;
    for (std::size_t k = 0; k < dimension; ++k) {
        IntegerVector coeffs(dimension, Integer(0));
        coeffs[k] = 1;
        origin.push_back({std::move(coeffs), decimal::Relation::kEq, Integer(0)});
    }
    auto at_origin = DecimalSet::from_constraints(dimension, std::move(origin));
    return from_cells(dimension, {{IntegerSet::universe(dimension), at_origin},
                                  {IntegerSet::empty(dimension), decimal::complement(at_origin)}});
}

std::size_t IdfSet::locate(std::span<const Rational> fraction) const {
    require_dimension(dimension_, fraction.size(), "point");
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        if (cells_[k].dpart.contains(fraction)) return k;
    }
    throw Error("decimal parts do not cover the point");
}

bool IdfSet::contains(std::span<const Rational> point) const {
    require_dimension(dimension_, point.size(), "point");
    IntegerVector whole(point.size());
    RationalVector fraction(point.size());
    for (std::size_t k = 0; k < point.size(); ++k) {
        whole[k] = floor(point[k]);
        fraction[k] = point[k] - Rational(whole[k]);
    }
    return cells_[locate(fraction)].zpart.contains(whole);
}

bool IdfSet::is_empty() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.zpart.is_empty(); });
}

bool IdfSet::is_universal() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.zpart.is_universal(); });
}

std::optional<RationalVector> IdfSet::witness() const {
    for (const auto& c : cells_) {
        auto z = c.zpart.witness();
        if (!z) continue;
        auto d = c.dpart.witness();
        if (!d) continue;
        RationalVector point(dimension_);
        for (std::size_t k = 0; k < dimension_; ++k) point[k] = Rational((*z)[k]) + (*d)[k];
        return point;
    }
    return std::nullopt;
}

IdfStats IdfSet::stats() const {
    IdfStats s;
    s.cells = cells_.size();
    for (const auto& c : cells_) {
        s.automaton_states += c.zpart.state_count();
        s.regions += c.dpart.regions().size();
    }
    return s;
}

IntegerSet IdfSet::integer_points() const {
    RationalVector origin(dimension_, Rational(0));
    return cells_[locate(origin)].zpart;
}

void IdfSet::check_invariants() const {
    if (cells_.empty()) throw Error("no cells");
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const auto& c = cells_[i];
        if (c.zpart.dimension() != dimension_ || c.dpart.dimension() != dimension_) {
            throw Error("cell " + std::to_string(i) + " has the wrong dimension");
        }
        if (!c.zpart.is_canonical()) throw Error("cell " + std::to_string(i) + " has a non-canonical label");
        if (c.dpart.is_empty()) throw Error("cell " + std::to_string(i) + " has an empty decimal part");
        if (i > 0 && !cell_before(cells_[i - 1], c)) {
            throw Error("cells " + std::to_string(i - 1) + " and " + std::to_string(i) +
                        " are out of order or share a label");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!decimal::disjoint(cells_[j].dpart, c.dpart)) {
                throw Error("decimal parts of cells " + std::to_string(j) + " and " + std::to_string(i) +
                            " overlap");
            }
        }
    }
    DecimalSet uncovered = DecimalSet::full(dimension_);
    for (const auto& c : cells_) uncovered = decimal::difference(uncovered, c.dpart);
    if (!uncovered.is_empty()) throw Error("decimal parts do not cover the cube");
}

IdfSet union_of(const IdfSet& f, const IdfSet& g) {
    require_dimension(f.dimension(), g.dimension(), "union operand");
    return IdfSet::from_partition(f.dimension(), refine(f, g, [](const IntegerSet& a, const IntegerSet& b) {
                                  return presburger::union_of(a, b);
                              }));
}

IdfSet intersection(const IdfSet& f, const IdfSet& g) {
    require_dimension(f.dimension(), g.dimension(), "intersection operand");
    return IdfSet::from_partition(f.dimension(), refine(f, g, [](const IntegerSet& a, const IntegerSet& b) {
                                  return presburger::intersection(a, b);
                              }));
}

IdfSet difference(const IdfSet& f, const IdfSet& g) {
    require_dimension(f.dimension(), g.dimension(), "difference operand");
    return IdfSet::from_partition(f.dimension(), refine(f, g, [](const IntegerSet& a, const IntegerSet& b) {
                                  return presburger::difference(a, b);
                              }));
}

IdfSet complement(const IdfSet& f) {
    std::vector<Cell> cells;
    cells.reserve(f.cells().size());
    for (const auto& c : f.cells()) cells.push_back({presburger::complement(c.zpart), c.dpart});
    return IdfSet::from_partition(f.dimension(), std::move(cells));
}

IdfSet product(const IdfSet& f, const IdfSet& g) {
    std::vector<Cell> cells;
    for (const auto& a : f.cells()) {
        for (const auto& b : g.cells()) {
            cells.push_back({presburger::product(a.zpart, b.zpart), decimal::product(a.dpart, b.dpart)});
        }
    }
    return IdfSet::from_partition(f.dimension() + g.dimension(), std::move(cells));
}

IdfSet project(const IdfSet& f, std::size_t index) {
    if (index >= f.dimension()) throw InvalidArgument("projection index out of range");
    // Sums are taken coordinatewise, so projecting Z + D gives proj(Z) + proj(D).
    std::vector<SumPair> pairs;
    for (const auto& c : f.cells()) {
        if (c.zpart.is_empty()) continue;
        pairs.emplace_back(presburger::project(c.zpart, index), decimal::project(c.dpart, index));
    }
    return IdfSet::normalize(f.dimension() - 1, pairs);
}

IdfSet reorder(const IdfSet& f, std::span<const std::size_t> permutation) {
    std::vector<Cell> cells;
    cells.reserve(f.cells().size());
    for (const auto& c : f.cells()) {
        cells.push_back({presburger::reorder(c.zpart, permutation), decimal::reorder(c.dpart, permutation)});
    }
    return IdfSet::from_partition(f.dimension(), std::move(cells));
}

bool equals(const IdfSet& f, const IdfSet& g) {
    if (f.dimension() != g.dimension() || f.cells().size() != g.cells().size()) return false;
    for (std::size_t k = 0; k < f.cells().size(); ++k) {
        const auto& a = f.cells()[k];
        const auto& b = g.cells()[k];
        if (a.zpart != b.zpart || !decimal::equals(a.dpart, b.dpart)) return false;
    }
    return true;
}

bool subset(const IdfSet& f, const IdfSet& g) { return difference(f, g).is_empty(); }

IdfSet integral_coordinate(std::size_t dimension, std::size_t index) {
    if (index >= dimension) throw InvalidArgument("coordinate index out of range");
    IntegerVector coeffs(dimension, Integer(0));
    coeffs[index] = 1;
    auto zero = DecimalSet::from_constraints(dimension, {{coeffs, decimal::Relation::kEq, Integer(0)}});
    return IdfSet::from_cells(dimension, {{IntegerSet::universe(dimension), zero},
                                          {IntegerSet::empty(dimension), decimal::complement(zero)}});
}

}  // namespace intdec
