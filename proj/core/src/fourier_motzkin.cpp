// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fourier_motzkin.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace intdec::decimal::fm {

namespace {

enum class Truth { kUnknown, kTrue, kFalse };

bool all_zero(const IntegerVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Truth normalize(LinearConstraint& c) {
    if (all_zero(c.coeffs)) {
        switch (c.relation) {
        case Relation::kLe: return c.constant >= 0 ? Truth::kTrue : Truth::kFalse;
        case Relation::kLt: return c.constant > 0 ? Truth::kTrue : Truth::kFalse;
        case Relation::kEq: return c.constant == 0 ? Truth::kTrue : Truth::kFalse;
        }
    }
    Integer g = abs(c.constant);
    for (const auto& a : c.coeffs) {
        if (a != 0) g = gcd(g, a);
    }
    if (g > 1) {
        for (auto& a : c.coeffs) a /= g;
        c.constant /= g;
    }
    // equations get a positive leading coefficient so duplicates coincide
    if (c.relation == Relation::kEq) {
        auto lead = std::find_if(c.coeffs.begin(), c.coeffs.end(), [](const Integer& x) { return x != 0; });
        if (*lead < 0) {
            for (auto& a : c.coeffs) a = -a;
            c.constant = -c.constant;
        }
    }
    return Truth::kUnknown;
}

// c := scale_c * c + scale_e * e
void combine(LinearConstraint& c, const Integer& scale_c, const LinearConstraint& e, const Integer& scale_e) {
    for (std::size_t k = 0; k < c.coeffs.size(); ++k) c.coeffs[k] = scale_c * c.coeffs[k] + scale_e * e.coeffs[k];
    c.constant = scale_c * c.constant + scale_e * e.constant;
}

std::size_t count_with(const System& s, std::size_t var, int sign) {
    std::size_t count = 0;
    for (const auto& c : s) {
        int sg = sgn(c.coeffs[var]);
        if (sg != 0 && (sign == 0 || sg == sign)) ++count;
    }
    return count;
}

// Picks the next variable: one pinned by an equation if possible, otherwise
// the one producing the fewest combined constraints.
std::optional<std::size_t> choose_variable(const System& s, std::size_t dimension) {
    for (const auto& c : s) {
        if (c.relation != Relation::kEq) continue;
        for (std::size_t k = 0; k < dimension; ++k) {
            if (c.coeffs[k] != 0) return k;
        }
    }
    std::optional<std::size_t> best;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < dimension; ++k) {
        std::size_t lower = count_with(s, k, -1);
        std::size_t upper = count_with(s, k, 1);
        if (lower + upper == 0) continue;
        std::size_t cost = lower * upper;
        if (cost < best_cost) {
            best_cost = cost;
            best = k;
        }
    }
    return best;
}

}  // namespace

bool tidy(System& system) {
    System kept;
    kept.reserve(system.size());
    for (auto& c : system) {
        switch (normalize(c)) {
        case Truth::kTrue: break;
        case Truth::kFalse: return false;
        case Truth::kUnknown: kept.push_back(std::move(c)); break;
        }
    }
    std::sort(kept.begin(), kept.end(), [](const LinearConstraint& a, const LinearConstraint& b) {
        if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
        // inequalities first, the tightest bound first
        bool ae = a.relation == Relation::kEq;
        bool be = b.relation == Relation::kEq;
        if (ae != be) return be;
        if (a.constant != b.constant) return a.constant < b.constant;
        return a.relation == Relation::kLt && b.relation != Relation::kLt;
    });
    system.clear();
    for (auto& c : kept) {
        if (!system.empty() && system.back().coeffs == c.coeffs) {
            const auto& prev = system.back();
            bool prev_eq = prev.relation == Relation::kEq;
            bool cur_eq = c.relation == Relation::kEq;
            if (!prev_eq && !cur_eq) continue;  // dominated bound
            if (prev_eq && cur_eq) {
                if (prev.constant != c.constant) return false;
                continue;
            }
        }
        system.push_back(std::move(c));
    }
    return true;
}

std::optional<System> eliminate(System system, std::size_t var) {
    if (!tidy(system)) return std::nullopt;
    // exact pivoting on an equation mentioning var
    auto pivot = system.end();
    for (auto it = system.begin(); it != system.end(); ++it) {
        if (it->relation == Relation::kEq && it->coeffs[var] != 0) {
            if (pivot == system.end() || abs(it->coeffs[var]) < abs(pivot->coeffs[var])) pivot = it;
        }
    }
    if (pivot != system.end()) {
        LinearConstraint eq = *pivot;
        system.erase(pivot);
        const Integer a = eq.coeffs[var];
        const Integer abs_a = abs(a);
        for (auto& c : system) {
            if (c.coeffs[var] == 0) continue;
            Integer scale = -c.coeffs[var] * sgn(a);
            combine(c, abs_a, eq, scale);
        }
        if (!tidy(system)) return std::nullopt;
        return system;
    }

    System result;
    std::vector<const LinearConstraint*> lower;
    std::vector<const LinearConstraint*> upper;
    for (const auto& c : system) {
        int s = sgn(c.coeffs[var]);
        if (s == 0) {
            result.push_back(c);
        } else if (s > 0) {
            upper.push_back(&c);
        } else {
            lower.push_back(&c);
        }
    }
    for (const auto* lo : lower) {
        for (const auto* up : upper) {
            // lo: -p x + ... <|<= c1, up: q x + ... <|<= c2  =>  q*lo + p*up
            LinearConstraint c = *lo;
            const Integer p = -lo->coeffs[var];
            const Integer q = up->coeffs[var];
            combine(c, q, *up, p);
            c.relation = (lo->relation == Relation::kLt || up->relation == Relation::kLt) ? Relation::kLt
                                                                                         : Relation::kLe;
            result.push_back(std::move(c));
        }
    }
    if (!tidy(result)) return std::nullopt;
    return result;
}

bool feasible(System system, std::size_t dimension) {
    if (!tidy(system)) return false;
    while (auto var = choose_variable(system, dimension)) {
        auto next = eliminate(std::move(system), *var);
        if (!next) return false;
        system = std::move(*next);
    }
    return true;
}

std::optional<RationalVector> solve(System system, std::size_t dimension) {
    struct Step {
        std::size_t var;
        System constraints;  // those mentioning var at elimination time
    };
    if (!tidy(system)) return std::nullopt;
    std::vector<Step> steps;
    while (auto var = choose_variable(system, dimension)) {
        Step step{*var, {}};
        for (const auto& c : system) {
            if (c.coeffs[*var] != 0) step.constraints.push_back(c);
        }
        auto next = eliminate(std::move(system), *var);
        if (!next) return std::nullopt;
        system = std::move(*next);
        steps.push_back(std::move(step));
    }

    RationalVector x(dimension, Rational(0));
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const std::size_t v = it->var;
        std::optional<Rational> lo;
        std::optional<Rational> up;
        bool lo_strict = false;
        bool up_strict = false;
        std::optional<Rational> fixed;
        for (const auto& c : it->constraints) {
            Rational rest = 0;
            for (std::size_t k = 0; k < dimension; ++k) {
                if (k != v && c.coeffs[k] != 0) rest += Rational(c.coeffs[k]) * x[k];
            }
            Rational bound = (Rational(c.constant) - rest) / Rational(c.coeffs[v]);
            const bool strict = c.relation == Relation::kLt;
            if (c.relation == Relation::kEq) {
                fixed = bound;
            } else if (c.coeffs[v] > 0) {
                if (!up || bound < *up || (bound == *up && strict)) {
                    up = bound;
                    up_strict = strict;
                }
            } else {
                if (!lo || bound > *lo || (bound == *lo && strict)) {
                    lo = bound;
                    lo_strict = strict;
                }
            }
        }
        Rational value = 0;
        if (fixed) {
            value = *fixed;
        } else if (lo && up) {
            value = lo_strict ? (*lo + *up) / 2 : *lo;
        } else if (lo) {
            value = lo_strict ? *lo + 1 : *lo;
        } else if (up) {
            value = up_strict ? *up - 1 : *up;
        }
        x[v] = value;
    }
    return x;
}

System drop_column(const System& system, std::size_t var) {
    System out = system;
    for (auto& c : out) c.coeffs.erase(c.coeffs.begin() + static_cast<std::ptrdiff_t>(var));
    return out;
}

}  // namespace intdec::decimal::fm
