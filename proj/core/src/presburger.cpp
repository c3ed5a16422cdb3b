// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "intdec/presburger.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "intdec/error.hpp"

namespace intdec::presburger {

namespace {

std::atomic<std::size_t> g_dimension_limit{kDefaultDimensionLimit};

void check_capacity(std::size_t dimension) {
    const std::size_t limit = g_dimension_limit.load();
    if (dimension > limit || dimension > 24) {
        throw CapacityError("automaton over " + std::to_string(dimension) + " coordinates exceeds the limit of " +
                            std::to_string(limit));
    }
}

void check_same_dimension(const IntegerSet& a, const IntegerSet& b, const char* op) {
    if (a.dimension() != b.dimension()) {
        throw DimensionError(std::string(op) + ": dimension " + std::to_string(a.dimension()) + " vs " +
                             std::to_string(b.dimension()));
    }
}

// A complete DFA under construction; states are dense indices.
struct RawDfa {
    std::size_t dimension = 0;
    State initial = 0;
    std::vector<std::uint8_t> accepting;
    std::vector<State> transitions;

    std::size_t letters() const { return std::size_t{1} << dimension; }
    std::size_t states() const { return accepting.size(); }
};

struct VectorHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept {
        std::size_t h = v.size();
        for (State x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Breadth-first exploration of the states reachable from `start`.
template <class Key, class Map, class Successor, class Accepting>
RawDfa explore(std::size_t dimension, Key start, Successor successor, Accepting accepting) {
    check_capacity(dimension);
    RawDfa dfa;
    dfa.dimension = dimension;
    const std::size_t letters = dfa.letters();
    Map index;
    std::vector<Key> queue;
    index.emplace(start, 0);
    queue.push_back(std::move(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        // queue may reallocate while successors are inserted
        Key current = queue[head];
        dfa.accepting.push_back(accepting(current) ? 1 : 0);
        for (Letter a = 0; a < letters; ++a) {
            Key next = successor(current, a);
            auto [it, inserted] = index.emplace(next, static_cast<State>(queue.size()));
            if (inserted) queue.push_back(std::move(next));
            dfa.transitions.push_back(it->second);
        }
    }
    return dfa;
}

// Moore partition refinement followed by breadth-first renumbering with
// letters visited in increasing order.
RawDfa minimize(const RawDfa& dfa) {
    const std::size_t letters = dfa.letters();
    const std::size_t n = dfa.states();

    std::vector<State> reachable_order;
    std::vector<char> seen(n, 0);
    reachable_order.push_back(dfa.initial);
    seen[dfa.initial] = 1;
    for (std::size_t head = 0; head < reachable_order.size(); ++head) {
        State s = reachable_order[head];
        for (Letter a = 0; a < letters; ++a) {
            State t = dfa.transitions[s * letters + a];
            if (!seen[t]) {
                seen[t] = 1;
                reachable_order.push_back(t);
            }
        }
    }

    std::vector<State> block(n, 0);
    std::size_t block_count = 0;
    {
        bool has_acc = false;
        bool has_rej = false;
        for (State s : reachable_order) (dfa.accepting[s] ? has_acc : has_rej) = true;
        for (State s : reachable_order) block[s] = (has_acc && has_rej && dfa.accepting[s]) ? 1 : 0;
        block_count = (has_acc && has_rej) ? 2 : 1;
    }
    std::vector<State> signature(letters + 1);
    while (true) {
        std::unordered_map<std::vector<State>, State, VectorHash> ids;
        std::vector<State> refined(n, 0);
        for (State s : reachable_order) {
            signature[0] = block[s];
            for (Letter a = 0; a < letters; ++a) signature[a + 1] = block[dfa.transitions[s * letters + a]];
            auto [it, inserted] = ids.emplace(signature, static_cast<State>(ids.size()));
            refined[s] = it->second;
        }
        block.swap(refined);
        if (ids.size() == block_count) break;
        block_count = ids.size();
    }

    // Representative transitions per block, then canonical BFS numbering.
    std::vector<State> representative(block_count, 0);
    for (State s : reachable_order) representative[block[s]] = s;
    std::vector<State> number(block_count, static_cast<State>(-1));
    std::vector<State> order;
    order.push_back(block[dfa.initial]);
    number[block[dfa.initial]] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        State rep = representative[order[head]];
        for (Letter a = 0; a < letters; ++a) {
            State b = block[dfa.transitions[rep * letters + a]];
            if (number[b] == static_cast<State>(-1)) {
                number[b] = static_cast<State>(order.size());
                order.push_back(b);
            }
        }
    }
    RawDfa out;
    out.dimension = dfa.dimension;
    out.initial = 0;
    out.accepting.resize(order.size());
    out.transitions.resize(order.size() * letters);
    for (std::size_t i = 0; i < order.size(); ++i) {
        State rep = representative[order[i]];
        out.accepting[i] = dfa.accepting[rep];
        for (Letter a = 0; a < letters; ++a) {
            out.transitions[i * letters + a] = number[block[dfa.transitions[rep * letters + a]]];
        }
    }
    return out;
}

Integer dot_letter(const IntegerVector& coeffs, Letter a) {
    Integer sum = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if ((a >> k) & 1U) sum += coeffs[k];
    }
    return sum;
}

// Inserts bit `bit` at position `index` of a letter over n-1 coordinates.
Letter widen_letter(Letter a, std::size_t index, Letter bit) {
    const Letter low = a & ((Letter{1} << index) - 1);
    const Letter high = (a >> index) << (index + 1);
    return high | low | (bit << index);
}

}  // namespace

std::size_t dimension_limit() { return g_dimension_limit.load(); }

void set_dimension_limit(std::size_t limit) { g_dimension_limit.store(limit); }

// ---------------------------------------------------------------------------
// IntegerSet construction
// ---------------------------------------------------------------------------

IntegerSet::IntegerSet() : dimension_(0), initial_(0), accepting_{0}, transitions_{0}, canonical_(true) {}

struct AutomatonAccess {
    // `dfa` must come out of minimize().
    static IntegerSet canonical(RawDfa&& dfa) {
        IntegerSet s;
        s.dimension_ = dfa.dimension;
        s.initial_ = dfa.initial;
        s.accepting_ = std::move(dfa.accepting);
        s.transitions_ = std::move(dfa.transitions);
        s.canonical_ = true;
        return s;
    }
};

namespace {

IntegerSet wrap(RawDfa&& dfa) { return AutomatonAccess::canonical(std::move(dfa)); }

}  // namespace

IntegerSet IntegerSet::empty(std::size_t dimension) {
    check_capacity(dimension);
    IntegerSet s;
    s.dimension_ = dimension;
    s.accepting_ = {0};
    s.transitions_.assign(s.letter_count(), 0);
    return s;
}

IntegerSet IntegerSet::universe(std::size_t dimension) {
    check_capacity(dimension);
    IntegerSet s;
    s.dimension_ = dimension;
    s.accepting_ = {0, 1};
    s.transitions_.assign(2 * s.letter_count(), 1);
    return s;
}

IntegerSet IntegerSet::from_constraint(const LinearConstraint& constraint) {
    const std::size_t n = constraint.coeffs.size();
    check_capacity(n);
    const std::size_t letters = std::size_t{1} << n;
    std::vector<Integer> weight(letters);
    for (Letter a = 0; a < letters; ++a) weight[a] = dot_letter(constraint.coeffs, a);

    // Key: (residual, flag). flag = 2 marks the initial state, flag = 3 the
    // dead state of an equation; otherwise flag tells whether the word read
    // so far, taking its last letter as the sign digit, satisfies the atom.
    using Key = std::pair<Integer, int>;
    const bool equation = constraint.relation == Relation::kEq;
    auto successor = [&](const Key& key, Letter a) -> Key {
        if (key.second == 3) return key;
        const Integer& residual = key.first;
        const Integer& w = weight[a];
        if (equation) {
            Integer rest = residual - w;
            if (mpz_odd_p(rest.get_mpz_t())) return {Integer(0), 3};
            Integer next = rest / 2;
            return {next, residual + w == 0 ? 1 : 0};
        }
        return {floor_div(residual - w, 2), residual + w >= 0 ? 1 : 0};
    };
    auto accepting = [](const Key& key) { return key.second == 1; };
    RawDfa dfa = explore<Key, std::map<Key, State>>(n, Key{constraint.constant, 2}, successor, accepting);
    return wrap(minimize(dfa));
}

IntegerSet IntegerSet::from_constraints(std::size_t dimension, std::span<const LinearConstraint> constraints) {
    IntegerSet result = universe(dimension);
    for (const auto& c : constraints) {
        if (c.coeffs.size() != dimension) throw DimensionError("constraint dimension mismatch");
        result = intersection(result, from_constraint(c));
    }
    return result;
}

IntegerSet IntegerSet::point(std::span<const Integer> z) {
    std::vector<LinearConstraint> eqs;
    for (std::size_t k = 0; k < z.size(); ++k) {
        LinearConstraint c{IntegerVector(z.size(), 0), Relation::kEq, z[k]};
        c.coeffs[k] = 1;
        eqs.push_back(std::move(c));
    }
    return from_constraints(z.size(), eqs);
}

IntegerSet IntegerSet::from_automaton(std::size_t dimension, State initial, std::vector<bool> accepting,
                                      std::vector<State> transitions) {
    check_capacity(dimension);
    const std::size_t letters = std::size_t{1} << dimension;
    const std::size_t n = accepting.size();
    if (n == 0 || initial >= n) throw InvalidArgument("automaton: bad initial state");
    if (transitions.size() != n * letters) throw InvalidArgument("automaton: transition table is not complete");
    for (State t : transitions) {
        if (t >= n) throw InvalidArgument("automaton: transition to unknown state");
    }
    if (accepting[initial]) throw InvalidArgument("automaton: the empty word encodes no vector");
    IntegerSet s;
    s.dimension_ = dimension;
    s.initial_ = initial;
    s.accepting_.assign(accepting.begin(), accepting.end());
    s.transitions_ = std::move(transitions);
    s.canonical_ = false;
    return s;
}

namespace {

RawDfa raw(const IntegerSet& s) {
    RawDfa dfa;
    dfa.dimension = s.dimension();
    dfa.initial = s.initial();
    const std::size_t letters = s.letter_count();
    dfa.accepting.resize(s.state_count());
    dfa.transitions.resize(s.state_count() * letters);
    for (State q = 0; q < s.state_count(); ++q) {
        dfa.accepting[q] = s.accepting(q) ? 1 : 0;
        for (Letter a = 0; a < letters; ++a) dfa.transitions[q * letters + a] = s.next(q, a);
    }
    return dfa;
}

}  // namespace

IntegerSet canonicalize(const IntegerSet& s) {
    if (s.canonical_) return s;
    return wrap(minimize(raw(s)));
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

std::size_t encoding_length(std::span<const Integer> z) {
    std::size_t length = 1;
    for (const auto& v : z) {
        if (v == 0 || v == -1) continue;
        Integer magnitude = v < 0 ? Integer(-v - 1) : v;
        length = std::max(length, mpz_sizeinbase(magnitude.get_mpz_t(), 2) + 1);
    }
    return length;
}

std::vector<Letter> encode(std::span<const Integer> z, std::size_t length) {
    std::vector<Letter> word(length, 0);
    for (std::size_t k = 0; k < z.size(); ++k) {
        for (std::size_t i = 0; i < length; ++i) {
            if (mpz_tstbit(z[k].get_mpz_t(), i)) word[i] |= Letter{1} << k;
        }
    }
    return word;
}

IntegerVector decode(std::span<const Letter> word, std::size_t dimension) {
    IntegerVector z(dimension, 0);
    if (word.empty()) return z;
    for (std::size_t k = 0; k < dimension; ++k) {
        Integer value = 0;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if ((word[i] >> k) & 1U) {
                Integer bit;
                mpz_ui_pow_ui(bit.get_mpz_t(), 2, i);
                value += bit;
            }
        }
        if ((word.back() >> k) & 1U) {
            Integer bit;
            mpz_ui_pow_ui(bit.get_mpz_t(), 2, word.size() - 1);
            value -= bit;
        }
        z[k] = value;
    }
    return z;
}

bool IntegerSet::accepts(std::span<const Letter> word) const {
    State q = initial_;
    for (Letter a : word) q = next(q, a);
    return accepting(q);
}

bool IntegerSet::contains(std::span<const Integer> z) const {
    if (z.size() != dimension_) {
        throw DimensionError("contains: point of dimension " + std::to_string(z.size()) + " in set of dimension " +
                             std::to_string(dimension_));
    }
    return accepts(encode(z, encoding_length(z)));
}

bool IntegerSet::contains(std::initializer_list<long> z) const {
    IntegerVector v;
    for (long x : z) v.emplace_back(x);
    return contains(v);
}

bool IntegerSet::is_empty() const {
    std::vector<char> seen(state_count(), 0);
    std::vector<State> stack{initial_};
    seen[initial_] = 1;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        if (accepting(q)) return false;
        for (Letter a = 0; a < letter_count(); ++a) {
            State t = next(q, a);
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return true;
}

bool IntegerSet::is_universal() const { return equals(*this, universe(dimension_)); }

std::optional<IntegerVector> IntegerSet::witness() const {
    const std::size_t n = state_count();
    std::vector<State> parent(n, static_cast<State>(-1));
    std::vector<Letter> via(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<State> queue{initial_};
    seen[initial_] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        State q = queue[head];
        if (accepting(q)) {
            std::vector<Letter> word;
            for (State s = q; s != initial_; s = parent[s]) word.push_back(via[s]);
            std::reverse(word.begin(), word.end());
            return decode(word, dimension_);
        }
        for (Letter a = 0; a < letter_count(); ++a) {
            State t = next(q, a);
            if (!seen[t]) {
                seen[t] = 1;
                parent[t] = q;
                via[t] = a;
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

std::vector<IntegerVector> IntegerSet::enumerate(long bound) const {
    std::vector<IntegerVector> members;
    IntegerVector z(dimension_, Integer(-bound));
    while (true) {
        if (contains(z)) members.push_back(z);
        std::size_t k = dimension_;
        while (k > 0) {
            --k;
            if (z[k] < bound) {
                z[k] += 1;
                break;
            }
            z[k] = -bound;
            if (k == 0) return members;
        }
        if (dimension_ == 0) return members;
    }
}

bool is_saturated(const IntegerSet& s) {
    const std::size_t letters = s.letter_count();
    std::vector<bool> seen(s.state_count(), false);
    std::vector<State> stack{s.initial()};
    seen[s.initial()] = true;
    while (!stack.empty()) {
        const State p = stack.back();
        stack.pop_back();
        for (Letter a = 0; a < letters; ++a) {
            const State q = s.next(p, a);
            if (s.accepting(q) != s.accepting(s.next(q, a))) return false;
            if (!seen[q]) {
                seen[q] = true;
                stack.push_back(q);
            }
        }
    }
    return true;
}

bool is_empty(const IntegerSet& s) { return s.is_empty(); }

bool equals(const IntegerSet& a, const IntegerSet& b) {
    if (a.dimension() != b.dimension()) throw DimensionError("equals: dimension mismatch");
    if (a.is_canonical() && b.is_canonical()) return a == b;
    return canonicalize(a) == canonicalize(b);
}

// ---------------------------------------------------------------------------
// Boolean operations
// ---------------------------------------------------------------------------

namespace {

template <class Combine>
IntegerSet synchronous_product(const IntegerSet& a, const IntegerSet& b, Combine combine) {
    using Key = std::uint64_t;
    auto successor = [&](Key key, Letter l) -> Key {
        State p = static_cast<State>(key >> 32);
        State q = static_cast<State>(key & 0xffffffffULL);
        return (static_cast<Key>(a.next(p, l)) << 32) | b.next(q, l);
    };
    auto accepting = [&](Key key) {
        return combine(a.accepting(static_cast<State>(key >> 32)), b.accepting(static_cast<State>(key & 0xffffffffULL)));
    };
    Key start = (static_cast<Key>(a.initial()) << 32) | b.initial();
    return wrap(minimize(explore<Key, std::unordered_map<Key, State>>(a.dimension(), start, successor, accepting)));
}

}  // namespace

IntegerSet complement(const IntegerSet& s) {
    // A fresh initial state keeps the empty word rejected after flipping.
    RawDfa dfa = raw(s);
    const std::size_t letters = dfa.letters();
    const State fresh = static_cast<State>(dfa.states());
    for (auto& acc : dfa.accepting) acc = acc ? 0 : 1;
    dfa.accepting.push_back(0);
    for (Letter a = 0; a < letters; ++a) dfa.transitions.push_back(dfa.transitions[s.initial() * letters + a]);
    dfa.initial = fresh;
    return wrap(minimize(dfa));
}

IntegerSet intersection(const IntegerSet& a, const IntegerSet& b) {
    check_same_dimension(a, b, "intersection");
    return synchronous_product(a, b, [](bool x, bool y) { return x && y; });
}

IntegerSet union_of(const IntegerSet& a, const IntegerSet& b) {
    check_same_dimension(a, b, "union");
    return synchronous_product(a, b, [](bool x, bool y) { return x || y; });
}

IntegerSet difference(const IntegerSet& a, const IntegerSet& b) {
    check_same_dimension(a, b, "difference");
    return synchronous_product(a, b, [](bool x, bool y) { return x && !y; });
}

IntegerSet product(const IntegerSet& a, const IntegerSet& b) {
    // Saturation lets the shorter encoding be padded with its sign digit, so a
    // synchronous run over the joint alphabet is exact.
    const std::size_t shift = a.dimension();
    const Letter mask = static_cast<Letter>((std::size_t{1} << shift) - 1);
    using Key = std::uint64_t;
    auto successor = [&](Key key, Letter l) -> Key {
        State p = static_cast<State>(key >> 32);
        State q = static_cast<State>(key & 0xffffffffULL);
        return (static_cast<Key>(a.next(p, l & mask)) << 32) | b.next(q, l >> shift);
    };
    auto accepting = [&](Key key) {
        return a.accepting(static_cast<State>(key >> 32)) && b.accepting(static_cast<State>(key & 0xffffffffULL));
    };
    Key start = (static_cast<Key>(a.initial()) << 32) | b.initial();
    return wrap(minimize(
        explore<Key, std::unordered_map<Key, State>>(a.dimension() + b.dimension(), start, successor, accepting)));
}

IntegerSet reorder(const IntegerSet& s, std::span<const std::size_t> permutation) {
    const std::size_t n = s.dimension();
    if (permutation.size() != n) throw InvalidArgument("reorder: permutation has wrong length");
    std::vector<char> used(n, 0);
    for (std::size_t p : permutation) {
        if (p >= n || used[p]) throw InvalidArgument("reorder: not a permutation");
        used[p] = 1;
    }
    RawDfa dfa = raw(s);
    const std::size_t letters = dfa.letters();
    std::vector<Letter> source(letters, 0);
    for (Letter l = 0; l < letters; ++l) {
        Letter old = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if ((l >> k) & 1U) old |= Letter{1} << permutation[k];
        }
        source[l] = old;
    }
    RawDfa out = dfa;
    for (State q = 0; q < dfa.states(); ++q) {
        for (Letter l = 0; l < letters; ++l) out.transitions[q * letters + l] = dfa.transitions[q * letters + source[l]];
    }
    return wrap(minimize(out));
}

IntegerSet project(const IntegerSet& s, std::size_t index) {
    const std::size_t n = s.dimension();
    if (index >= n) throw InvalidArgument("project: coordinate " + std::to_string(index) + " out of range");
    const std::size_t out_dim = n - 1;
    const std::size_t out_letters = std::size_t{1} << out_dim;

    // Subset construction over the alphabet without coordinate `index`.
    using Key = std::vector<State>;
    auto successor = [&](const Key& set, Letter l) -> Key {
        Key next;
        next.reserve(set.size() * 2);
        for (State q : set) {
            next.push_back(s.next(q, widen_letter(l, index, 0)));
            next.push_back(s.next(q, widen_letter(l, index, 1)));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        return next;
    };
    auto any_accepting = [&](const Key& set) {
        return std::any_of(set.begin(), set.end(), [&](State q) { return s.accepting(q); });
    };
    RawDfa subset = explore<Key, std::unordered_map<Key, State, VectorHash>>(out_dim, Key{s.initial()}, successor,
                                                                           any_accepting);

    // Re-saturation: after reading w.l from state q, accept iff some
    // repetition w.l^k (k >= 1) reaches an accepting subset.
    const std::size_t m = subset.states();
    std::vector<std::uint8_t> pumped(m * out_letters, 0);
    std::vector<std::uint8_t> status(m);
    std::vector<State> path;
    for (Letter l = 0; l < out_letters; ++l) {
        // status: 0 unknown, 1 on current path, 2 resolved false, 3 resolved true
        std::fill(status.begin(), status.end(), 0);
        for (State start = 0; start < m; ++start) {
            if (status[start] >= 2) continue;
            path.clear();
            State q = start;
            bool result = false;
            while (true) {
                if (status[q] >= 2) {
                    result = status[q] == 3;
                    break;
                }
                if (status[q] == 1) {
                    result = false;  // cycle without reaching acceptance so far
                    break;
                }
                status[q] = 1;
                path.push_back(q);
                State t = subset.transitions[q * out_letters + l];
                if (subset.accepting[t]) {
                    result = true;
                    break;
                }
                q = t;
            }
            for (State p : path) status[p] = result ? 3 : 2;
        }
        for (State q = 0; q < m; ++q) pumped[q * out_letters + l] = status[q] == 3 ? 1 : 0;
    }

    using PairKey = std::uint64_t;
    auto pair_successor = [&](PairKey key, Letter l) -> PairKey {
        State q = static_cast<State>(key >> 1);
        return (static_cast<PairKey>(subset.transitions[q * out_letters + l]) << 1) | pumped[q * out_letters + l];
    };
    auto pair_accepting = [](PairKey key) { return (key & 1U) != 0; };
    PairKey start = static_cast<PairKey>(subset.initial) << 1;
    return wrap(minimize(
        explore<PairKey, std::unordered_map<PairKey, State>>(out_dim, start, pair_successor, pair_accepting)));
}

bool intersects_box(const IntegerSet& a, std::span<const IntegerSet> coordinate_sets) {
    const std::size_t n = a.dimension();
    if (coordinate_sets.size() != n) throw DimensionError("intersects_box: one set per coordinate expected");
    for (const auto& c : coordinate_sets) {
        if (c.dimension() != 1) throw DimensionError("intersects_box: coordinate sets must be one-dimensional");
    }
    using Key = std::vector<State>;
    Key start{a.initial()};
    for (const auto& c : coordinate_sets) start.push_back(c.initial());
    std::unordered_map<Key, char, VectorHash> seen;
    std::vector<Key> stack{start};
    seen.emplace(start, 1);
    const std::size_t letters = a.letter_count();
    Key next(n + 1);
    while (!stack.empty()) {
        Key cur = std::move(stack.back());
        stack.pop_back();
        bool all = a.accepting(cur[0]);
        for (std::size_t k = 0; all && k < n; ++k) all = coordinate_sets[k].accepting(cur[k + 1]);
        if (all) return true;
        for (Letter l = 0; l < letters; ++l) {
            next[0] = a.next(cur[0], l);
            for (std::size_t k = 0; k < n; ++k) next[k + 1] = coordinate_sets[k].next(cur[k + 1], (l >> k) & 1U);
            if (seen.emplace(next, 1).second) stack.push_back(next);
        }
    }
    return false;
}

}  // namespace intdec::presburger
