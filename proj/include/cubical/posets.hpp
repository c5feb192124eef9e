#pragma once

// Finite posets: relation matrix plus Hasse covers. Bruhat (weak) orders on
// permutations, ordered partitions, interval lattices, products and wedges.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "vertex.hpp"

namespace cubical {

// A permutation of a letter set, written as the sequence of its letters.
using Word = std::vector<int>;
// Blocks of an ordered partition, each block a subset of {1..n}.
using OrderedPartition = std::vector<Mask>;

inline std::string to_label(int x) { return std::to_string(x); }
inline std::string to_label(Mask m) { return format_set(m); }
inline std::string to_label(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}
inline std::string to_label(const OrderedPartition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "|" : "") + format_set(p[i]);
    return s.empty() ? "()" : s;
}
inline std::string to_label(const std::vector<Word>& ws) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "*" : "") + to_label(ws[i]);
    return s.empty() ? "()" : s;
}
template <class A, class B>
std::string to_label(const std::pair<A, B>& p) {
    return "<" + to_label(p.first) + ";" + to_label(p.second) + ">";
}

template <class T>
class Poset {
public:
    using value_type = T;

    Poset() = default;

    // Reflexive-transitive closure of gens (pairs x -> y meaning x <= y).
    // Throws if the closure is not antisymmetric.
    static Poset from_generators(std::vector<T> elements,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& gens) {
        Poset P;
        P.init(std::move(elements));
        const std::size_t n = P.elements_.size();
        std::vector<std::vector<std::size_t>> succ(n);
        std::vector<std::size_t> indeg(n, 0);
        for (auto [x, y] : gens) {
            if (x >= n || y >= n) throw IndexOutOfRange("generator outside poset");
            if (x == y) continue;
            succ[x].push_back(y);
        }
        for (auto& s : succ) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (auto y : s) ++indeg[y];
        }
        std::vector<std::size_t> order, stack;
        for (std::size_t x = 0; x < n; ++x)
            if (indeg[x] == 0) stack.push_back(x);
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            order.push_back(x);
            for (auto y : succ[x])
                if (--indeg[y] == 0) stack.push_back(y);
        }
        if (order.size() != n) throw PreconditionViolation("generating relation has a cycle");
        P.up_.assign(n, Bits(n));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto x = *it;
            P.up_[x].set(x);
            for (auto y : succ[x]) P.up_[x] |= P.up_[y];
        }
        P.covers_.assign(n, {});
        for (std::size_t x = 0; x < n; ++x)
            for (auto y : succ[x]) {
                bool cover = true;
                for (auto w : succ[x])
                    if (w != y && P.up_[w].test(y)) {
                        cover = false;
                        break;
                    }
                if (cover) P.covers_[x].push_back(y);
            }
        return P;
    }

    static Poset from_leq(std::vector<T> elements, const std::function<bool(const T&, const T&)>& leq) {
        const std::size_t n = elements.size();
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (x != y && leq(elements[x], elements[y])) {
                    if (leq(elements[y], elements[x]))
                        throw PreconditionViolation("relation is not antisymmetric");
                    rel.emplace_back(x, y);
                }
        Poset P = from_generators(std::move(elements), rel);
        // the closure must not add anything new
        for (std::size_t x = 0; x < n; ++x)
            if (P.up_[x].count() != 1 + static_cast<std::size_t>(std::count_if(
                                            rel.begin(), rel.end(), [x](auto& r) { return r.first == x; })))
                throw PreconditionViolation("relation is not transitive");
        return P;
    }

    std::size_t size() const { return elements_.size(); }
    const T& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<T>& elements() const { return elements_; }
    std::optional<std::size_t> find(const T& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const T& t) const {
        auto i = find(t);
        if (!i) throw IndexOutOfRange("element not in poset: " + to_label(t));
        return *i;
    }

    bool leq(std::size_t x, std::size_t y) const { return up_.at(x).test(y); }
    bool lt(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
    const Bits& up(std::size_t x) const { return up_.at(x); }
    const std::vector<std::size_t>& covers(std::size_t x) const { return covers_.at(x); }
    std::string label(std::size_t x) const { return to_label(elements_.at(x)); }

    std::vector<std::pair<std::size_t, std::size_t>> hasse() const {
        std::vector<std::pair<std::size_t, std::size_t>> h;
        for (std::size_t x = 0; x < size(); ++x)
            for (auto y : covers_[x]) h.emplace_back(x, y);
        std::sort(h.begin(), h.end());
        return h;
    }

    std::vector<std::size_t> minimal() const {
        std::vector<std::size_t> out;
        for (std::size_t y = 0; y < size(); ++y) {
            bool m = true;
            for (std::size_t x = 0; x < size() && m; ++x)
                if (x != y && leq(x, y)) m = false;
            if (m) out.push_back(y);
        }
        return out;
    }
    std::vector<std::size_t> maximal() const {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < size(); ++x)
            if (up_[x].count() == 1) out.push_back(x);
        return out;
    }
    std::optional<std::size_t> least() const {
        for (std::size_t x = 0; x < size(); ++x)
            if (up_[x].count() == size()) return x;
        return std::nullopt;
    }
    std::optional<std::size_t> greatest() const {
        auto m = maximal();
        if (m.size() != 1) return std::nullopt;
        for (std::size_t x = 0; x < size(); ++x)
            if (!leq(x, m[0])) return std::nullopt;
        return m[0];
    }
    bool is_bounded() const { return least() && greatest(); }

    // number of elements in a longest chain, minus one
    int height() const {
        std::vector<int> h(size(), -1);
        std::function<int(std::size_t)> go = [&](std::size_t x) {
            if (h[x] >= 0) return h[x];
            int best = 0;
            for (auto y : covers_[x]) best = std::max(best, 1 + go(y));
            return h[x] = best;
        };
        int best = size() ? 0 : -1;
        for (std::size_t x = 0; x < size(); ++x) best = std::max(best, go(x));
        return best;
    }

    // the induced subposet on the given indices (in that order)
    Poset induced(const std::vector<std::size_t>& idx) const {
        std::vector<T> els;
        for (auto i : idx) els.push_back(elements_.at(i));
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                if (a != b && leq(idx[a], idx[b])) rel.emplace_back(a, b);
        return from_generators(std::move(els), rel);
    }

private:
    void init(std::vector<T> els) {
        elements_ = std::move(els);
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (!index_.emplace(elements_[i], i).second)
                throw PreconditionViolation("duplicate poset element " + to_label(elements_[i]));
    }

    std::vector<T> elements_;
    std::map<T, std::size_t> index_;
    std::vector<Bits> up_;
    std::vector<std::vector<std::size_t>> covers_;
};

// --- constructions ---------------------------------------------------------

// Weak order on permutations of the letters: x -> y when y swaps an adjacent
// descent of x. The decreasing word is least, the increasing word greatest.
inline Poset<Word> bruhat(std::vector<int> letters) {
    std::sort(letters.begin(), letters.end());
    require(std::adjacent_find(letters.begin(), letters.end()) == letters.end(), "bruhat: repeated letter");
    check_guard(letters.size() <= 7, "bruhat: more than 7 letters");
    std::vector<Word> els;
    Word w = letters;
    do els.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    std::map<Word, std::size_t> idx;
    for (std::size_t i = 0; i < els.size(); ++i) idx[els[i]] = i;
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t p = 0; p + 1 < els[i].size(); ++p)
            if (els[i][p] > els[i][p + 1]) {
                Word v = els[i];
                std::swap(v[p], v[p + 1]);
                gens.emplace_back(i, idx[v]);
            }
    return Poset<Word>::from_generators(std::move(els), gens);
}

inline Poset<Word> bruhat_of(Mask letters) { return bruhat(coords(letters)); }

namespace detail {
inline void ordered_partitions_rec(Mask rest, OrderedPartition& cur, std::vector<OrderedPartition>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (Mask s = rest; s != 0; s = (s - 1) & rest) {
        cur.push_back(s);
        ordered_partitions_rec(rest & ~s, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// Ordered partitions of a finite set under reverse refinement: merging two
// adjacent blocks goes up. The one-block partition is greatest.
inline Poset<OrderedPartition> ordered_partitions_of(Mask ground) {
    check_guard(popcount(ground) <= 6, "ordered_partitions: ground set larger than 6");
    std::vector<OrderedPartition> els;
    OrderedPartition cur;
    detail::ordered_partitions_rec(ground, cur, els);
    if (ground == 0) els = {OrderedPartition{}};
    std::sort(els.begin(), els.end());
    std::map<OrderedPartition, std::size_t> idx;
    for (std::size_t i = 0; i < els.size(); ++i) idx[els[i]] = i;
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t p = 0; p + 1 < els[i].size(); ++p) {
            OrderedPartition q = els[i];
            q[p] |= q[p + 1];
            q.erase(q.begin() + static_cast<std::ptrdiff_t>(p) + 1);
            gens.emplace_back(i, idx.at(q));
        }
    return Poset<OrderedPartition>::from_generators(std::move(els), gens);
}

inline Poset<OrderedPartition> ordered_partitions(int n) { return ordered_partitions_of(full_mask(n)); }

// Subsets of the open interval ]i, j[ under inclusion; elements are masks of integers.
inline Poset<Mask> interval_lattice(int i, int j) {
    require(i >= 0 && j <= 30, "interval_lattice: bounds out of range");
    Mask ground = 0;
    for (int t = i + 1; t < j; ++t) ground |= bit(t);
    std::vector<Mask> els;
    for (Mask s = ground;; s = (s - 1) & ground) {
        els.push_back(s);
        if (s == 0) break;
    }
    std::sort(els.begin(), els.end());
    std::map<Mask, std::size_t> idx;
    for (std::size_t k = 0; k < els.size(); ++k) idx[els[k]] = k;
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t k = 0; k < els.size(); ++k)
        for (int t : coords(ground & ~els[k])) gens.emplace_back(k, idx[els[k] | bit(t)]);
    return Poset<Mask>::from_generators(std::move(els), gens);
}

template <class A, class B>
Poset<std::pair<A, B>> product(const Poset<A>& P, const Poset<B>& Q) {
    std::vector<std::pair<A, B>> els;
    els.reserve(P.size() * Q.size());
    for (std::size_t p = 0; p < P.size(); ++p)
        for (std::size_t q = 0; q < Q.size(); ++q) els.emplace_back(P.element(p), Q.element(q));
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    const std::size_t m = Q.size();
    for (std::size_t p = 0; p < P.size(); ++p)
        for (std::size_t q = 0; q < m; ++q) {
            for (auto p2 : P.covers(p)) gens.emplace_back(p * m + q, p2 * m + q);
            for (auto q2 : Q.covers(q)) gens.emplace_back(p * m + q, p * m + q2);
        }
    return Poset<std::pair<A, B>>::from_generators(std::move(els), gens);
}

// Product of a list of Bruhat orders; elements are tuples of words.
inline Poset<std::vector<Word>> bruhat_product(const std::vector<Mask>& letter_sets) {
    std::vector<Poset<Word>> factors;
    for (Mask m : letter_sets) factors.push_back(bruhat_of(m));
    std::vector<std::vector<Word>> els{{}};
    for (auto& F : factors) {
        std::vector<std::vector<Word>> next;
        for (auto& e : els)
            for (auto& w : F.elements()) {
                next.push_back(e);
                next.back().push_back(w);
            }
        els = std::move(next);
    }
    std::map<std::vector<Word>, std::size_t> idx;
    for (std::size_t i = 0; i < els.size(); ++i) idx[els[i]] = i;
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t f = 0; f < factors.size(); ++f) {
            auto x = factors[f].index_of(els[i][f]);
            for (auto y : factors[f].covers(x)) {
                auto e = els[i];
                e[f] = factors[f].element(y);
                gens.emplace_back(i, idx.at(e));
            }
        }
    return Poset<std::vector<Word>>::from_generators(std::move(els), gens);
}

// P wedge Q: the top of P glued to the bottom of Q. Elements are tagged with
// the side they come from; the glued point is tagged 0.
template <class T>
Poset<std::pair<int, T>> wedge(const Poset<T>& P, const Poset<T>& Q) {
    auto top = P.greatest();
    auto bot = Q.least();
    require(top.has_value() && bot.has_value(), "wedge needs a top in P and a bottom in Q");
    std::vector<std::pair<int, T>> els;
    for (auto& x : P.elements()) els.emplace_back(0, x);
    std::vector<std::size_t> qidx(Q.size());
    for (std::size_t q = 0; q < Q.size(); ++q) {
        if (q == *bot) {
            qidx[q] = *top;
            continue;
        }
        qidx[q] = els.size();
        els.emplace_back(1, Q.element(q));
    }
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t p = 0; p < P.size(); ++p)
        for (auto y : P.covers(p)) gens.emplace_back(p, y);
    for (std::size_t q = 0; q < Q.size(); ++q)
        for (auto y : Q.covers(q)) gens.emplace_back(qidx[q], qidx[y]);
    return Poset<std::pair<int, T>>::from_generators(std::move(els), gens);
}

template <class T>
bool is_downward_closed(const Poset<T>& P, const std::vector<std::size_t>& subset) {
    Bits in(P.size());
    for (auto i : subset) in.set(i);
    for (auto y : subset)
        for (std::size_t x = 0; x < P.size(); ++x)
            if (P.leq(x, y) && !in.test(x)) return false;
    return true;
}

template <class T>
bool is_upward_closed(const Poset<T>& P, const std::vector<std::size_t>& subset) {
    Bits in(P.size());
    for (auto i : subset) in.set(i);
    for (auto x : subset)
        if (!P.up(x).is_subset_of(in)) return false;
    return true;
}

template <class T>
std::vector<std::size_t> down_closure(const Poset<T>& P, const std::vector<std::size_t>& seeds) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < P.size(); ++x)
        for (auto s : seeds)
            if (P.leq(x, s)) {
                out.push_back(x);
                break;
            }
    return out;
}

// f is an order isomorphism P -> Q given as an index map
template <class A, class B>
bool is_order_isomorphism(const Poset<A>& P, const Poset<B>& Q, const std::vector<std::size_t>& f) {
    if (P.size() != Q.size() || f.size() != P.size()) return false;
    std::vector<bool> hit(Q.size(), false);
    for (auto y : f) {
        if (y >= Q.size() || hit[y]) return false;
        hit[y] = true;
    }
    for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t y = 0; y < P.size(); ++y)
            if (P.leq(x, y) != Q.leq(f[x], f[y])) return false;
    return true;
}

// Hasse diagram in DOT, arrows pointing up.
template <class T>
std::string to_dot(const Poset<T>& P, const std::string& name = "poset") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
    for (std::size_t x = 0; x < P.size(); ++x) os << "  n" << x << " [label=\"" << P.label(x) << "\"];\n";
    for (auto [x, y] : P.hasse()) os << "  n" << x << " -> n" << y << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace cubical
