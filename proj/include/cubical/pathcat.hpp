#pragma once

// Path categories of loop-free cubical sets. A path class is stored by its
// unique representative: the sequence of nondegenerate edges it runs along.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "cubeset.hpp"
#include "errors.hpp"
#include "necklace.hpp"
#include "posets.hpp"
#include "vertex.hpp"

namespace cubical {

struct Path {
    std::vector<int> vertices;  // a = v_0, ..., v_l = b
    std::vector<int> edges;     // edge t runs from v_t to v_{t+1}
    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const Path&) const = default;
};

namespace detail {

inline int edge_source(const CubicalComplex& C, int e) { return C.face({1, e}, 1, 0).base.id; }
inline int edge_target(const CubicalComplex& C, int e) { return C.face({1, e}, 1, 1).base.id; }

// out-edges per vertex, sorted by edge id
inline std::vector<std::vector<int>> out_edges(const CubicalComplex& C) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(C.count(0)));
    for (int e = 0; e < C.count(1); ++e) out[static_cast<std::size_t>(edge_source(C, e))].push_back(e);
    return out;
}

// nondegenerate edges met by an edge path of cells, constant steps dropped
inline std::vector<int> collapse(const std::vector<Cell>& steps) {
    std::vector<int> out;
    for (auto& c : steps)
        if (!c.degenerate()) out.push_back(c.base.id);
    return out;
}

}  // namespace detail

// Throws LoopDetected when the nondegenerate edges contain a directed cycle.
inline void check_loop_free(const CubicalComplex& C) {
    const auto out = detail::out_edges(C);
    std::vector<int> state(out.size(), 0);
    std::function<void(int)> dfs = [&](int v) {
        state[static_cast<std::size_t>(v)] = 1;
        for (int e : out[static_cast<std::size_t>(v)]) {
            const int w = detail::edge_target(C, e);
            if (state[static_cast<std::size_t>(w)] == 1) throw LoopDetected("directed cycle through vertex " + C.name({0, w}));
            if (state[static_cast<std::size_t>(w)] == 0) dfs(w);
        }
        state[static_cast<std::size_t>(v)] = 2;
    };
    for (int v = 0; v < static_cast<int>(out.size()); ++v)
        if (state[static_cast<std::size_t>(v)] == 0) dfs(v);
}

// All path classes from a to b, ordered by edge sequence.
inline std::vector<Path> enumerate_paths(const CubicalComplex& C, int a, int b) {
    require(a >= 0 && a < C.count(0) && b >= 0 && b < C.count(0), "enumerate_paths: vertex out of range");
    check_loop_free(C);
    const auto out = detail::out_edges(C);
    std::vector<Path> res;
    Path cur{{a}, {}};
    std::function<void(int)> go = [&](int v) {
        if (v == b) {
            res.push_back(cur);
            return;  // loop-free, so b is never revisited
        }
        for (int e : out[static_cast<std::size_t>(v)]) {
            const int w = detail::edge_target(C, e);
            cur.edges.push_back(e);
            cur.vertices.push_back(w);
            go(w);
            cur.edges.pop_back();
            cur.vertices.pop_back();
        }
    };
    go(a);
    std::sort(res.begin(), res.end(), [](const Path& x, const Path& y) { return x.edges < y.edges; });
    return res;
}

// A move in one square: the source path runs d_{1,0} then d_{2,1}, the
// target d_{2,0} then d_{1,1}. Both are stored collapsed.
struct SquareMove {
    int cell;
    std::vector<int> from;
    std::vector<int> to;
};

inline std::vector<SquareMove> square_moves(const CubicalComplex& C) {
    std::vector<SquareMove> moves;
    for (int z = 0; z < C.count(2); ++z) {
        auto s = detail::collapse({C.face({2, z}, 1, 0), C.face({2, z}, 2, 1)});
        auto t = detail::collapse({C.face({2, z}, 2, 0), C.face({2, z}, 1, 1)});
        if (s != t) moves.push_back({z, std::move(s), std::move(t)});
    }
    return moves;
}

// The preorder generated by square moves, closed reflexively and transitively.
class PathPreorder {
public:
    PathPreorder() = default;
    PathPreorder(std::vector<Path> paths, const std::vector<std::pair<std::size_t, std::size_t>>& gens) : paths_(std::move(paths)) {
        const std::size_t n = paths_.size();
        for (std::size_t i = 0; i < n; ++i) index_[paths_[i].edges] = i;
        std::vector<std::vector<std::size_t>> adj(n);
        for (auto [x, y] : gens) {
            adj[x].push_back(y);
            gens_.emplace_back(x, y);
        }
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        up_.assign(n, Bits(n));
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> stack{s};
            up_[s].set(s);
            while (!stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                for (auto y : adj[x])
                    if (!up_[s].test(y)) {
                        up_[s].set(y);
                        stack.push_back(y);
                    }
            }
        }
    }

    std::size_t size() const { return paths_.size(); }
    const std::vector<Path>& paths() const { return paths_; }
    const Path& path(std::size_t i) const { return paths_.at(i); }
    std::optional<std::size_t> find(const std::vector<int>& edges) const {
        auto it = index_.find(edges);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool leadsto(std::size_t x, std::size_t y) const { return up_.at(x).test(y); }
    const std::vector<std::pair<std::size_t, std::size_t>>& generators() const { return gens_; }

    bool is_partial_order() const {
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = x + 1; y < size(); ++y)
                if (leadsto(x, y) && leadsto(y, x)) return false;
        return true;
    }

    // only for partial orders; elements are path indices
    Poset<int> to_poset() const {
        require(is_partial_order(), "path preorder is not antisymmetric");
        std::vector<int> els;
        for (std::size_t i = 0; i < size(); ++i) els.push_back(static_cast<int>(i));
        return Poset<int>::from_leq(els, [&](const int& x, const int& y) {
            return leadsto(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
        });
    }

private:
    std::vector<Path> paths_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> gens_;
    std::vector<Bits> up_;
};

inline PathPreorder leadsto_closure(const CubicalComplex& C, int a, int b) {
    auto paths = enumerate_paths(C, a, b);
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < paths.size(); ++i) idx[paths[i].edges] = i;
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (auto& mv : square_moves(C)) {
        // both sides empty or looping is excluded by loop-freeness
        if (mv.from.empty()) continue;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const auto& e = paths[i].edges;
            for (std::size_t p = 0; p + mv.from.size() <= e.size(); ++p) {
                if (!std::equal(mv.from.begin(), mv.from.end(), e.begin() + static_cast<std::ptrdiff_t>(p))) continue;
                std::vector<int> r(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(p));
                r.insert(r.end(), mv.to.begin(), mv.to.end());
                r.insert(r.end(), e.begin() + static_cast<std::ptrdiff_t>(p + mv.from.size()), e.end());
                gens.emplace_back(i, idx.at(r));
            }
        }
    }
    return PathPreorder(std::move(paths), gens);
}

// --- cubes and their subcomplexes -----------------------------------------------------

// vertex masks along a path of an embedded complex
inline std::vector<Mask> path_flag(const EmbeddedComplex& E, const Path& p) {
    std::vector<Mask> f;
    for (int v : p.vertices) f.push_back(E.vertex_mask(v));
    return f;
}

// the coordinate flipped at each step
inline Word step_word(const std::vector<Mask>& flag) {
    Word w;
    for (std::size_t t = 1; t < flag.size(); ++t) {
        const Mask d = flag[t] & ~flag[t - 1];
        require(popcount(d) == 1 && subset(flag[t - 1], flag[t]), "step_word: not a unit step");
        w.push_back(coords(d).front());
    }
    return w;
}

struct BruhatComparison {
    PathPreorder order;
    std::vector<Word> psi;  // per path
    bool partial_order = false;
    bool isomorphic = false;
};

// Psi from paths of the n-cube between a and b to the weak order on b \ a.
inline BruhatComparison bruhat_compare(int n, Mask a, Mask b) {
    BruhatComparison r;
    auto E = to_complex(standard_cube(n));
    if (!subset(a, b)) return r;
    r.order = leadsto_closure(E.complex, E.vertex_id(a), E.vertex_id(b));
    r.partial_order = r.order.is_partial_order();
    const auto B = bruhat_of(b & ~a);
    std::vector<std::size_t> f;
    for (auto& p : r.order.paths()) {
        r.psi.push_back(step_word(path_flag(E, p)));
        f.push_back(B.index_of(r.psi.back()));
    }
    r.isomorphic = r.partial_order && is_order_isomorphism(r.order.to_poset(), B, f);
    return r;
}

// --- the path category ----------------------------------------------------------------

class PathCategory {
public:
    explicit PathCategory(const CubicalComplex& C) : n_(C.count(0)) {
        check_loop_free(C);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) homs_.emplace(std::make_pair(a, b), leadsto_closure(C, a, b));
    }

    int objects() const { return n_; }
    const PathPreorder& hom(int a, int b) const { return homs_.at({a, b}); }
    std::size_t identity(int a) const { return *hom(a, a).find({}); }

    // index of the concatenation of path x in hom(a,b) with path y in hom(b,c)
    std::size_t compose(int a, int b, int c, std::size_t x, std::size_t y) const {
        auto e = hom(a, b).path(x).edges;
        const auto& f = hom(b, c).path(y).edges;
        e.insert(e.end(), f.begin(), f.end());
        auto r = hom(a, c).find(e);
        require(r.has_value(), "concatenation is not a path");
        return *r;
    }

private:
    int n_;
    std::map<std::pair<int, int>, PathPreorder> homs_;
};

inline PathCategory path_category(const CubicalComplex& C) { return PathCategory(C); }

// Checks units, associativity and monotonicity of composition on every triple.
inline bool check_path_category(const PathCategory& P) {
    const int n = P.objects();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& H = P.hom(a, b);
            for (std::size_t x = 0; x < H.size(); ++x)
                if (P.compose(a, a, b, P.identity(a), x) != x || P.compose(a, b, b, x, P.identity(b)) != x) return false;
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const auto& H1 = P.hom(a, b);
                const auto& H2 = P.hom(b, c);
                for (std::size_t x = 0; x < H1.size(); ++x)
                    for (std::size_t x2 = 0; x2 < H1.size(); ++x2) {
                        if (!H1.leadsto(x, x2)) continue;
                        for (std::size_t y = 0; y < H2.size(); ++y)
                            for (std::size_t y2 = 0; y2 < H2.size(); ++y2)
                                if (H2.leadsto(y, y2) &&
                                    !P.hom(a, c).leadsto(P.compose(a, b, c, x, y), P.compose(a, b, c, x2, y2)))
                                    return false;
                    }
                for (int d = 0; d < n; ++d) {
                    const auto& H3 = P.hom(c, d);
                    for (std::size_t x = 0; x < H1.size(); ++x)
                        for (std::size_t y = 0; y < H2.size(); ++y)
                            for (std::size_t z = 0; z < H3.size(); ++z)
                                if (P.compose(a, c, d, P.compose(a, b, c, x, y), z) != P.compose(a, b, d, x, P.compose(b, c, d, y, z)))
                                    return false;
                }
            }
    return true;
}

// Paths of a necklace from alpha to omega against the product of the beads'
// weak orders: splitting at the joints must be an order isomorphism.
inline bool necklace_paths_split(const Necklace& T) {
    auto E = to_complex(T.as_subcomplex());
    const auto H = leadsto_closure(E.complex, E.vertex_id(0), E.vertex_id(T.omega()));
    std::vector<Mask> letters;
    for (int i = 0; i < T.length(); ++i) letters.push_back(T.bead_coords(i));
    const auto B = bruhat_product(letters);
    if (!H.is_partial_order()) return false;
    std::vector<std::size_t> f;
    for (auto& p : H.paths()) {
        const Word w = step_word(path_flag(E, p));
        std::vector<Word> parts;
        std::size_t pos = 0;
        for (int i = 0; i < T.length(); ++i) {
            const auto len = static_cast<std::size_t>(T.beads()[static_cast<std::size_t>(i)]);
            parts.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + len));
            pos += len;
        }
        auto k = B.find(parts);
        if (!k) return false;
        f.push_back(*k);
    }
    return is_order_isomorphism(H.to_poset(), B, f);
}

}  // namespace cubical
