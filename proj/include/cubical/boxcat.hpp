#pragma once

// The box category: objects [1]^n, morphisms generated by faces, degeneracies
// and negative connections. A morphism is kept both as its vertex table and
// as its unique normal form
//   (d_{c1,e1} ... d_{cr,er}) (g_{b1} ... g_{bq}) (s_{a1} ... s_{ap})
// with a strictly increasing, b strictly increasing and c strictly decreasing.

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex.hpp"

namespace cubical {

struct NormalForm {
    std::vector<std::pair<int, int>> faces;  // (c, eps), c strictly decreasing
    std::vector<int> connections;            // strictly increasing
    std::vector<int> degeneracies;           // strictly increasing
    bool operator==(const NormalForm&) const = default;
};

namespace detail {

inline void check_dims(int n, int m) {
    if (n < 0 || m < 0 || n > 20 || m > kMaxCubeDim)
        throw DimensionMismatch("cube dimensions out of range: " + std::to_string(n) + " -> " +
                                std::to_string(m));
}

inline std::vector<Mask> table_from_normal_form(int n, int m, const NormalForm& nf) {
    check_dims(n, m);
    Mask dropped = 0;
    int prev = 0;
    for (int a : nf.degeneracies) {
        if (a <= prev || a > n) throw DimensionMismatch("bad degeneracy index " + std::to_string(a));
        dropped |= bit(a);
        prev = a;
    }
    std::vector<int> kept;
    for (int i = 1; i <= n; ++i)
        if (!(dropped & bit(i))) kept.push_back(i);
    const int k = static_cast<int>(kept.size());

    std::vector<bool> glue(static_cast<std::size_t>(k + 1), false);
    prev = 0;
    for (int b : nf.connections) {
        if (b <= prev || b > k - 1) throw DimensionMismatch("bad connection index " + std::to_string(b));
        glue[static_cast<std::size_t>(b)] = true;
        prev = b;
    }
    std::vector<Mask> blocks;
    for (int t = 1; t <= k; ++t) {
        if (t == 1 || !glue[static_cast<std::size_t>(t - 1)]) blocks.push_back(0);
        blocks.back() |= bit(kept[static_cast<std::size_t>(t - 1)]);
    }

    Mask fixed = 0, ones = 0;
    prev = m + 1;
    for (auto [c, e] : nf.faces) {
        if (c >= prev || c < 1 || (e != 0 && e != 1))
            throw DimensionMismatch("bad face index " + std::to_string(c));
        fixed |= bit(c);
        if (e) ones |= bit(c);
        prev = c;
    }
    if (m - static_cast<int>(nf.faces.size()) != static_cast<int>(blocks.size()))
        throw DimensionMismatch("normal form does not fit [1]^" + std::to_string(n) + " -> [1]^" +
                                std::to_string(m));
    std::vector<int> free_pos;
    for (int j = 1; j <= m; ++j)
        if (!(fixed & bit(j))) free_pos.push_back(j);

    std::vector<Mask> table(std::size_t{1} << n);
    for (Mask v = 0; v < table.size(); ++v) {
        Mask out = ones;
        for (std::size_t j = 0; j < blocks.size(); ++j)
            if (v & blocks[j]) out |= bit(free_pos[j]);
        table[v] = out;
    }
    return table;
}

// Decodes a vertex table. Each non-constant output coordinate must be the
// max over a block of input coordinates, blocks disjoint and in order.
inline NormalForm normal_form_from_table(int n, int m, const std::vector<Mask>& table) {
    check_dims(n, m);
    if (table.size() != (std::size_t{1} << n)) throw DimensionMismatch("table has wrong size");
    for (Mask v = 0; v < table.size(); ++v) {
        if (!subset(table[v], full_mask(m))) throw DimensionMismatch("table value outside [1]^m");
        for (int i = 1; i <= n; ++i)
            if (!(v & bit(i)) && !subset(table[v], table[v | bit(i)]))
                throw NotMonotone("vertex function is not monotone");
    }
    NormalForm nf;
    std::vector<Mask> blocks;
    for (int j = m; j >= 1; --j) {
        const bool at_alpha = table[0] & bit(j);
        const bool at_omega = table[full_mask(n)] & bit(j);
        if (at_alpha == at_omega) nf.faces.emplace_back(j, at_alpha ? 1 : 0);
    }
    for (int j = 1; j <= m; ++j) {
        const bool at_alpha = table[0] & bit(j);
        const bool at_omega = table[full_mask(n)] & bit(j);
        if (at_alpha == at_omega) continue;
        Mask block = 0;
        for (int i = 1; i <= n; ++i)
            if (table[bit(i)] & bit(j)) block |= bit(i);
        for (Mask v = 0; v < table.size(); ++v)
            if (((table[v] & bit(j)) != 0) != ((v & block) != 0))
                throw NotInBoxCategory("coordinate " + std::to_string(j) + " is not a max of inputs");
        if (!blocks.empty() && sup(blocks.back()) >= std::countr_zero(block) + 1)
            throw NotInBoxCategory("blocks overlap or are out of order");
        blocks.push_back(block);
    }
    Mask used = 0;
    for (Mask b : blocks) used |= b;
    for (int i = 1; i <= n; ++i)
        if (!(used & bit(i))) nf.degeneracies.push_back(i);
    int pos = 0;
    for (Mask b : blocks) {
        const int sz = popcount(b);
        for (int t = 1; t < sz; ++t) nf.connections.push_back(pos + t);
        pos += sz;
    }
    return nf;
}

}  // namespace detail

class BoxMap {
public:
    BoxMap() : table_(1, 0) {}

    static BoxMap from_table(int src, int dst, std::vector<Mask> table) {
        BoxMap f;
        f.nf_ = detail::normal_form_from_table(src, dst, table);
        f.src_ = src;
        f.dst_ = dst;
        f.table_ = std::move(table);
        return f;
    }

    static BoxMap from_normal_form(int src, int dst, NormalForm nf) {
        BoxMap f;
        f.table_ = detail::table_from_normal_form(src, dst, nf);
        f.src_ = src;
        f.dst_ = dst;
        f.nf_ = std::move(nf);
        return f;
    }

    static BoxMap identity(int n) {
        NormalForm nf;
        return from_normal_form(n, n, nf);
    }

    // d^n_{i,eps} : [1]^{n-1} -> [1]^n
    static BoxMap face(int n, int i, int eps) {
        NormalForm nf;
        nf.faces.emplace_back(i, eps);
        return from_normal_form(n - 1, n, nf);
    }

    // s^n_i : [1]^n -> [1]^{n-1}
    static BoxMap degeneracy(int n, int i) {
        NormalForm nf;
        nf.degeneracies.push_back(i);
        return from_normal_form(n, n - 1, nf);
    }

    // g^n_{i,0} : [1]^n -> [1]^{n-1}, max of coordinates i and i+1
    static BoxMap connection(int n, int i) {
        NormalForm nf;
        nf.connections.push_back(i);
        return from_normal_form(n, n - 1, nf);
    }

    static BoxMap constant(int n, int m, Mask v) {
        return from_table(n, m, std::vector<Mask>(std::size_t{1} << n, v));
    }

    // the face of [1]^n with alpha -> a and omega -> b
    static BoxMap iota(int n, Mask a, Mask b) {
        require(subset(a, b) && subset(b, full_mask(n)), "iota needs a <= b inside [1]^n");
        const auto free = coords(b & ~a);
        const int d = static_cast<int>(free.size());
        std::vector<Mask> table(std::size_t{1} << d);
        for (Mask v = 0; v < table.size(); ++v) {
            Mask out = a;
            for (int t = 0; t < d; ++t)
                if (v & bit(t + 1)) out |= bit(free[static_cast<std::size_t>(t)]);
            table[v] = out;
        }
        return from_table(d, n, std::move(table));
    }

    int src() const { return src_; }
    int dst() const { return dst_; }
    Mask operator()(Mask v) const { return table_.at(v); }
    const std::vector<Mask>& table() const { return table_; }
    const NormalForm& normal_form() const { return nf_; }

    bool is_identity() const { return src_ == dst_ && nf_.faces.empty() && nf_.connections.empty() && nf_.degeneracies.empty(); }
    bool is_epi() const { return nf_.faces.empty(); }
    bool is_structurally_mono() const { return nf_.connections.empty() && nf_.degeneracies.empty(); }

    // mono iff d(f(alpha), f(omega)) equals the source dimension
    bool is_mono() const { return distance(table_.front(), table_.back()) == src_; }

    std::string word() const {
        std::string s;
        auto add = [&](const std::string& t) { s += (s.empty() ? "" : " ") + t; };
        for (auto [c, e] : nf_.faces) add("d" + std::to_string(c) + "," + std::to_string(e));
        for (int b : nf_.connections) add("g" + std::to_string(b));
        for (int a : nf_.degeneracies) add("s" + std::to_string(a));
        return s.empty() ? "id" : s;
    }

    friend bool operator==(const BoxMap& x, const BoxMap& y) {
        return x.src_ == y.src_ && x.dst_ == y.dst_ && x.table_ == y.table_;
    }
    friend bool operator<(const BoxMap& x, const BoxMap& y) {
        return std::tie(x.src_, x.dst_, x.table_) < std::tie(y.src_, y.dst_, y.table_);
    }

private:
    int src_ = 0;
    int dst_ = 0;
    std::vector<Mask> table_;
    NormalForm nf_;
};

// g after f
inline BoxMap compose(const BoxMap& g, const BoxMap& f) {
    if (f.dst() != g.src())
        throw DimensionMismatch("cannot compose [1]^" + std::to_string(f.src()) + " -> [1]^" +
                                std::to_string(f.dst()) + " with source [1]^" + std::to_string(g.src()));
    std::vector<Mask> t(f.table().size());
    for (std::size_t v = 0; v < t.size(); ++v) t[v] = g(f.table()[v]);
    return BoxMap::from_table(f.src(), g.dst(), std::move(t));
}

struct EpiMono {
    BoxMap epi;
    BoxMap mono;
};

inline EpiMono epi_mono_factor(const BoxMap& f) {
    const auto& nf = f.normal_form();
    NormalForm e, m;
    e.connections = nf.connections;
    e.degeneracies = nf.degeneracies;
    m.faces = nf.faces;
    const int k = f.dst() - static_cast<int>(nf.faces.size());
    return {BoxMap::from_normal_form(f.src(), k, e), BoxMap::from_normal_form(k, f.dst(), m)};
}

// All maps [1]^n -> [1]^m, sorted by table. Refuses n + m > 8 unless guards are off.
inline std::vector<BoxMap> enumerate_maps(int n, int m, bool epis_only = false) {
    detail::check_dims(n, m);
    check_guard(n + m <= 8 || epis_only, "enumerate_maps: n + m > 8");
    std::vector<BoxMap> out;
    for (Mask drop = 0; drop <= full_mask(n); ++drop) {
        const int k = n - popcount(drop);
        const Mask glue_max = k == 0 ? 0 : full_mask(k - 1);
        for (Mask glue = 0; glue <= glue_max; ++glue) {
            const int blocks = k == 0 ? 0 : k - popcount(glue);
            if (blocks > m) continue;
            if (epis_only && blocks != m) continue;
            const int r = m - blocks;
            for (Mask fixed = 0; fixed <= full_mask(m); ++fixed) {
                if (popcount(fixed) != r) continue;
                const auto fixed_coords = coords(fixed);
                for (Mask signs = 0; signs <= full_mask(r); ++signs) {
                    NormalForm nf;
                    nf.degeneracies = coords(drop);
                    nf.connections = coords(glue);
                    for (int t = r - 1; t >= 0; --t)
                        nf.faces.emplace_back(fixed_coords[static_cast<std::size_t>(t)],
                                              (signs >> t) & 1);
                    out.push_back(BoxMap::from_normal_form(n, m, std::move(nf)));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline const std::vector<BoxMap>& epis_between(int n, int m) {
    thread_local std::map<std::pair<int, int>, std::vector<BoxMap>> cache;
    auto it = cache.find({n, m});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, m), enumerate_maps(n, m, true)).first;
    return it->second;
}

// Words over the generators, written in composition order: the rightmost
// letter acts first.
struct Generator {
    enum Kind { Face, Degeneracy, Connection } kind;
    int index;
    int eps = 0;
    bool operator==(const Generator&) const = default;
};

inline BoxMap evaluate_word(int src, const std::vector<Generator>& word) {
    BoxMap f = BoxMap::identity(src);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int d = f.dst();
        switch (it->kind) {
            case Generator::Face: f = compose(BoxMap::face(d + 1, it->index, it->eps), f); break;
            case Generator::Degeneracy: f = compose(BoxMap::degeneracy(d, it->index), f); break;
            case Generator::Connection: f = compose(BoxMap::connection(d, it->index), f); break;
        }
    }
    return f;
}

inline std::vector<Generator> normal_word(const BoxMap& f) {
    std::vector<Generator> w;
    const auto& nf = f.normal_form();
    for (auto [c, e] : nf.faces) w.push_back({Generator::Face, c, e});
    for (int b : nf.connections) w.push_back({Generator::Connection, b, 0});
    for (int a : nf.degeneracies) w.push_back({Generator::Degeneracy, a, 0});
    return w;
}

}  // namespace cubical
