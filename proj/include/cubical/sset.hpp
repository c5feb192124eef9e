#pragma once

// Truncated simplicial sets stored by their nondegenerate simplices. A
// j-simplex is a pair (s, y): a monotone surjection s : [j] -> [k] and a
// nondegenerate k-simplex y, read as y composed with the degeneracy s.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "posets.hpp"

namespace cubical {

// Monotone surjection [src] -> [src - popcount(rep)]. Bit p of rep is set
// when p and p + 1 have the same image.
struct Surj {
    int src = 0;
    std::uint32_t rep = 0;

    int dst() const { return src - std::popcount(rep); }
    bool is_identity() const { return rep == 0; }

    std::vector<int> values() const {
        std::vector<int> v(static_cast<std::size_t>(src + 1), 0);
        for (int p = 1; p <= src; ++p) v[static_cast<std::size_t>(p)] = v[static_cast<std::size_t>(p - 1)] + ((rep >> (p - 1)) & 1 ? 0 : 1);
        return v;
    }

    static Surj identity(int n) { return {n, 0}; }

    static Surj from_values(const std::vector<int>& v) {
        if (v.empty() || v[0] != 0) throw PreconditionViolation("surjection must start at 0");
        Surj s{static_cast<int>(v.size()) - 1, 0};
        for (std::size_t p = 1; p < v.size(); ++p) {
            if (v[p] == v[p - 1]) s.rep |= std::uint32_t{1} << (p - 1);
            else if (v[p] != v[p - 1] + 1) throw PreconditionViolation("not a monotone surjection");
        }
        return s;
    }

    auto operator<=>(const Surj&) const = default;
};

// outer after inner, [j] -> [k] -> [l]
inline Surj compose(const Surj& outer, const Surj& inner) {
    if (inner.dst() != outer.src) throw DimensionMismatch("surjections do not compose");
    auto vi = inner.values();
    auto vo = outer.values();
    std::vector<int> v(vi.size());
    for (std::size_t p = 0; p < vi.size(); ++p) v[p] = vo[static_cast<std::size_t>(vi[p])];
    return Surj::from_values(v);
}

struct Simplex {
    Surj s;
    int base = 0;  // nondegenerate simplex of dimension s.dst()
    int dim() const { return s.src; }
    int base_dim() const { return s.dst(); }
    bool degenerate() const { return !s.is_identity(); }
    auto operator<=>(const Simplex&) const = default;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& x) const {
        std::uint64_t h = static_cast<std::uint64_t>(x.s.src) * 0x9E3779B97F4A7C15ull;
        h ^= (static_cast<std::uint64_t>(x.s.rep) << 20) ^ static_cast<std::uint64_t>(x.base);
        h *= 0xBF58476D1CE4E5B9ull;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9E3779B97F4A7C15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct NondegSimplex {
    std::vector<Simplex> faces;  // d_0 .. d_k
    std::vector<int> vertices;   // vertex ids, in order
};

class TruncSSet {
public:
    explicit TruncSSet(int top = 0) : top_(top), nd_(static_cast<std::size_t>(top + 1)) {}

    int top() const { return top_; }
    int count(int k) const { return k < 0 || k > top_ ? 0 : static_cast<int>(nd_[static_cast<std::size_t>(k)].size()); }
    bool empty() const { return count(0) == 0; }

    int max_nondeg_dim() const {
        for (int k = top_; k >= 0; --k)
            if (count(k)) return k;
        return -1;
    }

    const NondegSimplex& simplex(int k, int id) const {
        if (k < 0 || k > top_ || id < 0 || id >= count(k))
            throw IndexOutOfRange("no nondegenerate simplex " + std::to_string(id) + " in dimension " + std::to_string(k));
        return nd_[static_cast<std::size_t>(k)][static_cast<std::size_t>(id)];
    }

    int add_simplex(int k, std::vector<Simplex> faces, std::vector<int> vertices) {
        if (k < 0 || k > top_) throw DimensionMismatch("simplex above truncation");
        if (k > 0 && faces.size() != static_cast<std::size_t>(k + 1)) throw DimensionMismatch("wrong number of faces");
        auto& v = nd_[static_cast<std::size_t>(k)];
        v.push_back({std::move(faces), std::move(vertices)});
        return static_cast<int>(v.size()) - 1;
    }

    int add_vertex(std::string label = {}) {
        const int id = add_simplex(0, {}, {count(0)});
        vertex_labels.push_back(label.empty() ? std::to_string(id) : std::move(label));
        return id;
    }

    // d_i (s, y)
    Simplex face(const Simplex& x, int i) const {
        const int j = x.dim();
        if (j == 0 || i < 0 || i > j) throw IndexOutOfRange("bad face index");
        auto v = x.s.values();
        const int m = v[static_cast<std::size_t>(i)];
        v.erase(v.begin() + i);
        const bool still_hit = std::find(v.begin(), v.end(), m) != v.end();
        if (still_hit) return {Surj::from_values(v), x.base};
        for (auto& t : v)
            if (t > m) --t;
        const Simplex& r = simplex(x.base_dim(), x.base).faces.at(static_cast<std::size_t>(m));
        return {compose(r.s, Surj::from_values(v)), r.base};
    }

    // s_i (s, y)
    Simplex degeneracy(const Simplex& x, int i) const {
        auto v = x.s.values();
        if (i < 0 || i >= static_cast<int>(v.size())) throw IndexOutOfRange("bad degeneracy index");
        v.insert(v.begin() + i, v[static_cast<std::size_t>(i)]);
        return {Surj::from_values(v), x.base};
    }

    int vertex(const Simplex& x, int p) const {
        return simplex(x.base_dim(), x.base).vertices.at(static_cast<std::size_t>(x.s.values()[static_cast<std::size_t>(p)]));
    }

    // every simplex of dimension j, degenerate ones included
    std::vector<Simplex> simplices_at(int j) const {
        std::vector<Simplex> out;
        for (int k = 0; k <= std::min(j, top_); ++k) {
            if (count(k) == 0) continue;
            for (std::uint32_t rep = 0; rep < (std::uint32_t{1} << j); ++rep) {
                if (std::popcount(rep) != j - k) continue;
                for (int y = 0; y < count(k); ++y) out.push_back({Surj{j, rep}, y});
            }
        }
        return out;
    }

    std::vector<std::string> vertex_labels;

private:
    int top_;
    std::vector<std::vector<NondegSimplex>> nd_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const TruncSSet& X) {
    ValidationReport r;
    auto bad = [&](int k, int id, const std::string& what) {
        if (r.violations.size() < 50)
            r.violations.push_back("simplex " + std::to_string(id) + " in dimension " + std::to_string(k) + ": " + what);
    };
    for (int k = 0; k <= X.top(); ++k)
        for (int id = 0; id < X.count(k); ++id) {
            const auto& y = X.simplex(k, id);
            if (y.vertices.size() != static_cast<std::size_t>(k + 1)) bad(k, id, "wrong vertex count");
            for (int v : y.vertices)
                if (v < 0 || v >= X.count(0)) bad(k, id, "vertex out of range");
            if (k == 0) {
                if (!y.vertices.empty() && y.vertices[0] != id) bad(k, id, "vertex list of a vertex must be itself");
                continue;
            }
            bool faces_ok = true;
            for (int i = 0; i <= k; ++i) {
                const auto& f = y.faces[static_cast<std::size_t>(i)];
                if (f.dim() != k - 1 || f.base < 0 || f.base >= X.count(f.base_dim())) {
                    bad(k, id, "dangling face d" + std::to_string(i));
                    faces_ok = false;
                }
            }
            if (!faces_ok) continue;
            const Simplex self{Surj::identity(k), id};
            for (int i = 0; i <= k; ++i) {
                auto f = X.face(self, i);
                for (int p = 0; p < k; ++p) {
                    const int expect = y.vertices[static_cast<std::size_t>(p < i ? p : p + 1)];
                    if (X.vertex(f, p) != expect) bad(k, id, "face d" + std::to_string(i) + " has wrong vertices");
                }
            }
            for (int i = 0; i <= k; ++i)
                for (int j = i + 1; j <= k && k >= 2; ++j)
                    if (X.face(X.face(self, j), i) != X.face(X.face(self, i), j - 1))
                        bad(k, id, "simplicial identity fails for d" + std::to_string(i) + " d" + std::to_string(j));
        }
    return r;
}

// --- nerves ------------------------------------------------------------------

// Lookup from vertex sequences to nondegenerate simplices; valid whenever
// simplices are determined by their vertices, as in nerves of posets.
class VertexIndex {
public:
    explicit VertexIndex(const TruncSSet& X) : idx_(static_cast<std::size_t>(X.top() + 1)) {
        for (int k = 0; k <= X.top(); ++k)
            for (int id = 0; id < X.count(k); ++id) idx_[static_cast<std::size_t>(k)].emplace(X.simplex(k, id).vertices, id);
    }
    int find(const std::vector<int>& verts) const {
        const std::size_t k = verts.size() - 1;
        if (verts.empty() || k >= idx_.size()) return -1;
        auto it = idx_[k].find(verts);
        return it == idx_[k].end() ? -1 : it->second;
    }
    // the simplex with this (weakly increasing) vertex sequence
    Simplex simplex_for(const std::vector<int>& verts) const {
        std::vector<int> v{0}, distinct{verts.at(0)};
        for (std::size_t p = 1; p < verts.size(); ++p) {
            if (verts[p] == verts[p - 1]) v.push_back(v.back());
            else {
                v.push_back(v.back() + 1);
                distinct.push_back(verts[p]);
            }
        }
        const int id = find(distinct);
        if (id < 0) throw IndexOutOfRange("no simplex with these vertices");
        return {Surj::from_values(v), id};
    }

private:
    std::vector<std::unordered_map<std::vector<int>, int, VecHash>> idx_;
};

// Nondegenerate simplices are the strictly increasing chains. The default
// truncation is the height plus one, so nothing is lost.
template <class T>
TruncSSet nerve(const Poset<T>& P, int top = -1) {
    if (top < 0) top = std::max(P.height(), 0) + 1;
    TruncSSet X(top);
    for (std::size_t x = 0; x < P.size(); ++x) X.add_vertex(P.label(x));
    std::vector<std::vector<std::vector<int>>> chains(static_cast<std::size_t>(top + 1));
    std::vector<int> cur;
    std::function<void(std::size_t)> grow = [&](std::size_t x) {
        cur.push_back(static_cast<int>(x));
        const std::size_t k = cur.size() - 1;
        if (k > 0) chains[k].push_back(cur);
        if (k < static_cast<std::size_t>(top))
            P.up(x).for_each([&](std::size_t y) {
                if (y != x) grow(y);
            });
        cur.pop_back();
    };
    for (std::size_t x = 0; x < P.size(); ++x) grow(x);
    std::vector<std::unordered_map<std::vector<int>, int, VecHash>> idx(static_cast<std::size_t>(top + 1));
    for (std::size_t x = 0; x < P.size(); ++x) idx[0].emplace(std::vector<int>{static_cast<int>(x)}, static_cast<int>(x));
    for (int k = 1; k <= top; ++k) {
        auto& ck = chains[static_cast<std::size_t>(k)];
        std::sort(ck.begin(), ck.end());
        for (auto& c : ck) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= k; ++i) {
                auto f = c;
                f.erase(f.begin() + i);
                faces.push_back({Surj::identity(k - 1), idx[static_cast<std::size_t>(k - 1)].at(f)});
            }
            idx[static_cast<std::size_t>(k)].emplace(c, X.add_simplex(k, std::move(faces), c));
        }
    }
    return X;
}

// --- maps, products and colimits ---------------------------------------------

// A simplicial map, given on nondegenerate simplices.
struct SMap {
    std::vector<std::vector<Simplex>> image;
};

inline Simplex apply(const SMap& f, const Simplex& x) {
    const Simplex& im = f.image.at(static_cast<std::size_t>(x.base_dim())).at(static_cast<std::size_t>(x.base));
    return {compose(im.s, x.s), im.base};
}

// The map into a nerve-like target induced by a vertex map.
inline SMap map_from_vertices(const TruncSSet& X, const VertexIndex& target, const std::vector<int>& vmap) {
    SMap f;
    f.image.resize(static_cast<std::size_t>(X.top() + 1));
    for (int k = 0; k <= X.top(); ++k)
        for (int id = 0; id < X.count(k); ++id) {
            std::vector<int> v;
            for (int u : X.simplex(k, id).vertices) v.push_back(vmap.at(static_cast<std::size_t>(u)));
            f.image[static_cast<std::size_t>(k)].push_back(target.simplex_for(v));
        }
    return f;
}

// Injective on every simplex up to the truncation, degenerate ones included.
inline bool is_dimensionwise_injective(const TruncSSet& X, const SMap& f) {
    for (int j = 0; j <= X.top(); ++j) {
        std::unordered_map<Simplex, int, SimplexHash> seen;
        for (auto& x : X.simplices_at(j))
            if (!seen.emplace(apply(f, x), 0).second) return false;
    }
    return true;
}

inline int vertex_id_in_product(int a, int b, int nb) { return a * nb + b; }

// X x Y up to the smaller truncation. A pair of j-simplices is nondegenerate
// when the two degeneracies share no repeated position.
inline TruncSSet product(const TruncSSet& X, const TruncSSet& Y) {
    const int top = std::min(X.top(), Y.top());
    TruncSSet P(top);
    const int nx = X.count(0), ny = Y.count(0);
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b) P.add_vertex("(" + X.vertex_labels.at(static_cast<std::size_t>(a)) + "," + Y.vertex_labels.at(static_cast<std::size_t>(b)) + ")");
    std::vector<std::map<std::pair<Simplex, Simplex>, int>> idx(static_cast<std::size_t>(top + 1));
    for (int a = 0; a < nx; ++a)
        for (int b = 0; b < ny; ++b)
            idx[0][{Simplex{Surj::identity(0), a}, Simplex{Surj::identity(0), b}}] = a * ny + b;
    for (int j = 1; j <= top; ++j) {
        auto xs = X.simplices_at(j);
        auto ys = Y.simplices_at(j);
        for (auto& x : xs)
            for (auto& y : ys) {
                if (x.s.rep & y.s.rep) continue;
                std::vector<Simplex> faces;
                for (int i = 0; i <= j; ++i) {
                    auto fx = X.face(x, i);
                    auto fy = Y.face(y, i);
                    // split off the common degeneracies
                    auto vx = fx.s.values(), vy = fy.s.values();
                    const std::uint32_t common = fx.s.rep & fy.s.rep;
                    std::vector<int> wx, wy, c{0};
                    wx.push_back(vx[0]);
                    wy.push_back(vy[0]);
                    for (int p = 1; p < static_cast<int>(vx.size()); ++p) {
                        if ((common >> (p - 1)) & 1) {
                            c.push_back(c.back());
                            continue;
                        }
                        c.push_back(c.back() + 1);
                        wx.push_back(vx[static_cast<std::size_t>(p)]);
                        wy.push_back(vy[static_cast<std::size_t>(p)]);
                    }
                    Simplex px{Surj::from_values(wx), fx.base}, py{Surj::from_values(wy), fy.base};
                    const int d = px.dim();
                    faces.push_back({Surj::from_values(c), idx[static_cast<std::size_t>(d)].at({px, py})});
                }
                std::vector<int> verts;
                for (int p = 0; p <= j; ++p) verts.push_back(X.vertex(x, p) * ny + Y.vertex(y, p));
                idx[static_cast<std::size_t>(j)][{x, y}] = P.add_simplex(j, std::move(faces), std::move(verts));
            }
    }
    return P;
}

struct Diagram {
    struct Arrow {
        int src;
        int dst;
        SMap map;
    };
    std::vector<const TruncSSet*> objects;
    std::vector<Arrow> arrows;
};

struct ColimitResult {
    TruncSSet object;
    std::vector<SMap> injections;
    bool materialized = false;  // whether degenerate simplices had to be enumerated
};

namespace detail {

inline bool preserves_nondegenerate(const Diagram& D) {
    for (auto& a : D.arrows)
        for (auto& dim : a.map.image)
            for (auto& s : dim)
                if (s.degenerate()) return false;
    return true;
}

// Fast path: no identification can mix degenerate and nondegenerate
// simplices, so classes of nondegenerate simplices are the whole story.
inline ColimitResult colimit_nondegenerate(const Diagram& D, int top) {
    const std::size_t no = D.objects.size();
    ColimitResult res{TruncSSet(top), {}, false};
    std::vector<std::vector<std::vector<int>>> cls(no);  // [obj][dim][id] -> class id
    for (std::size_t o = 0; o < no; ++o) cls[o].resize(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) {
        std::vector<std::size_t> offset(no + 1, 0);
        for (std::size_t o = 0; o < no; ++o) offset[o + 1] = offset[o] + static_cast<std::size_t>(D.objects[o]->count(k));
        UnionFind uf(offset[no]);
        for (auto& a : D.arrows) {
            if (static_cast<std::size_t>(k) >= a.map.image.size()) continue;
            auto& im = a.map.image[static_cast<std::size_t>(k)];
            for (std::size_t id = 0; id < im.size(); ++id)
                uf.unite(offset[static_cast<std::size_t>(a.src)] + id, offset[static_cast<std::size_t>(a.dst)] + static_cast<std::size_t>(im[id].base));
        }
        std::unordered_map<std::size_t, int> root_class;
        std::vector<std::pair<std::size_t, std::size_t>> reps;  // (object, id)
        for (std::size_t o = 0; o < no; ++o) {
            auto& c = cls[o][static_cast<std::size_t>(k)];
            c.resize(static_cast<std::size_t>(D.objects[o]->count(k)));
            for (std::size_t id = 0; id < c.size(); ++id) {
                auto r = uf.find(offset[o] + id);
                auto [it, fresh] = root_class.emplace(r, static_cast<int>(reps.size()));
                if (fresh) reps.emplace_back(o, id);
                c[id] = it->second;
            }
        }
        for (auto [o, id] : reps) {
            const auto& y = D.objects[o]->simplex(k, static_cast<int>(id));
            std::vector<int> verts;
            for (int v : y.vertices) verts.push_back(cls[o][0][static_cast<std::size_t>(v)]);
            if (k == 0) {
                res.object.add_vertex(D.objects[o]->vertex_labels.at(id));
                continue;
            }
            std::vector<Simplex> faces;
            for (auto& f : y.faces) faces.push_back({f.s, cls[o][static_cast<std::size_t>(f.base_dim())][static_cast<std::size_t>(f.base)]});
            res.object.add_simplex(k, std::move(faces), std::move(verts));
        }
    }
    for (std::size_t o = 0; o < no; ++o) {
        SMap inj;
        inj.image.resize(static_cast<std::size_t>(top + 1));
        for (int k = 0; k <= std::min(top, D.objects[o]->top()); ++k)
            for (int c : cls[o][static_cast<std::size_t>(k)]) inj.image[static_cast<std::size_t>(k)].push_back({Surj::identity(k), c});
        res.injections.push_back(std::move(inj));
    }
    return res;
}

using ClassTables = std::vector<std::vector<std::unordered_map<Simplex, int, SimplexHash>>>;

inline Simplex apply_decomp(const std::vector<std::vector<Simplex>>& decomp, const ClassTables& cls, std::size_t o,
                            const Simplex& x) {
    const int c = cls[static_cast<std::size_t>(x.dim())][o].at(x);
    return decomp[static_cast<std::size_t>(x.dim())][static_cast<std::size_t>(c)];
}

inline ColimitResult colimit_materialized(const Diagram& D, int top) {
    const std::size_t no = D.objects.size();
    ColimitResult res{TruncSSet(top), {}, true};
    // decomposition of every class at every dimension as (surjection, nondegenerate class)
    std::vector<std::vector<Simplex>> decomp(static_cast<std::size_t>(top + 1));
    ClassTables cls(static_cast<std::size_t>(top + 1), std::vector<std::unordered_map<Simplex, int, SimplexHash>>(no));
    for (int j = 0; j <= top; ++j) {
        std::vector<std::vector<Simplex>> all(no);
        std::vector<std::size_t> offset(no + 1, 0);
        std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> local(no);
        for (std::size_t o = 0; o < no; ++o) {
            all[o] = D.objects[o]->simplices_at(j);
            offset[o + 1] = offset[o] + all[o].size();
            for (std::size_t t = 0; t < all[o].size(); ++t) local[o].emplace(all[o][t], t);
        }
        UnionFind uf(offset[no]);
        for (auto& a : D.arrows)
            for (std::size_t t = 0; t < all[static_cast<std::size_t>(a.src)].size(); ++t) {
                auto im = apply(a.map, all[static_cast<std::size_t>(a.src)][t]);
                uf.unite(offset[static_cast<std::size_t>(a.src)] + t, offset[static_cast<std::size_t>(a.dst)] + local[static_cast<std::size_t>(a.dst)].at(im));
            }
        std::unordered_map<std::size_t, int> root_class;
        std::vector<std::pair<std::size_t, std::size_t>> reps;
        std::vector<std::vector<int>> cl(no);
        for (std::size_t o = 0; o < no; ++o) {
            cl[o].resize(all[o].size());
            for (std::size_t t = 0; t < all[o].size(); ++t) {
                auto [it, fresh] = root_class.emplace(uf.find(offset[o] + t), static_cast<int>(reps.size()));
                if (fresh) reps.emplace_back(o, t);
                cl[o][t] = it->second;
            }
        }
        const std::size_t ncls = reps.size();
        std::vector<bool> marked(ncls, false);
        std::vector<Simplex> dec(ncls);
        if (j > 0) {
            // every degenerate class is s_i of some class one dimension down
            const auto& prev = decomp[static_cast<std::size_t>(j - 1)];
            std::vector<std::pair<std::size_t, Simplex>> prev_reps(prev.size());
            for (std::size_t o = 0; o < no; ++o)
                for (auto& [x, c] : cls[static_cast<std::size_t>(j - 1)][o]) prev_reps[static_cast<std::size_t>(c)] = {o, x};
            for (std::size_t c = 0; c < prev.size(); ++c) {
                auto [o, x] = prev_reps[c];
                for (int i = 0; i < j; ++i) {
                    auto z = D.objects[o]->degeneracy(x, i);
                    const int zc = cl[o][local[o].at(z)];
                    Surj sigma = Surj::from_values([&] {
                        std::vector<int> v;
                        for (int p = 0; p <= j; ++p) v.push_back(p <= i ? p : p - 1);
                        return v;
                    }());
                    Simplex d{compose(prev[c].s, sigma), prev[c].base};
                    if (marked[static_cast<std::size_t>(zc)] && dec[static_cast<std::size_t>(zc)] != d)
                        throw Error("colimit: Eilenberg-Zilber decomposition is not unique");
                    marked[static_cast<std::size_t>(zc)] = true;
                    dec[static_cast<std::size_t>(zc)] = d;
                }
            }
        }
        for (std::size_t c = 0; c < ncls; ++c) {
            if (marked[c]) continue;
            auto [o, t] = reps[c];
            const Simplex& x = all[o][t];
            int id;
            if (j == 0) {
                id = res.object.add_vertex(D.objects[o]->vertex_labels.at(static_cast<std::size_t>(x.base)));
            } else {
                std::vector<Simplex> faces;
                std::vector<int> verts;
                for (int i = 0; i <= j; ++i) {
                    auto f = D.objects[o]->face(x, i);
                    faces.push_back(apply_decomp(decomp, cls, o, f));
                }
                for (int p = 0; p <= j; ++p) {
                    Simplex v{Surj::identity(0), D.objects[o]->vertex(x, p)};
                    verts.push_back(decomp[0][static_cast<std::size_t>(cls[0][o].at(v))].base);
                }
                id = res.object.add_simplex(j, std::move(faces), std::move(verts));
            }
            dec[c] = {Surj::identity(j), id};
        }
        decomp[static_cast<std::size_t>(j)] = std::move(dec);
        for (std::size_t o = 0; o < no; ++o)
            for (std::size_t t = 0; t < all[o].size(); ++t) cls[static_cast<std::size_t>(j)][o].emplace(all[o][t], cl[o][t]);
    }
    for (std::size_t o = 0; o < no; ++o) {
        SMap inj;
        inj.image.resize(static_cast<std::size_t>(top + 1));
        for (int k = 0; k <= std::min(top, D.objects[o]->top()); ++k)
            for (int id = 0; id < D.objects[o]->count(k); ++id)
                inj.image[static_cast<std::size_t>(k)].push_back(apply_decomp(decomp, cls, o, Simplex{Surj::identity(k), id}));
        res.injections.push_back(std::move(inj));
    }
    return res;
}

}  // namespace detail

// Colimit of a diagram of truncated simplicial sets, computed dimensionwise
// with union-find. Arrows are generating: composites need not be listed.
inline ColimitResult colimit(const Diagram& D, int top, bool force_materialize = false) {
    for (auto& a : D.arrows)
        if (a.src < 0 || a.dst < 0 || a.src >= static_cast<int>(D.objects.size()) || a.dst >= static_cast<int>(D.objects.size()))
            throw IndexOutOfRange("diagram arrow between missing objects");
    if (!force_materialize && detail::preserves_nondegenerate(D)) return detail::colimit_nondegenerate(D, top);
    return detail::colimit_materialized(D, top);
}

}  // namespace cubical
