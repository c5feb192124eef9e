#pragma once

// Finite cubical sets with connections, stored by nondegenerate cells. Every
// cell is x . e for a unique nondegenerate x and epimorphism e; each
// nondegenerate cell records its 2k faces in that form.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "boxcat.hpp"
#include "errors.hpp"
#include "sset.hpp"
#include "vertex.hpp"

namespace cubical {

struct CellRef {
    int dim = 0;
    int id = 0;
    auto operator<=>(const CellRef&) const = default;
};

// base . epi, with epi : [1]^j ->> [1]^{base.dim}
struct Cell {
    BoxMap epi;
    CellRef base;
    int dim() const { return epi.src(); }
    bool degenerate() const { return !epi.is_identity(); }
    friend bool operator==(const Cell& a, const Cell& b) { return a.base == b.base && a.epi == b.epi; }
    friend bool operator<(const Cell& a, const Cell& b) {
        if (a.base != b.base) return a.base < b.base;
        return a.epi < b.epi;
    }
};

inline Cell nondegenerate(int dim, int id) { return {BoxMap::identity(dim), {dim, id}}; }

struct FaceRecord {
    BoxMap epi;  // [1]^{k-1} ->> [1]^{target dimension}
    int target = 0;
};

struct NondegCell {
    std::string name;
    std::vector<FaceRecord> faces;  // index 2*(i-1) + eps
};

inline std::size_t face_slot(int i, int eps) { return static_cast<std::size_t>(2 * (i - 1) + eps); }

class CubicalComplex {
public:
    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    int count(int k) const { return k < 0 || k > top_dim() ? 0 : static_cast<int>(cells_[static_cast<std::size_t>(k)].size()); }

    const NondegCell& cell(int k, int id) const {
        if (id < 0 || id >= count(k)) throw IndexOutOfRange("no cell " + std::to_string(id) + " in dimension " + std::to_string(k));
        return cells_[static_cast<std::size_t>(k)][static_cast<std::size_t>(id)];
    }
    const std::string& name(CellRef c) const { return cell(c.dim, c.id).name; }

    int add_cell(int k, std::string name, std::vector<FaceRecord> faces = {}) {
        if (k < 0) throw DimensionMismatch("negative dimension");
        if (faces.size() != static_cast<std::size_t>(2 * k)) throw DimensionMismatch("a k-cell needs 2k face records");
        for (auto& f : faces)
            if (f.epi.src() != k - 1 || !f.epi.is_epi() || f.target < 0 || f.target >= count(f.epi.dst()))
                throw PreconditionViolation("bad face record for cell " + name);
        if (static_cast<int>(cells_.size()) <= k) cells_.resize(static_cast<std::size_t>(k + 1));
        auto& v = cells_[static_cast<std::size_t>(k)];
        v.push_back({std::move(name), std::move(faces)});
        return static_cast<int>(v.size()) - 1;
    }

    // raw insertion without checks; validate() afterwards
    int add_cell_unchecked(int k, std::string name, std::vector<FaceRecord> faces) {
        if (static_cast<int>(cells_.size()) <= k) cells_.resize(static_cast<std::size_t>(k + 1));
        auto& v = cells_[static_cast<std::size_t>(k)];
        v.push_back({std::move(name), std::move(faces)});
        return static_cast<int>(v.size()) - 1;
    }

    Cell face(CellRef x, int i, int eps) const {
        const auto& r = cell(x.dim, x.id).faces.at(face_slot(i, eps));
        return {r.epi, {r.epi.dst(), r.target}};
    }

    // x . phi for an arbitrary box map phi into [1]^{x.dim}
    Cell act(CellRef x, BoxMap phi) const {
        if (phi.dst() != x.dim) throw DimensionMismatch("map does not land in the cell's dimension");
        for (;;) {
            auto [e, m] = epi_mono_factor(phi);
            if (m.is_identity()) return {e, x};
            NormalForm rest = m.normal_form();
            auto [c, eps] = rest.faces.front();
            rest.faces.erase(rest.faces.begin());
            BoxMap m2 = BoxMap::from_normal_form(m.src(), m.dst() - 1, rest);
            const auto& r = cell(x.dim, x.id).faces.at(face_slot(c, eps));
            phi = compose(r.epi, compose(m2, e));
            x = {r.epi.dst(), r.target};
        }
    }
    Cell act(const Cell& c, const BoxMap& phi) const { return act(c.base, compose(c.epi, phi)); }

    // vertex id of x at the vertex v of its cube
    int vertex_of(CellRef x, Mask v) const { return act(x, BoxMap::constant(0, x.dim, v)).base.id; }

    std::vector<Cell> cells_at(int j) const {
        std::vector<Cell> out;
        for (int k = 0; k <= std::min(j, top_dim()); ++k)
            for (auto& e : epis_between(j, k))
                for (int id = 0; id < count(k); ++id) out.push_back({e, {k, id}});
        return out;
    }

    std::vector<std::vector<NondegCell>>& raw() { return cells_; }

private:
    std::vector<std::vector<NondegCell>> cells_;
};

// Presheaf coherence: faces compose consistently. The composite of two face
// maps is recomputed through its normal form and compared with doing the
// two steps one at a time.
inline ValidationReport validate(const CubicalComplex& S) {
    ValidationReport r;
    auto bad = [&](CellRef x, const std::string& what) {
        if (r.violations.size() < 50)
            r.violations.push_back("cell " + std::to_string(x.id) + " (" + S.cell(x.dim, x.id).name + ") in dimension " +
                                   std::to_string(x.dim) + ": " + what);
    };
    for (int k = 0; k <= S.top_dim(); ++k)
        for (int id = 0; id < S.count(k); ++id) {
            CellRef x{k, id};
            const auto& c = S.cell(k, id);
            if (c.faces.size() != static_cast<std::size_t>(2 * k)) {
                bad(x, "wrong number of faces");
                continue;
            }
            bool records_ok = true;
            for (std::size_t s = 0; s < c.faces.size(); ++s) {
                const auto& f = c.faces[s];
                if (f.epi.src() != k - 1 || !f.epi.is_epi()) {
                    bad(x, "face record " + std::to_string(s) + " is not an epimorphism from dimension " + std::to_string(k - 1));
                    records_ok = false;
                } else if (f.target < 0 || f.target >= S.count(f.epi.dst())) {
                    bad(x, "face record " + std::to_string(s) + " has a dangling target");
                    records_ok = false;
                }
            }
            if (!records_ok) continue;
        }
    if (!r.ok()) return r;
    for (int k = 2; k <= S.top_dim(); ++k)
        for (int id = 0; id < S.count(k); ++id) {
            CellRef x{k, id};
            for (int i = 1; i <= k; ++i)
                for (int eps = 0; eps <= 1; ++eps) {
                    Cell y = S.face(x, i, eps);
                    for (int j = 1; j <= k - 1; ++j)
                        for (int del = 0; del <= 1; ++del) {
                            Cell stepwise = S.act(y, BoxMap::face(k - 1, j, del));
                            Cell direct = S.act(x, compose(BoxMap::face(k, i, eps), BoxMap::face(k - 1, j, del)));
                            if (!(stepwise == direct))
                                bad(x, "faces d" + std::to_string(i) + "," + std::to_string(eps) + " then d" + std::to_string(j) +
                                           "," + std::to_string(del) + " disagree with the composite");
                        }
                }
        }
    return r;
}

// --- maps ---------------------------------------------------------------------

// A map of cubical sets, given on nondegenerate cells.
struct ComplexMap {
    std::vector<std::vector<Cell>> image;
};

inline Cell apply(const CubicalComplex& dst, const ComplexMap& f, const Cell& x) {
    const Cell& im = f.image.at(static_cast<std::size_t>(x.base.dim)).at(static_cast<std::size_t>(x.base.id));
    return dst.act(im, x.epi);
}

inline ComplexMap identity_map(const CubicalComplex& S) {
    ComplexMap f;
    f.image.resize(static_cast<std::size_t>(S.top_dim() + 1));
    for (int k = 0; k <= S.top_dim(); ++k)
        for (int id = 0; id < S.count(k); ++id) f.image[static_cast<std::size_t>(k)].push_back(nondegenerate(k, id));
    return f;
}

// g after f, where g lands in C
inline ComplexMap compose_maps(const CubicalComplex& C, const ComplexMap& g, const ComplexMap& f) {
    ComplexMap h;
    h.image.resize(f.image.size());
    for (std::size_t k = 0; k < f.image.size(); ++k)
        for (auto& x : f.image[k]) h.image[k].push_back(apply(C, g, x));
    return h;
}

inline ValidationReport validate_map(const CubicalComplex& A, const CubicalComplex& B, const ComplexMap& f) {
    ValidationReport r;
    for (int k = 0; k <= A.top_dim(); ++k) {
        if (f.image.size() <= static_cast<std::size_t>(k) || f.image[static_cast<std::size_t>(k)].size() != static_cast<std::size_t>(A.count(k))) {
            r.violations.push_back("map is not defined on every cell of dimension " + std::to_string(k));
            return r;
        }
        for (int id = 0; id < A.count(k); ++id) {
            const Cell& im = f.image[static_cast<std::size_t>(k)][static_cast<std::size_t>(id)];
            if (im.dim() != k) r.violations.push_back("image has the wrong dimension");
            for (int i = 1; i <= k; ++i)
                for (int eps = 0; eps <= 1; ++eps)
                    if (!(B.act(im, BoxMap::face(k, i, eps)) == apply(B, f, A.face({k, id}, i, eps))))
                        r.violations.push_back("map does not commute with face d" + std::to_string(i) + "," + std::to_string(eps) +
                                               " of cell " + std::to_string(id) + " in dimension " + std::to_string(k));
        }
    }
    return r;
}

// mono in the presheaf sense: injective on every set of j-cells, j <= top + 1
inline bool is_dimensionwise_injective(const CubicalComplex& A, const CubicalComplex& B, const ComplexMap& f) {
    for (int j = 0; j <= A.top_dim() + 1; ++j) {
        std::set<Cell> seen;
        for (auto& x : A.cells_at(j))
            if (!seen.insert(apply(B, f, x)).second) return false;
    }
    return true;
}

// The cell-level criterion: nondegenerate cells go injectively to
// nondegenerate cells.
inline bool is_mono_by_cells(const CubicalComplex& A, const ComplexMap& f) {
    std::set<CellRef> seen;
    for (auto& dim : f.image)
        for (auto& c : dim) {
            if (c.degenerate()) return false;
            if (!seen.insert(c.base).second) return false;
        }
    (void)A;
    return true;
}

// Every map A -> B, by backtracking over nondegenerate cells of A.
inline std::vector<ComplexMap> enumerate_complex_maps(const CubicalComplex& A, const CubicalComplex& B, std::size_t limit = 100000) {
    std::vector<ComplexMap> out;
    ComplexMap cur;
    cur.image.resize(static_cast<std::size_t>(A.top_dim() + 1));
    std::vector<std::vector<Cell>> candidates(static_cast<std::size_t>(A.top_dim() + 1));
    for (int k = 0; k <= A.top_dim(); ++k) candidates[static_cast<std::size_t>(k)] = B.cells_at(k);
    std::vector<CellRef> order;
    for (int k = 0; k <= A.top_dim(); ++k)
        for (int id = 0; id < A.count(k); ++id) order.push_back({k, id});
    std::function<void(std::size_t)> go = [&](std::size_t t) {
        if (out.size() >= limit) return;
        if (t == order.size()) {
            out.push_back(cur);
            return;
        }
        auto x = order[t];
        for (auto& c : candidates[static_cast<std::size_t>(x.dim)]) {
            bool ok = true;
            for (int i = 1; i <= x.dim && ok; ++i)
                for (int eps = 0; eps <= 1 && ok; ++eps)
                    ok = B.act(c, BoxMap::face(x.dim, i, eps)) == apply(B, cur, A.face(x, i, eps));
            if (!ok) continue;
            cur.image[static_cast<std::size_t>(x.dim)].push_back(c);
            go(t + 1);
            cur.image[static_cast<std::size_t>(x.dim)].pop_back();
        }
    };
    go(0);
    return out;
}

// --- subcomplexes of a cube -----------------------------------------------------

using FacePair = std::pair<Mask, Mask>;  // (a, b) with a subset of b

class SubcomplexOfCube {
public:
    SubcomplexOfCube() = default;
    SubcomplexOfCube(int n, std::set<FacePair> faces) : n_(n), faces_(std::move(faces)) {
        require(n >= 0 && n <= 10, "ambient dimension out of range");
        for (auto [a, b] : faces_) {
            require(subset(a, b) && subset(b, full_mask(n_)), "face pair is not a face of the cube");
            const Mask free = b & ~a;
            for (int c : coords(free)) {
                require(faces_.count({a | bit(c), b}) && faces_.count({a, b & ~bit(c)}), "face set is not closed under faces");
            }
        }
    }

    static SubcomplexOfCube generated_by(int n, const std::vector<FacePair>& gens) {
        std::set<FacePair> all;
        for (auto [a, b] : gens) {
            const Mask free = b & ~a;
            for (Mask lo = free;; lo = (lo - 1) & free) {
                const Mask rest = free & ~lo;
                for (Mask hi = rest;; hi = (hi - 1) & rest) {
                    all.insert({a | lo, a | lo | hi});
                    if (hi == 0) break;
                }
                if (lo == 0) break;
            }
        }
        return SubcomplexOfCube(n, std::move(all));
    }

    int ambient() const { return n_; }
    const std::set<FacePair>& faces() const { return faces_; }
    bool contains(Mask a, Mask b) const { return faces_.count({a, b}) > 0; }
    bool has_vertex(Mask v) const { return contains(v, v); }
    std::vector<Mask> vertices() const {
        std::vector<Mask> vs;
        for (auto [a, b] : faces_)
            if (a == b) vs.push_back(a);
        return vs;
    }
    bool operator==(const SubcomplexOfCube&) const = default;

private:
    int n_ = 0;
    std::set<FacePair> faces_;
};

inline SubcomplexOfCube standard_cube(int n) { return SubcomplexOfCube::generated_by(n, {{0, full_mask(n)}}); }

inline SubcomplexOfCube boundary(int n) {
    auto f = standard_cube(n).faces();
    f.erase({0, full_mask(n)});
    return SubcomplexOfCube(n, std::move(f));
}

// the pair of the face d_{i,eps}
inline FacePair face_pair(int n, int i, int eps) {
    return eps == 1 ? FacePair{bit(i), full_mask(n)} : FacePair{0, full_mask(n) & ~bit(i)};
}

inline SubcomplexOfCube open_box(int n, int i, int eps) {
    require(n >= 1 && i >= 1 && i <= n && (eps == 0 || eps == 1), "open_box: bad parameters");
    auto f = boundary(n).faces();
    f.erase(face_pair(n, i, eps));
    return SubcomplexOfCube(n, std::move(f));
}

// The critical edge of the inner box: alpha -> {i} for eps = 1 and
// omega minus i -> omega for eps = 0.
inline FacePair critical_edge(int n, int i, int eps) {
    return eps == 1 ? FacePair{0, bit(i)} : FacePair{full_mask(n) & ~bit(i), full_mask(n)};
}

// A subcomplex as a cubical set, with the pair of every cell remembered.
struct EmbeddedComplex {
    CubicalComplex complex;
    int ambient = 0;
    std::vector<std::vector<FacePair>> pairs;  // per dimension, by cell id
    std::map<FacePair, CellRef> index;

    int vertex_id(Mask v) const {
        auto it = index.find({v, v});
        if (it == index.end()) throw IndexOutOfRange("vertex " + format_vertex(ambient, v) + " not in complex");
        return it->second.id;
    }
    Mask vertex_mask(int id) const { return pairs.at(0).at(static_cast<std::size_t>(id)).first; }
};

inline std::string pair_name(int n, FacePair p) {
    if (p.first == p.second) return format_vertex(n, p.first);
    return format_vertex(n, p.first) + "->" + format_vertex(n, p.second);
}

inline EmbeddedComplex to_complex(const SubcomplexOfCube& S) {
    EmbeddedComplex E;
    E.ambient = S.ambient();
    int top = -1;
    for (auto [a, b] : S.faces()) top = std::max(top, distance(a, b));
    E.pairs.resize(static_cast<std::size_t>(std::max(top, 0) + 1));
    for (auto p : S.faces()) E.pairs[static_cast<std::size_t>(distance(p.first, p.second))].push_back(p);
    for (int k = 0; k <= top; ++k)
        for (auto p : E.pairs[static_cast<std::size_t>(k)]) {
            std::vector<FaceRecord> faces;
            const auto free = coords(p.second & ~p.first);
            for (int i = 1; i <= k; ++i)
                for (int eps = 0; eps <= 1; ++eps) {
                    const int c = free[static_cast<std::size_t>(i - 1)];
                    FacePair q = eps ? FacePair{p.first | bit(c), p.second} : FacePair{p.first, p.second & ~bit(c)};
                    faces.push_back({BoxMap::identity(k - 1), E.index.at(q).id});
                }
            const int id = E.complex.add_cell(k, pair_name(E.ambient, p), std::move(faces));
            E.index[p] = {k, id};
        }
    return E;
}

// Reads the face pairs back off the cells, through their vertices.
inline std::set<FacePair> extract_faces(const EmbeddedComplex& E) {
    std::set<FacePair> out;
    for (int k = 0; k <= E.complex.top_dim(); ++k)
        for (int id = 0; id < E.complex.count(k); ++id) {
            const int va = E.complex.vertex_of({k, id}, 0);
            const int vb = E.complex.vertex_of({k, id}, full_mask(k));
            out.insert({E.vertex_mask(va), E.vertex_mask(vb)});
        }
    return out;
}

// The map of embedded complexes induced by a box map phi : [1]^m -> [1]^n,
// defined when phi carries every cell of the source into the target.
inline ComplexMap induced_map(const EmbeddedComplex& src, const EmbeddedComplex& dst, const BoxMap& phi) {
    ComplexMap f;
    f.image.resize(src.pairs.size());
    for (std::size_t k = 0; k < src.pairs.size(); ++k)
        for (auto [a, b] : src.pairs[k]) {
            auto [e, m] = epi_mono_factor(compose(phi, BoxMap::iota(src.ambient, a, b)));
            auto it = dst.index.find({m(0), m(full_mask(m.src()))});
            if (it == dst.index.end()) throw PreconditionViolation("induced_map: image leaves the target complex");
            f.image[k].push_back({e, it->second});
        }
    return f;
}

// --- colimits ---------------------------------------------------------------------

struct CoproductResult {
    CubicalComplex object;
    std::vector<ComplexMap> injections;
};

inline CoproductResult coproduct(const std::vector<const CubicalComplex*>& parts) {
    CoproductResult res;
    int top = -1;
    for (auto* p : parts) top = std::max(top, p->top_dim());
    std::vector<int> offset(static_cast<std::size_t>(std::max(top, 0) + 1), 0);
    for (auto* p : parts) {
        ComplexMap inj;
        inj.image.resize(static_cast<std::size_t>(p->top_dim() + 1));
        for (int k = 0; k <= p->top_dim(); ++k) {
            for (int id = 0; id < p->count(k); ++id) {
                auto c = p->cell(k, id);
                for (auto& f : c.faces) f.target += offset[static_cast<std::size_t>(f.epi.dst())];
                const int nid = res.object.add_cell_unchecked(k, c.name, std::move(c.faces));
                inj.image[static_cast<std::size_t>(k)].push_back(nondegenerate(k, nid));
            }
        }
        for (int k = 0; k <= p->top_dim(); ++k) offset[static_cast<std::size_t>(k)] += p->count(k);
        res.injections.push_back(std::move(inj));
    }
    return res;
}

struct PushoutResult {
    CubicalComplex object;
    ComplexMap from_left, from_right;
};

// B <-f- A -g-> C. Cells are materialized dimension by dimension, degenerate
// ones included, glued with union-find, and then re-normalized: a class is
// degenerate exactly when it is some lower nondegenerate class acted on by a
// proper epimorphism.
inline PushoutResult pushout(const CubicalComplex& A, const CubicalComplex& B, const CubicalComplex& C, const ComplexMap& f,
                             const ComplexMap& g) {
    const int top = std::max(B.top_dim(), C.top_dim());
    require(A.top_dim() <= top, "pushout: apex has higher dimension than both legs");
    PushoutResult res;
    // per dimension: class of each materialized cell, and the decomposition of each class
    std::vector<std::map<Cell, int>> cls_b(static_cast<std::size_t>(top + 1)), cls_c(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<Cell>> decomp(static_cast<std::size_t>(top + 1));
    std::vector<std::vector<std::pair<int, Cell>>> reps(static_cast<std::size_t>(top + 1));  // side (0 = B, 1 = C), cell
    auto class_of = [&](int side, const Cell& x) {
        auto& m = side == 0 ? cls_b[static_cast<std::size_t>(x.dim())] : cls_c[static_cast<std::size_t>(x.dim())];
        return m.at(x);
    };
    auto decompose = [&](int side, const Cell& x) { return decomp[static_cast<std::size_t>(x.dim())][static_cast<std::size_t>(class_of(side, x))]; };

    for (int j = 0; j <= top; ++j) {
        auto bj = B.cells_at(j);
        auto cj = C.cells_at(j);
        std::map<Cell, std::size_t> ib, ic;
        for (std::size_t t = 0; t < bj.size(); ++t) ib[bj[t]] = t;
        for (std::size_t t = 0; t < cj.size(); ++t) ic[cj[t]] = t;
        UnionFind uf(bj.size() + cj.size());
        for (auto& a : A.cells_at(j)) uf.unite(ib.at(apply(B, f, a)), bj.size() + ic.at(apply(C, g, a)));
        std::map<std::size_t, int> root_class;
        std::vector<int> cl(bj.size() + cj.size());
        auto& rj = reps[static_cast<std::size_t>(j)];
        for (std::size_t t = 0; t < cl.size(); ++t) {
            auto [it, fresh] = root_class.emplace(uf.find(t), static_cast<int>(rj.size()));
            if (fresh) rj.emplace_back(t < bj.size() ? 0 : 1, t < bj.size() ? bj[t] : cj[t - bj.size()]);
            cl[t] = it->second;
        }
        for (std::size_t t = 0; t < bj.size(); ++t) cls_b[static_cast<std::size_t>(j)][bj[t]] = cl[t];
        for (std::size_t t = 0; t < cj.size(); ++t) cls_c[static_cast<std::size_t>(j)][cj[t]] = cl[t + bj.size()];

        std::vector<bool> marked(rj.size(), false);
        std::vector<Cell> dec(rj.size());
        for (int k = 0; k < j; ++k) {
            const auto& dk = decomp[static_cast<std::size_t>(k)];
            for (std::size_t w = 0; w < dk.size(); ++w) {
                if (dk[w].degenerate()) continue;
                auto [side, r] = reps[static_cast<std::size_t>(k)][w];
                for (auto& e : epis_between(j, k)) {
                    Cell z{e, r.base};
                    const int zc = class_of(side, z);
                    Cell d{e, dk[w].base};
                    if (marked[static_cast<std::size_t>(zc)] && !(dec[static_cast<std::size_t>(zc)] == d))
                        throw Error("pushout: normal form of a cell is not unique");
                    marked[static_cast<std::size_t>(zc)] = true;
                    dec[static_cast<std::size_t>(zc)] = d;
                }
            }
        }
        for (std::size_t z = 0; z < rj.size(); ++z) {
            if (marked[z]) continue;
            auto [side, r] = rj[z];
            // name: every member's name, in order
            std::set<std::string> names;
            for (std::size_t t = 0; t < bj.size(); ++t)
                if (cl[t] == static_cast<int>(z) && !bj[t].degenerate()) names.insert(B.name(bj[t].base));
            for (std::size_t t = 0; t < cj.size(); ++t)
                if (cl[t + bj.size()] == static_cast<int>(z) && !cj[t].degenerate()) names.insert(C.name(cj[t].base));
            std::string nm;
            for (auto& s : names) nm += (nm.empty() ? "" : "~") + s;
            std::vector<FaceRecord> faces;
            const CubicalComplex& S = side == 0 ? B : C;
            for (int i = 1; i <= j; ++i)
                for (int eps = 0; eps <= 1; ++eps) {
                    Cell d = decompose(side, S.act(r, BoxMap::face(j, i, eps)));
                    faces.push_back({d.epi, d.base.id});
                }
            const int id = res.object.add_cell_unchecked(j, nm, std::move(faces));
            dec[z] = nondegenerate(j, id);
        }
        decomp[static_cast<std::size_t>(j)] = std::move(dec);
    }
    auto leg = [&](int side, const CubicalComplex& S) {
        ComplexMap m;
        m.image.resize(static_cast<std::size_t>(S.top_dim() + 1));
        for (int k = 0; k <= S.top_dim(); ++k)
            for (int id = 0; id < S.count(k); ++id) m.image[static_cast<std::size_t>(k)].push_back(decompose(side, nondegenerate(k, id)));
        return m;
    };
    res.from_left = leg(0, B);
    res.from_right = leg(1, C);
    return res;
}

// --- named complexes ----------------------------------------------------------------

inline CubicalComplex point_complex(const std::string& name = "*") {
    CubicalComplex P;
    P.add_cell(0, name);
    return P;
}

// the map from a point (or any single cell's cube) picking out a cell
inline ComplexMap pick_vertex(int v) {
    ComplexMap m;
    m.image.push_back({nondegenerate(0, v)});
    return m;
}

// Quotient of a cube-embedded complex collapsing one edge to a point, plus
// the induced vertex map from the ambient cube.
struct Quotient {
    CubicalComplex complex;
    std::map<Mask, int> vertex_of_mask;
};

inline Quotient collapse_edge(const EmbeddedComplex& E, FacePair edge) {
    require(distance(edge.first, edge.second) == 1, "collapse_edge: not an edge");
    auto I = to_complex(standard_cube(1));
    auto P = point_complex();
    ComplexMap to_point;
    to_point.image.push_back({nondegenerate(0, 0), nondegenerate(0, 0)});
    to_point.image.push_back({Cell{BoxMap::degeneracy(1, 1), {0, 0}}});
    auto into = induced_map(I, E, BoxMap::iota(E.ambient, edge.first, edge.second));
    auto po = pushout(I.complex, P, E.complex, to_point, into);
    Quotient q{std::move(po.object), {}};
    for (int v = 0; v < E.complex.count(0); ++v) q.vertex_of_mask[E.vertex_mask(v)] = po.from_right.image[0][static_cast<std::size_t>(v)].base.id;
    return q;
}

inline Quotient inner_cube(int n, int i, int eps) {
    require(n >= 1 && i >= 1 && i <= n, "inner_cube: bad parameters");
    return collapse_edge(to_complex(standard_cube(n)), critical_edge(n, i, eps));
}

inline Quotient inner_open_box(int n, int i, int eps) {
    require(n >= 2 && i >= 1 && i <= n, "inner_open_box: bad parameters");
    return collapse_edge(to_complex(open_box(n, i, eps)), critical_edge(n, i, eps));
}

// Q^n: the pushout of the faces d_{i,1} : [1]^{i-1} x [1]^{n-i} -> [1]^n
// along the projections onto [1]^{n-i}.
inline Quotient q_complex(int n) {
    require(n >= 1, "q_complex: n must be positive");
    check_guard(n <= 5, "q_complex: n > 5");
    auto cube = to_complex(standard_cube(n));
    auto facet = to_complex(standard_cube(n - 1));
    std::vector<EmbeddedComplex> tails;
    for (int i = 1; i <= n; ++i) tails.push_back(to_complex(standard_cube(n - i)));
    std::vector<const CubicalComplex*> apex_parts(static_cast<std::size_t>(n), &facet.complex), tail_parts;
    for (auto& t : tails) tail_parts.push_back(&t.complex);
    auto A = coproduct(apex_parts);
    auto B = coproduct(tail_parts);
    ComplexMap f, g;
    f.image.resize(static_cast<std::size_t>(n));
    g.image.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        NormalForm proj;
        for (int t = 1; t < i; ++t) proj.degeneracies.push_back(t);
        auto to_tail = induced_map(facet, tails[static_cast<std::size_t>(i - 1)], BoxMap::from_normal_form(n - 1, n - i, proj));
        auto to_cube = induced_map(facet, cube, BoxMap::face(n, i, 1));
        auto tail_in_b = compose_maps(B.object, B.injections[static_cast<std::size_t>(i - 1)], to_tail);
        for (std::size_t k = 0; k < to_cube.image.size(); ++k) {
            for (auto& c : to_cube.image[k]) g.image[k].push_back(c);
            for (auto& c : tail_in_b.image[k]) f.image[k].push_back(c);
        }
    }
    auto po = pushout(A.object, B.object, cube.complex, f, g);
    Quotient q{std::move(po.object), {}};
    for (int v = 0; v < cube.complex.count(0); ++v) {
        const Mask m = cube.vertex_mask(v);
        const int id = po.from_right.image[0][static_cast<std::size_t>(v)].base.id;
        q.vertex_of_mask[m] = id;
        q.complex.raw()[0][static_cast<std::size_t>(id)].name = "q" + std::to_string(sup(m));
    }
    return q;
}

// Two vertices, one middle edge, two flanking edges and two squares whose
// indicated faces are degenerate. Coordinate 1 runs to the right and
// coordinate 2 downwards.
inline CubicalComplex k_complex() {
    CubicalComplex K;
    const int v0 = K.add_cell(0, "0");
    const int v1 = K.add_cell(0, "1");
    auto I0 = BoxMap::identity(0);
    auto edge = [&](const std::string& nm, int from, int to) { return K.add_cell(1, nm, {{I0, from}, {I0, to}}); };
    const int mid = edge("v", v0, v1);
    const int g = edge("g", v1, v0);
    const int h = edge("h", v1, v0);
    auto I1 = BoxMap::identity(1);
    auto s = BoxMap::degeneracy(1, 1);
    // slots: d1,0  d1,1  d2,0  d2,1
    K.add_cell(2, "left", {{s, v1}, {I1, mid}, {I1, g}, {s, v1}});
    K.add_cell(2, "right", {{I1, mid}, {s, v0}, {s, v0}, {I1, h}});
    return K;
}

// The square with both vertical edges collapsed, glued to a second copy of
// itself along d_{2,0} of the first and d_{2,1} of the second.
struct Counterexample {
    CubicalComplex complex;
    int a = 0, b = 0;     // the two vertices
    int u = 0, v = 0, w = 0;  // the three edges
};

inline Quotient collapsed_square() {
    auto sq = to_complex(standard_cube(2));
    auto P = to_complex(standard_cube(0));
    auto I = to_complex(standard_cube(1));
    auto pts = coproduct({&P.complex, &P.complex});
    auto edges = coproduct({&I.complex, &I.complex});
    ComplexMap collapse, include;
    collapse.image.resize(2);
    include.image.resize(2);
    for (int t = 0; t < 2; ++t) {
        for (int v = 0; v < 2; ++v) collapse.image[0].push_back(nondegenerate(0, t));
        collapse.image[1].push_back({BoxMap::degeneracy(1, 1), {0, t}});
        auto e = induced_map(I, sq, BoxMap::face(2, 1, t));
        for (auto& c : e.image[0]) include.image[0].push_back(c);
        for (auto& c : e.image[1]) include.image[1].push_back(c);
    }
    auto po = pushout(edges.object, pts.object, sq.complex, collapse, include);
    Quotient q{std::move(po.object), {}};
    for (int v = 0; v < sq.complex.count(0); ++v) q.vertex_of_mask[sq.vertex_mask(v)] = po.from_right.image[0][static_cast<std::size_t>(v)].base.id;
    return q;
}

inline Counterexample counterexample_x() {
    auto tilde = collapsed_square();
    auto I = to_complex(standard_cube(1));
    // the horizontal edge d_{2,eps} of the square, which survives the collapse
    auto edge_id = [&](int eps) {
        const std::string nm = eps ? pair_name(2, {bit(2), full_mask(2)}) : pair_name(2, {0, bit(1)});
        for (int e = 0; e < tilde.complex.count(1); ++e)
            if (tilde.complex.cell(1, e).name == nm) return e;
        throw Error("collapsed square lost a horizontal edge");
    };
    auto edge_map = [&](int eps) {
        ComplexMap m;
        const int e = edge_id(eps);
        m.image.push_back({tilde.complex.face({1, e}, 1, 0), tilde.complex.face({1, e}, 1, 1)});
        m.image.push_back({nondegenerate(1, e)});
        return m;
    };
    auto po = pushout(I.complex, tilde.complex, tilde.complex, edge_map(0), edge_map(1));
    Counterexample X;
    X.complex = std::move(po.object);
    X.a = po.from_left.image[0][static_cast<std::size_t>(tilde.vertex_of_mask.at(0))].base.id;
    X.b = po.from_left.image[0][static_cast<std::size_t>(tilde.vertex_of_mask.at(full_mask(2)))].base.id;
    X.u = po.from_left.image[1][static_cast<std::size_t>(edge_id(1))].base.id;
    X.v = po.from_left.image[1][static_cast<std::size_t>(edge_id(0))].base.id;
    X.w = po.from_right.image[1][static_cast<std::size_t>(edge_id(0))].base.id;
    return X;
}

// --- necklace-shaped and wedge complexes ------------------------------------------

struct Bipointed {
    CubicalComplex complex;
    int a = 0, b = 0;
};

inline Bipointed wedge(const Bipointed& S, const Bipointed& T) {
    auto P = point_complex();
    auto po = pushout(P, S.complex, T.complex, pick_vertex(S.b), pick_vertex(T.a));
    Bipointed W;
    W.a = po.from_left.image[0][static_cast<std::size_t>(S.a)].base.id;
    W.b = po.from_right.image[0][static_cast<std::size_t>(T.b)].base.id;
    W.complex = std::move(po.object);
    return W;
}

}  // namespace cubical
