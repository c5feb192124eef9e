#pragma once

// Mapping spaces of the cubical rigidification. Every vertex of a mapping
// space built here is a permutation word in ambient coordinates, which is
// what lets spaces built by different recipes be compared.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cubeset.hpp"
#include "errors.hpp"
#include "necklace.hpp"
#include "pathcat.hpp"
#include "posets.hpp"
#include "sset.hpp"
#include "vertex.hpp"

namespace cubical {

struct MappingSpace {
    TruncSSet space;
    std::vector<Word> vertex_words;  // empty for spaces whose vertices are not paths
    std::string provenance;
};

namespace detail {

inline Word concat(const std::vector<Word>& parts) {
    Word w;
    for (auto& p : parts) w.insert(w.end(), p.begin(), p.end());
    return w;
}

inline int choose2(int k) { return k * (k - 1) / 2; }

// height of a product of weak orders on blocks of these sizes, plus one
inline int auto_top(const std::vector<Mask>& letters) {
    int h = 0;
    for (Mask m : letters) h += choose2(popcount(m));
    return h + 1;
}

inline std::vector<Mask> step_letters(const std::vector<Mask>& points) {
    std::vector<Mask> out;
    for (std::size_t t = 1; t < points.size(); ++t) out.push_back(points[t] & ~points[t - 1]);
    return out;
}

inline MappingSpace product_space(const std::vector<Mask>& letters, int top, std::string provenance) {
    const auto P = bruhat_product(letters);
    MappingSpace M{nerve(P, top < 0 ? auto_top(letters) : top), {}, std::move(provenance)};
    for (auto& e : P.elements()) M.vertex_words.push_back(concat(e));
    for (std::size_t v = 0; v < M.vertex_words.size(); ++v) M.space.vertex_labels[v] = to_label(M.vertex_words[v]);
    return M;
}

inline MappingSpace empty_space(int top, std::string provenance) { return {TruncSSet(std::max(top, 0)), {}, std::move(provenance)}; }

inline MappingSpace point_space(int top, std::string provenance) {
    MappingSpace M{TruncSSet(std::max(top, 0)), {Word{}}, std::move(provenance)};
    M.space.add_vertex("()");
    return M;
}

}  // namespace detail

// C(T)(a,b): the nerve of the product of the weak orders of the beads of T_[a,b].
inline MappingSpace necklace_mapping_space(const Necklace& T, Mask a, Mask b, int top = -1) {
    require(T.contains(a) && T.contains(b), "necklace_mapping_space: endpoints are not vertices");
    if (!subset(a, b)) return detail::empty_space(top, "necklace-formula");
    return detail::product_space(detail::step_letters(cut_points(T, a, b)), top, "necklace-formula");
}

// The map between two spaces sending each vertex to the vertex with the same
// word; nullopt when a word is missing or a simplex has no image.
inline std::optional<SMap> words_map(const MappingSpace& src, const MappingSpace& dst) {
    std::map<Word, int> where;
    for (std::size_t v = 0; v < dst.vertex_words.size(); ++v) where[dst.vertex_words[v]] = static_cast<int>(v);
    std::vector<int> vmap;
    for (auto& w : src.vertex_words) {
        auto it = where.find(w);
        if (it == where.end()) return std::nullopt;
        vmap.push_back(it->second);
    }
    try {
        return map_from_vertices(src.space, VertexIndex(dst.space), vmap);
    } catch (const IndexOutOfRange&) {
        return std::nullopt;
    }
}

// Same simplices in every dimension, matched through vertex words.
inline bool isomorphic_by_words(const MappingSpace& A, const MappingSpace& B) {
    if (A.space.top() != B.space.top()) return false;
    for (int j = 0; j <= A.space.top(); ++j)
        if (A.space.count(j) != B.space.count(j)) return false;
    auto f = words_map(A, B);
    if (!f) return false;
    for (int j = 0; j <= A.space.top(); ++j)
        for (int id = 0; id < A.space.count(j); ++id)
            if (f->image[static_cast<std::size_t>(j)][static_cast<std::size_t>(id)].degenerate()) return false;
    return is_dimensionwise_injective(A.space, *f);
}

// The SubNeck diagram of a subcomplex of a cube between a and b: one nerve per
// flag, with the maps induced by concatenation along the order.
class SubneckDiagram {
public:
    SubneckDiagram(const SubcomplexOfCube& S, Mask a, Mask b, int top = -1) : poset_(subneck_poset(S, a, b)) {
        top_ = top;
        if (top_ < 0) {
            top_ = 1;
            for (auto& F : poset_.elements()) top_ = std::max(top_, detail::auto_top(detail::step_letters(F.points)));
        }
        for (auto& F : poset_.elements()) objects_.push_back(detail::product_space(detail::step_letters(F.points), top_, "necklace-formula"));
    }

    const Poset<Flag>& poset() const { return poset_; }
    int top() const { return top_; }
    const MappingSpace& object(std::size_t f) const { return objects_.at(f); }

    // F -> G for F below G in the flag order
    const SMap& arrow(std::size_t f, std::size_t g) const {
        auto key = std::make_pair(f, g);
        auto it = arrows_.find(key);
        if (it != arrows_.end()) return it->second;
        auto m = words_map(objects_[f], objects_[g]);
        require(m.has_value(), "flag arrow is not induced by concatenation");
        return arrows_.emplace(key, std::move(*m)).first->second;
    }

    // colimit over the flags in `subset` with the order induced from SubNeck
    MappingSpace colimit_over(const std::vector<std::size_t>& subset) const {
        if (subset.empty()) return detail::empty_space(top_, "subneck-colimit");
        Diagram D;
        for (auto f : subset) D.objects.push_back(&objects_[f].space);
        for (std::size_t x = 0; x < subset.size(); ++x)
            for (std::size_t y = 0; y < subset.size(); ++y) {
                if (!poset_.lt(subset[x], subset[y])) continue;
                bool cover = true;
                for (std::size_t z = 0; z < subset.size() && cover; ++z)
                    if (poset_.lt(subset[x], subset[z]) && poset_.lt(subset[z], subset[y])) cover = false;
                if (cover) D.arrows.push_back({static_cast<int>(x), static_cast<int>(y), arrow(subset[x], subset[y])});
            }
        auto res = colimit(D, top_);
        MappingSpace M{std::move(res.object), {}, "subneck-colimit"};
        M.vertex_words.resize(static_cast<std::size_t>(M.space.count(0)));
        for (std::size_t o = 0; o < subset.size(); ++o) {
            const auto& inj = res.injections[o].image[0];
            for (std::size_t v = 0; v < inj.size(); ++v)
                M.vertex_words[static_cast<std::size_t>(inj[v].base)] = objects_[subset[o]].vertex_words[v];
        }
        return M;
    }

    MappingSpace colimit_all() const {
        std::vector<std::size_t> all(poset_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return colimit_over(all);
    }

private:
    Poset<Flag> poset_;
    int top_ = 1;
    std::vector<MappingSpace> objects_;
    mutable std::map<std::pair<std::size_t, std::size_t>, SMap> arrows_;
};

inline MappingSpace subcomplex_mapping_space(const SubcomplexOfCube& S, Mask a, Mask b, int top = -1) {
    require(S.has_vertex(a) && S.has_vertex(b), "subcomplex_mapping_space: endpoints are not vertices");
    if (!subset(a, b)) return detail::empty_space(top, "subneck-colimit");
    return SubneckDiagram(S, a, b, top).colimit_all();
}

// Mapping spaces of the cube (or open box) with its critical edge collapsed.
// For eps = 1 the edge alpha -> {i} becomes one vertex, the pole; a hom out of
// the pole is the hom out of alpha. For eps = 0 the pole is omega \ {i} ~ omega
// and a hom into the pole is the hom into omega. pa and pb are any vertex
// masks of the cube, poles named by either end.
inline MappingSpace inner_mapping_space(int n, int i, int eps, Mask pa, Mask pb, bool open = false, int top = -1) {
    require(n >= 2 && i >= 1 && i <= n && (eps == 0 || eps == 1), "inner_mapping_space: bad (n, i, eps)");
    require(subset(pa, full_mask(n)) && subset(pb, full_mask(n)), "inner_mapping_space: vertex outside the cube");
    const auto edge = critical_edge(n, i, eps);
    auto pole = [&](Mask v) { return v == edge.first || v == edge.second; };
    auto C = [&](Mask x, Mask y) {
        MappingSpace M = open ? subcomplex_mapping_space(open_box(n, i, eps), x, y, top)
                              : necklace_mapping_space(Necklace({n}), x, y, top);
        M.provenance = "s-construction";
        return M;
    };
    if (pole(pa) && pole(pb)) return detail::point_space(top, "s-construction");
    if (eps == 1 && pole(pa)) return C(0, pb);
    if (eps == 0 && pole(pb)) return C(pa, full_mask(n));
    return C(pa, pb);
}

// C^Delta(Delta^n)(i,j): the nerve of the subsets of ]i,j[.
inline MappingSpace simplicial_hom(int n, int i, int j, int top = -1) {
    require(i >= 0 && j >= 0 && i <= n && j <= n, "simplicial_hom: objects out of range");
    if (i > j) return detail::empty_space(top, "simplicial");
    return {nerve(interval_lattice(i, j), top), {}, "simplicial"};
}

// --- comparison with the simplicial rigidification --------------------------------

// left-to-right records of x
inline Mask records(const Word& x) {
    Mask r = 0;
    int best = 0;
    for (int v : x)
        if (v > best) {
            r |= bit(v);
            best = v;
        }
    return r;
}

inline Mask open_interval(int lo, int hi) {
    Mask m = 0;
    for (int t = lo + 1; t < hi; ++t) m |= bit(t);
    return m;
}

inline Mask psi_tilde(int n, Mask a, Mask b, const Word& x) {
    require(subset(a, b) && subset(b, full_mask(n)), "psi_tilde needs a <= b in the cube");
    Mask seen = 0;
    for (int v : x) {
        require(v >= 1 && v <= n && !(seen & bit(v)), "psi_tilde: word repeats or leaves the cube");
        seen |= bit(v);
    }
    require(seen == (b & ~a), "psi_tilde: word is not a permutation of b \\ a");
    return records(x) & open_interval(sup(a), sup(b));
}

// psi(a,c)(x*y) = psi(a,b)(x) + {sup b} + psi(b,c)(y)
inline bool psi_concat_check(int n, Mask a, Mask b, Mask c, const Word& x, const Word& y) {
    require(subset(a, b) && subset(b, c), "psi_concat_check needs a <= b <= c");
    require(sup(a) < sup(b) && sup(b) < sup(c), "psi_concat_check needs sup a < sup b < sup c");
    Word z = x;
    z.insert(z.end(), y.begin(), y.end());
    return psi_tilde(n, a, c, z) == (psi_tilde(n, a, b, x) | bit(sup(b)) | psi_tilde(n, b, c, y));
}

// psi_tilde is monotone from the weak order on b \ a to subsets.
inline bool psi_monotone_check(int n, Mask a, Mask b) {
    const auto B = bruhat_of(b & ~a);
    for (std::size_t x = 0; x < B.size(); ++x)
        for (std::size_t y = 0; y < B.size(); ++y)
            if (B.leq(x, y) && !subset(psi_tilde(n, a, b, B.element(x)), psi_tilde(n, a, b, B.element(y)))) return false;
    return true;
}

// The composite of psi with the face d_{i,1} only sees the coordinates after i:
// on vertices it is sup({i} + a'), on homs it is the records of the second
// block inside ]sup({i} + a'), sup({i} + b')[.
inline bool gamma_constancy_check(int n, int i) {
    require(i >= 1 && i <= n, "gamma_constancy_check: i out of range");
    const Mask before = full_mask(i - 1);
    const Mask after = full_mask(n) & ~full_mask(i);
    auto subsets = [](Mask m) {
        std::vector<Mask> out;
        for (Mask s = m;; s = (s - 1) & m) {
            out.push_back(s);
            if (s == 0) break;
        }
        return out;
    };
    for (Mask a : subsets(before))
        for (Mask a2 : subsets(after))
            if (sup(a | bit(i) | a2) != sup(bit(i) | a2)) return false;
    std::map<std::tuple<Mask, Mask, Word>, Mask> seen;
    for (Mask b : subsets(before))
        for (Mask a : subsets(b))
            for (Mask b2 : subsets(after))
                for (Mask a2 : subsets(b2)) {
                    const auto X = bruhat_of(b & ~a);
                    const auto Y = bruhat_of(b2 & ~a2);
                    const Mask lo = a | bit(i) | a2, hi = b | bit(i) | b2;
                    for (auto& x : X.elements())
                        for (std::size_t yi = 0; yi < Y.size(); ++yi) {
                            const Word& y = Y.element(yi);
                            Word z = x;
                            z.insert(z.end(), y.begin(), y.end());
                            const Mask v = psi_tilde(n, lo, hi, z);
                            if (v != (records(y) & open_interval(sup(bit(i) | a2), sup(bit(i) | b2)))) return false;
                            auto [it, fresh] = seen.emplace(std::make_tuple(a2, b2, y), v);
                            if (!fresh && it->second != v) return false;
                            // monotone in the second block
                            for (auto y2 : Y.up(yi).indices()) {
                                Word z2 = x;
                                z2.insert(z2.end(), Y.element(y2).begin(), Y.element(y2).end());
                                if (!subset(v, psi_tilde(n, lo, hi, z2))) return false;
                            }
                        }
                }
    return true;
}

// --- the counterexample to cocontinuity of the path category -------------------------

struct CounterexampleReport {
    std::size_t path_count = 0;
    bool chain_u_v_w = false;      // u ~> v ~> w, and nothing else strict besides u ~> w
    int nerve_nondeg_2 = 0;        // nondegenerate 2-simplices of N(C_path X)(a,b)
    int pushout_max_dim = -1;      // of the pushout of the two copies' nerves
    TruncSSet path_nerve{2};
    TruncSSet pushout{2};
};

inline CounterexampleReport counterexample_report() {
    CounterexampleReport R;
    const auto X = counterexample_x();
    const auto H = leadsto_closure(X.complex, X.a, X.b);
    R.path_count = H.size();
    auto idx = [&](int e) { return *H.find({e}); };
    if (H.size() == 3) {
        const auto u = idx(X.u), v = idx(X.v), w = idx(X.w);
        R.chain_u_v_w = H.leadsto(u, v) && H.leadsto(v, w) && H.leadsto(u, w) && !H.leadsto(v, u) && !H.leadsto(w, v) &&
                        !H.leadsto(w, u);
    }
    R.path_nerve = nerve(H.to_poset(), 2);
    R.nerve_nondeg_2 = R.path_nerve.count(2);

    // each copy of the collapsed square has paths d_{2,1} ~> d_{2,0}; the
    // glued edge is d_{2,0} on the left and d_{2,1} on the right
    const auto sq = collapsed_square();
    const int a = sq.vertex_of_mask.at(0), b = sq.vertex_of_mask.at(full_mask(2));
    const auto Hs = leadsto_closure(sq.complex, a, b);
    auto edge_named = [&](FacePair p) {
        for (int e = 0; e < sq.complex.count(1); ++e)
            if (sq.complex.cell(1, e).name == pair_name(2, p)) return e;
        throw Error("collapsed square lost a horizontal edge");
    };
    const int low = static_cast<int>(*Hs.find({edge_named({0, bit(1)})}));
    const int high = static_cast<int>(*Hs.find({edge_named({bit(2), full_mask(2)})}));
    const auto N = nerve(Hs.to_poset(), 2);
    TruncSSet pt(2);
    pt.add_vertex("v");
    Diagram D;
    D.objects = {&pt, &N, &N};
    VertexIndex NI(N);
    D.arrows.push_back({0, 1, map_from_vertices(pt, NI, {low})});
    D.arrows.push_back({0, 2, map_from_vertices(pt, NI, {high})});
    R.pushout = colimit(D, 2).object;
    R.pushout_max_dim = R.pushout.max_nondeg_dim();
    return R;
}

}  // namespace cubical
