#pragma once

// Necklaces: wedges of cubes glued end to start. Vertices are kept as masks
// of the standard embedding into the big cube, so a joint has a single name.

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "boxcat.hpp"
#include "cubeset.hpp"
#include "errors.hpp"
#include "posets.hpp"
#include "vertex.hpp"

namespace cubical {

class Necklace {
public:
    Necklace() = default;
    // beads of dimension 0 are units for the wedge and are dropped
    explicit Necklace(const std::vector<int>& beads) {
        int total = 0;
        for (int b : beads) {
            require(b >= 0, "negative bead dimension");
            if (b > 0) beads_.push_back(b);
            total += b;
        }
        require(total <= kMaxCubeDim, "necklace too large");
    }

    static Necklace parse(const std::string& s) {
        std::vector<int> beads;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) beads.push_back(std::stoi(tok));
        return Necklace(beads);
    }

    const std::vector<int>& beads() const { return beads_; }
    int length() const { return static_cast<int>(beads_.size()); }
    int dim() const {
        int d = 0;
        for (int b : beads_) d += b;
        return d;
    }
    int offset(int i) const {
        int d = 0;
        for (int t = 0; t < i; ++t) d += beads_[static_cast<std::size_t>(t)];
        return d;
    }
    // J_i: everything before bead i. J_0 is alpha and J_length is omega.
    Mask joint(int i) const { return full_mask(offset(i)); }
    Mask bead_coords(int i) const { return joint(i + 1) & ~joint(i); }
    Mask omega() const { return full_mask(dim()); }

    bool in_bead(int i, Mask v) const { return subset(joint(i), v) && subset(v, joint(i + 1)); }
    std::vector<int> beads_containing(Mask v) const {
        std::vector<int> out;
        for (int i = 0; i < length(); ++i)
            if (in_bead(i, v)) out.push_back(i);
        return out;
    }
    bool contains(Mask v) const { return length() == 0 ? v == 0 : !beads_containing(v).empty(); }

    Mask local(int i, Mask v) const { return (v >> offset(i)) & full_mask(beads_[static_cast<std::size_t>(i)]); }
    Mask global(int i, Mask local_v) const { return joint(i) | (local_v << offset(i)); }

    std::vector<Mask> vertices() const {
        std::vector<Mask> vs;
        if (length() == 0) return {0};
        for (int i = 0; i < length(); ++i)
            for (Mask l = 0; l <= full_mask(beads_[static_cast<std::size_t>(i)]); ++l) vs.push_back(global(i, l));
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    SubcomplexOfCube as_subcomplex() const {
        std::vector<FacePair> gens;
        for (int i = 0; i < length(); ++i) gens.push_back({joint(i), joint(i + 1)});
        if (gens.empty()) gens.push_back({0, 0});
        return SubcomplexOfCube::generated_by(dim(), gens);
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < beads_.size(); ++i) s += (i ? "," : "") + std::to_string(beads_[i]);
        return s + ")";
    }

    bool operator==(const Necklace&) const = default;

private:
    std::vector<int> beads_;
};

struct NecMorphism {
    struct Component {
        int bead;    // bead of the target
        BoxMap map;  // source bead -> that bead
    };
    std::vector<Component> components;
    std::vector<Mask> vertex_function;  // on source.vertices(), in that order
};

namespace detail {

inline std::vector<Mask> vertex_function(const Necklace& T, const Necklace& U, const std::vector<NecMorphism::Component>& comps, Mask from) {
    auto vs = T.vertices();
    std::vector<Mask> out(vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (T.length() == 0) {
            out[k] = from;
            continue;
        }
        const int i = T.beads_containing(vs[k]).front();
        const auto& c = comps[static_cast<std::size_t>(i)];
        out[k] = U.global(c.bead, c.map(T.local(i, vs[k])));
    }
    return out;
}

}  // namespace detail

// Bipointed maps T -> U sending alpha to `from` and omega to `to`, listed
// once per vertex function. Components that are constant at a joint are
// attributed to the bead on the right.
inline std::vector<NecMorphism> bipointed_maps(const Necklace& T, const Necklace& U, Mask from, Mask to) {
    require(U.contains(from) && U.contains(to), "bipointed_maps: endpoints are not vertices of the target");
    std::map<std::vector<Mask>, NecMorphism> found;
    std::vector<NecMorphism::Component> cur;
    std::function<void(int, Mask)> go = [&](int i, Mask p) {
        if (i == T.length()) {
            if (p != to) return;
            NecMorphism m{cur, detail::vertex_function(T, U, cur, from)};
            auto [it, fresh] = found.emplace(m.vertex_function, m);
            if (!fresh) {
                auto beads_of = [](const NecMorphism& x) {
                    std::vector<int> b;
                    for (auto& c : x.components) b.push_back(c.bead);
                    return b;
                };
                if (beads_of(m) > beads_of(it->second)) it->second = m;
            }
            return;
        }
        const int n = T.beads()[static_cast<std::size_t>(i)];
        for (int j : U.beads_containing(p)) {
            const int m = U.beads()[static_cast<std::size_t>(j)];
            const Mask lp = U.local(j, p);
            for (auto& f : enumerate_maps(n, m)) {
                if (f(0) != lp) continue;
                cur.push_back({j, f});
                go(i + 1, U.global(j, f(full_mask(n))));
                cur.pop_back();
            }
        }
    };
    if (U.length() == 0) {
        if (T.length() == 0) return {NecMorphism{{}, {0}}};
        // every bead collapses onto the single point
        std::vector<NecMorphism::Component> comps;
        for (int n : T.beads()) comps.push_back({0, BoxMap::constant(n, 0, 0)});
        return {NecMorphism{comps, std::vector<Mask>(T.vertices().size(), 0)}};
    }
    go(0, from);
    std::vector<NecMorphism> out;
    for (auto& [vf, m] : found) out.push_back(m);
    return out;
}

inline std::vector<NecMorphism> hom_nec(const Necklace& T, const Necklace& U) { return bipointed_maps(T, U, 0, U.omega()); }

// g after f, on vertex functions
inline std::vector<Mask> compose_vertex_functions(const Necklace& middle, const std::vector<Mask>& g, const std::vector<Mask>& f) {
    auto vs = middle.vertices();
    std::vector<Mask> out;
    for (Mask x : f) {
        auto it = std::lower_bound(vs.begin(), vs.end(), x);
        require(it != vs.end() && *it == x, "vertex function leaves the middle necklace");
        out.push_back(g[static_cast<std::size_t>(it - vs.begin())]);
    }
    return out;
}

struct Subnecklace {
    Necklace necklace;
    NecMorphism inclusion;
};

// a, the joints strictly between a and b, then b
inline std::vector<Mask> cut_points(const Necklace& T, Mask a, Mask b) {
    require(T.contains(a) && T.contains(b) && subset(a, b), "subnecklace needs vertices a <= b");
    std::vector<Mask> pts{a};
    for (int i = 1; i < T.length(); ++i) {
        const Mask J = T.joint(i);
        if (subset(a, J) && subset(J, b) && J != a && J != b) pts.push_back(J);
    }
    if (b != a) pts.push_back(b);
    return pts;
}

// T_[a,b]: the beads between a and b, cut at a and b.
inline Subnecklace subnecklace(const Necklace& T, Mask a, Mask b) {
    const auto pts = cut_points(T, a, b);
    std::vector<int> beads;
    std::vector<NecMorphism::Component> comps;
    for (std::size_t t = 1; t < pts.size(); ++t) {
        beads.push_back(distance(pts[t - 1], pts[t]));
        int bead = -1;
        for (int i = 0; i < T.length(); ++i)
            if (T.in_bead(i, pts[t - 1]) && T.in_bead(i, pts[t])) bead = i;
        require(bead >= 0, "subnecklace: step leaves every bead");
        const int n = T.beads()[static_cast<std::size_t>(bead)];
        comps.push_back({bead, BoxMap::iota(n, T.local(bead, pts[t - 1]), T.local(bead, pts[t]))});
    }
    Subnecklace s{Necklace(beads), {}};
    s.inclusion.components = comps;
    s.inclusion.vertex_function = detail::vertex_function(s.necklace, T, comps, a);
    return s;
}

// --- flags and SubNeck --------------------------------------------------------------

// a_0 < a_1 < ... < a_k, strictly increasing vertices of a cube
struct Flag {
    std::vector<Mask> points;
    auto operator<=>(const Flag&) const = default;
};

inline std::string to_label(const Flag& F) {
    std::string s;
    for (std::size_t i = 0; i < F.points.size(); ++i) s += (i ? "<" : "") + format_set(F.points[i]);
    return s;
}

inline Necklace flag_necklace(const Flag& F) {
    std::vector<int> beads;
    for (std::size_t i = 1; i < F.points.size(); ++i) beads.push_back(distance(F.points[i - 1], F.points[i]));
    return Necklace(beads);
}

// the blocks a_i \ a_{i-1}
inline OrderedPartition flag_partition(const Flag& F) {
    OrderedPartition p;
    for (std::size_t i = 1; i < F.points.size(); ++i) p.push_back(F.points[i] & ~F.points[i - 1]);
    return p;
}

inline Flag partition_flag(Mask a, const OrderedPartition& p) {
    Flag F{{a}};
    for (Mask blk : p) F.points.push_back(F.points.back() | blk);
    return F;
}

// the flag through the common points
inline Flag lub(const std::vector<Flag>& flags) {
    require(!flags.empty(), "lub of nothing");
    std::vector<Mask> common = flags[0].points;
    for (auto& F : flags) {
        std::vector<Mask> keep;
        std::set_intersection(common.begin(), common.end(), F.points.begin(), F.points.end(), std::back_inserter(keep));
        common = std::move(keep);
    }
    return Flag{common};
}

// Flags from a to b whose consecutive faces lie in S, under reverse
// refinement: F <= G when G's points are among F's.
inline Poset<Flag> subneck_poset(const SubcomplexOfCube& S, Mask a, Mask b) {
    require(S.has_vertex(a) && S.has_vertex(b) && subset(a, b), "subneck_poset needs vertices a <= b of S");
    check_guard(distance(a, b) <= 7, "subneck_poset: more than 7 free coordinates");
    std::vector<Flag> flags;
    Flag cur{{a}};
    std::function<void(Mask)> go = [&](Mask c) {
        if (c == b) {
            flags.push_back(cur);
            return;
        }
        const Mask rest = b & ~c;
        for (Mask s = rest; s != 0; s = (s - 1) & rest) {
            if (!S.contains(c, c | s)) continue;
            cur.points.push_back(c | s);
            go(c | s);
            cur.points.pop_back();
        }
    };
    go(a);
    std::sort(flags.begin(), flags.end());
    std::map<Flag, std::size_t> idx;
    for (std::size_t i = 0; i < flags.size(); ++i) idx[flags[i]] = i;
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        const auto& p = flags[i].points;
        for (std::size_t t = 1; t + 1 < p.size(); ++t) {
            if (!S.contains(p[t - 1], p[t + 1])) continue;
            Flag G = flags[i];
            G.points.erase(G.points.begin() + static_cast<std::ptrdiff_t>(t));
            gens.emplace_back(i, idx.at(G));
        }
    }
    return Poset<Flag>::from_generators(std::move(flags), gens);
}

// The partition posets of the appendix: SubNeck of the boundary of the
// (n+1)-cube, and of the open box missing d_{n+1,0}.
inline Poset<Flag> boundary_partitions(int n) { return subneck_poset(boundary(n + 1), 0, full_mask(n + 1)); }
inline Poset<Flag> open_box_partitions(int n) { return subneck_poset(open_box(n + 1, n + 1, 0), 0, full_mask(n + 1)); }

}  // namespace cubical
