#pragma once

// JSON and DOT output. JSON objects use sorted keys, so equal values give
// identical bytes.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxcat.hpp"
#include "cubeset.hpp"
#include "homology.hpp"
#include "necklace.hpp"
#include "pathcat.hpp"
#include "posets.hpp"
#include "rigidify.hpp"
#include "sset.hpp"
#include "verify.hpp"

namespace cubical {

using json = nlohmann::json;

inline json to_json(const BoxMap& f) {
    json nf;
    const auto& n = f.normal_form();
    nf["faces"] = json::array();
    for (auto [c, e] : n.faces) nf["faces"].push_back({c, e});
    nf["connections"] = n.connections;
    nf["degeneracies"] = n.degeneracies;
    return {{"src", f.src()}, {"dst", f.dst()}, {"table", f.table()}, {"normal_form", nf}, {"word", f.word()}};
}

inline BoxMap box_map_from_json(const json& j) {
    return BoxMap::from_table(j.at("src").get<int>(), j.at("dst").get<int>(), j.at("table").get<std::vector<Mask>>());
}

inline json to_json(const CubicalComplex& C) {
    json cells = json::array();
    for (int k = 0; k <= C.top_dim(); ++k) {
        json dim = json::array();
        for (int id = 0; id < C.count(k); ++id) {
            json faces = json::array();
            for (auto& f : C.cell(k, id).faces) faces.push_back({{"epi", {{"src", f.epi.src()}, {"dst", f.epi.dst()}, {"table", f.epi.table()}}}, {"target", f.target}});
            dim.push_back({{"name", C.cell(k, id).name}, {"faces", faces}});
        }
        cells.push_back(dim);
    }
    return {{"kind", "cubical-complex"}, {"cells", cells}};
}

// rebuilds through add_cell, so face coherence is checked again
inline CubicalComplex complex_from_json(const json& j) {
    CubicalComplex C;
    const auto& cells = j.at("cells");
    for (std::size_t k = 0; k < cells.size(); ++k)
        for (auto& c : cells[k]) {
            std::vector<FaceRecord> faces;
            for (auto& f : c.at("faces")) faces.push_back({box_map_from_json(f.at("epi")), f.at("target").get<int>()});
            C.add_cell(static_cast<int>(k), c.at("name").get<std::string>(), std::move(faces));
        }
    return C;
}

inline json to_json(const SubcomplexOfCube& S) {
    json faces = json::array();
    for (auto [a, b] : S.faces()) faces.push_back({format_vertex(S.ambient(), a), format_vertex(S.ambient(), b)});
    return {{"kind", "cube-subcomplex"}, {"ambient", S.ambient()}, {"faces", faces}};
}

inline SubcomplexOfCube subcomplex_from_json(const json& j) {
    std::vector<FacePair> gens;
    for (auto& f : j.at("faces")) gens.push_back({parse_vertex(f.at(0).get<std::string>()), parse_vertex(f.at(1).get<std::string>())});
    return SubcomplexOfCube::generated_by(j.at("ambient").get<int>(), gens);
}

inline json to_json(const TruncSSet& X) {
    json dims = json::array();
    for (int k = 0; k <= X.top(); ++k) {
        json dim = json::array();
        for (int id = 0; id < X.count(k); ++id) {
            const auto& y = X.simplex(k, id);
            json faces = json::array();
            for (auto& f : y.faces) faces.push_back({{"surj", f.s.values()}, {"base", f.base}});
            dim.push_back({{"vertices", y.vertices}, {"faces", faces}});
        }
        dims.push_back(dim);
    }
    return {{"kind", "simplicial-set"}, {"top", X.top()}, {"labels", X.vertex_labels}, {"simplices", dims}};
}

inline TruncSSet sset_from_json(const json& j) {
    TruncSSet X(j.at("top").get<int>());
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    const auto& dims = j.at("simplices");
    for (std::size_t k = 0; k < dims.size(); ++k)
        for (std::size_t id = 0; id < dims[k].size(); ++id) {
            const auto& y = dims[k][id];
            if (k == 0) {
                X.add_vertex(id < labels.size() ? labels[id] : std::string{});
                continue;
            }
            std::vector<Simplex> faces;
            for (auto& f : y.at("faces")) faces.push_back({Surj::from_values(f.at("surj").get<std::vector<int>>()), f.at("base").get<int>()});
            X.add_simplex(static_cast<int>(k), std::move(faces), y.at("vertices").get<std::vector<int>>());
        }
    return X;
}

inline json to_json(const HomologyReport& h) {
    json groups = json::array();
    for (std::size_t k = 0; k < h.groups.size(); ++k)
        groups.push_back({{"degree", k}, {"betti", h.groups[k].betti}, {"torsion", h.groups[k].torsion}, {"group", h.groups[k].str()}});
    return {{"groups", groups}, {"not_computed_from_degree", h.top}};
}

inline json counts_json(const TruncSSet& X) {
    json c = json::array();
    for (int k = 0; k <= X.top(); ++k) c.push_back(X.count(k));
    return c;
}

inline json to_json(const MappingSpace& M) {
    json words = json::array();
    for (auto& w : M.vertex_words) words.push_back(to_label(w));
    return {{"provenance", M.provenance}, {"vertex_words", words}, {"nondegenerate_counts", counts_json(M.space)}, {"space", to_json(M.space)}};
}

template <class T>
json to_json(const Poset<T>& P) {
    json els = json::array(), edges = json::array();
    for (std::size_t x = 0; x < P.size(); ++x) els.push_back(P.label(x));
    for (auto [x, y] : P.hasse()) edges.push_back({x, y});
    return {{"kind", "poset"}, {"elements", els}, {"hasse", edges}};
}

inline json to_json(const Necklace& T) {
    json vs = json::array();
    for (Mask v : T.vertices()) vs.push_back(format_vertex(T.dim(), v));
    json joints = json::array();
    for (int i = 0; i <= T.length(); ++i) joints.push_back(format_vertex(T.dim(), T.joint(i)));
    return {{"kind", "necklace"}, {"beads", T.beads()}, {"dim", T.dim()}, {"joints", joints}, {"vertices", vs}};
}

inline json to_json(const Necklace& T, const Necklace& U, const NecMorphism& f) {
    json comps = json::array();
    for (auto& c : f.components) comps.push_back({{"bead", c.bead}, {"map", to_json(c.map)}});
    json vf = json::object();
    const auto vs = T.vertices();
    for (std::size_t k = 0; k < vs.size(); ++k) vf[format_vertex(T.dim(), vs[k])] = format_vertex(U.dim(), f.vertex_function[k]);
    return {{"components", comps}, {"vertex_function", vf}};
}

inline json to_json(const CheckResult& r) {
    return {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}};
}

// --- DOT ------------------------------------------------------------------------------

// The 1-skeleton of a complex: nondegenerate edges, degenerate ones dropped.
inline std::string complex_dot(const CubicalComplex& C, const std::string& name = "complex") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    for (int v = 0; v < C.count(0); ++v) os << "  v" << v << " [label=\"" << C.name({0, v}) << "\"];\n";
    for (int e = 0; e < C.count(1); ++e) {
        const int s = C.face({1, e}, 1, 0).base.id, t = C.face({1, e}, 1, 1).base.id;
        os << "  v" << s << " -> v" << t << " [label=\"" << C.name({1, e}) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

// edges by name; a constant path is its vertex
inline std::string path_label(const CubicalComplex& C, const Path& p) {
    if (p.edges.empty()) return C.name({0, p.vertices.front()});
    std::string s;
    for (std::size_t t = 0; t < p.edges.size(); ++t) s += (t ? " ; " : "") + C.name({1, p.edges[t]});
    return s;
}

// Hasse diagram of a path preorder; for preorders, the generating moves.
inline std::string paths_dot(const CubicalComplex& C, const PathPreorder& H, const std::string& name = "paths") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
    for (std::size_t x = 0; x < H.size(); ++x) os << "  p" << x << " [label=\"" << path_label(C, H.path(x)) << "\"];\n";
    if (H.is_partial_order())
        for (auto [x, y] : H.to_poset().hasse()) os << "  p" << x << " -> p" << y << ";\n";
    else
        for (auto [x, y] : H.generators()) os << "  p" << x << " -> p" << y << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace cubical
