// Command-line front end: build complexes, list paths, compute mapping spaces
// and homology, run the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubical/boxcat.hpp"
#include "cubical/cubeset.hpp"
#include "cubical/homology.hpp"
#include "cubical/necklace.hpp"
#include "cubical/pathcat.hpp"
#include "cubical/posets.hpp"
#include "cubical/rigidify.hpp"
#include "cubical/serialize.hpp"
#include "cubical/sset.hpp"
#include "cubical/verify.hpp"

using namespace cubical;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    for (auto& t : split(s, ','))
        if (!t.empty()) out.push_back(std::stoi(t));
    return out;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionViolation("cannot open " + path);
    return json::parse(in);
}

// A complex named on the command line, with whatever extra structure its
// constructor knows about.
struct Resolved {
    CubicalComplex complex;
    std::optional<SubcomplexOfCube> sub;
    std::optional<Necklace> necklace;
    std::map<Mask, int> vertex_of_mask;
    int ambient = -1;
    struct Inner {
        int n, i, eps;
        bool open;
    };
    std::optional<Inner> inner;
    std::optional<int> alpha, omega;
};

Resolved from_sub(SubcomplexOfCube S) {
    Resolved r;
    auto E = to_complex(S);
    r.complex = E.complex;
    r.ambient = S.ambient();
    for (int v = 0; v < E.complex.count(0); ++v) r.vertex_of_mask[E.vertex_mask(v)] = v;
    if (S.has_vertex(0)) r.alpha = E.vertex_id(0);
    if (S.has_vertex(full_mask(S.ambient()))) r.omega = E.vertex_id(full_mask(S.ambient()));
    r.sub = std::move(S);
    return r;
}

Resolved from_quotient(Quotient q, int n) {
    Resolved r;
    r.complex = std::move(q.complex);
    r.ambient = n;
    r.vertex_of_mask = q.vertex_of_mask;
    r.alpha = r.vertex_of_mask.at(0);
    r.omega = r.vertex_of_mask.at(full_mask(n));
    return r;
}

int param(const std::vector<std::string>& parts, std::size_t k, const std::string& spec) {
    if (k >= parts.size()) throw PreconditionViolation("complex spec " + spec + " is missing a parameter");
    return std::stoi(parts[k]);
}

Resolved resolve(const std::string& spec, int max_dim) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    const auto parts = split(rest, ':');
    auto dim_ok = [&](int n) {
        if (n > max_dim) throw GuardExceeded("dimension " + std::to_string(n) + " exceeds --max-dim " + std::to_string(max_dim));
        return n;
    };
    if (kind == "cube") return from_sub(standard_cube(dim_ok(param(parts, 0, spec))));
    if (kind == "boundary") return from_sub(boundary(dim_ok(param(parts, 0, spec))));
    if (kind == "open-box") return from_sub(open_box(dim_ok(param(parts, 0, spec)), param(parts, 1, spec), param(parts, 2, spec)));
    if (kind == "necklace") {
        Necklace T = Necklace::parse(rest);
        dim_ok(T.dim());
        auto r = from_sub(T.as_subcomplex());
        r.necklace = T;
        return r;
    }
    if (kind == "inner-cube" || kind == "inner-box") {
        const int n = dim_ok(param(parts, 0, spec)), i = param(parts, 1, spec), e = param(parts, 2, spec);
        const bool open = kind == "inner-box";
        auto r = from_quotient(open ? inner_open_box(n, i, e) : inner_cube(n, i, e), n);
        r.inner = Resolved::Inner{n, i, e, open};
        return r;
    }
    if (kind == "q") {
        const int n = dim_ok(param(parts, 0, spec));
        return from_quotient(q_complex(n), n);
    }
    if (kind == "collapsed-square") return from_quotient(collapsed_square(), 2);
    if (kind == "k") {
        Resolved r;
        r.complex = k_complex();
        return r;
    }
    if (kind == "counterexample") {
        auto X = counterexample_x();
        Resolved r;
        r.complex = std::move(X.complex);
        r.alpha = X.a;
        r.omega = X.b;
        return r;
    }
    if (kind == "file") {
        json j = read_json(rest);
        // the export wrapper: prefer the subcomplex, it keeps the ambient cube
        if (j.contains("subcomplex")) j = j.at("subcomplex");
        else if (j.contains("complex") && !j.contains("cells")) j = j.at("complex");
        if (j.value("kind", "") == "cube-subcomplex") return from_sub(subcomplex_from_json(j));
        Resolved r;
        r.complex = complex_from_json(j);
        return r;
    }
    throw PreconditionViolation("unknown complex spec " + spec +
                                " (cube:N, boundary:N, open-box:N:I:E, necklace:B1,B2,..., inner-cube:N:I:E, inner-box:N:I:E, q:N, k, "
                                "collapsed-square, counterexample, file:PATH)");
}

bool is_bits(const std::string& s) { return !s.empty() && s.find_first_not_of("01") == std::string::npos; }

// alpha, omega, a bit string such as 101, #id, or a vertex name
int vertex_arg(const Resolved& r, const std::string& s) {
    if (s == "alpha" || s == "a") {
        if (!r.alpha) throw PreconditionViolation("this complex has no alpha");
        return *r.alpha;
    }
    if (s == "omega" || s == "b") {
        if (!r.omega) throw PreconditionViolation("this complex has no omega");
        return *r.omega;
    }
    if (is_bits(s) && static_cast<int>(s.size()) == r.ambient) {
        auto it = r.vertex_of_mask.find(parse_vertex(s));
        if (it == r.vertex_of_mask.end()) throw PreconditionViolation("vertex " + s + " is not in the complex");
        return it->second;
    }
    if (!s.empty() && s[0] == '#') return std::stoi(s.substr(1));
    for (int v = 0; v < r.complex.count(0); ++v)
        if (r.complex.name({0, v}) == s) return v;
    throw PreconditionViolation("unknown vertex " + s);
}

Mask mask_arg(const Resolved& r, const std::string& s) {
    if (r.ambient < 0) throw PreconditionViolation("vertices of this complex have no coordinates");
    if (s == "alpha" || s == "a") return 0;
    if (s == "omega" || s == "b") return full_mask(r.ambient);
    if (is_bits(s) && static_cast<int>(s.size()) == r.ambient) return parse_vertex(s);
    throw PreconditionViolation("expected a bit string of length " + std::to_string(r.ambient) + ", got " + s);
}

void print_summary(const CubicalComplex& C) {
    std::cout << "cells by dimension:";
    for (int k = 0; k <= C.top_dim(); ++k) std::cout << " " << C.count(k);
    std::cout << "\n";
    for (int k = 0; k <= C.top_dim(); ++k)
        for (int id = 0; id < C.count(k); ++id) std::cout << "  " << k << "#" << id << " " << C.cell(k, id).name << "\n";
}

template <class T>
void emit_poset(const Poset<T>& P, const std::string& format, const std::string& name) {
    if (format == "json") std::cout << to_json(P).dump(2) << "\n";
    else if (format == "dot") std::cout << to_dot(P, name);
    else {
        std::cout << P.size() << " elements, height " << P.height() << "\n";
        for (std::size_t x = 0; x < P.size(); ++x) std::cout << "  " << P.label(x) << "\n";
        std::cout << "covers:\n";
        for (auto [x, y] : P.hasse()) std::cout << "  " << P.label(x) << " -> " << P.label(y) << "\n";
    }
}

void emit_space(const MappingSpace& M, const std::string& format, bool with_homology) {
    if (format == "json") {
        json j = to_json(M);
        if (with_homology) j["homology"] = to_json(homology(M.space));
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "provenance: " << M.provenance << "\n";
    std::cout << "nondegenerate simplices by dimension:";
    for (int k = 0; k <= M.space.top(); ++k) std::cout << " " << M.space.count(k);
    std::cout << "\n";
    for (int v = 0; v < M.space.count(0); ++v) std::cout << "  vertex " << M.space.vertex_labels[static_cast<std::size_t>(v)] << "\n";
    if (with_homology) std::cout << "homology: " << homology(M.space).str() << "\n";
}

// a poset selected by --kind and --n
struct PosetChoice {
    std::string kind = "bruhat";
    int n = 3;
};

template <class F>
void with_poset(const PosetChoice& c, F&& f) {
    if (c.kind == "bruhat") f(bruhat_of(full_mask(c.n)));
    else if (c.kind == "partitions") f(ordered_partitions(c.n));
    else if (c.kind == "boundary-partitions") f(boundary_partitions(c.n));
    else if (c.kind == "open-box-partitions") f(open_box_partitions(c.n));
    else if (c.kind == "interval") f(interval_lattice(0, c.n));
    else throw PreconditionViolation("unknown poset kind " + c.kind + " (bruhat, partitions, boundary-partitions, open-box-partitions, interval)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubical sets, path categories and rigidification"};
    app.require_subcommand(1);
    std::string format = "text";
    int max_dim = 8;
    app.add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--max-dim", max_dim, "largest cube dimension accepted in complex specs");

    std::string complex_spec = "cube:2", from = "alpha", to = "omega", file;
    bool with_homology = false;
    int top = -1;
    PosetChoice pc;

    auto* cubeset = app.add_subcommand("cubeset", "build, validate and export cubical complexes");
    cubeset->require_subcommand(1);
    for (auto* sc : {cubeset->add_subcommand("build", "build a complex and summarize it"), cubeset->add_subcommand("validate", "check face coherence"),
                     cubeset->add_subcommand("export", "print the complex as JSON or DOT")})
        sc->add_option("--complex,-c", complex_spec, "complex spec")->required();

    auto* poset = app.add_subcommand("poset", "weak orders, ordered partitions and their nerves");
    poset->require_subcommand(1);
    std::string letters;
    auto* p_bruhat = poset->add_subcommand("bruhat", "weak order on permutations");
    p_bruhat->add_option("--n", pc.n, "permutations of 1..n");
    p_bruhat->add_option("--letters", letters, "comma separated letters, overrides --n");
    auto* p_parts = poset->add_subcommand("partitions", "ordered partitions under reverse refinement");
    p_parts->add_option("--n", pc.n);
    auto* p_nerve = poset->add_subcommand("nerve", "nerve of a poset");
    auto* p_dot = poset->add_subcommand("export-dot", "Hasse diagram in DOT");
    for (auto* sc : {p_nerve, p_dot}) {
        sc->add_option("--kind", pc.kind, "bruhat, partitions, boundary-partitions, open-box-partitions, interval");
        sc->add_option("--n", pc.n);
    }
    p_nerve->add_flag("--homology", with_homology);

    auto* neck = app.add_subcommand("necklace", "necklace maps and SubNeck posets");
    neck->require_subcommand(1);
    std::string src_beads = "2,1,3", dst_beads = "2,1", beads = "2,1";
    auto* n_hom = neck->add_subcommand("hom", "bipointed maps between necklaces");
    n_hom->add_option("--from", src_beads, "source beads");
    n_hom->add_option("--to", dst_beads, "target beads");
    auto* n_sub = neck->add_subcommand("subneck", "flags of a subcomplex of a cube between two vertices");
    n_sub->add_option("--complex,-c", complex_spec);
    n_sub->add_option("--from", from);
    n_sub->add_option("--to", to);
    auto* n_exp = neck->add_subcommand("export", "vertices and joints of a necklace");
    n_exp->add_option("--necklace", beads);

    auto* paths = app.add_subcommand("paths", "path classes and the square-move order");
    paths->require_subcommand(1);
    auto* pa_list = paths->add_subcommand("list", "list paths");
    auto* pa_order = paths->add_subcommand("order", "list the order between paths");
    auto* pa_dot = paths->add_subcommand("dot", "Hasse diagram of the paths in DOT");
    for (auto* sc : {pa_list, pa_order, pa_dot}) {
        sc->add_option("--complex,-c", complex_spec);
        sc->add_option("--from", from);
        sc->add_option("--to", to);
    }

    auto* rig = app.add_subcommand("rigidify", "mapping spaces of the rigidification");
    rig->require_subcommand(1);
    auto* r_hom = rig->add_subcommand("hom", "mapping space between two vertices");
    r_hom->add_option("--complex,-c", complex_spec)->required();
    r_hom->add_option("--from", from);
    r_hom->add_option("--to", to);
    r_hom->add_option("--top", top, "truncation dimension, automatic by default");
    r_hom->add_flag("--homology", with_homology);

    auto* sset = app.add_subcommand("sset", "homology and Euler characteristic");
    sset->require_subcommand(1);
    auto* s_hom = sset->add_subcommand("homology", "integer homology");
    auto* s_eul = sset->add_subcommand("euler", "Euler characteristic");
    for (auto* sc : {s_hom, s_eul}) {
        sc->add_option("--file", file, "simplicial set JSON");
        sc->add_option("--kind", pc.kind, "nerve of a built-in poset when no file is given");
        sc->add_option("--n", pc.n);
    }

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    VerifyConfig vcfg;
    verify->add_option("suite", suite, "bruhat, boxcat, necklace-homs, open-box-contractible, partition-spheres, psi, counterexample, "
                                       "subneck-injectivity, formula-consistency, all");
    verify->add_option("--seed", vcfg.seed, "seed for randomized checks");
    verify->add_option("--samples", vcfg.samples, "number of random samples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cubeset->parsed()) {
            auto r = resolve(complex_spec, max_dim);
            if (cubeset->got_subcommand("validate")) {
                auto rep = validate(r.complex);
                if (format == "json") std::cout << json{{"ok", rep.ok()}, {"violations", rep.violations}}.dump(2) << "\n";
                else {
                    std::cout << (rep.ok() ? "valid" : "INVALID") << "\n";
                    for (auto& v : rep.violations) std::cout << "  " << v << "\n";
                }
                return rep.ok() ? 0 : 1;
            }
            if (cubeset->got_subcommand("export") && format == "text") format = "json";
            if (format == "json") {
                json j = r.sub ? json{{"subcomplex", to_json(*r.sub)}, {"complex", to_json(r.complex)}} : to_json(r.complex);
                std::cout << j.dump(2) << "\n";
            } else if (format == "dot") std::cout << complex_dot(r.complex, complex_spec);
            else print_summary(r.complex);
            return 0;
        }
        if (poset->parsed()) {
            if (p_bruhat->parsed()) {
                if (!letters.empty()) emit_poset(bruhat(int_list(letters)), format, "bruhat");
                else emit_poset(bruhat_of(full_mask(pc.n)), format, "bruhat");
            } else if (p_parts->parsed()) emit_poset(ordered_partitions(pc.n), format, "partitions");
            else if (p_dot->parsed()) with_poset(pc, [&](const auto& P) { std::cout << to_dot(P, pc.kind); });
            else
                with_poset(pc, [&](const auto& P) {
                    auto X = nerve(P);
                    if (format == "json") {
                        json j = to_json(X);
                        if (with_homology) j["homology"] = to_json(homology(X));
                        std::cout << j.dump(2) << "\n";
                        return;
                    }
                    std::cout << "nondegenerate simplices by dimension:";
                    for (int k = 0; k <= X.top(); ++k) std::cout << " " << X.count(k);
                    std::cout << "\n";
                    if (with_homology) std::cout << "homology: " << homology(X).str() << "\n";
                });
            return 0;
        }
        if (neck->parsed()) {
            if (n_hom->parsed()) {
                const auto T = Necklace::parse(src_beads), U = Necklace::parse(dst_beads);
                const auto H = hom_nec(T, U);
                if (format == "json") {
                    json arr = json::array();
                    for (auto& f : H) arr.push_back(to_json(T, U, f));
                    std::cout << json{{"from", T.beads()}, {"to", U.beads()}, {"count", H.size()}, {"maps", arr}}.dump(2) << "\n";
                } else {
                    std::cout << H.size() << " maps " << T.str() << " -> " << U.str() << "\n";
                    for (auto& f : H) {
                        std::cout << " ";
                        for (auto& c : f.components) std::cout << " [bead " << c.bead + 1 << ": " << c.map.word() << "]";
                        std::cout << "\n";
                    }
                }
            } else if (n_sub->parsed()) {
                auto r = resolve(complex_spec, max_dim);
                if (!r.sub) throw PreconditionViolation("SubNeck needs a subcomplex of a cube");
                emit_poset(subneck_poset(*r.sub, mask_arg(r, from), mask_arg(r, to)), format, "subneck");
            } else {
                const auto T = Necklace::parse(beads);
                if (format == "dot") std::cout << complex_dot(to_complex(T.as_subcomplex()).complex, T.str());
                else std::cout << to_json(T).dump(2) << "\n";
            }
            return 0;
        }
        if (paths->parsed()) {
            auto r = resolve(complex_spec, max_dim);
            const int a = vertex_arg(r, from), b = vertex_arg(r, to);
            const auto H = leadsto_closure(r.complex, a, b);
            if (pa_dot->parsed() || format == "dot") {
                std::cout << paths_dot(r.complex, H);
                return 0;
            }
            if (format == "json") {
                json ps = json::array(), rel = json::array();
                for (auto& p : H.paths()) ps.push_back(path_label(r.complex, p));
                for (std::size_t x = 0; x < H.size(); ++x)
                    for (std::size_t y = 0; y < H.size(); ++y)
                        if (x != y && H.leadsto(x, y)) rel.push_back({x, y});
                std::cout << json{{"paths", ps}, {"leadsto", rel}, {"partial_order", H.is_partial_order()}}.dump(2) << "\n";
                return 0;
            }
            std::cout << H.size() << " paths\n";
            for (std::size_t x = 0; x < H.size(); ++x) std::cout << "  [" << x << "] " << path_label(r.complex, H.path(x)) << "\n";
            if (pa_order->parsed()) {
                std::cout << (H.is_partial_order() ? "partial order" : "preorder") << "; strict relations:\n";
                for (std::size_t x = 0; x < H.size(); ++x)
                    for (std::size_t y = 0; y < H.size(); ++y)
                        if (x != y && H.leadsto(x, y)) std::cout << "  [" << x << "] ~> [" << y << "]\n";
            }
            return 0;
        }
        if (rig->parsed()) {
            auto r = resolve(complex_spec, max_dim);
            MappingSpace M;
            if (r.inner) M = inner_mapping_space(r.inner->n, r.inner->i, r.inner->eps, mask_arg(r, from), mask_arg(r, to), r.inner->open, top);
            else if (r.necklace) M = necklace_mapping_space(*r.necklace, mask_arg(r, from), mask_arg(r, to), top);
            else if (r.sub) M = subcomplex_mapping_space(*r.sub, mask_arg(r, from), mask_arg(r, to), top);
            else throw PreconditionViolation("mapping spaces are computed for subcomplexes of cubes, necklaces and inner cubes or boxes");
            emit_space(M, format, with_homology);
            return 0;
        }
        if (sset->parsed()) {
            TruncSSet X;
            if (!file.empty()) X = sset_from_json(read_json(file));
            else with_poset(pc, [&](const auto& P) { X = nerve(P); });
            const auto rep = validate(X);
            if (!rep.ok()) throw PreconditionViolation("simplicial set fails validation: " + rep.violations.front());
            if (s_hom->parsed()) {
                const auto h = homology(X);
                if (format == "json") std::cout << to_json(h).dump(2) << "\n";
                else std::cout << h.str() << "\n";
            } else {
                const long long chi = euler_characteristic(X);
                if (format == "json") std::cout << json{{"euler", chi}, {"truncation", X.top()}}.dump(2) << "\n";
                else std::cout << chi << " (nondegenerate simplices up to dimension " << X.top() << ")\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            const auto results = run_suite(suite, vcfg);
            bool ok = true;
            for (auto& res : results) ok = ok && res.pass;
            if (format == "json") {
                json arr = json::array();
                for (auto& res : results) arr.push_back(to_json(res));
                std::cout << json{{"suite", suite}, {"pass", ok}, {"checks", arr}}.dump(2) << "\n";
            } else {
                for (auto& res : results)
                    std::printf("[%s] %2d %-90s %7.2fs  %s\n", res.pass ? "PASS" : "FAIL", res.id, res.name.c_str(), res.seconds, res.detail.c_str());
                std::cout << (ok ? "all passed" : "FAILURES") << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
