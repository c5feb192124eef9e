#pragma once

// Verification batteries. Each check is self-contained and returns one line
// of outcome; suites group them and run them concurrently.

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boxcat.hpp"
#include "cubeset.hpp"
#include "homology.hpp"
#include "necklace.hpp"
#include "pathcat.hpp"
#include "posets.hpp"
#include "rigidify.hpp"
#include "sset.hpp"

namespace cubical {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace checks {

namespace detail {

inline std::vector<Mask> subsets_of(Mask m) {
    std::vector<Mask> out;
    for (Mask s = m;; s = (s - 1) & m) {
        out.push_back(s);
        if (s == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// compositions of n into positive parts
inline std::vector<std::vector<int>> compositions(int n) {
    if (n == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int first = 1; first <= n; ++first)
        for (auto rest : compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

struct Fail {
    std::string& detail;
    bool ok = true;
    void operator()(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

}  // namespace detail

// Paths of cubes against the weak order, with the n = 3 Hasse diagram pinned.
inline CheckResult bruhat_isomorphism() {
    CheckResult r{1, "path preorder of the n-cube is the weak order on b\\a, n <= 4", false, {}, 0};
    detail::Fail fail{r.detail};
    int pairs = 0;
    for (int n = 1; n <= 4; ++n)
        for (Mask b : detail::subsets_of(full_mask(n)))
            for (Mask a : detail::subsets_of(b)) {
                auto c = bruhat_compare(n, a, b);
                ++pairs;
                if (!c.partial_order) fail("not antisymmetric for n=" + std::to_string(n) + " a=" + format_set(a) + " b=" + format_set(b));
                if (!c.isomorphic) fail("Psi not an isomorphism for n=" + std::to_string(n) + " a=" + format_set(a) + " b=" + format_set(b));
            }
    auto c = bruhat_compare(3, 0, full_mask(3));
    std::set<std::pair<std::string, std::string>> hasse, want{{"(3,2,1)", "(2,3,1)"}, {"(2,3,1)", "(2,1,3)"}, {"(2,1,3)", "(1,2,3)"},
                                                              {"(3,2,1)", "(3,1,2)"}, {"(3,1,2)", "(1,3,2)"}, {"(1,3,2)", "(1,2,3)"}};
    for (auto [x, y] : c.order.to_poset().hasse()) hasse.emplace(to_label(c.psi[x]), to_label(c.psi[y]));
    if (hasse != want) fail("Hasse diagram of paths in the 3-cube differs from the figure");
    r.pass = fail.ok;
    if (r.pass) r.detail = std::to_string(pairs) + " vertex pairs, Hasse diagram matches";
    return r;
}

inline CheckResult path_counts() {
    CheckResult r{2, "|paths(cube_n, alpha, omega)| = n!, n <= 4", false, {}, 0};
    detail::Fail fail{r.detail};
    std::string counts;
    for (int n = 1; n <= 4; ++n) {
        auto E = to_complex(standard_cube(n));
        const auto p = enumerate_paths(E.complex, E.vertex_id(0), E.vertex_id(full_mask(n)));
        counts += (n > 1 ? "," : "") + std::to_string(p.size());
        if (static_cast<long long>(p.size()) != detail::factorial(n)) fail("n=" + std::to_string(n) + " gives " + std::to_string(p.size()));
        for (Mask a : detail::subsets_of(full_mask(n))) {
            const auto q = enumerate_paths(E.complex, E.vertex_id(a), E.vertex_id(a));
            if (q.size() != 1 || q[0].length() != 0) fail("constant path is not the only loop at " + format_set(a));
        }
    }
    r.pass = fail.ok;
    if (r.pass) r.detail = "counts " + counts;
    return r;
}

// The two cases of the classification of maps (2,1,3) -> (2,1).
inline CheckResult necklace_hom_oracle() {
    CheckResult r{3, "necklace homs (2,1,3)->(3,2,1) empty, (2,1,3)->(2,1) classified", false, {}, 0};
    detail::Fail fail{r.detail};
    if (!hom_nec(Necklace({2, 1, 3}), Necklace({3, 2, 1})).empty()) fail("found a map (2,1,3) -> (3,2,1)");
    const Necklace T({2, 1, 3}), U({2, 1});
    const auto vs = T.vertices();
    auto value = [&](const NecMorphism& f, Mask v) {
        return f.vertex_function[static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin())];
    };
    const auto H = hom_nec(T, U);
    const Mask cut = T.joint(2);  // after (2,1)
    std::size_t first = 0, exceptional = 0;
    for (auto& f : H) {
        if (value(f, cut) == U.joint(1)) {
            ++first;
            continue;
        }
        // id on the square, id on the edge into the second bead, constant omega after
        bool exc = true;
        for (Mask v : vs) {
            Mask want;
            if (subset(v, full_mask(2))) want = v;
            else if (subset(v, full_mask(3))) want = v;
            else want = U.omega();
            if (value(f, v) != want) exc = false;
        }
        if (exc) ++exceptional;
        else fail("a map of neither type");
    }
    const std::size_t g = hom_nec(Necklace({2, 1}), Necklace({2})).size();
    const std::size_t h = hom_nec(Necklace({3}), Necklace({1})).size();
    if (exceptional != 1) fail("exceptional map found " + std::to_string(exceptional) + " times");
    if (first != g * h) fail("first type count " + std::to_string(first) + " != " + std::to_string(g) + "*" + std::to_string(h));
    r.pass = fail.ok;
    if (r.pass) r.detail = std::to_string(H.size()) + " maps: " + std::to_string(first) + " of the form g v h, 1 exceptional";
    return r;
}

inline CheckResult subneck_partitions() {
    CheckResult r{4, "SubNeck(cube_n) is the ordered-partition poset, n <= 4", false, {}, 0};
    detail::Fail fail{r.detail};
    const std::vector<std::size_t> want{1, 3, 13, 75};
    std::string counts;
    for (int n = 1; n <= 4; ++n) {
        const auto P = subneck_poset(standard_cube(n), 0, full_mask(n));
        const auto Q = ordered_partitions(n);
        counts += (n > 1 ? "," : "") + std::to_string(P.size());
        if (P.size() != want[static_cast<std::size_t>(n - 1)]) fail("n=" + std::to_string(n) + " has " + std::to_string(P.size()) + " flags");
        std::vector<std::size_t> f;
        for (auto& F : P.elements()) {
            auto k = Q.find(flag_partition(F));
            if (!k) {
                fail("flag without a partition");
                break;
            }
            f.push_back(*k);
        }
        if (f.size() == P.size() && !is_order_isomorphism(P, Q, f)) fail("not an order isomorphism at n=" + std::to_string(n));
        auto top = P.greatest();
        if (!top || P.element(*top).points != std::vector<Mask>{0, full_mask(n)}) fail("no one-bead greatest flag at n=" + std::to_string(n));
        if (static_cast<long long>(P.minimal().size()) != detail::factorial(n)) fail("minimal flags are not n! at n=" + std::to_string(n));
    }
    r.pass = fail.ok;
    if (r.pass) r.detail = "counts " + counts;
    return r;
}

inline CheckResult contractibility() {
    CheckResult r{5, "weak orders, necklace spaces (dim <= 5) and open boxes (n = 2,3) have point homology", false, {}, 0};
    detail::Fail fail{r.detail};
    for (int n = 1; n <= 4; ++n)
        if (!is_contractible_homologically(nerve(bruhat_of(full_mask(n))))) fail("nerve of the weak order on " + std::to_string(n) + " letters");
    // the space only depends on the sequence of block sizes, so each is computed once
    std::map<std::vector<int>, bool> verdict;
    int spaces = 0;
    for (int d = 1; d <= 5; ++d)
        for (auto& beads : detail::compositions(d)) {
            const Necklace T(beads);
            for (Mask b : T.vertices())
                for (Mask a : T.vertices()) {
                    if (!subset(a, b)) continue;
                    std::vector<int> sizes;
                    for (Mask l : cubical::detail::step_letters(cut_points(T, a, b))) sizes.push_back(popcount(l));
                    auto it = verdict.find(sizes);
                    if (it == verdict.end()) {
                        const auto M = necklace_mapping_space(T, a, b);
                        it = verdict.emplace(sizes, has_point_homology(homology(M.space))).first;
                    }
                    ++spaces;
                    if (!it->second) fail("necklace " + T.str() + " from " + format_set(a) + " to " + format_set(b));
                }
        }
    for (int n = 2; n <= 3; ++n)
        for (int i = 1; i <= n; ++i)
            for (int eps = 0; eps <= 1; ++eps) {
                const auto M = subcomplex_mapping_space(open_box(n, i, eps), 0, full_mask(n));
                if (M.space.empty() || !has_point_homology(homology(M.space)))
                    fail("open box n=" + std::to_string(n) + " i=" + std::to_string(i) + " eps=" + std::to_string(eps));
            }
    r.pass = fail.ok;
    if (r.pass) r.detail = std::to_string(spaces) + " necklace spaces (" + std::to_string(verdict.size()) + " shapes), 10 open boxes";
    return r;
}

inline CheckResult partition_spheres() {
    CheckResult r{6, "nerve of the open-box partitions contractible, of the boundary partitions a sphere, n <= 3", false, {}, 0};
    detail::Fail fail{r.detail};
    std::string sizes;
    for (int n = 1; n <= 3; ++n) {
        const auto O = open_box_partitions(n);
        const auto B = boundary_partitions(n);
        sizes += (n > 1 ? "," : "") + std::to_string(O.size()) + "/" + std::to_string(B.size());
        if (!is_contractible_homologically(nerve(O))) fail("open-box partitions not contractible at n=" + std::to_string(n));
        if (!is_sphere_homologically(nerve(B), n - 1)) fail("boundary partitions not a sphere at n=" + std::to_string(n));
    }
    r.pass = fail.ok;
    if (r.pass) r.detail = "poset sizes " + sizes;
    return r;
}

inline CheckResult psi_battery() {
    CheckResult r{7, "psi monotone, compatible with concatenation, gamma constant, n <= 4", false, {}, 0};
    detail::Fail fail{r.detail};
    if (psi_tilde(3, 0, full_mask(3), {2, 1, 3}) != bit(2)) fail("psi(2,1,3) is not {2}");
    long long concat = 0;
    for (int n = 1; n <= 4; ++n) {
        for (Mask b : detail::subsets_of(full_mask(n)))
            for (Mask a : detail::subsets_of(b))
                if (!psi_monotone_check(n, a, b)) fail("psi not monotone, n=" + std::to_string(n));
        for (Mask c : detail::subsets_of(full_mask(n)))
            for (Mask b : detail::subsets_of(c))
                for (Mask a : detail::subsets_of(b)) {
                    if (!(sup(a) < sup(b) && sup(b) < sup(c))) continue;
                    const auto X = bruhat_of(b & ~a), Y = bruhat_of(c & ~b);
                    for (auto& x : X.elements())
                        for (auto& y : Y.elements()) {
                            ++concat;
                            if (!psi_concat_check(n, a, b, c, x, y)) fail("concatenation identity fails, n=" + std::to_string(n));
                        }
                }
        for (int i = 1; i <= n; ++i)
            if (!gamma_constancy_check(n, i)) fail("gamma not constant, n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
    r.pass = fail.ok;
    if (r.pass) r.detail = std::to_string(concat) + " concatenations checked";
    return r;
}

inline CheckResult counterexample() {
    CheckResult r{8, "path category of X is the chain u ~> v ~> w; pushout of nerves is 1-skeletal", false, {}, 0};
    detail::Fail fail{r.detail};
    const auto R = counterexample_report();
    if (R.path_count != 3) fail(std::to_string(R.path_count) + " paths from a to b");
    if (!R.chain_u_v_w) fail("paths are not ordered u ~> v ~> w");
    if (R.nerve_nondeg_2 < 1) fail("nerve of the path poset has no nondegenerate 2-simplex");
    if (R.pushout_max_dim != 1) fail("pushout has nondegenerate simplices in dimension " + std::to_string(R.pushout_max_dim));
    r.pass = fail.ok;
    if (r.pass)
        r.detail = "3 paths, " + std::to_string(R.nerve_nondeg_2) + " nondegenerate 2-simplex, pushout has " + std::to_string(R.pushout.count(0)) +
                   " vertices and " + std::to_string(R.pushout.count(1)) + " edges";
    return r;
}

inline CheckResult downward_closed_injectivity(unsigned seed = 20240601u, int samples = 200) {
    CheckResult r{9, "colimit over a downward-closed set of flags injects, " + std::to_string(samples) + " random samples", false, {}, 0};
    detail::Fail fail{r.detail};
    std::vector<Necklace> necklaces;
    for (int d = 2; d <= 4; ++d)
        for (auto& beads : detail::compositions(d)) necklaces.emplace_back(beads);
    std::vector<SubneckDiagram> diagrams;
    std::vector<MappingSpace> wholes;
    for (auto& T : necklaces) {
        diagrams.emplace_back(T.as_subcomplex(), 0, T.omega());
        wholes.push_back(necklace_mapping_space(T, 0, T.omega(), diagrams.back().top()));
    }
    std::mt19937 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const std::size_t t = static_cast<std::size_t>(s) % necklaces.size();
        const auto& D = diagrams[t];
        const std::size_t n = D.poset().size();
        std::uniform_int_distribution<std::size_t> pick(0, n - 1), how_many(1, std::min<std::size_t>(3, n));
        std::vector<std::size_t> seeds;
        for (std::size_t k = how_many(rng); k > 0; --k) seeds.push_back(pick(rng));
        const auto A = down_closure(D.poset(), seeds);
        const auto M = D.colimit_over(A);
        const auto f = words_map(M, wholes[t]);
        if (!f || !is_dimensionwise_injective(M.space, *f)) fail("non-injective colimit for " + necklaces[t].str());
    }
    r.pass = fail.ok;
    if (r.pass) r.detail = std::to_string(samples) + " subsets over " + std::to_string(necklaces.size()) + " necklaces, seed " + std::to_string(seed);
    return r;
}

inline CheckResult formula_consistency() {
    CheckResult r{10, "SubNeck colimit equals the necklace formula, total dimension <= 4", false, {}, 0};
    detail::Fail fail{r.detail};
    int pairs = 0;
    for (int d = 1; d <= 4; ++d)
        for (auto& beads : detail::compositions(d)) {
            const Necklace T(beads);
            const auto S = T.as_subcomplex();
            for (Mask b : T.vertices())
                for (Mask a : T.vertices()) {
                    if (!subset(a, b)) continue;
                    ++pairs;
                    const auto C = subcomplex_mapping_space(S, a, b);
                    const auto N = necklace_mapping_space(T, a, b, C.space.top());
                    if (!isomorphic_by_words(C, N)) fail("necklace " + T.str() + " from " + format_set(a) + " to " + format_set(b));
                }
        }
    r.pass = fail.ok;
    if (r.pass) r.detail = std::to_string(pairs) + " vertex pairs";
    return r;
}

inline CheckResult box_category() {
    CheckResult r{11, "box category: normal forms, epi-mono factorization, mono by distance, dims <= 3", false, {}, 0};
    detail::Fail fail{r.detail};
    // every map reachable from an identity by post-composing generators
    std::map<std::pair<int, int>, std::set<std::vector<Mask>>> closure;
    for (int n = 0; n <= 3; ++n) {
        std::vector<BoxMap> frontier{BoxMap::identity(n)};
        std::set<std::pair<int, std::vector<Mask>>> seen{{n, frontier[0].table()}};
        while (!frontier.empty()) {
            auto f = frontier.back();
            frontier.pop_back();
            closure[{n, f.dst()}].insert(f.table());
            const int m = f.dst();
            std::vector<BoxMap> gens;
            for (int i = 1; i <= m + 1 && m + 1 <= 3; ++i)
                for (int eps = 0; eps <= 1; ++eps) gens.push_back(BoxMap::face(m + 1, i, eps));
            for (int i = 1; i <= m && m >= 1; ++i) gens.push_back(BoxMap::degeneracy(m, i));
            for (int i = 1; i < m; ++i) gens.push_back(BoxMap::connection(m, i));
            for (auto& g : gens) {
                auto h = compose(g, f);
                if (seen.insert({h.dst(), h.table()}).second) frontier.push_back(h);
            }
        }
    }
    int maps = 0;
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            const auto all = enumerate_maps(n, m);
            std::set<std::vector<Mask>> tables;
            std::set<std::string> forms;
            for (auto& f : all) {
                ++maps;
                tables.insert(f.table());
                const auto& nf = f.normal_form();
                std::ostringstream key;
                for (auto [c, e] : nf.faces) key << "d" << c << e;
                key << "|";
                for (int c : nf.connections) key << "g" << c;
                key << "|";
                for (int c : nf.degeneracies) key << "s" << c;
                forms.insert(key.str());
                if (BoxMap::from_normal_form(n, m, nf).table() != f.table()) fail("normal form does not rebuild its map");
                if (evaluate_word(n, normal_word(f)).table() != f.table()) fail("normal word does not evaluate to its map");
                // mono by distance against injectivity of the vertex table
                std::set<Mask> image(f.table().begin(), f.table().end());
                if (f.is_mono() != (image.size() == f.table().size())) fail("distance criterion disagrees with injectivity: " + f.word());
                // exactly one epi-mono factorization
                int found = 0;
                for (int k = 0; k <= std::min(n, m); ++k)
                    for (auto& e : epis_between(n, k))
                        for (auto& g : enumerate_maps(k, m))
                            if (g.is_mono() && compose(g, e) == f) ++found;
                const auto em = epi_mono_factor(f);
                if (found != 1) fail("map " + f.word() + " has " + std::to_string(found) + " epi-mono factorizations");
                if (!(compose(em.mono, em.epi) == f) || !em.epi.is_epi() || !em.mono.is_mono()) fail("epi_mono_factor is wrong for " + f.word());
            }
            if (tables.size() != all.size() || forms.size() != all.size()) fail("duplicate maps or normal forms");
            if (tables != closure[{n, m}]) fail("enumeration differs from the generator closure at " + std::to_string(n) + "->" + std::to_string(m));
        }
    const auto two_one = enumerate_maps(2, 1);
    if (two_one.size() != 5) fail("enumerate_maps(2,1) has " + std::to_string(two_one.size()) + " maps");
    for (auto& f : two_one)
        if (f.table() == std::vector<Mask>{0, 0, 0, 1}) fail("min is a map [1]^2 -> [1]");
    r.pass = fail.ok;
    if (r.pass) r.detail = std::to_string(maps) + " maps checked";
    return r;
}

}  // namespace checks

struct VerifyConfig {
    unsigned seed = 20240601u;
    int samples = 200;
};

inline const std::map<int, std::function<CheckResult(const VerifyConfig&)>>& all_checks() {
    using F = std::function<CheckResult(const VerifyConfig&)>;
    auto plain = [](CheckResult (*f)()) { return F([f](const VerifyConfig&) { return f(); }); };
    static const std::map<int, F> m{
        {1, plain(checks::bruhat_isomorphism)},
        {2, plain(checks::path_counts)},
        {3, plain(checks::necklace_hom_oracle)},
        {4, plain(checks::subneck_partitions)},
        {5, plain(checks::contractibility)},
        {6, plain(checks::partition_spheres)},
        {7, plain(checks::psi_battery)},
        {8, plain(checks::counterexample)},
        {9, F([](const VerifyConfig& c) { return checks::downward_closed_injectivity(c.seed, c.samples); })},
        {10, plain(checks::formula_consistency)},
        {11, plain(checks::box_category)},
    };
    return m;
}

inline const std::map<std::string, std::vector<int>>& suites() {
    static const std::map<std::string, std::vector<int>> m{
        {"bruhat", {1, 2}},
        {"boxcat", {11}},
        {"necklace-homs", {3, 4}},
        {"open-box-contractible", {5}},
        {"partition-spheres", {6}},
        {"psi", {7}},
        {"counterexample", {8}},
        {"subneck-injectivity", {9}},
        {"formula-consistency", {10}},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
    };
    return m;
}

// Runs the checks concurrently; results come back in id order. An exception
// inside a check counts as a failure.
inline std::vector<CheckResult> run_checks(const std::vector<int>& ids, const VerifyConfig& cfg = {}) {
    std::vector<std::future<CheckResult>> jobs;
    for (int id : ids) {
        auto fn = all_checks().at(id);
        jobs.push_back(std::async(std::launch::async, [id, fn, cfg] {
            const auto t0 = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = fn(cfg);
            } catch (const std::exception& e) {
                r.id = id;
                r.name = "check " + std::to_string(id);
                r.pass = false;
                r.detail = std::string("exception: ") + e.what();
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return r;
        }));
    }
    std::vector<CheckResult> out;
    for (auto& j : jobs) out.push_back(j.get());
    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return out;
}

inline std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg = {}) {
    auto it = suites().find(name);
    if (it == suites().end()) throw PreconditionViolation("unknown suite " + name);
    return run_checks(it->second, cfg);
}

}  // namespace cubical
