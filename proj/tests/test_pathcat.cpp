#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <tuple>

#include "cubical/pathcat.hpp"
#include "cubical/sset.hpp"

using namespace cubical;

namespace {

std::set<std::pair<int, int>> inversions(const Word& w) {
    std::set<std::pair<int, int>> inv;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) inv.insert({w[j], w[i]});
    return inv;
}

bool includes(const std::set<std::pair<int, int>>& big, const std::set<std::pair<int, int>>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("paths in cubes") {
    for (int n = 0; n <= 4; ++n) {
        auto E = to_complex(standard_cube(n));
        for (Mask a = 0; a <= full_mask(n); ++a)
            for (Mask b = 0; b <= full_mask(n); ++b) {
                const auto ps = enumerate_paths(E.complex, E.vertex_id(a), E.vertex_id(b));
                if (!subset(a, b)) {
                    CHECK(ps.empty());
                    continue;
                }
                CHECK(static_cast<long long>(ps.size()) == factorial(distance(a, b)));
                if (a == b) CHECK(ps.front().length() == 0);
            }
    }
    auto I = to_complex(standard_cube(1));
    auto H = leadsto_closure(I.complex, 0, 1);
    CHECK(H.size() == 1);
    CHECK(H.is_partial_order());
}

TEST_CASE("the square has one move") {
    auto E = to_complex(standard_cube(2));
    auto H = leadsto_closure(E.complex, E.vertex_id(0), E.vertex_id(3));
    REQUIRE(H.size() == 2);
    int strict = 0;
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            if (x != y && H.leadsto(x, y)) {
                ++strict;
                CHECK(step_word(path_flag(E, H.path(x))) == Word{2, 1});
                CHECK(step_word(path_flag(E, H.path(y))) == Word{1, 2});
            }
    CHECK(strict == 1);
}

TEST_CASE("leadsto in a cube is reverse inclusion of inversions") {
    for (int n = 1; n <= 4; ++n) {
        auto E = to_complex(standard_cube(n));
        for (Mask a = 0; a <= full_mask(n); ++a)
            for (Mask b = a;; b = (b + 1) | a) {
                auto H = leadsto_closure(E.complex, E.vertex_id(a), E.vertex_id(b));
                std::vector<std::set<std::pair<int, int>>> inv;
                for (auto& p : H.paths()) inv.push_back(inversions(step_word(path_flag(E, p))));
                for (std::size_t x = 0; x < H.size(); ++x)
                    for (std::size_t y = 0; y < H.size(); ++y) CHECK(H.leadsto(x, y) == includes(inv[x], inv[y]));
                if (b == full_mask(n)) break;
            }
    }
}

TEST_CASE("psi onto the weak order") {
    auto r2 = bruhat_compare(2, 0, 3);
    CHECK(r2.isomorphic);
    std::set<Word> words(r2.psi.begin(), r2.psi.end());
    CHECK(words == std::set<Word>{{1, 2}, {2, 1}});
    for (int n = 1; n <= 4; ++n) CHECK(bruhat_compare(n, 0, full_mask(n)).isomorphic);
    auto r = bruhat_compare(4, bit(2), bit(2) | bit(3) | bit(4));
    CHECK(r.isomorphic);
    CHECK(r.order.size() == 2);
}

TEST_CASE("the complex X: three paths in a chain") {
    auto X = counterexample_x();
    auto H = leadsto_closure(X.complex, X.a, X.b);
    REQUIRE(H.size() == 3);
    const auto u = *H.find({X.u}), v = *H.find({X.v}), w = *H.find({X.w});
    CHECK(H.leadsto(u, v));
    CHECK(H.leadsto(v, w));
    CHECK(H.leadsto(u, w));
    CHECK_FALSE(H.leadsto(w, u));
    CHECK(H.is_partial_order());
    auto N = nerve(H.to_poset());
    CHECK(N.count(2) == 1);
}

TEST_CASE("loops are rejected") {
    CHECK_THROWS_AS(check_loop_free(k_complex()), LoopDetected);
    CHECK_THROWS_AS(path_category(k_complex()), LoopDetected);
    CHECK_NOTHROW(check_loop_free(counterexample_x().complex));
}

TEST_CASE("degenerate steps collapse away") {
    auto E = to_complex(standard_cube(3));
    auto X = counterexample_x();
    std::mt19937 rng(11);
    for (auto [C, a, b] : {std::tuple{&E.complex, E.vertex_id(0), E.vertex_id(7)}, std::tuple{&X.complex, X.a, X.b}})
        for (auto& p : enumerate_paths(*C, a, b)) {
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<Cell> steps;
                for (std::size_t t = 0; t <= p.edges.size(); ++t) {
                    const int pad = static_cast<int>(rng() % 3);
                    for (int k = 0; k < pad; ++k) steps.push_back({BoxMap::degeneracy(1, 1), {0, p.vertices[t]}});
                    if (t < p.edges.size()) steps.push_back(nondegenerate(1, p.edges[t]));
                }
                CHECK(detail::collapse(steps) == p.edges);
            }
        }
}

TEST_CASE("path categories") {
    auto P0 = path_category(to_complex(standard_cube(0)).complex);
    CHECK(P0.objects() == 1);
    CHECK(P0.hom(0, 0).size() == 1);
    CHECK(P0.identity(0) == 0);
    CHECK(check_path_category(path_category(to_complex(standard_cube(2)).complex)));
    CHECK(check_path_category(path_category(to_complex(standard_cube(3)).complex)));
    CHECK(check_path_category(path_category(counterexample_x().complex)));
    CHECK(check_path_category(path_category(to_complex(Necklace({2, 1}).as_subcomplex()).complex)));
}

TEST_CASE("necklace paths split at the joints") {
    for (auto s : {"1", "2,1", "1,2", "2,2", "1,1,1", "3,1", "1,3", "2,1,1"}) {
        INFO(s);
        CHECK(necklace_paths_split(Necklace::parse(s)));
    }
    auto T = Necklace({2, 2});
    auto E = to_complex(T.as_subcomplex());
    CHECK(enumerate_paths(E.complex, E.vertex_id(0), E.vertex_id(T.omega())).size() == 4);
}
