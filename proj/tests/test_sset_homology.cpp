#include <catch_amalgamated.hpp>

#include <random>

#include "cubical/homology.hpp"
#include "cubical/necklace.hpp"
#include "cubical/posets.hpp"
#include "cubical/sset.hpp"

using namespace cubical;

namespace {

// rank of a boundary matrix mod a large prime, by plain Gaussian elimination
long long rank_mod_p(const TruncSSet& X, int k) {
    constexpr long long p = 1000000007;
    if (k <= 0 || k > X.top() || X.count(k) == 0 || X.count(k - 1) == 0) return 0;
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(X.count(k - 1)), std::vector<long long>(static_cast<std::size_t>(X.count(k)), 0));
    for (int id = 0; id < X.count(k); ++id)
        for (int i = 0; i <= k; ++i) {
            const auto& f = X.simplex(k, id).faces[static_cast<std::size_t>(i)];
            if (f.degenerate()) continue;
            auto& e = m[static_cast<std::size_t>(f.base)][static_cast<std::size_t>(id)];
            e = ((e + (i % 2 ? -1 : 1)) % p + p) % p;
        }
    auto power = [&](long long b, long long e) {
        long long r = 1;
        for (b %= p; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    long long rank = 0;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m[0].size() && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        const long long inv = power(m[row][c], p - 2);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const long long factor = m[r][c] * inv % p;
            for (std::size_t cc = c; cc < m[r].size(); ++cc) m[r][cc] = ((m[r][cc] - factor * m[row][cc]) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<long long> betti_oracle(const TruncSSet& X) {
    std::vector<long long> b;
    for (int k = 0; k < X.top(); ++k) b.push_back(X.count(k) - rank_mod_p(X, k) - rank_mod_p(X, k + 1));
    return b;
}

std::vector<long long> betti(const HomologyReport& h) {
    std::vector<long long> b;
    for (auto& g : h.groups) b.push_back(g.betti);
    return b;
}

// the projective plane: one vertex, one loop e, one triangle with faces e, *, e
TruncSSet projective_plane() {
    TruncSSet X(3);
    const int v = X.add_vertex("v");
    const Simplex pt{Surj::identity(0), v};
    const int e = X.add_simplex(1, {pt, pt}, {v, v});
    X.add_simplex(2, {{Surj::identity(1), e}, {Surj::from_values({0, 0}), v}, {Surj::identity(1), e}}, {v, v, v});
    return X;
}

template <class T>
std::vector<std::size_t> up_set(const Poset<T>& P, std::vector<std::size_t> seeds) {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < P.size(); ++y)
        for (auto x : seeds)
            if (P.leq(x, y)) {
                out.push_back(y);
                break;
            }
    return out;
}

}  // namespace

TEST_CASE("nerves of small posets") {
    auto pt = nerve(bruhat({1}));
    CHECK(pt.count(0) == 1);
    CHECK(pt.max_nondeg_dim() == 0);
    CHECK(has_point_homology(homology(pt)));
    auto chain = nerve(interval_lattice(0, 3).induced({0, 1, 3}));
    CHECK(chain.count(0) == 3);
    CHECK(chain.count(1) == 3);
    CHECK(chain.count(2) == 1);
    CHECK(validate(chain).ok());
    CHECK(validate(nerve(ordered_partitions(3))).ok());
}

TEST_CASE("simplicial identities hold on degenerate simplices too") {
    auto X = nerve(bruhat({1, 2, 3}));
    for (int j = 1; j <= 3; ++j)
        for (auto& x : X.simplices_at(j))
            for (int i = 0; i <= j; ++i) {
                for (int k = i + 1; j >= 2 && k <= j; ++k) CHECK(X.face(X.face(x, k), i) == X.face(X.face(x, i), k - 1));
                if (i < j) {
                    CHECK(X.face(X.degeneracy(x, i), i) == x);
                    CHECK(X.face(X.degeneracy(x, i), i + 1) == x);
                }
            }
}

TEST_CASE("homology of known spaces") {
    CHECK(has_point_homology(homology(nerve(bruhat({1, 2, 3, 4})))));
    auto dP2 = homology(nerve(boundary_partitions(2)));
    REQUIRE(dP2.groups.size() >= 2);
    CHECK(dP2.groups[0].str() == "Z");
    CHECK(dP2.groups[1].str() == "Z");
    auto rp2 = projective_plane();
    REQUIRE(validate(rp2).ok());
    auto h = homology(rp2);
    CHECK(h.groups[0].str() == "Z");
    CHECK(h.groups[1].str() == "Z/2");
    CHECK(h.groups[2].is_zero());
    CHECK(h.str() == "H0 = Z, H1 = Z/2, H2 = 0, H3+ not computed");
}

TEST_CASE("Betti numbers agree with an independent rank computation") {
    std::vector<TruncSSet> spaces{nerve(boundary_partitions(1)), nerve(boundary_partitions(2)), nerve(boundary_partitions(3)),
                                  nerve(open_box_partitions(3)), nerve(ordered_partitions(3)), nerve(bruhat({1, 2, 3, 4})),
                                  projective_plane()};
    for (auto& X : spaces) {
        const auto h = homology(X);
        CHECK(betti(h) == betti_oracle(X));
        if (X.count(X.top()) == 0) CHECK(euler_characteristic(X) == euler_from_homology(h));
    }
}

TEST_CASE("partition-poset spheres") {
    for (int n = 1; n <= 3; ++n) {
        CHECK(is_contractible_homologically(nerve(open_box_partitions(n))));
        CHECK(is_sphere_homologically(nerve(boundary_partitions(n)), n - 1));
    }
    CHECK(is_contractible_homologically(nerve(ordered_partitions(4))));
}

TEST_CASE("colimit of a one-object diagram is the object") {
    auto X = nerve(bruhat({1, 2, 3}));
    Diagram D;
    D.objects.push_back(&X);
    for (bool force : {false, true}) {
        auto C = colimit(D, X.top(), force);
        for (int k = 0; k <= X.top(); ++k) CHECK(C.object.count(k) == X.count(k));
    }
}

TEST_CASE("pushout of nerves of up-sets is the nerve of the union") {
    auto P = ordered_partitions(3);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<std::size_t> pick(0, P.size() - 1);
        auto U = up_set(P, {pick(rng), pick(rng)}), V = up_set(P, {pick(rng)});
        std::vector<std::size_t> I, W;
        std::set_intersection(U.begin(), U.end(), V.begin(), V.end(), std::back_inserter(I));
        std::set_union(U.begin(), U.end(), V.begin(), V.end(), std::back_inserter(W));
        const int top = P.height() + 1;
        auto NI = nerve(P.induced(I), top), NU = nerve(P.induced(U), top), NV = nerve(P.induced(V), top), NW = nerve(P.induced(W), top);
        auto inclusion = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to, const TruncSSet& src, const TruncSSet& dst) {
            std::vector<int> vm;
            for (auto x : from) vm.push_back(static_cast<int>(std::find(to.begin(), to.end(), x) - to.begin()));
            return map_from_vertices(src, VertexIndex(dst), vm);
        };
        Diagram D;
        D.objects = {&NI, &NU, &NV};
        D.arrows = {{0, 1, inclusion(I, U, NI, NU)}, {0, 2, inclusion(I, V, NI, NV)}};
        auto C = colimit(D, top);
        for (int k = 0; k <= top; ++k) CHECK(C.object.count(k) == NW.count(k));
        CHECK(betti(homology(C.object)) == betti(homology(NW)));
    }
}

TEST_CASE("a pushout of 1-skeletal simplicial sets is 1-skeletal") {
    // two edges x -> y -> z glued along the middle vertex, truncated at 3
    auto chain2 = interval_lattice(0, 2);
    auto E = nerve(chain2, 3), pt = nerve(bruhat({}), 3);
    Diagram D;
    D.objects = {&pt, &E, &E};
    D.arrows = {{0, 1, map_from_vertices(pt, VertexIndex(E), {1})}, {0, 2, map_from_vertices(pt, VertexIndex(E), {0})}};
    auto C = colimit(D, 3);
    CHECK(C.object.count(0) == 3);
    CHECK(C.object.count(1) == 2);
    CHECK(C.object.max_nondeg_dim() == 1);
}

TEST_CASE("products of nerves") {
    auto A = nerve(bruhat({1, 2})), B = nerve(bruhat({3, 4}));
    auto P = product(A, B);
    auto N = nerve(bruhat_product({bit(1) | bit(2), bit(3) | bit(4)}));
    for (int k = 0; k <= std::min(P.top(), N.top()); ++k) CHECK(P.count(k) == N.count(k));
    CHECK(validate(P).ok());
}
