#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "cubical/cubeset.hpp"
#include "cubical/posets.hpp"

using namespace cubical;

namespace {

std::vector<int> counts(const CubicalComplex& C) {
    std::vector<int> c;
    for (int k = 0; k <= C.top_dim(); ++k) c.push_back(C.count(k));
    return c;
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long fubini(int n) {
    std::vector<long long> a(static_cast<std::size_t>(n + 1), 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k) a[static_cast<std::size_t>(m)] += binom(m, k) * a[static_cast<std::size_t>(m - k)];
    return a[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("cubes, boundaries and open boxes") {
    CHECK(counts(to_complex(standard_cube(3)).complex) == std::vector<int>{8, 12, 6, 1});
    CHECK(counts(to_complex(boundary(2)).complex) == std::vector<int>{4, 4});
    const auto ob = open_box(2, 1, 1);
    CHECK(counts(to_complex(ob).complex) == std::vector<int>{4, 3});
    CHECK_FALSE(ob.contains(parse_vertex("10"), parse_vertex("11")));
    // n-cube face counts: C(n,k) 2^{n-k}
    for (int n = 0; n <= 5; ++n) {
        auto c = counts(to_complex(standard_cube(n)).complex);
        for (int k = 0; k <= n; ++k) CHECK(c[static_cast<std::size_t>(k)] == binom(n, k) << (n - k));
        CHECK(validate(to_complex(standard_cube(n)).complex).ok());
    }
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int e = 0; e <= 1; ++e) {
                auto c = counts(to_complex(open_box(n, i, e)).complex);
                auto full = counts(to_complex(standard_cube(n)).complex);
                // the top cell and one facet are gone
                CHECK(c.size() == static_cast<std::size_t>(n));
                CHECK(c[static_cast<std::size_t>(n - 1)] == full[static_cast<std::size_t>(n - 1)] - 1);
                CHECK(c[0] == full[0]);
            }
    CHECK_THROWS_AS(SubcomplexOfCube(2, {{0, 3}}), PreconditionViolation);
}

TEST_CASE("faces read back off the cells") {
    for (auto S : {standard_cube(3), boundary(3), open_box(3, 2, 0)}) CHECK(extract_faces(to_complex(S)) == S.faces());
}

TEST_CASE("inner cube collapses the critical edge") {
    auto q = inner_cube(2, 1, 1);
    CHECK(q.complex.count(0) == 3);
    CHECK(q.complex.count(2) == 1);
    CHECK(q.vertex_of_mask.at(0) == q.vertex_of_mask.at(bit(1)));
    CHECK(validate(q.complex).ok());
    auto q0 = inner_cube(3, 2, 0);
    CHECK(q0.vertex_of_mask.at(parse_vertex("101")) == q0.vertex_of_mask.at(parse_vertex("111")));
    CHECK(q0.complex.count(0) == 7);
    CHECK(validate(inner_open_box(3, 2, 0).complex).ok());
}

TEST_CASE("the complex X behind the discontinuity example") {
    auto X = counterexample_x();
    CHECK(counts(X.complex) == std::vector<int>{2, 3, 2});
    CHECK(validate(X.complex).ok());
    CHECK(X.a != X.b);
}

TEST_CASE("Q^n and its vertices") {
    CHECK(counts(q_complex(1).complex) == std::vector<int>{2, 1});
    CHECK(q_complex(2).complex.count(0) == 3);
    for (int n = 1; n <= 4; ++n) {
        auto q = q_complex(n);
        CHECK(validate(q.complex).ok());
        CHECK(q.complex.count(0) == n + 1);
        for (auto [m, v] : q.vertex_of_mask)
            for (auto [m2, v2] : q.vertex_of_mask) CHECK((v == v2) == (sup(m) == sup(m2)));
    }
    auto q3 = q_complex(3);
    CHECK(q3.complex.name({0, q3.vertex_of_mask.at(bit(1) | bit(3))}) == "q3");
    CHECK(q3.complex.name({0, q3.vertex_of_mask.at(0)}) == "q0");
}

TEST_CASE("K") {
    auto K = k_complex();
    CHECK(validate(K).ok());
    CHECK(K.count(0) == 2);
    CHECK(K.count(2) == 2);
}

TEST_CASE("validation catches dangling and incoherent faces") {
    CubicalComplex C;
    C.add_cell(0, "a");
    C.add_cell_unchecked(1, "e", {{BoxMap::identity(0), 0}, {BoxMap::identity(0), 5}});
    auto r = validate(C);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.front().find("e") != std::string::npos);
    CHECK_THROWS(C.add_cell(1, "f", {{BoxMap::identity(0), 0}, {BoxMap::identity(0), 7}}));
}

TEST_CASE("pushouts and wedges") {
    auto sq = to_complex(standard_cube(2));
    auto id = identity_map(sq.complex);
    auto po = pushout(sq.complex, sq.complex, sq.complex, id, id);
    CHECK(counts(po.object) == counts(sq.complex));

    auto I = to_complex(standard_cube(1));
    Bipointed A{I.complex, I.vertex_id(0), I.vertex_id(1)};
    auto W = wedge(A, A);
    CHECK(counts(W.complex) == std::vector<int>{3, 2});
    Bipointed P{point_complex(), 0, 0};
    CHECK(counts(wedge(P, A).complex) == counts(I.complex));
    CHECK(counts(wedge(A, P).complex) == counts(I.complex));
    CHECK(validate(W.complex).ok());
}

TEST_CASE("maps of complexes") {
    auto sq = to_complex(standard_cube(2)), I = to_complex(standard_cube(1));
    auto f = induced_map(I, sq, BoxMap::face(2, 2, 0));
    CHECK(validate_map(I.complex, sq.complex, f).ok());
    CHECK(is_dimensionwise_injective(I.complex, sq.complex, f));
    auto s = induced_map(sq, I, BoxMap::degeneracy(2, 1));
    CHECK(validate_map(sq.complex, I.complex, s).ok());
    CHECK_FALSE(is_dimensionwise_injective(sq.complex, I.complex, s));
    // maps from the interval into a cube are the box maps [1] -> [1]^2
    CHECK(enumerate_complex_maps(I.complex, sq.complex).size() == enumerate_maps(1, 2).size());
}

TEST_CASE("weak order on three letters") {
    auto B = bruhat({1, 2, 3});
    REQUIRE(B.size() == 6);
    std::set<std::pair<std::string, std::string>> covers;
    for (auto [x, y] : B.hasse()) covers.insert({B.label(x), B.label(y)});
    const std::set<std::pair<std::string, std::string>> want{{"(3,2,1)", "(2,3,1)"}, {"(3,2,1)", "(3,1,2)"}, {"(2,3,1)", "(2,1,3)"},
                                                            {"(3,1,2)", "(1,3,2)"}, {"(2,1,3)", "(1,2,3)"}, {"(1,3,2)", "(1,2,3)"}};
    CHECK(covers == want);
    CHECK(B.label(*B.least()) == "(3,2,1)");
    CHECK(B.label(*B.greatest()) == "(1,2,3)");
    auto B4 = bruhat({1, 2, 3, 4});
    CHECK(B4.size() == 24);
    CHECK(B4.label(*B4.least()) == "(4,3,2,1)");
    CHECK(B4.label(*B4.greatest()) == "(1,2,3,4)");
    CHECK(B4.height() == 6);
    CHECK(bruhat({5}).size() == 1);
}

TEST_CASE("weak order agrees with inversion sets") {
    // x <= y exactly when the inversions of y are among those of x
    auto inv = [](const Word& w) {
        std::set<std::pair<int, int>> s;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] > w[j]) s.insert({w[j], w[i]});
        return s;
    };
    for (auto letters : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{2, 5, 7}}) {
        auto B = bruhat(letters);
        for (std::size_t x = 0; x < B.size(); ++x)
            for (std::size_t y = 0; y < B.size(); ++y) {
                auto ix = inv(B.element(x)), iy = inv(B.element(y));
                CHECK(B.leq(x, y) == std::includes(ix.begin(), ix.end(), iy.begin(), iy.end()));
            }
    }
}

TEST_CASE("ordered partitions") {
    for (int n = 1; n <= 5; ++n) {
        auto P = ordered_partitions(n);
        CHECK(static_cast<long long>(P.size()) == fubini(n));
        REQUIRE(P.greatest());
        CHECK(P.element(*P.greatest()) == OrderedPartition{full_mask(n)});
        long long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(static_cast<long long>(P.minimal().size()) == fact);
        for (auto x : P.minimal()) CHECK(static_cast<int>(P.element(x).size()) == n);
    }
    CHECK(ordered_partitions(1).size() == 1);
    auto P3 = ordered_partitions(3);
    std::vector<std::size_t> many;
    for (std::size_t x = 0; x < P3.size(); ++x)
        if (P3.element(x).size() >= 2) many.push_back(x);
    CHECK(is_downward_closed(P3, many));
    CHECK_FALSE(is_upward_closed(P3, many));
    std::vector<std::size_t> all(P3.size());
    std::iota(all.begin(), all.end(), 0);
    CHECK(is_downward_closed(P3, {}));
    CHECK(is_downward_closed(P3, all));
    CHECK(is_upward_closed(P3, all));
    for (std::size_t x = 0; x < P3.size(); ++x) CHECK(is_downward_closed(P3, down_closure(P3, {x})));
}

TEST_CASE("interval lattices, products and wedges of posets") {
    CHECK(interval_lattice(0, 1).size() == 1);
    CHECK(interval_lattice(2, 2).size() == 1);
    CHECK(interval_lattice(0, 3).size() == 4);
    auto S2 = bruhat({1, 2});
    auto Pr = product(S2, S2);
    CHECK(Pr.size() == 4);
    CHECK(Pr.hasse().size() == 4);
    CHECK(Pr.covers(*Pr.least()).size() == 2);
    auto Bp = bruhat_product({bit(1) | bit(2), bit(3) | bit(4)});
    CHECK(Bp.size() == 4);
    CHECK(Bp.hasse().size() == 4);
    auto chain = interval_lattice(0, 2);
    REQUIRE(chain.size() == 2);
    auto W = wedge(chain, chain);
    CHECK(W.size() == 3);
    CHECK(W.height() == 2);
    auto pt = bruhat({});
    CHECK(wedge(pt, S2).size() == S2.size());
    CHECK(wedge(S2, pt).size() == S2.size());
}

TEST_CASE("order isomorphism") {
    auto P = bruhat({1, 2, 3}), Q = bruhat({4, 5, 6});
    std::vector<std::size_t> f(P.size());
    for (std::size_t x = 0; x < P.size(); ++x) {
        Word w = P.element(x);
        for (auto& c : w) c += 3;
        f[x] = Q.index_of(w);
    }
    CHECK(is_order_isomorphism(P, Q, f));
    std::swap(f[0], f[1]);
    CHECK_FALSE(is_order_isomorphism(P, Q, f));
}
