#include <catch_amalgamated.hpp>

#include "cubical/serialize.hpp"

using namespace cubical;

TEST_CASE("box maps round trip") {
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 3; ++m)
            for (auto& f : enumerate_maps(n, m)) {
                const json j = to_json(f);
                CHECK(box_map_from_json(json::parse(j.dump())) == f);
                CHECK(j.at("word") == f.word());
            }
}

TEST_CASE("complexes round trip") {
    std::vector<CubicalComplex> cs{to_complex(standard_cube(3)).complex, inner_cube(3, 1, 1).complex, q_complex(3).complex, k_complex(),
                                   counterexample_x().complex};
    for (auto& C : cs) {
        const auto text = to_json(C).dump();
        const auto D = complex_from_json(json::parse(text));
        CHECK(validate(D).ok());
        REQUIRE(D.top_dim() == C.top_dim());
        for (int k = 0; k <= C.top_dim(); ++k)
            for (int id = 0; id < C.count(k); ++id) {
                CHECK(D.name({k, id}) == C.name({k, id}));
                for (int i = 1; i <= k; ++i)
                    for (int e = 0; e <= 1; ++e) CHECK(D.face({k, id}, i, e) == C.face({k, id}, i, e));
            }
        CHECK(to_json(D).dump() == text);
    }
}

TEST_CASE("broken complexes are rejected on load") {
    json j = to_json(to_complex(standard_cube(1)).complex);
    j["cells"][1][0]["faces"][1]["target"] = 9;
    CHECK_THROWS(complex_from_json(j));
}

TEST_CASE("subcomplexes round trip") {
    for (auto S : {standard_cube(3), boundary(3), open_box(3, 1, 0), Necklace({2, 1}).as_subcomplex()}) {
        const json j = to_json(S);
        CHECK(j.at("kind") == "cube-subcomplex");
        CHECK(subcomplex_from_json(json::parse(j.dump())) == S);
    }
}

TEST_CASE("simplicial sets round trip") {
    for (auto X : {nerve(bruhat({1, 2, 3})), nerve(boundary_partitions(2)), subcomplex_mapping_space(boundary(3), 0, 7).space}) {
        const auto Y = sset_from_json(json::parse(to_json(X).dump()));
        CHECK(validate(Y).ok());
        CHECK(Y.vertex_labels == X.vertex_labels);
        CHECK(homology(Y).str() == homology(X).str());
        CHECK(to_json(Y) == to_json(X));
    }
}

TEST_CASE("reports and DOT") {
    auto h = to_json(homology(nerve(boundary_partitions(2))));
    CHECK(h["groups"][1]["betti"] == 1);
    CHECK(h["not_computed_from_degree"] == 2);
    auto dot = complex_dot(to_complex(standard_cube(2)).complex, "sq");
    CHECK(dot.find("digraph \"sq\"") == 0);
    CHECK(std::count(dot.begin(), dot.end(), '>') >= 4);
    auto X = counterexample_x();
    auto pd = paths_dot(X.complex, leadsto_closure(X.complex, X.a, X.b));
    CHECK(pd.find("p0 ->") != std::string::npos);
    auto M = to_json(necklace_mapping_space(Necklace({2, 1}), 0, 7));
    CHECK(M["vertex_words"].size() == 2);
    CHECK(M["provenance"] == "necklace-formula");
    auto T = to_json(Necklace({2, 1}));
    CHECK(T["joints"] == json::array({"000", "110", "111"}));
}
