#include <catch_amalgamated.hpp>

#include <set>

#include "cubical/necklace.hpp"

using namespace cubical;

namespace {

// Every vertex function of a bipointed map, found without the library's
// enumeration: monotone functions on each bead of T are listed by
// backtracking, kept when they land in a single bead of U as a box map, and
// then glued at the joints.
std::set<std::vector<Mask>> hom_oracle(const Necklace& T, const Necklace& U) {
    const auto UV = U.vertices();
    auto bead_functions = [&](int n) {
        std::vector<std::vector<Mask>> out;
        std::vector<Mask> table(std::size_t{1} << n);
        std::function<void(Mask)> go = [&](Mask v) {
            if (v == table.size()) {
                for (int j = 0; j < U.length(); ++j) {
                    bool inside = true;
                    std::vector<Mask> local;
                    for (Mask w : table) {
                        inside = inside && U.in_bead(j, w);
                        local.push_back(U.local(j, w));
                    }
                    if (!inside) continue;
                    try {
                        BoxMap::from_table(n, U.beads()[static_cast<std::size_t>(j)], local);
                        out.push_back(table);
                        return;
                    } catch (const NotInBoxCategory&) {
                    }
                }
                return;
            }
            for (Mask w : UV) {
                bool mono = true;
                for (int i = 1; i <= n; ++i)
                    if ((v & bit(i)) && !subset(table[v & ~bit(i)], w)) mono = false;
                if (!mono) continue;
                table[v] = w;
                go(v + 1);
            }
        };
        go(0);
        return out;
    };
    std::vector<std::vector<std::vector<Mask>>> per_bead;
    for (int n : T.beads()) per_bead.push_back(bead_functions(n));
    std::set<std::vector<Mask>> out;
    const auto TV = T.vertices();
    std::vector<const std::vector<Mask>*> pick;
    std::function<void(int, Mask)> glue = [&](int i, Mask p) {
        if (i == T.length()) {
            if (p != U.omega()) return;
            std::vector<Mask> vf;
            for (Mask v : TV) {
                const int b = T.beads_containing(v).front();
                vf.push_back((*pick[static_cast<std::size_t>(b)])[T.local(b, v)]);
            }
            out.insert(vf);
            return;
        }
        for (auto& f : per_bead[static_cast<std::size_t>(i)]) {
            if (f.front() != p) continue;
            pick.push_back(&f);
            glue(i + 1, f.back());
            pick.pop_back();
        }
    };
    glue(0, 0);
    return out;
}

std::set<std::vector<Mask>> vertex_functions(const std::vector<NecMorphism>& H) {
    std::set<std::vector<Mask>> out;
    for (auto& f : H) out.insert(f.vertex_function);
    return out;
}

}  // namespace

TEST_CASE("necklace shape") {
    auto T = Necklace::parse("2,1,3");
    CHECK(T.dim() == 6);
    CHECK(T.length() == 3);
    CHECK(T.joint(1) == full_mask(2));
    CHECK(T.bead_coords(2) == (bit(4) | bit(5) | bit(6)));
    CHECK(T.vertices().size() == 4 + 2 + 8 - 2);
    CHECK(T.str() == "(2,1,3)");
    CHECK(Necklace({2, 0, 1}) == Necklace({2, 1}));
    CHECK(Necklace(std::vector<int>{}).vertices().size() == 1);
    CHECK(T.contains(parse_vertex("111010")));
    CHECK_FALSE(T.contains(parse_vertex("100100")));
    CHECK(T.beads_containing(T.joint(2)) == std::vector<int>{1, 2});
    for (int i = 0; i < T.length(); ++i)
        for (Mask l = 0; l <= full_mask(T.beads()[static_cast<std::size_t>(i)]); ++l) CHECK(T.local(i, T.global(i, l)) == l);
}

TEST_CASE("a necklace is a wedge of cubes") {
    auto c2 = to_complex(standard_cube(2)), c3 = to_complex(standard_cube(3));
    Bipointed A{c2.complex, c2.vertex_id(0), c2.vertex_id(3)}, B{c3.complex, c3.vertex_id(0), c3.vertex_id(7)};
    auto W = wedge(A, B);
    auto N = to_complex(Necklace({2, 3}).as_subcomplex()).complex;
    for (int k = 0; k <= 3; ++k) CHECK(W.complex.count(k) == N.count(k));
}

TEST_CASE("maps between necklaces") {
    auto T = Necklace::parse("2,1,3");
    CHECK(hom_nec(T, Necklace::parse("3,2,1")).empty());
    CHECK(hom_oracle(T, Necklace::parse("3,2,1")).empty());

    auto U = Necklace::parse("2,1");
    auto H = hom_nec(T, U);
    CHECK(vertex_functions(H) == hom_oracle(T, U));
    // g v h splits at the joint of U; the one exception is id v (id * const)
    const auto TV = T.vertices();
    const auto j2 = static_cast<std::size_t>(std::lower_bound(TV.begin(), TV.end(), T.joint(2)) - TV.begin());
    int split = 0, other = 0;
    for (auto& f : H) {
        if (f.vertex_function[j2] == U.joint(1)) {
            ++split;
            continue;
        }
        ++other;
        CHECK(f.components[0].map.is_identity());
        CHECK(f.components[1].map.is_identity());
        CHECK(f.components[2].map == BoxMap::constant(3, 1, 1));
    }
    CHECK(other == 1);
    CHECK(split + other == static_cast<int>(H.size()));
}

TEST_CASE("hom sets agree with a backtracking oracle") {
    const std::vector<std::string> shapes{"1", "2", "3", "1,1", "2,1", "1,2", "1,1,1", "2,2", "3,1"};
    for (auto& s : shapes)
        for (auto& t : shapes) {
            auto T = Necklace::parse(s), U = Necklace::parse(t);
            INFO(s << " -> " << t);
            CHECK(vertex_functions(hom_nec(T, U)) == hom_oracle(T, U));
        }
}

TEST_CASE("identities and composites") {
    const std::vector<std::string> shapes{"2", "1,1", "2,1", "1,2"};
    for (auto& s : shapes) {
        auto T = Necklace::parse(s);
        CHECK(vertex_functions(hom_nec(T, T)).count(T.vertices()));
        for (auto& m : shapes)
            for (auto& t : shapes) {
                auto M = Necklace::parse(m), U = Necklace::parse(t);
                const auto TU = vertex_functions(hom_nec(T, U));
                for (auto& f : hom_nec(T, M))
                    for (auto& g : hom_nec(M, U)) CHECK(TU.count(compose_vertex_functions(M, g.vertex_function, f.vertex_function)));
            }
    }
}

TEST_CASE("subnecklaces") {
    auto T = Necklace::parse("2,3");
    CHECK(subnecklace(T, 0, T.joint(1)).necklace == Necklace({2}));
    CHECK(subnecklace(T, bit(1), bit(1)).necklace.length() == 0);
    const Mask a = bit(1), b = T.joint(1) | bit(4);
    auto s = subnecklace(T, a, b);
    CHECK(s.necklace == Necklace({1, 1}));
    REQUIRE(s.inclusion.components.size() == 2);
    CHECK(s.inclusion.components[0].bead == 0);
    CHECK(s.inclusion.components[0].map == BoxMap::iota(2, bit(1), full_mask(2)));
    CHECK(s.inclusion.components[1].bead == 1);
    CHECK(s.inclusion.components[1].map == BoxMap::iota(3, 0, bit(2)));
    CHECK(s.inclusion.vertex_function.front() == a);
    CHECK(s.inclusion.vertex_function.back() == b);
    CHECK(cut_points(T, a, b) == std::vector<Mask>{a, T.joint(1), b});
    CHECK_THROWS_AS(subnecklace(T, bit(2), bit(1)), PreconditionViolation);
}

TEST_CASE("flags of a cube are ordered partitions") {
    for (int n = 1; n <= 4; ++n) {
        auto F = subneck_poset(standard_cube(n), 0, full_mask(n));
        auto P = ordered_partitions(n);
        REQUIRE(F.size() == P.size());
        std::vector<std::size_t> f;
        for (auto& x : F.elements()) f.push_back(P.index_of(flag_partition(x)));
        CHECK(is_order_isomorphism(F, P, f));
        for (auto& x : F.elements()) CHECK(partition_flag(0, flag_partition(x)) == x);
    }
    CHECK(subneck_poset(standard_cube(3), 0, 7).size() == 13);
}

TEST_CASE("flags of open boxes and boundaries") {
    auto F = subneck_poset(open_box(2, 1, 1), 0, 3);
    REQUIRE(F.size() == 1);
    CHECK(F.element(0).points == std::vector<Mask>{0, bit(2), 3});
    auto B = subneck_poset(boundary(2), 0, 3);
    CHECK(B.size() == 2);
    CHECK(B.hasse().empty());
    const std::vector<std::size_t> open_sizes{1, 11, 73}, bd_sizes{2, 12, 74};
    for (int n = 1; n <= 3; ++n) {
        CHECK(open_box_partitions(n).size() == open_sizes[static_cast<std::size_t>(n - 1)]);
        CHECK(boundary_partitions(n).size() == bd_sizes[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("least upper bounds of flags") {
    auto F = subneck_poset(standard_cube(2), 0, 3);
    auto mins = F.minimal();
    REQUIRE(mins.size() == 2);
    CHECK(lub({F.element(mins[0]), F.element(mins[1])}).points == std::vector<Mask>{0, 3});
    for (int n = 1; n <= 3; ++n) {
        auto P = subneck_poset(standard_cube(n), 0, full_mask(n));
        for (std::size_t x = 0; x < P.size(); ++x) {
            CHECK(lub({P.element(x)}) == P.element(x));
            for (std::size_t y = 0; y < P.size(); ++y) {
                const auto l = P.index_of(lub({P.element(x), P.element(y)}));
                CHECK(P.leq(x, l));
                CHECK(P.leq(y, l));
                for (std::size_t z = 0; z < P.size(); ++z)
                    if (P.leq(x, z) && P.leq(y, z)) CHECK(P.leq(l, z));
            }
        }
    }
}
