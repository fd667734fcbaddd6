#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "concept_homology/simplex.hpp"
#include "support/fixtures.hpp"

using namespace concept_homology;

namespace {

std::vector<std::uint32_t> ids(const Simplex& s)
{
    std::vector<std::uint32_t> out;
    for (auto v : s.vertices) out.push_back(v.index);
    return out;
}

} // namespace

TEST_CASE("faces omit one vertex each, in omitted-index order", "[simplex]")
{
    auto f = faces(make_simplex({0, 1, 2}, 1.5));
    REQUIRE(f.size() == 3);
    CHECK(ids(f[0]) == std::vector<std::uint32_t>{1, 2});
    CHECK(ids(f[1]) == std::vector<std::uint32_t>{0, 2});
    CHECK(ids(f[2]) == std::vector<std::uint32_t>{0, 1});
    for (const auto& s : f) CHECK(s.appearance == 1.5);

    CHECK(faces(make_simplex({0})).empty());

    auto e = faces(make_simplex({0, 1}));
    REQUIRE(e.size() == 2);
    CHECK(ids(e[0]) == std::vector<std::uint32_t>{1});
    CHECK(ids(e[1]) == std::vector<std::uint32_t>{0});
}

TEST_CASE("make_simplex sorts and rejects repeated vertices", "[simplex]")
{
    CHECK(ids(make_simplex({3, 1, 2})) == std::vector<std::uint32_t>{1, 2, 3});
    CHECK_THROWS_AS(make_simplex({1, 1}), StructuralError);
}

TEST_CASE("build_complex closes a single triangle", "[simplex]")
{
    auto k = build_complex({make_simplex({0, 1, 2}, 1.0)});
    REQUIRE(k.size() == 7);
    CHECK(k.count(0) == 3);
    CHECK(k.count(1) == 3);
    CHECK(k.count(2) == 1);
    CHECK(k.max_dim() == 2);
    for (const auto& s : k.simplices()) CHECK(s.appearance == 1.0);
}

TEST_CASE("build_complex on the hollow tetrahedron gives 4 + 6 + 4 simplices", "[simplex]")
{
    auto t = fixtures::hollow_tetrahedron();
    CHECK(t.size() == 14);
    CHECK(t.count(0) == 4);
    CHECK(t.count(1) == 6);
    CHECK(t.count(2) == 4);
}

TEST_CASE("build_complex edge cases", "[simplex]")
{
    CHECK(build_complex(std::vector<Simplex>{}).empty());
    CHECK(build_complex(std::vector<Simplex>{}).max_dim() == -1);

    SECTION("repeated vertex inside a simplex names the simplex")
    {
        Simplex bad{{VertexId{2}, VertexId{2}, VertexId{5}}, 0.0};
        REQUIRE_THROWS_AS(build_complex({bad}), StructuralError);
        REQUIRE_THROWS_WITH(build_complex({bad}), Catch::Matchers::ContainsSubstring("[v2 v2 v5]"));
    }
    SECTION("negative or non-finite appearance")
    {
        CHECK_THROWS_AS(build_complex({make_simplex({0}, -1.0)}), ArgumentError);
        CHECK_THROWS_AS(build_complex({make_simplex({0}, std::nan(""))}), ArgumentError);
    }
    SECTION("duplicates keep the earliest appearance")
    {
        auto k = build_complex({make_simplex({0, 1}, 3.0), make_simplex({0, 1}, 2.0)});
        CHECK(k[*k.index_of({VertexId{0}, VertexId{1}})].appearance == 2.0);
    }
    SECTION("synthesized faces take the earliest coface")
    {
        auto k = build_complex({make_simplex({0, 1}, 3.0), make_simplex({1, 2}, 2.0)});
        CHECK(k[*k.index_of({VertexId{1}})].appearance == 2.0);
        CHECK(k[*k.index_of({VertexId{0}})].appearance == 3.0);
    }
    SECTION("a listed face after its coface is non-monotone")
    {
        CHECK_THROWS_AS(build_complex({make_simplex({0, 1}, 1.0), make_simplex({0}, 2.0)}), StructuralError);
    }
    SECTION("unsorted input vertices are normalized")
    {
        Simplex raw{{VertexId{2}, VertexId{0}}, 0.5};
        auto k = build_complex({raw});
        CHECK(k.contains({VertexId{0}, VertexId{2}}));
    }
}

TEST_CASE("filtration order is appearance, dimension, then vertices", "[simplex]")
{
    auto k = build_complex({make_simplex({1, 2}, 0.0), make_simplex({0, 3}, 0.0), make_simplex({0, 1}, 1.0)});
    const auto& s = k.simplices();
    // vertices 0..3 at 0, then edges at 0 ([0 3] before [1 2]), then [0 1] at 1
    REQUIRE(s.size() == 7);
    CHECK(ids(s[0]) == std::vector<std::uint32_t>{0});
    CHECK(ids(s[3]) == std::vector<std::uint32_t>{3});
    CHECK(ids(s[4]) == std::vector<std::uint32_t>{0, 3});
    CHECK(ids(s[5]) == std::vector<std::uint32_t>{1, 2});
    CHECK(ids(s[6]) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("skeleton drops higher simplices", "[simplex]")
{
    auto t = fixtures::hollow_tetrahedron();
    auto one = skeleton(t, 1);
    CHECK(one.size() == 10);
    CHECK(one.count(2) == 0);
    CHECK(skeleton(FilteredComplex{}, 3).empty());
    CHECK(skeleton(t, 5) == t);
    CHECK_THROWS_AS(skeleton(t, -1), ArgumentError);
}

TEST_CASE("snapshot and restriction stay face-closed", "[simplex]")
{
    auto k = fixtures::tetrahedron_filtration();
    auto k3 = k.snapshot(3.0);
    CHECK(k3.count(2) == 2);
    CHECK_NOTHROW(validate(k3));
    std::vector<VertexId> keep{VertexId{0}, VertexId{1}, VertexId{2}};
    auto sub = k.restricted_to(keep);
    CHECK(sub.size() == 7);
    CHECK_NOTHROW(validate(sub));
}

TEST_CASE("random complexes: closure, monotonicity, idempotence, face counts", "[simplex][property]")
{
    std::mt19937_64 rng(20150405);
    for (int trial = 0; trial < 200; ++trial) {
        auto k = fixtures::random_complex(rng);
        REQUIRE_NOTHROW(validate(k));
        CHECK(build_complex(k.simplices()) == k);
        for (const auto& s : k.simplices())
            if (s.dimension() >= 1) CHECK(faces(s).size() == static_cast<std::size_t>(s.dimension()) + 1);
    }
}
