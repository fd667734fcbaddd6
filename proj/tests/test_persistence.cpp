#include <cmath>
#include <map>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "concept_homology/builders.hpp"
#include "concept_homology/persistence.hpp"
#include "support/fixtures.hpp"

using namespace concept_homology;

namespace {

using BarKey = std::tuple<int, double, double>;

std::multiset<BarKey> bars(const Barcode& b, bool include_ephemeral = false)
{
    std::multiset<BarKey> out;
    for (const auto& iv : b.intervals)
        if (include_ephemeral || !iv.is_ephemeral()) out.emplace(iv.degree, iv.birth, iv.death);
    return out;
}

} // namespace

TEST_CASE("tetrahedron filtration barcode", "[persistence]")
{
    auto b = compute_persistence(fixtures::tetrahedron_filtration(), 2);
    const std::multiset<BarKey> expected = {
        {0, 0.0, kInfinity}, {0, 0.0, 1.0}, {0, 0.0, 1.0}, {0, 0.0, 1.0}, {1, 1.0, 2.0},
        {1, 1.0, 3.0},       {1, 1.0, 4.0}, {2, 5.0, kInfinity},
    };
    CHECK(bars(b) == expected);
    CHECK(b.final_parameter == 5.0);
    CHECK(b.max_degree == 2);

    CHECK(persistent_betti(b, 0, 0.5) == 4);
    CHECK(persistent_betti(b, 1, 1.5) == 3);
    CHECK(persistent_betti(b, 2, 4.5) == 0);
    CHECK(persistent_betti(b, 0, 1.0) == 1);
    CHECK(persistent_betti(b, 1, 2.0) == 2);
    CHECK(persistent_betti(b, 2, 5.0) == 1);
    CHECK_THROWS_AS(persistent_betti(b, 0, -1.0), ArgumentError);
}

TEST_CASE("tetrahedron 2-class representative is the whole surface", "[persistence]")
{
    auto b = compute_persistence(fixtures::tetrahedron_filtration(), 2);
    const PersistenceInterval* sphere = nullptr;
    for (const auto& iv : b.intervals)
        if (iv.degree == 2) sphere = &iv;
    REQUIRE(sphere != nullptr);
    const auto& rep = representative_cycle(b, *sphere);
    std::set<std::vector<VertexId>> got;
    for (const auto& s : rep) got.insert(s.vertices);
    const std::set<std::vector<VertexId>> want = {
        make_simplex({0, 1, 2}).vertices, make_simplex({0, 1, 3}).vertices,
        make_simplex({0, 2, 3}).vertices, make_simplex({1, 2, 3}).vertices};
    CHECK(got == want);

    for (const auto& iv : b.intervals) {
        CHECK(is_cycle(iv.representative));
        if (iv.degree == 0) {
            REQUIRE(iv.representative.size() == 1);
            CHECK(iv.representative[0] == iv.birth_simplex);
        }
    }

    PersistenceInterval stranger = *sphere;
    stranger.birth = 17.0;
    CHECK_THROWS_AS(representative_cycle(b, stranger), LookupError);
}

TEST_CASE("small persistence cases", "[persistence]")
{
    CHECK(compute_persistence(FilteredComplex{}, 2).intervals.empty());

    auto edge = build_complex({make_simplex({0}, 0.0), make_simplex({1}, 0.0), make_simplex({0, 1}, 1.0)});
    CHECK(bars(compute_persistence(edge, 1)) == std::multiset<BarKey>{{0, 0.0, kInfinity}, {0, 0.0, 1.0}});

    auto tri = compute_persistence(fixtures::triangle_boundary(), 1);
    const PersistenceInterval* loop = nullptr;
    for (const auto& iv : tri.intervals)
        if (iv.degree == 1) loop = &iv;
    REQUIRE(loop != nullptr);
    CHECK(loop->is_infinite());
    CHECK(representative_cycle(tri, *loop).size() == 3);

    CHECK_THROWS_AS(compute_persistence(edge, -1), ArgumentError);
}

TEST_CASE("ephemeral pairs are kept but not visible", "[persistence]")
{
    // Everything at 0: the triangle fills the loop at the same parameter.
    auto k = build_complex({make_simplex({0, 1, 2}, 0.0)});
    auto b = compute_persistence(k, 2);
    CHECK(b.intervals.size() == 4); // 3 vertices create, 2 edges kill, 1 edge creates, triangle kills
    CHECK(b.visible().size() == 1);
    std::size_t ephemeral = 0;
    for (const auto& iv : b.intervals) ephemeral += iv.is_ephemeral() ? 1 : 0;
    CHECK(ephemeral == 3);
}

TEST_CASE("max_degree above the complex dimension just adds no bars", "[persistence]")
{
    auto b = compute_persistence(fixtures::triangle_boundary(), 4);
    CHECK(b.count_infinite(0) == 1);
    CHECK(b.count_infinite(1) == 1);
    CHECK(b.count_infinite(2) == 0);
}

TEST_CASE("lower max_degree ignores higher bars but keeps the deaths they cause", "[persistence]")
{
    auto b = compute_persistence(fixtures::tetrahedron_filtration(), 1);
    CHECK(bars(b).size() == 7);
    CHECK(b.count_infinite(1) == 0);
}

TEST_CASE("random filtrations: oracle equivalence, conservation, monotone queries", "[persistence][property]")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        auto k = fixtures::random_complex(rng);
        const int top = std::max(k.max_dim(), 0);
        auto b = compute_persistence(k, top);

        const auto final_betti = betti_numbers(k, top);
        for (int d = 0; d <= top; ++d) CHECK(b.count_infinite(d) == final_betti.betti[d]);

        // Every simplex creates or destroys exactly one class.
        std::size_t finite = 0;
        for (const auto& iv : b.intervals) finite += iv.is_infinite() ? 0 : 1;
        CHECK(b.intervals.size() + finite == k.size());

        for (const auto& iv : b.intervals) {
            CHECK(iv.birth <= iv.death);
            CHECK(is_cycle(iv.representative));
            for (const auto& s : iv.representative) CHECK(s.appearance <= iv.birth);
            CHECK(std::find(iv.representative.begin(), iv.representative.end(), iv.birth_simplex) !=
                  iv.representative.end());
        }

        // Half-open bars: the query at r matches the snapshot complex K_r exactly.
        for (double r : k.parameter_values()) {
            const auto snap = betti_numbers(k.snapshot(r), top);
            for (int d = 0; d <= top; ++d) CHECK(persistent_betti(b, d, r) == snap.betti[d]);
        }
        // Between consecutive parameter values the count does not change.
        const auto params = k.parameter_values();
        for (std::size_t p = 0; p + 1 < params.size(); ++p) {
            const double mid = (params[p] + params[p + 1]) / 2.0;
            for (int d = 0; d <= top; ++d) CHECK(persistent_betti(b, d, mid) == persistent_betti(b, d, params[p]));
        }
    }
}

TEST_CASE("random Rips filtrations match final Betti numbers", "[persistence][property]")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        auto cloud = fixtures::random_cloud(rng, 8, 3);
        auto k = rips_filtration(cloud, 10.0, 3, Metric::euclidean);
        auto b = compute_persistence(k, 3);
        auto beta = betti_numbers(k, 3);
        for (int d = 0; d <= 3; ++d) CHECK(b.count_infinite(d) == beta.betti[d]);
    }
}
