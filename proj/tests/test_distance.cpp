#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include "powg/distance.hpp"
#include "powg/errors.hpp"

#include <random>

using namespace powg;

TEST_CASE("all-pairs distances")
{
    const auto path = oracle::path_graph(4);
    const auto d = all_pairs_distances(path);
    CHECK(d.size() == 4);
    CHECK(d.at(0, 0) == 0);
    CHECK(d.at(0, 3) == 3);
    CHECK(d.at(3, 1) == 2);

    const auto z6 = all_pairs_distances(build_power_graph(build_cyclic(6)));
    CHECK(z6.at(2, 3) == 2);
    CHECK(z6.at(1, 4) == 1);

    const auto split = all_pairs_distances(Graph{3, {{0, 1}}});
    CHECK(split.at(0, 2) == DistanceTable::unreachable);
}

TEST_CASE("Hosoya polynomial examples")
{
    const auto z6 = hosoya_polynomial(build_power_graph(build_cyclic(6)));
    CHECK(z6.counts == std::vector<std::uint64_t>{6, 13, 2});
    CHECK(z6.unreachable_pairs == 0);
    CHECK(z6.render() == "6 + 13x + 2x^2");

    const auto fam = hosoya_polynomial(build_power_graph(build_family({2, 3})));
    CHECK(fam.counts == std::vector<std::uint64_t>{24, 77, 199});
    CHECK(fam.at(5) == 0);

    CHECK(hosoya_polynomial(complete_graph(1)).render() == "1");
    CHECK(hosoya_polynomial(complete_graph(2)).render() == "2 + x");
    CHECK(hosoya_polynomial(oracle::path_graph(4)).render() == "4 + 3x + 2x^2 + x^3");
    const auto empty = hosoya_polynomial(Graph{});
    CHECK(empty.at(0) == 0);
    CHECK(empty.unreachable_pairs == 0);
}

TEST_CASE("disconnected graphs")
{
    const Graph g{5, {{0, 1}, {1, 2}, {3, 4}}};
    const auto h = hosoya_polynomial(g);
    CHECK(h.counts == std::vector<std::uint64_t>{5, 3, 1});
    CHECK(h.unreachable_pairs == 6);
    CHECK(wiener_index(g) == 5);
    CHECK_FALSE(diameter(g).has_value());
    CHECK_THROWS_AS(reciprocal_status(g, 0), InvalidInput);
    CHECK_THROWS_AS(rs_hosoya_polynomial(g), InvalidInput);
}

TEST_CASE("reciprocal status")
{
    const auto star = oracle::star_graph(3);
    CHECK(reciprocal_status(star, 0) == Rational{3});
    CHECK(reciprocal_status(star, 1) == Rational{2});

    const auto path = oracle::path_graph(4);
    CHECK(reciprocal_status(path, 0) == Rational{11, 6});  // 1 + 1/2 + 1/3
    CHECK(to_string(reciprocal_status(path, 0)) == "11/6");
    CHECK(reciprocal_status(complete_graph(1), 0) == Rational{0});

    const auto z6 = build_power_graph(build_cyclic(6));
    CHECK(reciprocal_status(z6, 3) == Rational{4});  // neighbours 0, 1, 5; 2 and 4 at distance 2
    CHECK(reciprocal_status(z6, 2) == Rational{9, 2});
    CHECK(reciprocal_status_diameter_two(z6, 2) == Rational{9, 2});
}

TEST_CASE("reciprocal-status Hosoya polynomial")
{
    const auto k3 = rs_hosoya_polynomial(complete_graph(3));
    CHECK(k3.terms() == std::map<Rational, BigInt>{{Rational{4}, 3}});
    const auto star = rs_hosoya_polynomial(oracle::star_graph(3));
    CHECK(star.terms() == std::map<Rational, BigInt>{{Rational{5}, 3}});
    const auto k4 = rs_hosoya_polynomial(complete_graph(4));
    CHECK(k4.terms() == std::map<Rational, BigInt>{{Rational{6}, 6}});
    CHECK(k4.render() == "6·x^6");
    CHECK(k4.coefficient(Rational{5}) == 0);

    const auto fam = rs_hosoya_polynomial(build_power_graph(build_family({2, 3})));
    CHECK(fam.coefficient_total() == 77);
    CHECK(fam.coefficient(Rational{77, 2}) > 0);
    CHECK(fam.render().find("x^77/2") != std::string::npos);

    RationalExponentPolynomial p;
    p.add(Rational{1, 2}, 2);
    p.add(Rational{3}, 1);
    p.add(Rational{1, 2}, 1);
    CHECK(p.render() == "1·x^3 + 3·x^1/2");
    CHECK(RationalExponentPolynomial{}.render() == "0");
}

TEST_CASE("Wiener index and diameter")
{
    CHECK(wiener_index(complete_graph(4)) == 6);
    CHECK(wiener_index(oracle::path_graph(3)) == 4);
    CHECK(wiener_index(build_power_graph(build_cyclic(6))) == 17);
    CHECK(diameter(complete_graph(5)) == 1u);
    CHECK(diameter(complete_graph(1)) == 0u);
    CHECK(diameter(oracle::cycle_graph(7)) == 3u);
    for (const FamilyParams params : {FamilyParams{2, 3}, FamilyParams{2, 5}, FamilyParams{3, 3}})
        CHECK(diameter(build_power_graph(build_family(params))) == 2u);
}

namespace {

void check_distance_properties(const Graph& g)
{
    const auto n = g.size();
    const auto h = hosoya_polynomial(g);
    std::uint64_t sum = h.unreachable_pairs;
    std::uint64_t wiener = 0;
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        sum += h.counts[i];
        wiener += i * h.counts[i];
    }
    REQUIRE(sum == n + n * (n - 1) / 2);
    REQUIRE(h.at(1) == oracle::count_edges_by_pairs(g));
    REQUIRE(wiener == wiener_index(g));

    const auto fw = oracle::floyd_warshall(g);
    const auto bfs = all_pairs_distances(g);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            REQUIRE(bfs.at(a, b) == fw[a][b]);

    if (h.unreachable_pairs == 0 && n > 0) {
        REQUIRE(rs_hosoya_polynomial(g).coefficient_total() == g.edge_count());
        for (Vertex v = 0; v < n; ++v) {
            const auto rs = reciprocal_status(g, v);
            // every exponent is a sum of unit fractions 1/d; with d <= 2 the
            // denominator is 1 or 2
            if (diameter(g) <= 2u) {
                REQUIRE(rs == reciprocal_status_diameter_two(g, v));
                REQUIRE((denominator(rs) == 1 || denominator(rs) == 2));
            }
        }
    }
}

}  // namespace

TEST_CASE("property: random graphs")
{
    std::mt19937_64 rng{20240611};
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.9);
    for (int t = 0; t < 200; ++t)
        check_distance_properties(oracle::random_graph(size(rng), density(rng), rng));
}

TEST_CASE("property: cyclic and family power graphs")
{
    for (std::size_t n = 1; n <= 30; ++n) {
        CAPTURE(n);
        check_distance_properties(build_power_graph(build_cyclic(n)));
    }
    for (const auto& params : support::small_families()) {
        CAPTURE(params.k);
        CAPTURE(params.p);
        const auto g = build_power_graph(build_family(params));
        check_distance_properties(g);
        CHECK(diameter(g) == 2u);
    }
}

TEST_CASE("property: a dominating vertex forces diameter at most two")
{
    std::mt19937_64 rng{7};
    for (int t = 0; t < 50; ++t) {
        auto base = oracle::random_graph(9, 0.3, rng);
        auto edges = base.edges();
        for (Vertex v = 1; v < 9; ++v)
            edges.emplace_back(0, v);
        const Graph g{9, edges};
        CHECK(diameter(g) <= 2u);
        for (Vertex v = 0; v < 9; ++v)
            CHECK(reciprocal_status(g, v) == reciprocal_status_diameter_two(g, v));
    }
}
