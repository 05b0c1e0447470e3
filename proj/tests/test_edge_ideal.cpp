#include <doctest.h>

#include <algorithm>

#include "pigraph/edge_ideal.hpp"

using namespace pigraph;

namespace {

edge_ideal_model ring_model(std::uint64_t n, std::uint64_t gen) {
    const ring_spec r({n});
    const prime_ideal p = make_prime_ideal(r, principal_ideal_members(r, {{gen}}));
    return edge_ideal(build_graph(r, p));
}

edge_ideal_model abstract_model(int a, int b) {
    return edge_ideal(abstract_split_graph(a, b));
}

bool has_generator(const monomial_ideal& ideal, const std::string& text) {
    const monomial m = monomial::parse(text, ideal.nx(), ideal.ny());
    return std::find(ideal.generators().begin(), ideal.generators().end(), m) !=
           ideal.generators().end();
}

// Stratum of an ideal's generators with fixed y-degree, as an ideal.
monomial_ideal stratum(const monomial_ideal& ideal, int ydeg) {
    std::vector<monomial> gens;
    for (const monomial& g : ideal.generators())
        if (g.y_degree() == ydeg) gens.push_back(g);
    return monomial_ideal::from_generators(ideal.nx(), ideal.ny(), std::move(gens));
}

} // namespace

TEST_CASE("edge ideal of the Z_6 star") {
    const edge_ideal_model m = ring_model(6, 3);
    CHECK(m.a == 1);
    CHECK(m.b == 4);
    REQUIRE(m.ideal.generator_count() == 4);
    for (int t = 1; t <= 4; ++t)
        CHECK(has_generator(m.ideal, "x1*y" + std::to_string(t)));
    CHECK(m.ideal.is_squarefree());
}

TEST_CASE("edge ideal of Z_8 has C(3,2) + 3*4 generators") {
    const edge_ideal_model m = ring_model(8, 2);
    CHECK(m.ideal.generator_count() == 15);
    CHECK(has_generator(m.ideal, "x1*x2"));
    CHECK(has_generator(m.ideal, "x3*y4"));
    CHECK(m.ideal.equigenerated_degree() == 2);
}

TEST_CASE("edgeless graphs give the zero ideal") {
    const edge_ideal_model m = abstract_model(0, 4);
    CHECK(m.ideal.is_zero());
    CHECK(m.ideal.ny() == 4);
}

TEST_CASE("closed-form generator membership at (3,4,2)") {
    const monomial_ideal g2 = closed_form_generators(3, 4, 2);
    CHECK(has_generator(g2, "x1^2*x2*x3"));
    CHECK(has_generator(g2, "x1^2*y1*y2"));
    CHECK(has_generator(g2, "x1*x2*y1*y4"));
    CHECK_FALSE(has_generator(g2, "x1^3*y1"));
    CHECK_FALSE(is_minimal_power_generator(monomial::parse("x1^3*y1", 3, 4), 2));
    CHECK(g2.generator_count() == 94);
    CHECK(equals(g2, power(abstract_model(3, 4).ideal, 2)));
}

TEST_CASE("closed-form star powers") {
    const monomial_ideal sq = closed_form_generators(1, 4, 2);
    CHECK(sq.generator_count() == 10);
    for (const monomial& g : sq.generators()) {
        CHECK(g.x_exponent(0) == 2);
        CHECK(g.y_degree() == 2);
    }

    const monomial_ideal cubes = closed_form_generators(1, 2, 3);
    REQUIRE(cubes.generator_count() == 4);
    for (int i = 0; i <= 3; ++i) {
        std::string text = "x1^3";
        if (i > 0) {
            text += "*y1";
            if (i >= 2) text += "^" + std::to_string(i);
        }
        if (i < 3) {
            text += "*y2";
            if (3 - i >= 2) text += "^" + std::to_string(3 - i);
        }
        CHECK(has_generator(cubes, text));
    }
    CHECK(equals(cubes, power(abstract_model(1, 2).ideal, 3)));
}

TEST_CASE("closed form equals the power oracle on a small grid") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const edge_ideal_model m = abstract_model(a, b);
            monomial_ideal oracle = monomial_ideal::unit_ideal(a, b);
            for (int n = 1; n <= 3; ++n) {
                oracle = product(oracle, m.ideal);
                const monomial_ideal closed = closed_form_generators(a, b, n);
                CHECK(equals(closed, oracle));
                CHECK(count_generators(a, b, n) ==
                      bignum(static_cast<unsigned long>(closed.generator_count())));
            }
        }
}

TEST_CASE("count_generators reproduces the published table") {
    const std::array<unsigned long, 3> z6 = {4, 10, 20};
    const std::array<unsigned long, 3> z8 = {15, 94, 378};
    for (int n = 1; n <= 3; ++n) {
        CHECK(count_generators(1, 4, n) == bignum(z6[n - 1]));
        CHECK(count_generators(3, 4, n) == bignum(z8[n - 1]));
    }
    CHECK(count_generators(2, 6, 1) == 13);
    CHECK(count_generators(0, 5, 2) == 0);
}

TEST_CASE("a = 1 counting reduces to stars and bars") {
    for (int b = 1; b <= 8; ++b)
        for (int n = 1; n <= 6; ++n)
            CHECK(count_generators(1, b, n) == star_count(b, n));
}

TEST_CASE("star_count examples") {
    CHECK(star_count(4, 2) == 10);
    for (int n = 1; n <= 6; ++n) {
        CHECK(star_count(2, n) == n + 1);
        CHECK(star_count(1, n) == 1);
        CHECK(power(abstract_model(1, 2).ideal, n).generator_count() ==
              static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("complete-graph power generators follow the degree bound") {
    const monomial_ideal k3sq = complete_graph_power_generators(3, 2);
    CHECK(k3sq.generator_count() == 6);
    std::vector<monomial> tri;
    for (const char* s : {"x1*x2", "x1*x3", "x2*x3"})
        tri.push_back(monomial::parse(s, 3, 0));
    CHECK(equals(k3sq, power(monomial_ideal::from_generators(3, 0, std::move(tri)), 2)));

    CHECK(complete_graph_power_generators(4, 0).is_unit());

    const monomial_ideal k2cube = complete_graph_power_generators(2, 3);
    REQUIRE(k2cube.generator_count() == 1);
    CHECK(has_generator(k2cube, "x1^3*x2^3"));
}

TEST_CASE("cross power generators are the balanced bidegrees") {
    const monomial_ideal s1 = cross_power_generators(1, 4, 1);
    REQUIRE(s1.generator_count() == 4);
    for (int t = 1; t <= 4; ++t) CHECK(has_generator(s1, "x1*y" + std::to_string(t)));

    CHECK(cross_power_generators(2, 2, 2).generator_count() == 9);
    CHECK(cross_power_generators(3, 2, 0).is_unit());

    // oracle: ((x1,x2)(y1,y2))^2 computed by the engine
    std::vector<monomial> cross;
    for (int i = 1; i <= 2; ++i)
        for (int t = 1; t <= 2; ++t)
            cross.push_back(
                monomial::parse("x" + std::to_string(i) + "*y" + std::to_string(t), 2, 2));
    CHECK(equals(cross_power_generators(2, 2, 2),
                 power(monomial_ideal::from_generators(2, 2, std::move(cross)), 2)));
}

TEST_CASE("closed-form strata reproduce the clique and cross power sets") {
    for (int a = 2; a <= 4; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int n = 1; n <= 3; ++n) {
                const monomial_ideal closed = closed_form_generators(a, b, n);
                CHECK(equals(stratum(closed, 0),
                             complete_graph_power_generators(a, n, b)));
                CHECK(equals(stratum(closed, n), cross_power_generators(a, b, n)));
            }
}

TEST_CASE("generator pattern invariants") {
    const monomial good = monomial::parse("x1^2*x2*y1", 2, 1);
    CHECK(generator_pattern::of(good, 2).valid());
    CHECK(is_minimal_power_generator(good, 2));
    CHECK_FALSE(generator_pattern::of(good, 3).valid());
    const monomial heavy_y = monomial::parse("x1*y1^3", 2, 1);
    CHECK_FALSE(generator_pattern::of(heavy_y, 2).valid());
}

TEST_CASE("minimal primes of the decomposition") {
    const primary_decomposition star = minimal_primes(1, 4);
    REQUIRE(star.components.size() == 2);
    CHECK(star.components[0].labels() == std::vector<std::string>{"x1"});
    CHECK(star.components[1].labels() ==
          std::vector<std::string>{"y1", "y2", "y3", "y4"});

    const primary_decomposition z8 = minimal_primes(3, 4);
    REQUIRE(z8.components.size() == 4);
    CHECK(z8.components[0].labels() == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(z8.components[1].labels() ==
          std::vector<std::string>{"x2", "x3", "y1", "y2", "y3", "y4"});
    CHECK(z8.components[2].labels() ==
          std::vector<std::string>{"x1", "x3", "y1", "y2", "y3", "y4"});
    CHECK(z8.components[3].labels() ==
          std::vector<std::string>{"x1", "x2", "y1", "y2", "y3", "y4"});

    const primary_decomposition ab = minimal_primes(2, 2);
    REQUIRE(ab.components.size() == 3);
    CHECK(ab.components[0].size() == 2);
    CHECK(ab.components[1].size() == 3);
    CHECK(ab.components[2].size() == 3);
    CHECK(equals(intersect_components(ab, 2, 2), abstract_model(2, 2).ideal));

    CHECK_THROWS_AS(minimal_primes(0, 4), std::invalid_argument);
}

TEST_CASE("primary decomposition verifies and is irredundant") {
    CHECK(verify_primary_decomposition(ring_model(6, 3)));
    CHECK(verify_primary_decomposition(ring_model(8, 2)));

    // dropping p_0 strictly enlarges the intersection
    const edge_ideal_model m = ring_model(6, 3);
    primary_decomposition partial = minimal_primes(m.a, m.b);
    partial.components.erase(partial.components.begin());
    CHECK_FALSE(equals(intersect_components(partial, m.a, m.b), m.ideal));
}

TEST_CASE("height, dimension, and unmixedness") {
    const height_info z8 = height_and_dim(3, 4);
    CHECK(z8.height == 3);
    CHECK(z8.dim == 4);
    CHECK_FALSE(z8.unmixed);

    const height_info complete = height_and_dim(2, 1);  // abstract only
    CHECK(complete.height == 2);
    CHECK(complete.dim == 1);
    CHECK(complete.unmixed);

    const height_info star = height_and_dim(1, 4);
    CHECK(star.height == 1);
    CHECK(star.dim == 4);
    CHECK_FALSE(star.unmixed);

    CHECK_THROWS_AS(height_and_dim(0, 4), std::invalid_argument);
}

TEST_CASE("component sizes give the height law") {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            const primary_decomposition dec = minimal_primes(a, b);
            std::size_t min_size = dec.components[0].size();
            for (const prime_component& c : dec.components)
                min_size = std::min(min_size, c.size());
            CHECK(min_size == static_cast<std::size_t>(a));
            for (std::size_t k = 1; k < dec.components.size(); ++k)
                CHECK(dec.components[k].size() == static_cast<std::size_t>(a + b - 1));
        }
}

TEST_CASE("Z_{p^m} edge counts") {
    CHECK(zpm_mu(2, 3) == 15);
    CHECK(zpm_mu(3, 2) == 13);
    CHECK(zpm_mu(3, 2) == count_generators(2, 6, 1));
    CHECK(zpm_mu(2, 2) == 2);
    CHECK(zpm_mu(2, 2) == count_generators(1, 2, 1));
    CHECK_THROWS_AS(zpm_mu(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(zpm_mu(2, 1), std::invalid_argument);
    // stays exact far beyond 64 bits
    CHECK(to_string(zpm_mu(2, 40)).size() >= 23);
}

TEST_CASE("closed form respects the enumeration cap") {
    CHECK_THROWS_AS(closed_form_generators(4, 5, 4, 1000), std::runtime_error);
}
