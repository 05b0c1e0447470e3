#include <doctest.h>

#include <algorithm>

#include "pigraph/edge_ideal.hpp"
#include "pigraph/polymatroid.hpp"

using namespace pigraph;

namespace {

monomial_ideal two_squares() {
    return monomial_ideal::from_generators(
        2, 0, {monomial::parse("x1^2", 2, 0), monomial::parse("x2^2", 2, 0)});
}

// Re-verifies a reported counterexample straight from the definition.
bool confirmed_failure(const monomial_ideal& ideal, const exchange_counterexample& ce) {
    if (ce.u.exponent(ce.position) <= ce.v.exponent(ce.position)) return false;
    for (int q = 0; q < ce.u.width(); ++q) {
        if (ce.u.exponent(q) >= ce.v.exponent(q)) continue;
        std::vector<int> row = ce.u.exponents();
        row[ce.position] -= 1;
        row[q] += 1;
        const monomial w = make_monomial_from_row(std::move(row), ce.u.nx());
        if (std::find(ideal.generators().begin(), ideal.generators().end(), w) !=
            ideal.generators().end())
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("powers of split-graph edge ideals satisfy the exchange property") {
    const exchange_report z8 = is_polymatroidal(closed_form_generators(3, 4, 2));
    CHECK(z8.holds);
    CHECK_FALSE(z8.counterexample.has_value());

    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int n = 1; n <= 2; ++n)
                CHECK(is_polymatroidal(closed_form_generators(a, b, n)).holds);
}

TEST_CASE("(x1^2, x2^2) fails the exchange property with a confirmed witness") {
    const monomial_ideal ideal = two_squares();
    const exchange_report r = is_polymatroidal(ideal);
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->u == monomial::parse("x1^2", 2, 0));
    CHECK(r.counterexample->v == monomial::parse("x2^2", 2, 0));
    CHECK(r.counterexample->position == 0);
    CHECK(confirmed_failure(ideal, *r.counterexample));
}

TEST_CASE("a principal ideal is vacuously polymatroidal") {
    const monomial_ideal ideal =
        monomial_ideal::from_generators(2, 0, {monomial::parse("x1*x2", 2, 0)});
    CHECK(is_polymatroidal(ideal).holds);
}

TEST_CASE("exchange check rejects bad inputs") {
    CHECK_THROWS_AS(is_polymatroidal(monomial_ideal(2, 0)), std::invalid_argument);
    const monomial_ideal mixed = monomial_ideal::from_generators(
        2, 0, {monomial::parse("x1", 2, 0), monomial::parse("x2^2", 2, 0)});
    CHECK_THROWS_AS(is_polymatroidal(mixed), std::invalid_argument);
    CHECK_THROWS_AS(is_polymatroidal(closed_form_generators(3, 4, 2), 10),
                    std::runtime_error);
}

TEST_CASE("linear quotients of the star are nested variable ideals") {
    std::vector<monomial> star;
    for (int t = 1; t <= 4; ++t)
        star.push_back(monomial::parse("x1*y" + std::to_string(t), 1, 4));
    const monomial_ideal ideal = monomial_ideal::from_generators(1, 4, std::move(star));

    const linear_quotients_outcome out = linear_quotients(ideal);
    REQUIRE(out.ok());
    CHECK(out.certificate->colon_variable_counts == std::vector<int>{0, 1, 2, 3});
    CHECK(to_string(out.certificate->order[0]) == "x1*y1");
    CHECK(to_string(out.certificate->order[3]) == "x1*y4");
}

TEST_CASE("single generator certificate is trivial") {
    const monomial_ideal ideal =
        monomial_ideal::from_generators(2, 0, {monomial::parse("x1*x2", 2, 0)});
    const linear_quotients_outcome out = linear_quotients(ideal);
    REQUIRE(out.ok());
    CHECK(out.certificate->colon_variable_counts == std::vector<int>{0});

    const auto betti = betti_from_certificate(*out.certificate, 2);
    REQUIRE(betti.size() == 1);
    CHECK(betti[0].beta == 1);
    CHECK(betti[0].shift == 2);
}

TEST_CASE("the 15-generator Z_8 edge ideal has linear quotients") {
    const monomial_ideal ideal = closed_form_generators(3, 4, 1);
    REQUIRE(ideal.generator_count() == 15);
    const linear_quotients_outcome out = linear_quotients(ideal);
    REQUIRE(out.ok());
    REQUIRE(out.certificate->colon_variable_counts.size() == 15);
    CHECK(out.certificate->colon_variable_counts[0] == 0);
    for (int r : out.certificate->colon_variable_counts) CHECK(r <= 6);
}

TEST_CASE("linear quotients over the small grid, with matching Betti start") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int n = 1; n <= 2; ++n) {
                const monomial_ideal ideal = closed_form_generators(a, b, n);
                const linear_quotients_outcome out = linear_quotients(ideal);
                REQUIRE(out.ok());
                const auto betti = betti_from_certificate(*out.certificate, 2 * n);
                REQUIRE_FALSE(betti.empty());
                CHECK(betti.front().beta == count_generators(a, b, n));
                // every colon generator has degree one: r_j counts them
                CHECK(out.certificate->colon_variable_counts[0] == 0);
            }
}

TEST_CASE("(x1^2, x2^2) has no linear quotients in the fixed order") {
    const linear_quotients_outcome out = linear_quotients(two_squares());
    CHECK_FALSE(out.ok());
    CHECK(out.failed_index == 1);
}

TEST_CASE("Betti numbers of the star certificate") {
    std::vector<monomial> star;
    for (int t = 1; t <= 4; ++t)
        star.push_back(monomial::parse("x1*y" + std::to_string(t), 1, 4));
    const monomial_ideal ideal = monomial_ideal::from_generators(1, 4, std::move(star));
    const auto betti =
        betti_from_certificate(*linear_quotients(ideal).certificate, 2);

    REQUIRE(betti.size() == 4);
    const std::vector<unsigned long> expected = {4, 6, 4, 1};
    for (std::size_t i = 0; i < betti.size(); ++i) {
        CHECK(betti[i].i == static_cast<int>(i));
        CHECK(betti[i].shift == static_cast<int>(2 + i));
        CHECK(betti[i].beta == bignum(expected[i]));
    }
}

TEST_CASE("top Betti number counts the maximal colon sizes") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 2; b <= 3; ++b) {
            const monomial_ideal ideal = closed_form_generators(a, b, 2);
            const auto cert = *linear_quotients(ideal).certificate;
            const auto betti = betti_from_certificate(cert, 4);
            int max_r = 0;
            for (int r : cert.colon_variable_counts) max_r = std::max(max_r, r);
            const long expected = std::count(cert.colon_variable_counts.begin(),
                                             cert.colon_variable_counts.end(), max_r);
            CHECK(betti.back().beta == bignum(static_cast<unsigned long>(expected)));
            for (const betti_entry& e : betti) CHECK(e.beta >= 0);
        }
}

TEST_CASE("Z_6 square certificate starts at beta_0 = 10") {
    const monomial_ideal ideal = closed_form_generators(1, 4, 2);
    const auto betti =
        betti_from_certificate(*linear_quotients(ideal).certificate, 4);
    CHECK(betti.front().beta == 10);
    CHECK(betti.front().shift == 4);
}

TEST_CASE("regularity reports certify 2n") {
    const regularity_result z8 = regularity_report(3, 4, 2);
    CHECK(z8.reg == 4);
    CHECK(z8.certified);

    const regularity_result star = regularity_report(1, 4, 1);
    CHECK(star.reg == 2);
    CHECK(star.certified);

    const regularity_result deep = regularity_report(2, 3, 3);
    CHECK(deep.reg == 6);
    CHECK(deep.certified);

    CHECK_THROWS_AS(regularity_report(0, 4, 1), std::invalid_argument);
}
