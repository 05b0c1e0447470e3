#include <doctest.h>

#include "pigraph/counting.hpp"

using namespace pigraph;

TEST_CASE("binomial handles the zero conventions") {
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 7) == 1);
}

TEST_CASE("binomial matches Pascal's rule on a small grid") {
    for (long long n = 1; n <= 20; ++n)
        for (long long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial stays exact well past 64 bits") {
    CHECK(to_string(binomial(2052, 6)) == "102932882501944320");
    CHECK(to_string(binomial(2050, 2047)) == "1433753600");
    // C(200, 100) has 59 digits; spot check length and leading digits.
    const std::string big = to_string(binomial(200, 100));
    CHECK(big.size() == 59);
    CHECK(big.substr(0, 5) == "90548");
}

TEST_CASE("bignum to_string round trips through the constructor") {
    bignum v("123456789012345678901234567890");
    CHECK(to_string(v) == "123456789012345678901234567890");
}
