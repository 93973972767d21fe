#include <cstdint>
#include <vector>

#include "doctest.h"
#include "totient/claims.hpp"

using namespace totient;

TEST_CASE("expected exception list") {
    CHECK(expected_exceptions_below_1000.size() == 17);
    CHECK(expected_exceptions_below_1000.front() == 101);
    CHECK(expected_exceptions_below_1000.back() == 983);
    for (auto p : expected_exceptions_below_1000) CHECK(is_prime(p));
}

TEST_CASE("exception list matcher rejects deviations") {
    std::vector<std::uint64_t> exact(expected_exceptions_below_1000.begin(),
                                     expected_exceptions_below_1000.end());
    CHECK(exception_list_matches(exact));

    auto missing = exact;
    missing.pop_back();
    CHECK_FALSE(exception_list_matches(missing));

    auto extra = exact;
    extra.push_back(991);
    CHECK_FALSE(exception_list_matches(extra));

    auto swapped = exact;
    std::swap(swapped[0], swapped[1]);
    CHECK_FALSE(exception_list_matches(swapped));

    auto altered = exact;
    altered[3] = 257;
    CHECK_FALSE(exception_list_matches(altered));
}
