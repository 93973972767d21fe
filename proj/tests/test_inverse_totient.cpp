#include <cstdint>
#include <vector>

#include "doctest.h"
#include "totient/inverse_totient.hpp"

using namespace totient;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("preimages fixed sets") {
    CHECK(preimages(Int(1)).solutions == ints({1, 2}));
    CHECK(preimages(Int(2)).solutions == ints({3, 4, 6}));
    CHECK(preimages(Int(3)).solutions.empty());
    CHECK(preimages(Int(4)).solutions == ints({5, 8, 10, 12}));
    CHECK(preimages(Int(6)).solutions == ints({7, 9, 14, 18}));
    CHECK(preimages(Int(8)).solutions == ints({15, 16, 20, 24, 30}));
}

TEST_CASE("preimages fixed counts") {
    CHECK(preimages(Int(100)).solutions.size() == 4);
    CHECK(preimages(Int(240)).solutions.size() == 31);
    CHECK(preimages(Int(1000)).solutions.size() == 11);
    CHECK(preimages(Int(4096)).solutions.size() == 14);
}

TEST_CASE("preimages domain and caps") {
    CHECK_THROWS_AS(preimages(Int(0)), DomainError);
    Caps caps = default_caps();
    caps.preimage_cap = 100;
    CHECK_THROWS_AS(preimages(Int(240), caps), CapExceeded);
    CHECK_NOTHROW(preimages(Int(100), caps));
}

TEST_CASE("odd n > 1 has no preimage") {
    for (std::uint64_t n = 3; n <= 999; n += 2)
        if (!preimages(Int(n)).solutions.empty()) REQUIRE(false);
}

TEST_CASE("preimages match brute force below 2n^2, n <= 300") {
    // phi(x) >= sqrt(x/2), so any preimage of n is <= 2n^2; the ceiling
    // makes the brute-force enumeration complete.
    for (std::uint64_t n = 1; n <= 300; ++n) {
        std::vector<Int> brute;
        for (std::uint64_t x = 1; x <= 2 * n * n; ++x)
            if (euler_phi(Int(x)) == n) brute.push_back(x);
        if (preimages(Int(n)).solutions != brute)
            REQUIRE(preimages(Int(n)).solutions == brute);
    }
}

TEST_CASE("preimages are sorted preimages") {
    for (std::uint64_t n : {2, 4, 8, 12, 48, 240, 1000}) {
        const auto set = preimages(Int(n));
        Int prev = 0;
        for (const Int& x : set.solutions) {
            CHECK(x > prev);
            prev = x;
            CHECK(euler_phi(x) == set.n);
        }
    }
}

TEST_CASE("exponent_bound") {
    // Recomputed from the definition: for n = 2 the primes <= 3 are
    // {2, 3} with least exponents a = 1 each, so the bound is 3 * 3.
    CHECK(exponent_bound(Int(2)) == 9);
    CHECK(exponent_bound(Int(4)) == 48);  // 4 * 4 * 3 over {2, 3, 5}
    CHECK_THROWS_AS(exponent_bound(Int(1)), DomainError);
}

TEST_CASE("subset_bound") {
    CHECK(subset_bound(Int(2)) == 3);
    CHECK(subset_bound(Int(4)) == 7);
    CHECK_THROWS_AS(subset_bound(Int(1)), DomainError);
}

TEST_CASE("both bounds dominate the count, n <= 200") {
    for (std::uint64_t n = 2; n <= 200; ++n) {
        const Int count(preimages(Int(n)).solutions.size());
        CHECK(count <= exponent_bound(Int(n)));
        CHECK(count <= subset_bound(Int(n)));
    }
}

TEST_CASE("solution_form fixed vectors") {
    const auto f12 = solution_form(Int(12), Int(4));
    REQUIRE(f12.epsilon.size() == 3);  // primes 2, 3, 5
    CHECK(f12.epsilon[0] == std::pair<std::uint64_t, bool>{2, true});
    CHECK(f12.epsilon[1] == std::pair<std::uint64_t, bool>{3, true});
    CHECK(f12.epsilon[2] == std::pair<std::uint64_t, bool>{5, false});

    const auto f2 = solution_form(Int(2), Int(1));
    REQUIRE(f2.epsilon.size() == 1);
    CHECK(f2.epsilon[0] == std::pair<std::uint64_t, bool>{2, true});

    const auto f5 = solution_form(Int(5), Int(4));
    CHECK(f5.epsilon[0].second == false);
    CHECK(f5.epsilon[1].second == false);
    CHECK(f5.epsilon[2] == std::pair<std::uint64_t, bool>{5, true});
}

TEST_CASE("solution_form rejects non-preimages") {
    CHECK_THROWS_AS(solution_form(Int(7), Int(4)), NotAPreimage);
    CHECK_THROWS_AS(solution_form(Int(3), Int(4)), NotAPreimage);
    CHECK_THROWS_AS(solution_form(Int(0), Int(4)), DomainError);
}

TEST_CASE("solution_form identity, n <= 150") {
    for (std::uint64_t n = 1; n <= 150; ++n) {
        for (const Int& x : preimages(Int(n)).solutions) {
            const auto form = solution_form(x, Int(n));
            Int lhs = x, rhs = Int(n);
            for (const auto& [p, eps] : form.epsilon) {
                CHECK(eps == (mpz_divisible_ui_p(x.get_mpz_t(), p) != 0));
                if (eps) {
                    lhs *= Int(p) - 1;
                    rhs *= p;
                }
            }
            if (lhs != rhs) REQUIRE(lhs == rhs);
        }
    }
}
