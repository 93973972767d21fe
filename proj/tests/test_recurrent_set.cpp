#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "totient/recurrent_set.hpp"

using namespace totient;

namespace {

std::vector<std::uint64_t> member_primes(const RecurrentSet& set) {
    std::vector<std::uint64_t> out;
    for (const auto& [p, cert] : set.members) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("v3 below 62") {
    const auto set = build_set(RuleVariant::v3(), 62);
    // The documented members plus 59 (58 = 2 * 29 with 29 already in).
    CHECK(member_primes(set) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 23, 29, 31, 43,
                                                           47, 53, 59, 61});
    CHECK_FALSE(set.contains(17));
    CHECK_FALSE(set.contains(19));
    CHECK_FALSE(set.contains(37));
    CHECK_FALSE(set.contains(41));
}

TEST_CASE("v3 rejection reasons") {
    const auto set = build_set(RuleVariant::v3(), 62);
    std::map<std::uint64_t, Rejection> by_p;
    for (const auto& r : set.exceptions) by_p[r.p] = r;
    REQUIRE(by_p.size() == 4);
    CHECK(by_p[17].clause == RejectClause::exp2_out_of_range);  // 16 = 2^4
    CHECK(by_p[17].offender == 4);
    CHECK(by_p[17].reason == "exponent of 2 is 4, outside [1, 2]");
    CHECK(by_p[19].clause == RejectClause::repeated_odd_prime);  // 18 = 2 * 3^2
    CHECK(by_p[19].offender == 3);
    CHECK(by_p[37].clause == RejectClause::repeated_odd_prime);  // 36 = 2^2 * 3^2
    CHECK(by_p[41].clause == RejectClause::exp2_out_of_range);  // 40 = 2^3 * 5
    CHECK(by_p[41].offender == 3);
}

TEST_CASE("v3 certificate for 43") {
    const auto set = build_set(RuleVariant::v3(), 62);
    const auto verdict = membership_certificate(RuleVariant::v3(), 43, set);
    REQUIRE(std::holds_alternative<MembershipCertificate>(verdict));
    const auto& cert = std::get<MembershipCertificate>(verdict);
    CHECK(cert.kind == CertKind::rule);
    CHECK(cert.exp2 == 1);  // 42 = 2 * 3 * 7
    CHECK(cert.exp3 == 0);  // 3 counts as an ordinary odd ingredient here
    CHECK(cert.ingredients == std::vector<std::uint64_t>{3, 7});
}

TEST_CASE("v4 below 1000: members and exceptions") {
    const auto set = build_set(RuleVariant::v4(), 1000);
    CHECK(set.members.size() == 151);
    REQUIRE(set.exceptions.size() == 17);
    const std::vector<std::uint64_t> expected = {101, 151, 197, 251, 401, 491, 503, 601, 607,
                                                 677, 701, 727, 751, 809, 883, 907, 983};
    std::vector<std::uint64_t> got;
    for (const auto& r : set.exceptions) got.push_back(r.p);
    CHECK(got == expected);
}

TEST_CASE("v4 exception reasons") {
    const auto set = build_set(RuleVariant::v4(), 1000);
    std::map<std::uint64_t, std::string> reason;
    for (const auto& r : set.exceptions) reason[r.p] = r.reason;
    CHECK(reason[101] == "repeated odd prime 5");    // 100 = 2^2 * 5^2
    CHECK(reason[197] == "repeated odd prime 7");    // 196 = 2^2 * 7^2
    CHECK(reason[503] == "ingredient 251 not in set");  // 502 = 2 * 251
    CHECK(reason[607] == "ingredient 101 not in set");  // 606 = 2 * 3 * 101
    CHECK(reason[677] == "repeated odd prime 13");   // 676 = 2^2 * 13^2
    CHECK(reason[727] == "repeated odd prime 11");   // 726 = 2 * 3 * 11^2
    CHECK(reason[907] == "ingredient 151 not in set");  // 906 = 2 * 3 * 151
    CHECK(reason[983] == "ingredient 491 not in set");  // 982 = 2 * 491
}

TEST_CASE("v4 certificates") {
    const auto set = build_set(RuleVariant::v4(), 1000);
    const auto cert_of = [&](std::uint64_t p) {
        const auto verdict = membership_certificate(RuleVariant::v4(), p, set);
        REQUIRE(std::holds_alternative<MembershipCertificate>(verdict));
        return std::get<MembershipCertificate>(verdict);
    };
    const auto c5 = cert_of(5);
    CHECK(c5.exp2 == 2);
    CHECK(c5.exp3 == 0);
    CHECK(c5.ingredients.empty());
    const auto c7 = cert_of(7);
    CHECK(c7.exp2 == 1);
    CHECK(c7.exp3 == 1);
    const auto c37 = cert_of(37);
    CHECK(c37.exp2 == 2);
    CHECK(c37.exp3 == 2);
    CHECK(c37.ingredients.empty());
    const auto c2 = cert_of(2);
    CHECK(c2.kind == CertKind::seed);
}

TEST_CASE("membership_certificate guards its domain") {
    const auto set = build_set(RuleVariant::v4(), 100);
    CHECK_THROWS_AS(membership_certificate(RuleVariant::v4(), 15, set), DomainError);
    CHECK_THROWS_AS(membership_certificate(RuleVariant::v3(), 7, set), DomainError);
}

TEST_CASE("exceptions_report") {
    CHECK(exceptions_report(1000).size() == 17);
    CHECK(exceptions_report(100).empty());
    const auto at102 = exceptions_report(102);
    REQUIRE(at102.size() == 1);
    CHECK(at102[0].p == 101);
    CHECK(at102[0].reason == "repeated odd prime 5");
}

TEST_CASE("certificates reassemble to p - 1") {
    const auto set = build_set(RuleVariant::v4(), 1000);
    for (const auto& [p, cert] : set.members) {
        if (cert.kind == CertKind::seed) continue;
        Int back = 1;
        for (unsigned i = 0; i < cert.exp2; ++i) back *= 2;
        for (unsigned i = 0; i < cert.exp3; ++i) back *= 3;
        std::uint64_t prev = 0;
        for (std::uint64_t q : cert.ingredients) {
            CHECK(q > prev);  // ascending, so duplicate-free
            prev = q;
            CHECK(set.contains(q));
            CHECK(q < p);
            back *= q;
        }
        if (back != p - 1) REQUIRE(back == p - 1);
    }
}

TEST_CASE("members and exceptions partition the primes") {
    const auto set = build_set(RuleVariant::v4(), 1000);
    std::vector<std::uint64_t> merged;
    for (const auto& [p, cert] : set.members) merged.push_back(p);
    for (const auto& r : set.exceptions) merged.push_back(r.p);
    std::sort(merged.begin(), merged.end());
    CHECK(merged == primes_below(1000));
}

TEST_CASE("second pass is a no-op at 10^4") {
    const auto set = build_set(RuleVariant::v4(), 10'000);
    for (const auto& [p, cert] : set.members)
        if (!std::holds_alternative<MembershipCertificate>(
                membership_certificate(RuleVariant::v4(), p, set)))
            REQUIRE(false);
    for (const auto& r : set.exceptions)
        if (!std::holds_alternative<Rejection>(
                membership_certificate(RuleVariant::v4(), r.p, set)))
            REQUIRE(false);
}

TEST_CASE("membership is monotone in the bound") {
    const auto small = build_set(RuleVariant::v4(), 500);
    const auto large = build_set(RuleVariant::v4(), 1000);
    const auto sp = member_primes(small), lp = member_primes(large);
    REQUIRE(sp.size() <= lp.size());
    CHECK(std::equal(sp.begin(), sp.end(), lp.begin()));
}

TEST_CASE("v3 members are v4 members") {
    const auto v3set = build_set(RuleVariant::v3(), 1000);
    const auto v4set = build_set(RuleVariant::v4(), 1000);
    CHECK(v3set.members.size() == 58);
    for (const auto& [p, cert] : v3set.members)
        if (!v4set.contains(p)) REQUIRE(v4set.contains(p));
}

TEST_CASE("build_set domain") {
    CHECK_THROWS_AS(build_set(RuleVariant::v4(), 2), DomainError);
    Caps caps = default_caps();
    caps.sieve_cap = 100;
    CHECK_THROWS_AS(build_set(RuleVariant::v4(), 101, caps), CapExceeded);
}

TEST_CASE("tsv dump") {
    const auto v3set = build_set(RuleVariant::v3(), 62);
    const std::string tsv = to_tsv(v3set);
    CHECK(tsv.find("2\tSEED\t-\n") == 0);
    CHECK(tsv.find("7\tRULE_B\t2^1*3\n") != std::string::npos);
    CHECK(tsv.find("43\tRULE_B\t2^1*3*7\n") != std::string::npos);

    const auto v4set = build_set(RuleVariant::v4(), 100);
    const std::string tsv4 = to_tsv(v4set);
    CHECK(tsv4.find("5\tRULE_B\t2^2\n") != std::string::npos);
    CHECK(tsv4.find("7\tRULE_B\t2^1*3^1\n") != std::string::npos);
    CHECK(tsv4.find("37\tRULE_B\t2^2*3^2\n") != std::string::npos);
    CHECK(tsv4.find("23\tRULE_B\t2^1*11\n") != std::string::npos);
}

TEST_CASE("json dump") {
    const auto set = build_set(RuleVariant::v4(), 102);
    const auto j = nlohmann::json::parse(to_json(set));
    CHECK(j["variant"] == "v4");
    CHECK(j["bound"] == 102);
    CHECK(j["members"].size() == set.members.size());
    CHECK(j["members"][0]["kind"] == "SEED");
    REQUIRE(j["exceptions"].size() == 1);
    CHECK(j["exceptions"][0]["p"] == 101);
    CHECK(j["exceptions"][0]["clause"] == "repeated_odd_prime");
    CHECK(j["exceptions"][0]["offender"] == 5);
}
