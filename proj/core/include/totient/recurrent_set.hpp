#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "totient/arithmetic.hpp"

namespace totient {

/// Admission rule for a recursively built prime set: seeds enter outright;
/// a later prime p enters iff p-1 factors as
///     2^m * (distinct odd members, each once)            [v3]
///     2^a * 3^b * (distinct members > 3, each once)      [v4]
/// with the exponents boxed as below. In v4 the powers of 2 and 3 are
/// structural slots; in v3 the prime 3 is an ordinary odd ingredient.
struct RuleVariant {
    std::string_view name;  // "v3" or "v4"
    std::vector<std::uint64_t> seeds;
    unsigned min_exp2, max_exp2;
    unsigned max_exp3;
    bool structural_three;

    static const RuleVariant& v3();  // seeds {2,3,5}, m in [1,2]
    static const RuleVariant& v4();  // seeds {2,3},   a <= 41, b <= 46
};

enum class CertKind { seed, rule };

/// Why p is in the set: either a seed, or the checked decomposition of
/// p-1 (exp3 and the separation of 3 apply to v4 only; under v3 the
/// prime 3, when present, appears among the ingredients).
struct MembershipCertificate {
    std::uint64_t p = 0;
    CertKind kind = CertKind::rule;
    unsigned exp2 = 0;
    unsigned exp3 = 0;
    std::vector<std::uint64_t> ingredients;  // ascending odd members of the set
};

enum class RejectClause {
    exp2_out_of_range,
    exp3_out_of_range,
    repeated_odd_prime,
    missing_ingredient,
};

/// First violated clause when scanning the factorization of p-1 in
/// ascending prime order; offender is the exponent for the range clauses
/// and the prime itself otherwise.
struct Rejection {
    std::uint64_t p = 0;
    RejectClause clause = RejectClause::missing_ingredient;
    std::uint64_t offender = 0;
    std::string reason;
};

struct SetMember {
    std::uint64_t p;
    MembershipCertificate cert;
};

struct RecurrentSet {
    const RuleVariant* variant;
    std::uint64_t bound;
    std::vector<SetMember> members;     // ascending
    std::vector<Rejection> exceptions;  // ascending, primes < bound only
    bool contains(std::uint64_t p) const;
};

/// Single ascending pass over primes < bound. Every ingredient of p is
/// < p, so one pass already reaches the least fixpoint; a second pass
/// admits nothing new (checked by membership_certificate below).
RecurrentSet build_set(const RuleVariant& variant, std::uint64_t bound,
                       const Caps& caps = default_caps());

/// Re-evaluates one prime against an already built set.
std::variant<MembershipCertificate, Rejection> membership_certificate(const RuleVariant& variant,
                                                                      std::uint64_t p,
                                                                      const RecurrentSet& context);

/// The v4 rejections below bound, ascending.
std::vector<Rejection> exceptions_report(std::uint64_t bound, const Caps& caps = default_caps());

/// One line per member: p, SEED|RULE_B, decomposition of p-1 ("-" for
/// seeds, else e.g. "2^2*3^2" or "2^1*3*7").
std::string to_tsv(const RecurrentSet& set);

std::string to_json(const RecurrentSet& set);

}  // namespace totient
