#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "totient/arithmetic.hpp"

namespace totient {

enum class LedgerSource { lemma3, extended, generalized };

/// Divisibility constraints on a hypothetical x0 whose phi value had no
/// second preimage: x0 must be divisible by each p^e listed. conditional
/// marks ledgers valid only on a case branch (here: 8 | x0). digits is
/// the decimal length of the product, kept instead of the product itself
/// once it stops fitting on a line.
struct ConstraintLedger {
    LedgerSource source = LedgerSource::lemma3;
    bool conditional = false;
    std::vector<std::pair<Int, unsigned>> required;  // ascending primes
    std::optional<Int> chain_stop;  // composite 1 + prod that ended the ladder

    Int product() const;
    unsigned digits() const;
};

/// Best published lower bound of this flavor: 10^10000 (tracked as an
/// exponent; never folded into a ledger product).
inline constexpr unsigned external_bound_log10 = 10000;

/// Earlier lower bounds on a conjecture-violating x0, for scale.
struct HistoricalBounds {
    static const Int& grosswald();       // 32
    static const Int& donnelly();        // 2^14
    static const Factorization& klee();  // 2^42 * 3^47
    static constexpr unsigned masai_valette_log10 = external_bound_log10;
};

/// The self-feeding ladder: force p^2 | x0, form 1 + prod of forced
/// primes, and repeat while that candidate is prime. Starting from the
/// empty set it forces 2, 3, 7, 43 and stops at 1 + 2*3*7*43 = 1807 =
/// 13*139. Each step's two witnesses (presence, then square) are
/// re-verified via phi during construction.
ConstraintLedger forced_divisor_ladder();

/// On the branch 8 | x0 the same two-witness argument forces 5^2 as
/// well. Conditional; idempotent when (5,2) is already present.
ConstraintLedger extended_ladder_step(const ConstraintLedger& base);

/// Ledger from the v4 recurrent set below bound: 2^42, 3^47, and p^2 for
/// every other member. Witnesses are validated per admitted prime on the
/// growing product.
ConstraintLedger generalized_constraint(std::uint64_t bound, const Caps& caps = default_caps());

std::string to_json(const ConstraintLedger& ledger);

}  // namespace totient
