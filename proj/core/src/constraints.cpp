#include "totient/constraints.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "totient/recurrent_set.hpp"

namespace totient {
namespace {

// Exponent maps stand in for the synthetic witnesses x0, y0: the ladder
// arguments only ever multiply and exactly divide known factorizations,
// so phi can be evaluated without refactoring anything.
using FactorMap = std::map<Int, unsigned>;

Int phi_of(const FactorMap& f) {
    Int result = 1;
    for (const auto& [p, e] : f) {
        result *= p - 1;
        for (unsigned i = 1; i < e; ++i) result *= p;
    }
    return result;
}

Int value_of(const FactorMap& f) {
    Int result = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) result *= p;
    return result;
}

void multiply_in(FactorMap& f, const FactorMap& g) {
    for (const auto& [p, e] : g) f[p] += e;
}

void divide_out(FactorMap& f, const FactorMap& g) {
    for (const auto& [p, e] : g) {
        auto it = f.find(p);
        if (it == f.end() || it->second < e)
            throw Error("constraint witness: division not exact");
        it->second -= e;
        if (it->second == 0) f.erase(it);
    }
}

// The two proof-by-contradiction steps for prime p against the forced
// product so far (as a factor map): were p absent, y0 = p*x0/(p-1) would
// be a second preimage, so p | x0; were p^2 absent, y0 = (p-1)*x0/p
// would be, so p^2 | x0. Both alternates must check out under phi.
void validate_step(const FactorMap& forced, const Int& p, const FactorMap& p_minus_1) {
    FactorMap x0 = forced;  // p absent by construction
    FactorMap y0 = forced;
    divide_out(y0, p_minus_1);
    multiply_in(y0, {{p, 1}});
    if (phi_of(x0) != phi_of(y0)) throw Error("constraint presence step: phi mismatch");

    multiply_in(x0, {{p, 1}});  // now p present to the first power only
    y0 = x0;
    divide_out(y0, {{p, 1}});
    multiply_in(y0, p_minus_1);
    if (phi_of(x0) != phi_of(y0)) throw Error("constraint square step: phi mismatch");
}

FactorMap factor_map(const Int& n, const Caps& caps) {
    FactorMap out;
    for (const auto& [p, e] : factorize(n, caps).factors) out[p] = e;
    return out;
}

}  // namespace

Int ConstraintLedger::product() const {
    Int result = 1;
    for (const auto& [p, e] : required) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        result *= pe;
    }
    return result;
}

unsigned ConstraintLedger::digits() const {
    return static_cast<unsigned>(product().get_str().size());
}

const Int& HistoricalBounds::grosswald() {
    static const Int v = 32;
    return v;
}

const Int& HistoricalBounds::donnelly() {
    static const Int v = Int(1) << 14;
    return v;
}

const Factorization& HistoricalBounds::klee() {
    static const Factorization f = [] {
        Factorization out;
        out.factors = {{Int(2), 42}, {Int(3), 47}};
        Int p2, p3;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, 42);
        mpz_ui_pow_ui(p3.get_mpz_t(), 3, 47);
        out.value = p2 * p3;
        return out;
    }();
    return f;
}

ConstraintLedger forced_divisor_ladder() {
    ConstraintLedger ledger;
    ledger.source = LedgerSource::lemma3;
    FactorMap forced_squares;  // p -> 2 for every forced prime
    Int chain_product = 1;     // prod of forced primes, first powers
    while (true) {
        const Int candidate = 1 + chain_product;
        if (!is_prime(candidate)) {
            ledger.chain_stop = candidate;
            break;
        }
        // candidate - 1 = chain_product factors exactly over the forced
        // primes, so both witness divisions below are exact.
        FactorMap p_minus_1;
        for (const auto& [p, e] : ledger.required) p_minus_1[p] = 1;
        validate_step(forced_squares, candidate, p_minus_1);
        ledger.required.emplace_back(candidate, 2);
        forced_squares[candidate] = 2;
        chain_product *= candidate;
    }
    return ledger;
}

ConstraintLedger extended_ladder_step(const ConstraintLedger& base) {
    ConstraintLedger out = base;
    out.source = LedgerSource::extended;
    out.conditional = true;
    out.chain_stop.reset();
    const auto has = [&](const Int& p) {
        return std::any_of(out.required.begin(), out.required.end(),
                           [&](const auto& pe) { return pe.first == p; });
    };
    if (has(5)) return out;  // already extended; idempotent

    const ConstraintLedger ladder = forced_divisor_ladder();
    if (base.required != ladder.required)
        throw DomainError("extended_ladder_step: expects the base ladder");

    // Branch hypothesis 8 | x0: witness maps carry 2^3 instead of 2^2,
    // and 5 - 1 = 4 divides out of them exactly.
    FactorMap branch{{Int(2), 3}, {Int(3), 2}, {Int(7), 2}, {Int(43), 2}};
    validate_step(branch, 5, FactorMap{{Int(2), 2}});

    out.required.emplace_back(Int(5), 2);
    std::sort(out.required.begin(), out.required.end());
    return out;
}

ConstraintLedger generalized_constraint(std::uint64_t bound, const Caps& caps) {
    if (bound < 5) throw DomainError("generalized_constraint: bound must be >= 5");
    const RecurrentSet set = build_set(RuleVariant::v4(), bound, caps);

    ConstraintLedger ledger;
    ledger.source = LedgerSource::generalized;
    ledger.required.emplace_back(Int(2), 42);
    ledger.required.emplace_back(Int(3), 47);

    FactorMap forced{{Int(2), 42}, {Int(3), 47}};
    for (const auto& [p, cert] : set.members) {
        if (p == 2 || p == 3) continue;
        // The certificate bounds (exp2 <= 41, exp3 <= 46, ingredients
        // already squared in the product) make p - 1 divide the forced
        // product to cofactor-with-repetition, which is what the
        // witness division checks.
        validate_step(forced, Int(p), factor_map(Int(p) - 1, caps));
        ledger.required.emplace_back(Int(p), 2);
        forced[Int(p)] = 2;
    }
    return ledger;
}

std::string to_json(const ConstraintLedger& ledger) {
    static const char* names[] = {"LEMMA3", "EXTENDED", "GENERALIZED"};
    nlohmann::ordered_json j;
    j["source"] = names[static_cast<int>(ledger.source)];
    j["conditional"] = ledger.conditional;
    j["required"] = nlohmann::ordered_json::array();
    for (const auto& [p, e] : ledger.required)
        j["required"].push_back({p.get_ui(), e});
    j["digits"] = ledger.digits();
    return j.dump();
}

}  // namespace totient
