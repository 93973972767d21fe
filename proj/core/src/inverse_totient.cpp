#include "totient/inverse_totient.hpp"

#include <algorithm>
#include <cstddef>

namespace totient {
namespace {

// DFS over prime-power contributions: at each level pick a not-yet-used
// candidate prime p and an exponent k >= 1 whose contribution
// p^(k-1)(p-1) divides the remaining quotient. Candidates run in
// descending order so the largest prime is fixed first; 2 sits last,
// and its k = 1 contribution of 1 extends any odd solution x to 2x.
struct PreimageSearch {
    const std::vector<Int>& cands;  // descending
    std::vector<Int> found;

    void run(std::size_t idx, const Int& quotient, const Int& x) {
        if (quotient == 1) found.push_back(x);
        for (std::size_t i = idx; i < cands.size(); ++i) {
            const Int& p = cands[i];
            Int contrib = p - 1, pk = p;
            while (contrib <= quotient) {
                if (mpz_divisible_p(quotient.get_mpz_t(), contrib.get_mpz_t()))
                    run(i + 1, quotient / contrib, x * pk);
                contrib *= p;
                pk *= p;
            }
        }
    }
};

}  // namespace

PreimageSet preimages(const Int& n, const Caps& caps) {
    if (n < 1) throw DomainError("preimages: n must be >= 1");
    if (n > caps.preimage_cap) throw CapExceeded("preimages: n exceeds preimage cap");
    if (n == 1) return {n, {Int(1), Int(2)}};
    if (mpz_odd_p(n.get_mpz_t())) return {n, {}};

    std::vector<Int> cands;  // primes p with (p-1) | n, descending
    for (const Int& d : divisors(factorize(n, caps)))
        if (is_prime(d + 1)) cands.push_back(d + 1);
    std::reverse(cands.begin(), cands.end());

    PreimageSearch search{cands, {}};
    search.run(0, n, 1);
    std::sort(search.found.begin(), search.found.end());
    search.found.erase(std::unique(search.found.begin(), search.found.end()),
                       search.found.end());
    return {n, std::move(search.found)};
}

namespace {

// Bounds need the primes <= n+1; n is boxed by the sieve cap.
std::uint64_t bound_domain(const Int& n, const Caps& caps) {
    if (n < 2) throw DomainError("solution-count bounds need n >= 2");
    if (!n.fits_ulong_p() || n.get_ui() + 2 > caps.sieve_cap)
        throw CapExceeded("solution-count bounds: prime list exceeds sieve cap");
    return n.get_ui();
}

}  // namespace

Int exponent_bound(const Int& n, const Caps& caps) {
    const std::uint64_t nv = bound_domain(n, caps);
    Int prod = 1;
    for (std::uint64_t p : primes_below(nv + 2, caps)) {
        unsigned a = 1;  // least a with p^a >= n; a = 1 already when p >= n
        for (std::uint64_t pk = p; pk < nv; pk *= p) ++a;
        prod *= a + 2;
    }
    return prod;
}

Int subset_bound(const Int& n, const Caps& caps) {
    const std::uint64_t nv = bound_domain(n, caps);
    const std::size_t s = primes_below(nv + 2, caps).size();
    return (Int(1) << s) - 1;
}

SolutionForm solution_form(const Int& x, const Int& n, const Caps& caps) {
    if (x < 1 || n < 1) throw DomainError("solution_form: x and n must be >= 1");
    const Int phi = euler_phi(x, caps);
    if (phi != n)
        throw NotAPreimage("solution_form: phi(" + x.get_str() + ") = " + phi.get_str() +
                           " != " + n.get_str());
    if (!n.fits_ulong_p() || n.get_ui() + 2 > caps.sieve_cap)
        throw CapExceeded("solution_form: prime list exceeds sieve cap");

    SolutionForm form{x, n, {}};
    Int lhs = x, rhs = n;
    for (std::uint64_t p : primes_below(n.get_ui() + 2, caps)) {
        const bool eps = mpz_divisible_ui_p(x.get_mpz_t(), p);
        form.epsilon.emplace_back(p, eps);
        if (eps) {
            lhs *= p - 1;
            rhs *= p;
        }
    }
    // Every prime factor of x is <= n+1 (p | x forces (p-1) | n), so the
    // epsilon vector captures the whole support and the identity is exact.
    if (lhs != rhs) throw Error("solution_form: form identity violated");
    return form;
}

}  // namespace totient
