#include "totient/arithmetic.hpp"

#include <algorithm>
#include <cstddef>
#include <map>

namespace totient {
namespace {

constexpr std::uint32_t small_prime_limit = 1'000'000;

// One strong-probable-prime round. n odd >= 3, d odd, n-1 = d*2^s.
bool sprp_round(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

// f(x) = x^2 + c mod n, Brent cycle detection, gcds batched. Returns a
// nontrivial factor, or 0 when this c finds none within its slice of the
// step budget.
Int brent_rho(const Int& n, unsigned long c, std::uint64_t& steps, std::uint64_t budget) {
    Int y = 2, x, q = 1, g = 1, ys;
    const unsigned long batch = 128;
    unsigned long r = 1;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(batch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * (x > y ? x - y : y - x) % n;
            }
            g = gcd(q, n);
            k += lim;
            steps += lim;
            if (steps > budget) throw CapExceeded("factorize: rho step budget exhausted");
        }
        r *= 2;
    }
    if (g == n) {  // backtrack one at a time
        do {
            ys = (ys * ys + c) % n;
            g = gcd(x > ys ? x - ys : ys - x, n);
            if (++steps > budget) throw CapExceeded("factorize: rho step budget exhausted");
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

void factor_into(const Int& n, std::map<Int, unsigned>& out, std::uint64_t& steps,
                 const Caps& caps) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; Int(1) << k <= n; ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::map<Int, unsigned> base;
                factor_into(root, base, steps, caps);
                for (const auto& [p, e] : base) out[p] += e * k;
                return;
            }
        }
    }
    Int d = 0;
    for (unsigned long c = 1; d == 0; ++c) d = brent_rho(n, c, steps, caps.rho_step_budget);
    factor_into(d, out, steps, caps);
    factor_into(n / d, out, steps, caps);
}

}  // namespace

const Caps& default_caps() {
    static const Caps caps;
    return caps;
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(small_prime_limit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < small_prime_limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < small_prime_limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

PrimalityResult classify_prime(const Int& n) {
    if (n < 2) return {false, true};
    // Trial range: catches everything below 1009^2 outright.
    for (std::uint32_t p : small_primes()) {
        if (p > 1008) break;
        if (n == p) return {true, true};
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, true};
    }
    if (n < 1009 * Int(1009)) return {true, true};

    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    const bool below64 = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
    // {2..37} is a proven witness set below 2^64; above, 64 prime bases
    // push the error under 2^-128.
    const std::size_t rounds = below64 ? 12 : 64;
    for (std::size_t i = 0; i < rounds; ++i) {
        if (!sprp_round(n, Int(small_primes()[i]), d, s)) return {false, true};
    }
    return {true, below64};
}

bool is_prime(const Int& n) { return classify_prime(n).probably_prime; }

bool is_prime(std::uint64_t n) {
    Int m;
    mpz_import(m.get_mpz_t(), 1, 1, sizeof n, 0, 0, &n);
    return is_prime(m);
}

Factorization factorize(const Int& n, const Caps& caps) {
    if (n < 1) throw DomainError("factorize: n must be >= 1");
    if (n >= caps.factor_cap) throw CapExceeded("factorize: n exceeds factor cap");
    Factorization out;
    out.value = n;
    Int rem = n;
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > rem) break;
        if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) continue;
        unsigned e = 0;
        do {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
        out.factors.push_back({Int(p), e});
    }
    if (rem > 1) {
        if (rem < Int(small_prime_limit) * small_prime_limit) {
            out.factors.push_back({rem, 1});  // no factor below its square root
        } else {
            std::map<Int, unsigned> rest;
            std::uint64_t steps = 0;
            factor_into(rem, rest, steps, caps);
            for (const auto& [p, e] : rest) out.factors.push_back({p, e});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimeFactor& a, const PrimeFactor& b) { return a.prime < b.prime; });
    return out;
}

Int phi_of_factorization(const Factorization& f) {
    Int result = 1;
    for (const auto& [p, e] : f.factors) {
        result *= p - 1;
        for (unsigned i = 1; i < e; ++i) result *= p;
    }
    return result;
}

Int euler_phi(const Int& n, const Caps& caps) {
    if (n < 1) throw DomainError("euler_phi: n must be >= 1");
    return phi_of_factorization(factorize(n, caps));
}

Int radical(const Int& n, const Caps& caps) {
    Int result = 1;
    for (const auto& [p, e] : factorize(n, caps).factors) result *= p;
    return result;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound, const Caps& caps) {
    if (bound < 2) throw DomainError("primes_below: bound must be >= 2");
    if (bound > caps.sieve_cap) throw CapExceeded("primes_below: bound exceeds sieve cap");
    // Bit-packed odd-only sieve: bit i = number 2i+1.
    const std::uint64_t half = bound / 2;
    std::vector<std::uint64_t> bits(half / 64 + 1, 0);
    auto mark = [&](std::uint64_t i) { bits[i >> 6] |= std::uint64_t(1) << (i & 63); };
    auto marked = [&](std::uint64_t i) { return (bits[i >> 6] >> (i & 63)) & 1; };
    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) < bound; ++i) {
        if (marked(i)) continue;
        const std::uint64_t p = 2 * i + 1;
        for (std::uint64_t j = (p * p) / 2; j < half; j += p) mark(j);
    }
    std::vector<std::uint64_t> out;
    if (bound > 2) out.push_back(2);
    for (std::uint64_t i = 1; i < half; ++i)
        if (!marked(i)) out.push_back(2 * i + 1);
    return out;
}

std::vector<Int> divisors(const Factorization& f) {
    std::vector<Int> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_phi(std::uint64_t limit,
                  const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
    if (limit < 1) throw DomainError("for_each_phi: limit must be >= 1");
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= limit) ++root;
    const auto primes = primes_below(root + 1 < 2 ? 2 : root + 1);

    constexpr std::uint64_t segment = 1 << 19;
    std::vector<std::uint64_t> rem(segment), ph(segment);
    for (std::uint64_t lo = 1; lo <= limit; lo += segment) {
        const std::uint64_t hi = std::min(lo + segment - 1, limit);
        const std::uint64_t len = hi - lo + 1;
        for (std::uint64_t i = 0; i < len; ++i) {
            rem[i] = lo + i;
            ph[i] = 1;
        }
        for (std::uint64_t p : primes) {
            if (p * p > hi) break;
            std::uint64_t first = ((lo + p - 1) / p) * p;
            if (first < p * p) first = p * p;  // below p^2 the leftover pass handles it
            for (std::uint64_t m = first; m <= hi; m += p) {
                std::uint64_t& r = rem[m - lo];
                std::uint64_t f = p - 1;
                r /= p;
                while (r % p == 0) {
                    r /= p;
                    f *= p;
                }
                ph[m - lo] *= f;
            }
        }
        for (std::uint64_t i = 0; i < len; ++i) {
            if (rem[i] > 1) ph[i] *= rem[i] - 1;  // single remaining prime
            fn(lo + i, ph[i]);
        }
    }
}

}  // namespace totient
