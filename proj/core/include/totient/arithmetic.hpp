#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace totient {

using Int = mpz_class;

/// Base class for every error this library reports.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (phi of 0, bound below 2, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A configured cap or step budget was exceeded.
struct CapExceeded : Error {
    using Error::Error;
};

/// Resource limits. All operations take these by const reference; the
/// defaults are generous enough for everything the test suite exercises.
struct Caps {
    Int factor_cap = Int(1) << 96;            // factorize() rejects n >= this
    std::uint64_t sieve_cap = 1'000'000'000;  // primes_below() rejects bounds above this
    Int preimage_cap = 10'000'000;            // preimages() rejects n above this
    std::uint64_t rho_step_budget = 20'000'000;  // rho iterations before giving up
};

const Caps& default_caps();

struct PrimeFactor {
    Int prime;
    unsigned exponent;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// An integer as an ordered product of prime powers. The factor list is
/// ascending in the prime and empty exactly when value == 1.
struct Factorization {
    Int value;
    std::vector<PrimeFactor> factors;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct PrimalityResult {
    bool probably_prime;
    bool deterministic;  // true below 2^64 (fixed witness set), false above
};

/// Strong-pseudoprime classification. Below 2^64 the fixed witness set
/// {2,3,5,7,11,13,17,19,23,29,31,37} is deterministic; above, 64 fixed
/// rounds leave an error probability below 2^-128.
PrimalityResult classify_prime(const Int& n);

bool is_prime(const Int& n);
bool is_prime(std::uint64_t n);

/// Complete factorization of n >= 1. Trial division by primes below 10^6,
/// then Brent-cycle rho under caps.rho_step_budget.
Factorization factorize(const Int& n, const Caps& caps = default_caps());

/// Euler's totient via the factorization of n; phi(1) = 1. Domain is n >= 1.
Int euler_phi(const Int& n, const Caps& caps = default_caps());

/// Totient read off an already-known factor list; exact at any size.
Int phi_of_factorization(const Factorization& f);

/// Product of the distinct primes dividing n; radical(1) = 1.
Int radical(const Int& n, const Caps& caps = default_caps());

Int gcd(const Int& a, const Int& b);

/// All primes < bound, ascending. bound must be in [2, caps.sieve_cap].
std::vector<std::uint64_t> primes_below(std::uint64_t bound, const Caps& caps = default_caps());

/// Shared sieve of the primes below 10^6, built once.
const std::vector<std::uint32_t>& small_primes();

/// All divisors of the factored value, ascending.
std::vector<Int> divisors(const Factorization& f);

/// Streams (x, phi(x)) for every x in [1, limit] using a segmented sieve.
/// This is an independent route to the totient: it never consults
/// factorize() or euler_phi(), which makes it the brute-force oracle the
/// enumeration tests compare against.
void for_each_phi(std::uint64_t limit, const std::function<void(std::uint64_t x, std::uint64_t phi)>& fn);

}  // namespace totient
