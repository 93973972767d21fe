#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "totient/arithmetic.hpp"

namespace totient {

/// Every x with phi(x) = n, ascending. Complete: the set coincides with
/// brute-force enumeration over [1, 2n^2] (phi(x) >= sqrt(x/2) pins every
/// preimage below that ceiling).
struct PreimageSet {
    Int n;
    std::vector<Int> solutions;
};

/// The support indicator of a preimage x over the primes p <= n+1:
/// eps = 1 exactly where p divides x, and
/// x * prod (p-1)^eps == n * prod p^eps holds exactly.
struct SolutionForm {
    Int x;
    Int n;
    std::vector<std::pair<std::uint64_t, bool>> epsilon;
};

/// Enumerates all solutions of phi(x) = n by depth-first search over
/// prime-power contributions. n = 1 yields {1, 2}; odd n > 1 yields the
/// empty set (not an error).
PreimageSet preimages(const Int& n, const Caps& caps = default_caps());

/// Solution-count bound from capping each prime's exponent: for every
/// prime p <= n+1 let a be least with p^a >= n; the bound is prod (a+2).
Int exponent_bound(const Int& n, const Caps& caps = default_caps());

/// Solution-count bound 2^s - 1, s = number of primes <= n+1 (each
/// solution is determined by its nonempty prime support).
Int subset_bound(const Int& n, const Caps& caps = default_caps());

/// Thrown by solution_form when phi(x) != n.
struct NotAPreimage : Error {
    using Error::Error;
};

SolutionForm solution_form(const Int& x, const Int& n, const Caps& caps = default_caps());

}  // namespace totient
