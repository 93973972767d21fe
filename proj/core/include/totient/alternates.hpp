#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "totient/arithmetic.hpp"

namespace totient {

enum class Method { one, two };

/// A second solution y0 != x0 of phi(y) = phi(x0), tagged with how it was
/// found: method two records the auxiliary prime q; method one records the
/// unitary split x0 = a*b and the replacement a' with phi(a') = phi(a),
/// gcd(a', b) = 1, y0 = a'*b.
struct AlternateWitness {
    Int x0;
    Int y0;
    Method method;
    Int q;        // method two only
    Int a, a_alt, b;  // method one only
};

/// Thrown when neither method produces an alternate; x0 would contradict
/// the conjecture that no phi value has exactly one preimage.
struct ConjectureCandidate : Error {
    Int x0;
    explicit ConjectureCandidate(Int x0_);
};

/// Smallest prime q with gcd(q, x0) = 1 and (q-1) | x0/radical(x0); then
/// y0 = x0*q/(q-1) satisfies phi(y0) = phi(x0). Fails exactly when no such
/// q exists among q = d+1 over divisors d of x0/radical(x0) up to q_limit
/// (0 = default ceiling x0^2 + 2, far beyond any divisor+1).
std::optional<AlternateWitness> method_two(const Int& x0, const Caps& caps = default_caps(),
                                           const Int& q_limit = 0);

/// All witnesses from unitary splits x0 = a*b (gcd(a, b) = 1, degenerate
/// splits a = 1 and b = 1 included): a' in preimages(phi(a)), a' != a,
/// gcd(a', b) = 1 gives y0 = a'*b. Sorted by (y0, a).
std::vector<AlternateWitness> method_one_witnesses(const Int& x0,
                                                   const Caps& caps = default_caps());

/// First witness of method_one_witnesses: minimal y0, ties broken by
/// smallest a.
std::optional<AlternateWitness> method_one(const Int& x0, const Caps& caps = default_caps());

/// method_two first (cheap), then method_one; throws ConjectureCandidate
/// if both fail.
AlternateWitness find_alternate(const Int& x0, const Caps& caps = default_caps());

struct ScanReport {
    Int lo, hi;
    std::uint64_t scanned = 0;
    std::uint64_t via_method_two = 0;
    std::uint64_t via_method_one = 0;
    std::uint64_t odd_total = 0;
    std::uint64_t odd_via_method_two = 0;
    std::vector<Int> candidates;  // ascending; empty unless the conjecture falls
};

/// find_alternate over every x0 in [lo, hi]. jobs > 1 splits the range
/// across threads; the report is independent of the partition.
ScanReport scan_conjecture(const Int& lo, const Int& hi, const Caps& caps = default_caps(),
                           unsigned jobs = 1);

}  // namespace totient
