#include "totient/alternates.hpp"

#include <algorithm>

#include "totient/inverse_totient.hpp"
#include <exception>
#include <thread>
#include <tuple>

namespace totient {

ConjectureCandidate::ConjectureCandidate(Int x0_)
    : Error("conjecture candidate: phi(" + x0_.get_str() + ") has no second preimage"),
      x0(std::move(x0_)) {}

std::optional<AlternateWitness> method_two(const Int& x0, const Caps& caps, const Int& q_limit) {
    if (x0 < 2) throw DomainError("method_two: x0 must be >= 2");
    const Int qlim = q_limit == 0 ? x0 * x0 + 2 : q_limit;

    // q - 1 must divide x0/radical(x0), so walk q = d+1 over the divisors
    // of that cofactor, ascending: the first prime coprime to x0 wins.
    const Factorization f = factorize(x0, caps);
    Factorization cofactor;
    cofactor.value = 1;
    for (const auto& [p, e] : f.factors)
        if (e >= 2) {
            cofactor.factors.push_back({p, e - 1});
            for (unsigned i = 1; i < e; ++i) cofactor.value *= p;
        }

    for (const Int& d : divisors(cofactor)) {
        const Int q = d + 1;
        if (q > qlim) break;
        if (!is_prime(q) || gcd(q, x0) != 1) continue;
        Int num = x0 * q;
        if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t()))
            throw Error("method_two: y0 not integral");  // (q-1) | x0 by construction
        AlternateWitness w;
        w.x0 = x0;
        w.y0 = num / d;
        w.method = Method::two;
        w.q = q;
        return w;
    }
    return std::nullopt;
}

std::vector<AlternateWitness> method_one_witnesses(const Int& x0, const Caps& caps) {
    if (x0 < 1) throw DomainError("method_one: x0 must be >= 1");
    const Factorization f = factorize(x0, caps);
    const std::size_t k = f.factors.size();

    std::vector<AlternateWitness> out;
    // Unitary splits x0 = a*b, one subset of the distinct primes per mask;
    // mask 0 and the full mask give the degenerate splits (1, x0), (x0, 1).
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        Int a = 1, phi_a = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (!(mask >> i & 1)) continue;
            const auto& [p, e] = f.factors[i];
            a *= p;
            phi_a *= p - 1;
            for (unsigned j = 1; j < e; ++j) {
                a *= p;
                phi_a *= p;
            }
        }
        const Int b = x0 / a;
        for (const Int& alt : preimages(phi_a, caps).solutions) {
            if (alt == a || gcd(alt, b) != 1) continue;
            AlternateWitness w;
            w.x0 = x0;
            w.y0 = alt * b;
            w.method = Method::one;
            w.a = a;
            w.a_alt = alt;
            w.b = b;
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end(), [](const AlternateWitness& l, const AlternateWitness& r) {
        return std::tie(l.y0, l.a, l.a_alt) < std::tie(r.y0, r.a, r.a_alt);
    });
    return out;
}

std::optional<AlternateWitness> method_one(const Int& x0, const Caps& caps) {
    auto all = method_one_witnesses(x0, caps);
    if (all.empty()) return std::nullopt;
    return std::move(all.front());
}

AlternateWitness find_alternate(const Int& x0, const Caps& caps) {
    if (x0 < 1) throw DomainError("find_alternate: x0 must be >= 1");
    if (x0 >= 2)
        if (auto w = method_two(x0, caps)) return *std::move(w);
    if (auto w = method_one(x0, caps)) return *std::move(w);
    throw ConjectureCandidate(x0);
}

ScanReport scan_conjecture(const Int& lo, const Int& hi, const Caps& caps, unsigned jobs) {
    if (lo < 2 || hi < lo) throw DomainError("scan_conjecture: need 2 <= lo <= hi");
    if (hi > caps.preimage_cap) throw CapExceeded("scan_conjecture: hi exceeds preimage cap");

    const Int total = hi - lo + 1;
    if (jobs == 0) jobs = 1;
    if (total < jobs) jobs = static_cast<unsigned>(total.get_ui());

    std::vector<ScanReport> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](unsigned t, const Int& from, const Int& to) {
        ScanReport& r = parts[t];
        try {
            for (Int x0 = from; x0 <= to; ++x0) {
                ++r.scanned;
                const bool odd = mpz_odd_p(x0.get_mpz_t());
                if (odd) ++r.odd_total;
                if (method_two(x0, caps)) {
                    ++r.via_method_two;
                    if (odd) ++r.odd_via_method_two;
                } else if (method_one(x0, caps)) {
                    ++r.via_method_one;
                } else {
                    r.candidates.push_back(x0);
                }
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };

    // Contiguous chunks; the merged report is independent of the split.
    const Int chunk = total / jobs, extra = total % jobs;
    std::vector<std::thread> pool;
    Int from = lo;
    for (unsigned t = 0; t < jobs; ++t) {
        const Int to = from + chunk - (t < extra ? 0 : 1);
        if (jobs == 1)
            worker(0, from, to);
        else
            pool.emplace_back(worker, t, from, to);
        from = to + 1;
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    ScanReport merged;
    merged.lo = lo;
    merged.hi = hi;
    for (auto& r : parts) {
        merged.scanned += r.scanned;
        merged.via_method_two += r.via_method_two;
        merged.via_method_one += r.via_method_one;
        merged.odd_total += r.odd_total;
        merged.odd_via_method_two += r.odd_via_method_two;
        merged.candidates.insert(merged.candidates.end(), r.candidates.begin(),
                                 r.candidates.end());
    }
    std::sort(merged.candidates.begin(), merged.candidates.end());
    return merged;
}

}  // namespace totient
