#include "totient/recurrent_set.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace totient {
namespace {

std::string exp2_message(const RuleVariant& v, unsigned e) {
    std::ostringstream os;
    os << "exponent of 2 is " << e;
    if (v.min_exp2 == 0)
        os << ", above " << v.max_exp2;
    else
        os << ", outside [" << v.min_exp2 << ", " << v.max_exp2 << "]";
    return os.str();
}

// The rule check proper: decompose p-1 in ascending prime order and stop
// at the first violated clause.
std::variant<MembershipCertificate, Rejection> evaluate(
    const RuleVariant& v, std::uint64_t p, const std::function<bool(std::uint64_t)>& member,
    const Caps& caps) {
    MembershipCertificate cert{p, CertKind::rule, 0, 0, {}};
    for (const auto& [pf, e] : factorize(Int(p) - 1, caps).factors) {
        const std::uint64_t q = pf.get_ui();
        if (q == 2) {
            if (e < v.min_exp2 || e > v.max_exp2)
                return Rejection{p, RejectClause::exp2_out_of_range, e, exp2_message(v, e)};
            cert.exp2 = e;
        } else if (q == 3 && v.structural_three) {
            if (e > v.max_exp3)
                return Rejection{p, RejectClause::exp3_out_of_range, e,
                                 "exponent of 3 is " + std::to_string(e) + ", above " +
                                     std::to_string(v.max_exp3)};
            cert.exp3 = e;
        } else if (e > 1) {
            return Rejection{p, RejectClause::repeated_odd_prime, q,
                             "repeated odd prime " + std::to_string(q)};
        } else if (!member(q)) {
            return Rejection{p, RejectClause::missing_ingredient, q,
                             "ingredient " + std::to_string(q) + " not in set"};
        } else {
            cert.ingredients.push_back(q);
        }
    }
    return cert;
}

bool is_seed(const RuleVariant& v, std::uint64_t p) {
    return std::find(v.seeds.begin(), v.seeds.end(), p) != v.seeds.end();
}

std::string decomposition(const RuleVariant& v, const MembershipCertificate& cert) {
    if (cert.kind == CertKind::seed) return "-";
    std::ostringstream os;
    os << "2^" << cert.exp2;
    if (v.structural_three && cert.exp3 > 0) os << "*3^" << cert.exp3;
    for (std::uint64_t q : cert.ingredients) os << "*" << q;
    return os.str();
}

constexpr const char* clause_names[] = {"exp2_out_of_range", "exp3_out_of_range",
                                        "repeated_odd_prime", "missing_ingredient"};

}  // namespace

const RuleVariant& RuleVariant::v3() {
    static const RuleVariant v{"v3", {2, 3, 5}, 1, 2, 0, false};
    return v;
}

const RuleVariant& RuleVariant::v4() {
    static const RuleVariant v{"v4", {2, 3}, 0, 41, 46, true};
    return v;
}

bool RecurrentSet::contains(std::uint64_t p) const {
    const auto it = std::lower_bound(members.begin(), members.end(), p,
                                     [](const SetMember& m, std::uint64_t v) { return m.p < v; });
    return it != members.end() && it->p == p;
}

RecurrentSet build_set(const RuleVariant& variant, std::uint64_t bound, const Caps& caps) {
    if (bound < 3) throw DomainError("build_set: bound must be >= 3");
    RecurrentSet set{&variant, bound, {}, {}};
    std::unordered_set<std::uint64_t> admitted;
    const auto member = [&](std::uint64_t q) { return admitted.count(q) > 0; };
    for (std::uint64_t p : primes_below(bound, caps)) {
        if (is_seed(variant, p)) {
            set.members.push_back({p, {p, CertKind::seed, 0, 0, {}}});
            admitted.insert(p);
            continue;
        }
        auto verdict = evaluate(variant, p, member, caps);
        if (auto* cert = std::get_if<MembershipCertificate>(&verdict)) {
            set.members.push_back({p, std::move(*cert)});
            admitted.insert(p);
        } else {
            set.exceptions.push_back(std::move(std::get<Rejection>(verdict)));
        }
    }
    return set;
}

std::variant<MembershipCertificate, Rejection> membership_certificate(const RuleVariant& variant,
                                                                      std::uint64_t p,
                                                                      const RecurrentSet& context) {
    if (!is_prime(p)) throw DomainError("membership_certificate: p must be prime");
    if (context.variant != &variant)
        throw DomainError("membership_certificate: context built for a different variant");
    if (is_seed(variant, p)) return MembershipCertificate{p, CertKind::seed, 0, 0, {}};
    return evaluate(variant, p, [&](std::uint64_t q) { return context.contains(q); },
                    default_caps());
}

std::vector<Rejection> exceptions_report(std::uint64_t bound, const Caps& caps) {
    return build_set(RuleVariant::v4(), bound, caps).exceptions;
}

std::string to_tsv(const RecurrentSet& set) {
    std::ostringstream os;
    for (const auto& [p, cert] : set.members) {
        os << p << '\t' << (cert.kind == CertKind::seed ? "SEED" : "RULE_B") << '\t'
           << decomposition(*set.variant, cert) << '\n';
    }
    return os.str();
}

std::string to_json(const RecurrentSet& set) {
    nlohmann::ordered_json j;
    j["variant"] = set.variant->name;
    j["bound"] = set.bound;
    j["members"] = nlohmann::ordered_json::array();
    for (const auto& [p, cert] : set.members) {
        nlohmann::ordered_json m;
        m["p"] = p;
        m["kind"] = cert.kind == CertKind::seed ? "SEED" : "RULE_B";
        if (cert.kind == CertKind::rule) {
            m["exp2"] = cert.exp2;
            if (set.variant->structural_three) m["exp3"] = cert.exp3;
            m["ingredients"] = cert.ingredients;
        }
        j["members"].push_back(std::move(m));
    }
    j["exceptions"] = nlohmann::ordered_json::array();
    for (const Rejection& r : set.exceptions) {
        j["exceptions"].push_back({{"p", r.p},
                                   {"clause", clause_names[static_cast<int>(r.clause)]},
                                   {"offender", r.offender},
                                   {"reason", r.reason}});
    }
    return j.dump();
}

}  // namespace totient
