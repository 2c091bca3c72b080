#include "tchar/decision.hpp"

#include <algorithm>

namespace tchar {

using FactorKind = GroupDescriptor::FactorKind;

Exponent exponent(const GroupDescriptor& d) {
    Exponent e;
    e.value = 1;
    for (const auto& f : d.factors) {
        if (f.kind != FactorKind::Cyclic) return {false, Int(0)};
        mpz_lcm(e.value.get_mpz_t(), e.value.get_mpz_t(), f.order.get_mpz_t());
    }
    return e;
}

namespace {

std::vector<std::pair<Int, unsigned long>> factorize(Int n) {
    std::vector<std::pair<Int, unsigned long>> out;
    auto strip = [&](const Int& p) {
        unsigned long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(Int(2));
    strip(Int(3));
    for (Int c = 5; c * c <= n; c += 6) {
        strip(c);
        strip(c + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

SocleRank socle_rank(const GroupDescriptor& d, const Int& e, unsigned long truncation) {
    if (e < 2) throw DomainError("socle rank needs e >= 2");
    Exponent ex = exponent(d);
    if (!ex.finite) throw DomainError("socle rank needs a bounded descriptor");
    if (!mpz_divisible_p(ex.value.get_mpz_t(), e.get_mpz_t())) return {0, false};

    SocleRank r;
    r.unbounded = true;
    bool first = true;
    for (const auto& [p, a] : factorize(e)) {
        Int q = ipow(p, a);  // p^a || e
        unsigned long finite_copies = 0, omega_factors = 0;
        for (const auto& f : d.factors) {
            if (f.kind != FactorKind::Cyclic) continue;
            if (!mpz_divisible_p(f.order.get_mpz_t(), q.get_mpz_t())) continue;
            if (f.omega)
                ++omega_factors;
            else
                finite_copies += f.multiplicity;
        }
        unsigned long count = finite_copies + omega_factors * truncation;
        if (first || count < r.rank) r.rank = count;
        first = false;
        r.unbounded = r.unbounded && omega_factors > 0;
    }
    return r;
}

Decision tchar_decide(const GroupDescriptor& annihilator, bool is_gdelta, bool is_proper) {
    if (!is_proper)
        return {true, "whole-group",
                "the whole group is characterized by the zero sequence"};
    if (annihilator.trivial())
        throw DomainError("a proper closed subgroup has a nontrivial annihilator");
    if (!is_gdelta)
        return {false, "not-gdelta",
                "closed characterized subgroups are exactly the closed G-delta subgroups"};
    Exponent e = exponent(annihilator);
    if (!e.finite)
        return {true, "infinite-exponent", "the annihilator is unbounded"};
    SocleRank s = socle_rank(annihilator, e.value, 1);
    if (s.unbounded)
        return {true, "omega-socle",
                "the annihilator has exponent " + e.value.get_str() +
                    " and contains an unbounded direct sum of Z(" + e.value.get_str() + ")"};
    return {false, "bounded-socle",
            "the annihilator has exponent " + e.value.get_str() +
                " but only finitely many independent copies of Z(" + e.value.get_str() +
                ")"};
}

Decision minap_admissible(const GroupDescriptor& d) {
    if (d.trivial() || d.finite_group())
        return {false, "finite-discrete",
                "a finite group carries only the discrete topology, and discrete groups "
                "separate points by characters"};
    Exponent e = exponent(d);
    if (!e.finite) return {true, "infinite-exponent", "the group is unbounded"};
    SocleRank s = socle_rank(d, e.value, 1);
    if (s.unbounded)
        return {true, "omega-socle",
                "bounded exponent " + e.value.get_str() +
                    " with an unbounded direct sum of Z(" + e.value.get_str() + ")"};
    return {false, "bounded-socle",
            "bounded exponent " + e.value.get_str() +
                " without an unbounded direct sum of Z(" + e.value.get_str() + ")"};
}

bool connected_dual(const GroupDescriptor& d) {
    for (const auto& f : d.factors)
        if (f.kind != FactorKind::InfiniteCyclic) return false;
    return true;
}

bool all_gdelta_tchar(const GroupDescriptor& d) { return connected_dual(d); }

std::string WitnessFamily::label() const {
    switch (c) {
        case Case::A:
            return "A";
        case Case::B:
            return "B";
        case Case::C:
            return "C";
    }
    return "?";
}

WitnessFamily select_unbounded_witness(const GroupDescriptor& d) {
    Exponent e = exponent(d);
    if (e.finite)
        throw DomainError("witness selection needs an unbounded descriptor");
    for (const auto& f : d.factors)
        if (f.kind == FactorKind::InfiniteCyclic) return {WitnessFamily::Case::A, Int(0), {}};
    const GroupDescriptor::Factor* best = nullptr;
    for (const auto& f : d.factors)
        if (f.kind == FactorKind::Prufer && (!best || f.p < best->p)) best = &f;
    if (best) return {WitnessFamily::Case::B, best->p, {}};
    for (const auto& f : d.factors)
        if (f.kind == FactorKind::CyclicFamily)
            return {WitnessFamily::Case::C, Int(0), f.family};
    throw DomainError("unbounded descriptor without a usable factor");
}

}  // namespace tchar
