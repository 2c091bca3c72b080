#include "tchar/membership.hpp"

#include <algorithm>
#include <cmath>

namespace tchar {

namespace {

Rat ratio_dist(const Int& c, const Int& base) {
    Rat r(c, base);
    r.canonicalize();
    return r <= Rat(1, 2) ? r : Rat(1) - r;
}

void require_same_model(const CharSequence& u, const Element& x, ModelKind kind) {
    if (u.model.kind != kind) throw ModelMismatch("criterion applied to the wrong model");
    if (!(u.model == x.model))
        throw ModelMismatch("sequence and element parameters differ");
}

// digit-ratio criteria (torus and product share the dispatch shape)
Verdict ratio_criterion(const CharSequence& u, const Element& x, std::size_t horizon,
                        const char* tag) {
    x.validate();
    Verdict v;
    v.criterion = tag;
    for (std::size_t n = 0; n < horizon; ++n)
        v.trace.emplace_back(n, ratio_dist(x.digit(n), u.model.bases.term(n)));
    switch (x.tail.kind()) {
        case TailRule::Kind::Zero:
            v.outcome = Verdict::Outcome::Member;
            v.reason = "digits vanish beyond the prefix, so the digit ratio is eventually 0";
            return v;
        case TailRule::Kind::ConstantDigit:
            v.outcome = Verdict::Outcome::Member;
            v.reason = "constant digit " + x.tail.constant_value().get_str() +
                       " over bases growing without bound";
            return v;
        case TailRule::Kind::Periodic:
            v.outcome = Verdict::Outcome::Member;
            v.reason = "bounded periodic digits over bases growing without bound";
            return v;
        case TailRule::Kind::ScaledFloor: {
            const Rat& t = x.tail.scale();  // construction guarantees 0 < t < 1
            v.outcome = Verdict::Outcome::NonMember;
            v.limit = t <= Rat(1, 2) ? t : Rat(1) - t;
            v.reason = "the digit ratio converges to " + rat_str(t) +
                       ", at nearest-integer distance " + rat_str(v.limit);
            return v;
        }
        case TailRule::Kind::SpacedOnes:
            v.outcome = Verdict::Outcome::Undetermined;
            v.horizon = horizon;
            v.reason = "tail rule outside the decidable grammar for this criterion";
            return v;
    }
    throw DomainError("unreachable");
}

}  // namespace

std::string Verdict::outcome_str() const {
    switch (outcome) {
        case Outcome::Member:
            return "Member";
        case Outcome::NonMember:
            return "NonMember";
        case Outcome::Undetermined:
            return "Undetermined";
    }
    return "?";
}

Verdict member_torus(const CharSequence& u, const Element& x, std::size_t horizon) {
    require_same_model(u, x, ModelKind::Torus);
    return ratio_criterion(u, x, horizon, "eq2");
}

Verdict member_product(const CharSequence& u, const Element& x, std::size_t horizon) {
    require_same_model(u, x, ModelKind::Product);
    return ratio_criterion(u, x, horizon, "eq5");
}

Verdict member_padic(const CharSequence& u, const Element& x, std::size_t horizon) {
    require_same_model(u, x, ModelKind::PAdic);
    x.validate();
    Verdict v;
    v.criterion = "eq4";

    auto defect_trace = [&](const Int& floor_index) {
        // n_k - m_k with m_k = max(floor_index, n_{k-1}) for k >= 2
        for (std::size_t k = 2; k < horizon; ++k) {
            Int nk = u.nk.term(k);
            Int mk = std::max(floor_index, u.nk.term(k - 1));
            v.trace.emplace_back(k, Rat(nk - mk));
        }
    };

    if (x.is_zero()) {
        defect_trace(Int(0));
        v.outcome = Verdict::Outcome::Member;
        v.reason = "the zero element pairs to 1 with every character";
        return v;
    }
    if (x.finite_support()) {
        std::size_t end = x.support_end();
        defect_trace(end == 0 ? Int(0) : Int(static_cast<unsigned long>(end - 1)));
        v.outcome = Verdict::Outcome::Member;
        v.reason =
            "finite digit support: the pairing numerator is fixed against a growing "
            "power of p, so the pairing angle tends to 0";
        if (u.nk.gaps_diverge())
            v.reason += "; equivalently n_k - m_k = n_k - max(" +
                        std::to_string(end == 0 ? 0 : end - 1) +
                        ", n_{k-1}) grows without bound";
        return v;
    }
    if (x.tail.kind() == TailRule::Kind::SpacedOnes) {
        if (x.tail.spaced_rule() != u.nk) {
            v.outcome = Verdict::Outcome::Undetermined;
            v.horizon = horizon;
            v.reason = "tail one-positions follow a different index rule";
            return v;
        }
        std::size_t l = x.tail.spaced_l(), s = x.tail.spaced_s();
        for (std::size_t k = std::max<std::size_t>(l + 1, 2); k < horizon; ++k)
            v.trace.emplace_back(k, Rat(static_cast<unsigned long>(s)));
        v.outcome = Verdict::Outcome::NonMember;
        v.limit = Rat(static_cast<unsigned long>(s));
        v.reason = "n_k - m_k = " + std::to_string(s) + " for every k > " +
                   std::to_string(l) + ", a constant defect";
        return v;
    }
    v.outcome = Verdict::Outcome::Undetermined;
    v.horizon = horizon;
    v.reason = "tail rule outside the decidable grammar for this criterion";
    return v;
}

Verdict decide_membership(const CharSequence& u, const Element& x, std::size_t horizon) {
    switch (u.model.kind) {
        case ModelKind::Torus:
            return member_torus(u, x, horizon);
        case ModelKind::PAdic:
            return member_padic(u, x, horizon);
        case ModelKind::Product:
            return member_product(u, x, horizon);
    }
    throw DomainError("unreachable");
}

std::size_t compute_mk(const Int& p, const IndexRule& nk, std::span<const Int> digits,
                       std::size_t k) {
    if (k < 2) throw DomainError("m_k is defined for k >= 2");
    Int nk_val = nk.term(k);
    if (!nk_val.fits_ulong_p()) throw DomainError("n_k too large to materialize");
    std::size_t n = nk_val.get_ui();
    if (n >= digits.size()) throw DomainError("digit prefix too short for m_k");

    std::size_t jk;
    const Int& d = digits[n];
    if (d > 0 && d < p - 1) {
        jk = n;
    } else {
        // start of the terminal all-0 or all-(p-1) run ending at n_k
        std::size_t run_start = n;
        while (run_start > 0 && digits[run_start - 1] == d) --run_start;
        jk = run_start == 0 ? 0 : run_start - 1;
    }
    Int prev = nk.term(k - 1);
    if (!prev.fits_ulong_p()) throw DomainError("n_{k-1} too large");
    return std::max(jk, static_cast<std::size_t>(prev.get_ui()));
}

std::string OracleReport::consistency_str() const {
    switch (consistency) {
        case Consistency::MemberConsistent:
            return "member-consistent";
        case Consistency::NonMemberConsistent:
            return "nonmember-consistent";
        case Consistency::Undetermined:
            return "undetermined";
    }
    return "?";
}

OracleReport numeric_oracle(const CharSequence& u, const Element& x, std::size_t horizon,
                            const Rat& tol) {
    if (tol <= 0) throw DomainError("tolerance must be positive");
    if (!(u.model == x.model))
        throw ModelMismatch("sequence and element parameters differ");
    OracleReport r;
    r.trace = pairing_norm_trace(u, x, horizon);
    if (r.trace.empty()) return r;

    double tol_up = to_double_up(tol);
    std::size_t n = r.trace.size();
    std::size_t q0 = n - n / 4;
    bool small_tail = true;
    for (std::size_t i = q0; i < n; ++i) {
        small_tail = small_tail && r.trace[i].hi < tol_up;
        r.tail_level = std::max(r.tail_level, r.trace[i].lo);
    }
    if (small_tail) {
        r.consistency = OracleReport::Consistency::MemberConsistent;
        return r;
    }
    // recurring-large evidence: both halves of the tail window reach a peak
    // comparable to the overall tail level
    std::size_t mid = q0 + (n - q0) / 2;
    double peak1 = 0, peak2 = 0;
    for (std::size_t i = q0; i < mid; ++i) peak1 = std::max(peak1, r.trace[i].lo);
    for (std::size_t i = mid; i < n; ++i) peak2 = std::max(peak2, r.trace[i].lo);
    if (r.tail_level >= tol_up && std::min(peak1, peak2) >= r.tail_level / 2)
        r.consistency = OracleReport::Consistency::NonMemberConsistent;
    return r;
}

bool verdict_consistent_with_trace(const Verdict& v, const OracleReport& o,
                                   const CharSequence& u, const Element& x,
                                   std::string* why) {
    const auto& tr = o.trace;
    if (v.outcome == Verdict::Outcome::Undetermined || tr.empty()) return true;
    std::size_t n = tr.size();

    if (v.outcome == Verdict::Outcome::Member) {
        for (std::size_t i = n - n / 4; i < n; ++i) {
            double bound = std::numeric_limits<double>::infinity();
            switch (u.model.kind) {
                case ModelKind::Torus: {
                    Rat q = ratio_dist(x.digit(i + 1), u.model.bases.term(i + 1));
                    Rat slack(Int(1), u.model.bases.term(i + 1));
                    slack.canonicalize();
                    bound = two_pi_mul(q + slack).hi;
                    break;
                }
                case ModelKind::Product:
                    bound = two_pi_mul(ratio_dist(x.digit(i), u.model.bases.term(i))).hi;
                    break;
                case ModelKind::PAdic: {
                    if (i < 2) continue;
                    // finite support: m_k = max(support_end - 1, n_{k-1})
                    std::size_t end = x.finite_support() ? x.support_end() : 0;
                    Int floor_index = end == 0 ? Int(0) : Int(static_cast<unsigned long>(end - 1));
                    Int gap = u.nk.term(i) - std::max(floor_index, u.nk.term(i - 1));
                    if (gap < 0) continue;
                    if (!gap.fits_ulong_p()) continue;
                    // p^-gap below double resolution: compare against the cap
                    unsigned long g = std::min(gap.get_ui(), 1100ul);
                    Rat b(Int(1), ipow(u.model.p, g));
                    b.canonicalize();
                    bound = two_pi_mul(b).hi;
                    break;
                }
                default:
                    continue;
            }
            if (tr[i].hi > bound * (1 + 1e-9) + 1e-300) {
                if (why)
                    *why = "member trace exceeds the criterion bound at index " +
                           std::to_string(i) + ": " + tr[i].str() +
                           " vs 2*pi*q <= " + double_str17(bound);
                return false;
            }
        }
        return true;
    }

    // NonMember(L): the norm-level limit point is pi*L for the ratio
    // criteria and pi*p^-(s+1) for the p-adic defect s
    Rat level;
    if (v.criterion == "eq4") {
        if (!v.limit.get_num().fits_ulong_p() || v.limit.get_den() != 1) return false;
        level = Rat(Int(1), ipow(u.model.p, v.limit.get_num().get_ui() + 1));
        level.canonicalize();
    } else {
        level = v.limit;
    }
    double thresh = pi_mul(level).lo * 0.99;
    std::size_t h0 = n / 2, mid = h0 + (n - h0) / 2;
    auto window_hits = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i)
            if (tr[i].lo >= thresh) return true;
        return false;
    };
    bool ok = window_hits(h0, mid) && window_hits(mid, n);
    if (!ok && why)
        *why = "nonmember trace never returns above pi*L*(1-1/100) = " +
               double_str17(thresh) + " in both tail windows";
    return ok;
}

}  // namespace tchar
