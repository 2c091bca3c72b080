#include "tchar/witness.hpp"

#include <algorithm>
#include <cmath>

namespace tchar {

namespace {

void check_epsilon(const Rat& epsilon) {
    if (epsilon <= 0 || epsilon >= Rat(1, 10))
        throw DomainError("epsilon must satisfy 0 < epsilon < 1/10");
}

BoundInterval rat_interval(const Rat& q) {
    double lo = to_double_down(q), hi = to_double_up(q);
    BoundInterval b{lo, hi, lo == hi};
    return b;
}

// certified strict comparison: the whole enclosure sits below the bound
bool below(const BoundInterval& v, const Rat& bound) {
    return v.upper_finite() && v.hi < to_double_down(bound);
}

bool below(const BoundInterval& v, const BoundInterval& bound) {
    return v.upper_finite() && v.hi < bound.lo;
}

void push(std::vector<BudgetCheck>& out, std::string name, std::string asserted,
          BoundInterval computed, bool pass) {
    out.push_back({std::move(name), std::move(asserted), computed, pass});
}

Verdict witness_verdict(const CharSequence& u, const Element& x) {
    return decide_membership(u, x, 64);
}

}  // namespace

std::size_t WitnessReport::failed_budgets() const {
    std::size_t n = 0;
    for (const auto& b : budgets) n += b.pass ? 0 : 1;
    return n;
}

// --- family A: the torus --------------------------------------------------

std::size_t torus_witness_start(const BaseSequence& a, const Rat& epsilon) {
    check_epsilon(epsilon);
    ProductLadder u(a);
    for (std::size_t l = 1;; ++l) {
        Rat q(Int(2), u.at(l - 1));
        q.canonicalize();
        if (q < epsilon / 20) return l;
        if (l > 100000) throw DomainError("start index search exceeded cap");
    }
}

Element torus_witness_element(const BaseSequence& a, const Rat& epsilon, std::size_t l,
                              std::size_t k) {
    Model m = Model::torus(a);
    if (k <= l) return Element::zero(m);
    std::vector<Int> digits(k + 1, Int(0));
    for (std::size_t n = l; n <= k; ++n)
        digits[n] = floor_rat(Rat(a.term(n) - 1) * epsilon / 20);
    return Element::make(std::move(m), std::move(digits), TailRule::zero());
}

WitnessReport torus_witness(const BaseSequence& a, const Rat& epsilon, std::size_t k_max) {
    check_epsilon(epsilon);
    if (!a.valid_torus_base())
        throw DomainError("torus witness needs a_n >= 2 with a_n -> infinity");
    WitnessReport rep;
    rep.family = "A";
    rep.epsilon = epsilon;
    rep.scale = k_max;
    rep.sequence = CharSequence::torus(a);
    const CharSequence& u = rep.sequence;
    Element zero = Element::zero(u.model);
    ProductLadder lad(a);

    std::size_t l = torus_witness_start(a, epsilon);
    rep.l = l;
    {
        Rat at_l(Int(2), lad.at(l - 1));
        at_l.canonicalize();
        bool minimal = l == 1 || Rat(Int(2), lad.at(l - 2)) >= epsilon / 20;
        push(rep.budgets, "start-index", "2/u_{l-1} < eps/20, minimal",
             rat_interval(at_l), at_l < epsilon / 20 && minimal);
    }

    Rat strong_bound = epsilon / 20 + Rat(2) * epsilon / 3;
    for (std::size_t k = l + 1; k <= k_max; ++k) {
        WitnessEntry w;
        w.index = k;
        w.element = torus_witness_element(a, epsilon, l, k);
        Rat value = evaluate_torus(w.element);

        // ambient distance: the value itself, provided it sits below 1/2
        bool dist_ok = value < Rat(1, 2) && metric_d(w.element, zero) == value;
        push(rep.budgets, "distance[" + std::to_string(k) + "]", "d(0,x_k) = x_k < eps/20",
             rat_interval(value), dist_ok && value < epsilon / 20);

        // pairings below the witness index
        BoundInterval mid{0.0, 0.0, true};
        for (std::size_t ss = 0; ss < k; ++ss)
            mid = max(mid, seq_pair_norm(u, ss, w.element));
        push(rep.budgets, "pairing-mid[" + std::to_string(k) + "]",
             "|1-(u_s,x_k)| < 2*eps/3 for s < k", mid, below(mid, Rat(2) * epsilon / 3));

        // pairings at and above the witness index vanish
        bool high_zero = true;
        for (std::size_t ss = k; ss < k + 3; ++ss) {
            PairValue p = seq_pair(u, ss, w.element);
            high_zero = high_zero && p.exact() && p.center.is_zero();
        }
        push(rep.budgets, "pairing-high[" + std::to_string(k) + "]",
             "(u_s,x_k) = 1 exactly for s >= k", BoundInterval::exactly(0.0), high_zero);

        w.rho_enclosure = rho(u, w.element, zero, k + 1);
        push(rep.budgets, "rho[" + std::to_string(k) + "]", "rho(0,x_k) < eps",
             w.rho_enclosure, below(w.rho_enclosure, epsilon));
        push(rep.budgets, "rho-strong[" + std::to_string(k) + "]",
             "rho(0,x_k) < eps/20 + 2*eps/3", w.rho_enclosure,
             below(w.rho_enclosure, strong_bound));

        w.verdict = witness_verdict(u, w.element);
        push(rep.budgets, "member[" + std::to_string(k) + "]", "x_k in s_u",
             BoundInterval::exactly(0.0), w.verdict.member());
        rep.witnesses.push_back(std::move(w));
    }

    rep.limit = Element::make(u.model, std::vector<Int>(l, Int(0)),
                              TailRule::scaled_floor(epsilon / 20));
    rep.limit_verdict = decide_membership(u, rep.limit, 256);
    push(rep.budgets, "limit-verdict", "limit not in s_u, defect eps/20",
         rat_interval(epsilon / 20),
         rep.limit_verdict.outcome == Verdict::Outcome::NonMember &&
             rep.limit_verdict.limit == epsilon / 20);

    // metric convergence of the witnesses to the limit
    bool mono = true;
    Rat prev_hi;
    bool have_prev = false;
    RatInterval last{Rat(0), Rat(0)};
    for (const auto& w : rep.witnesses) {
        RatInterval d = metric_d_bounds(w.element, rep.limit, k_max + 16);
        mono = mono && (!have_prev || d.hi <= prev_hi);
        prev_hi = d.hi;
        have_prev = true;
        last = d;
    }
    if (have_prev)
        push(rep.budgets, "limit-convergence", "d(x_k, limit) nonincreasing to 0",
             BoundInterval::of(to_double_down(last.lo), to_double_up(last.hi)),
             mono && last.hi < epsilon / 20);
    return rep;
}

// --- family B: the p-adic integers ------------------------------------------

std::pair<std::size_t, std::size_t> padic_witness_params(const IndexRule& nk,
                                                         const Rat& epsilon) {
    check_epsilon(epsilon);
    if (!nk.gaps_diverge())
        throw DomainError("the construction needs an index rule with divergent gaps");
    std::size_t s = 1;
    while (Rat(Int(1), ipow(Int(2), s)) >= epsilon / 20) ++s;
    std::size_t l = nk.min_l_with_gaps_above(Int(static_cast<unsigned long>(s)), s + 1);
    return {l, s};
}

Element padic_witness_element(const Int& p, const IndexRule& nk, std::size_t l,
                              std::size_t s, std::size_t r) {
    Model m = Model::padic(p);
    if (r == 0) return Element::zero(m);
    Int top = nk.term(l + r) - Int(static_cast<unsigned long>(s));
    if (top < 0 || !top.fits_ulong_p())
        throw DomainError("witness positions out of range");
    std::vector<Int> digits(top.get_ui() + 1, Int(0));
    for (std::size_t i = 1; i <= r; ++i) {
        Int pos = nk.term(l + i) - Int(static_cast<unsigned long>(s));
        digits[pos.get_ui()] = 1;
    }
    return Element::make(std::move(m), std::move(digits), TailRule::zero());
}

WitnessReport padic_witness(const Int& p, const IndexRule& nk, const Rat& epsilon,
                            std::size_t r_max) {
    WitnessReport rep;
    rep.family = "B";
    rep.epsilon = epsilon;
    rep.scale = r_max;
    rep.sequence = CharSequence::padic(p, nk);
    const CharSequence& u = rep.sequence;
    Element zero = Element::zero(u.model);

    auto [l, s] = padic_witness_params(nk, epsilon);
    rep.l = l;
    rep.s = s;
    {
        Rat at_s(Int(1), ipow(Int(2), s));
        bool minimal = s == 1 || Rat(Int(1), ipow(Int(2), s - 1)) >= epsilon / 20;
        push(rep.budgets, "spacing", "2^-s < eps/20, minimal", rat_interval(at_s),
             at_s < epsilon / 20 && minimal);
        bool gap_ok = nk.gap(l) > Int(static_cast<unsigned long>(s)) && l > s;
        bool l_minimal = l == s + 1 || nk.gap(l - 1) <= Int(static_cast<unsigned long>(s));
        push(rep.budgets, "start-index", "l > s minimal with gap(w) > s for w >= l",
             BoundInterval::exactly(static_cast<double>(l)), gap_ok && l_minimal);
    }

    Rat eps2 = epsilon / 2;
    Rat strong_bound = epsilon / 20 + eps2;
    Rat p_pow_s(Int(1), ipow(p, s));
    p_pow_s.canonicalize();

    for (std::size_t r = 1; r <= r_max; ++r) {
        WitnessEntry w;
        w.index = r;
        w.element = padic_witness_element(p, nk, l, s, r);

        // ambient distance with the full inequality chain
        Int d_exp = nk.term(l + 1) - Int(static_cast<unsigned long>(s));
        Rat d = metric_d(w.element, zero, w.element.prefix.size() + 2);
        bool chain = d == Rat(Int(1), ipow(Int(2), d_exp.get_ui())) &&
                     d < Rat(Int(1), ipow(Int(2), static_cast<unsigned long>(l))) &&
                     d < epsilon / 20;
        push(rep.budgets, "distance[" + std::to_string(r) + "]",
             "d(0,w_r) = 2^-(n_{l+1}-s) < 2^-l < eps/20", rat_interval(d), chain);

        // low characters: the digit block sits strictly above n_k
        bool low_zero = true;
        for (std::size_t k = 0; k <= l; ++k) {
            PairValue pv = seq_pair(u, k, w.element);
            low_zero = low_zero && pv.exact() && pv.center.is_zero();
        }
        push(rep.budgets, "pairing-low[" + std::to_string(r) + "]",
             "(u_k,w_r) = 1 exactly for k <= l", BoundInterval::exactly(0.0), low_zero);

        // mid characters: angle below p^-s, norm below eps/2
        BoundInterval mid{0.0, 0.0, true};
        bool angle_small = true;
        for (std::size_t k = l + 1; k <= l + r; ++k) {
            PairValue pv = seq_pair(u, k, w.element);
            angle_small = angle_small && pv.exact() && pv.center.value() < p_pow_s;
            mid = max(mid, norm_within(pv.center, pv.slack));
        }
        push(rep.budgets, "pairing-mid[" + std::to_string(r) + "]",
             "angle < p^-s and |1-(u_k,w_r)| < eps/2 for l < k <= l+r", mid,
             angle_small && below(mid, eps2));

        // high characters: still below eps/2 and shrinking to zero
        BoundInterval high{0.0, 0.0, true};
        bool shrinking = true;
        double prev_hi = -1.0;
        for (std::size_t k = l + r + 1; k <= l + r + 5; ++k) {
            BoundInterval e = seq_pair_norm(u, k, w.element);
            high = max(high, e);
            if (prev_hi >= 0) shrinking = shrinking && e.hi <= prev_hi;
            prev_hi = e.hi;
        }
        Int tail_gap = nk.term(l + r + 5) + 1 - (nk.term(l + r) - Int(static_cast<unsigned long>(s)) + 1);
        Rat tail_bound(Int(1), ipow(p, tail_gap.get_ui()));
        tail_bound.canonicalize();
        push(rep.budgets, "pairing-high[" + std::to_string(r) + "]",
             "|1-(u_k,w_r)| < eps/2 for k > l+r, decreasing", high,
             below(high, eps2) && shrinking);
        push(rep.budgets, "pairing-tail[" + std::to_string(r) + "]",
             "|1-(u_k,w_r)| <= 2*pi*p^(n_{l+r}-s+1)/p^(n_k+1) -> 0",
             seq_pair_norm(u, l + r + 5, w.element),
             seq_pair_norm(u, l + r + 5, w.element).hi <= two_pi_mul(tail_bound).hi);

        w.rho_enclosure = rho(u, w.element, zero, l + r + 1);
        push(rep.budgets, "rho[" + std::to_string(r) + "]", "rho(0,w_r) < eps",
             w.rho_enclosure, below(w.rho_enclosure, epsilon));
        push(rep.budgets, "rho-strong[" + std::to_string(r) + "]",
             "rho(0,w_r) < eps/20 + eps/2", w.rho_enclosure,
             below(w.rho_enclosure, strong_bound));

        w.verdict = witness_verdict(u, w.element);
        push(rep.budgets, "member[" + std::to_string(r) + "]", "w_r in s_u",
             BoundInterval::exactly(0.0), w.verdict.member());
        rep.witnesses.push_back(std::move(w));
    }

    rep.limit = Element::make(u.model, {}, TailRule::spaced_ones(l, s, nk));
    rep.limit_verdict = decide_membership(u, rep.limit, 256);
    push(rep.budgets, "limit-verdict", "limit not in s_u, constant defect s",
         BoundInterval::exactly(static_cast<double>(s)),
         rep.limit_verdict.outcome == Verdict::Outcome::NonMember &&
             rep.limit_verdict.limit == Rat(static_cast<unsigned long>(s)));

    // run statistic of the limit element, checked against the literal scan
    {
        std::size_t k_to = l + 31;
        Int top = nk.term(k_to);
        bool mk_ok = top.fits_ulong_p();
        if (mk_ok) {
            std::vector<Int> digits = materialize_digits(rep.limit, top.get_ui() + 1);
            for (std::size_t k = l + 1; k <= k_to; ++k) {
                Int expect = nk.term(k) - Int(static_cast<unsigned long>(s));
                std::size_t got = compute_mk(p, nk, digits, k);
                mk_ok = mk_ok && Int(static_cast<unsigned long>(got)) == expect;
            }
        }
        push(rep.budgets, "mk-defect", "m_k(limit) = n_k - s for k > l",
             BoundInterval::exactly(static_cast<double>(s)), mk_ok);
    }

    // metric convergence of the witnesses to the limit
    bool mono = true;
    Rat prev;
    bool have_prev = false;
    Rat last(0);
    for (const auto& w : rep.witnesses) {
        Int next_pos = nk.term(l + w.index + 1) - Int(static_cast<unsigned long>(s));
        Rat d = metric_d(w.element, rep.limit, next_pos.get_ui() + 2);
        mono = mono && (!have_prev || d <= prev);
        prev = d;
        have_prev = true;
        last = d;
    }
    if (have_prev)
        push(rep.budgets, "limit-convergence", "d(w_r, limit) nonincreasing to 0",
             rat_interval(last), mono && last < epsilon / 20);
    return rep;
}

// --- family C: products of cyclic groups --------------------------------------

std::size_t product_witness_start(const Rat& epsilon) {
    check_epsilon(epsilon);
    std::size_t l = 1;
    while (Rat(Int(1), ipow(Int(2), l)) >= epsilon / 3) ++l;
    return l;
}

Element product_witness_element(const BaseSequence& b, const Rat& epsilon, std::size_t l,
                                std::size_t k) {
    Model m = Model::product(b);
    if (k <= l) return Element::zero(m);
    std::vector<Int> digits(k + 1, Int(0));
    for (std::size_t n = l; n <= k; ++n) digits[n] = floor_rat(epsilon * Rat(b.term(n)) / 20);
    return Element::make(std::move(m), std::move(digits), TailRule::zero());
}

WitnessReport product_witness(const BaseSequence& b, const Rat& epsilon, std::size_t k_max) {
    check_epsilon(epsilon);
    if (!b.valid_product_base())
        throw DomainError("product witness needs 1 < b_0 < b_1 < ...");
    WitnessReport rep;
    rep.family = "C";
    rep.epsilon = epsilon;
    rep.scale = k_max;
    rep.sequence = CharSequence::product(b);
    const CharSequence& u = rep.sequence;
    Element zero = Element::zero(u.model);

    std::size_t l = product_witness_start(epsilon);
    rep.l = l;
    {
        Rat at_l(Int(1), ipow(Int(2), l));
        bool minimal = l == 1 || Rat(Int(1), ipow(Int(2), l - 1)) >= epsilon / 3;
        push(rep.budgets, "start-index", "2^-l < eps/3, minimal", rat_interval(at_l),
             at_l < epsilon / 3 && minimal);
    }

    BoundInterval strong_bound = add(rat_interval(epsilon / 3), two_pi_mul(epsilon / 20));
    for (std::size_t k = l + 1; k <= k_max; ++k) {
        WitnessEntry w;
        w.index = k;
        w.element = product_witness_element(b, epsilon, l, k);

        Rat d = metric_d(w.element, zero, k + 2);
        push(rep.budgets, "distance[" + std::to_string(k) + "]", "d(0,w_k) <= 2^-l",
             rat_interval(d), d <= Rat(Int(1), ipow(Int(2), l)));

        BoundInterval pairing{0.0, 0.0, true};
        bool ratio_small = true;
        for (std::size_t n = 0; n <= k; ++n) {
            Rat ratio(w.element.digit(n), b.term(n));
            ratio.canonicalize();
            ratio_small = ratio_small && ratio <= epsilon / 20;
            pairing = max(pairing, seq_pair_norm(u, n, w.element));
        }
        push(rep.budgets, "pairing[" + std::to_string(k) + "]",
             "digit ratio <= eps/20 and |1-(u_n,w_k)| < eps", pairing,
             ratio_small && below(pairing, epsilon));

        w.rho_enclosure = rho(u, w.element, zero, k + 1);
        push(rep.budgets, "rho[" + std::to_string(k) + "]", "rho(0,w_k) < eps",
             w.rho_enclosure, below(w.rho_enclosure, epsilon));
        push(rep.budgets, "rho-strong[" + std::to_string(k) + "]",
             "rho(0,w_k) < eps/3 + 2*pi*eps/20", w.rho_enclosure,
             below(w.rho_enclosure, strong_bound));

        w.verdict = witness_verdict(u, w.element);
        push(rep.budgets, "member[" + std::to_string(k) + "]", "w_k in s_u",
             BoundInterval::exactly(0.0), w.verdict.member());
        rep.witnesses.push_back(std::move(w));
    }

    rep.limit = Element::make(u.model, std::vector<Int>(l, Int(0)),
                              TailRule::scaled_floor(epsilon / 20));
    rep.limit_verdict = decide_membership(u, rep.limit, 256);
    push(rep.budgets, "limit-verdict", "limit not in s_u, defect eps/20",
         rat_interval(epsilon / 20),
         rep.limit_verdict.outcome == Verdict::Outcome::NonMember &&
             rep.limit_verdict.limit == epsilon / 20);

    bool mono = true;
    Rat prev;
    bool have_prev = false;
    Rat last(0);
    for (const auto& w : rep.witnesses) {
        Rat d = metric_d(w.element, rep.limit, std::max<std::size_t>(k_max + 64, 256));
        mono = mono && (!have_prev || d <= prev);
        prev = d;
        have_prev = true;
        last = d;
    }
    if (have_prev)
        push(rep.budgets, "limit-convergence", "d(w_k, limit) nonincreasing to 0",
             rat_interval(last), mono && last <= Rat(Int(1), ipow(Int(2), k_max)));
    return rep;
}

WitnessReport unbounded_witness_report(const GroupDescriptor& d, const Rat& epsilon,
                                       std::size_t scale, const WitnessConfig& cfg) {
    WitnessFamily fam = select_unbounded_witness(d);
    switch (fam.c) {
        case WitnessFamily::Case::A:
            return torus_witness(cfg.torus_bases, epsilon, scale);
        case WitnessFamily::Case::B:
            return padic_witness(fam.p, cfg.padic_nk, epsilon, scale);
        case WitnessFamily::Case::C:
            return product_witness(*fam.bases, epsilon, scale);
    }
    throw DomainError("unreachable");
}

}  // namespace tchar
