#include "tchar/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tchar {

namespace {

// sum_{n<end} c_n/u_n as an exact rational (Horner over the digit prefix)
Rat torus_partial_value(const Element& x, std::size_t end, ProductLadder& u) {
    if (end == 0) return Rat(0);
    Int acc = 0;
    for (std::size_t n = 0; n < end; ++n) acc = acc * x.model.bases.term(n) + x.digit(n);
    Rat v(acc, u.at(end - 1));
    v.canonicalize();
    return v;
}

Rat two_pow_neg(std::size_t n) {
    Rat r(Int(1), ipow(Int(2), static_cast<unsigned long>(n)));
    r.canonicalize();
    return r;
}

}  // namespace

PairValue pair_eval(const Character& chi, const Element& x, std::size_t horizon) {
    if (chi.kind != x.model.kind)
        throw ModelMismatch("character and element live in different models");
    if (chi.is_identity()) return {Angle(), Rat(0)};
    switch (x.model.kind) {
        case ModelKind::Torus: {
            if (horizon + 1 < x.prefix.size())
                throw HorizonError("horizon smaller than the element prefix");
            ProductLadder u(x.model.bases);
            if (x.finite_support()) {
                Rat v = torus_partial_value(x, x.support_end(), u);
                return {Angle(Rat(chi.k) * v), Rat(0)};
            }
            Rat v = torus_partial_value(x, horizon + 1, u);
            Rat slack(Int(2) * abs(chi.k), u.at(horizon));
            slack.canonicalize();
            return {Angle(Rat(chi.k) * v), slack};
        }
        case ModelKind::PAdic: {
            if (chi.t > 0 && chi.t - 1 > horizon)
                throw HorizonError("horizon smaller than the last digit the character reads");
            Int acc = 0;
            for (std::size_t j = chi.t; j-- > 0;) acc = acc * x.model.p + x.digit(j);
            Rat a(chi.m * acc, ipow(x.model.p, chi.t));
            a.canonicalize();
            return {Angle(a), Rat(0)};
        }
        case ModelKind::Product: {
            Rat sum(0);
            for (const auto& [n, c] : chi.support) {
                if (n > horizon)
                    throw HorizonError("horizon smaller than the character support");
                Rat term(c * x.digit(n), x.model.bases.term(n));
                term.canonicalize();
                sum += term;
            }
            return {Angle(sum), Rat(0)};
        }
    }
    throw DomainError("unreachable");
}

BoundInterval pair_norm(const Character& chi, const Element& x, std::size_t horizon) {
    PairValue p = pair_eval(chi, x, horizon);
    return norm_within(p.center, p.slack);
}

Element encode_torus(const Rat& q, const BaseSequence& bases, std::size_t horizon) {
    if (q < 0 || q >= 1) throw DomainError("encode_torus needs q in [0,1)");
    Model m = Model::torus(bases);
    std::vector<Int> digits;
    Rat r = q;
    for (std::size_t n = 0; r != 0; ++n) {
        if (n >= horizon) throw NonTerminating(horizon);
        Rat t = r * Rat(bases.term(n));
        Int c = floor_rat(t);
        digits.push_back(c);
        r = t - Rat(c);
    }
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
    return Element::make(std::move(m), std::move(digits), TailRule::zero());
}

Rat evaluate_torus(const Element& x) {
    if (x.model.kind != ModelKind::Torus) throw ModelMismatch("torus element expected");
    if (!x.finite_support()) throw DomainError("evaluate_torus needs a zero tail");
    ProductLadder u(x.model.bases);
    return torus_partial_value(x, x.support_end(), u);
}

Rat metric_d(const Element& x, const Element& y, std::size_t horizon) {
    if (x.model != y.model) throw ModelMismatch("metric_d needs a shared model");
    if (x.model.kind == ModelKind::Torus) {
        ProductLadder u(x.model.bases);
        if (x.finite_support() && y.finite_support()) {
            Rat diff = torus_partial_value(x, x.support_end(), u) -
                       torus_partial_value(y, y.support_end(), u);
            return nearest_int_dist(Angle(diff));
        }
        if (x.tail == y.tail) {
            std::size_t M = std::max(x.prefix.size(), y.prefix.size());
            Rat diff = torus_partial_value(x, M, u) - torus_partial_value(y, M, u);
            return nearest_int_dist(Angle(diff));
        }
        throw DomainError("tail rules not comparable exactly in the torus metric");
    }
    std::size_t limit = std::max({horizon, x.prefix.size(), y.prefix.size()});
    for (std::size_t n = 0; n < limit; ++n)
        if (x.digit(n) != y.digit(n)) return two_pow_neg(n);
    if (x.tail == y.tail) return Rat(0);
    throw DomainError("elements agree up to the horizon but tails differ");
}

RatInterval metric_d_bounds(const Element& x, const Element& y, std::size_t horizon) {
    if (x.model != y.model) throw ModelMismatch("metric_d needs a shared model");
    if (x.model.kind == ModelKind::Torus) {
        if ((x.finite_support() && y.finite_support()) || x.tail == y.tail) {
            Rat d = metric_d(x, y, horizon);
            return {d, d};
        }
        std::size_t h = std::max({horizon, x.prefix.size(), y.prefix.size()});
        ProductLadder u(x.model.bases);
        Rat diff = torus_partial_value(x, h + 1, u) - torus_partial_value(y, h + 1, u);
        Rat tail(Int(1), u.at(h));
        tail.canonicalize();
        auto [dmin, dmax] = dist_range(diff - tail, diff + tail);
        return {dmin, dmax};
    }
    std::size_t limit = std::max({horizon, x.prefix.size(), y.prefix.size()});
    for (std::size_t n = 0; n < limit; ++n)
        if (x.digit(n) != y.digit(n)) {
            Rat d = two_pow_neg(n);
            return {d, d};
        }
    if (x.tail == y.tail) return {Rat(0), Rat(0)};
    return {Rat(0), two_pow_neg(limit)};
}

// ---------------------------------------------------------------------------
// rho

namespace {

constexpr std::size_t kExactPAdicDigits = 4096;
constexpr std::size_t kPAdicWindow = 192;
constexpr std::size_t kTorusWindow = 48;
// 2^-1100 underflows double, so enclosures this small need no exact value
constexpr std::size_t kDoubleFloorBits = 1100;

// (u_s, x) = sum_{n>s} c_n / (a_{s+1}*...*a_n): digits at or below s feed
// integer multiples of 1 into the pairing. A 48-digit window leaves a tail
// below 2^-48 relative to the leading base, certified by the slack.
PairValue torus_seq_angle(const Element& x, std::size_t s) {
    bool finite = x.finite_support();
    std::size_t end = finite ? x.support_end() : 0;
    if (finite && end <= s + 1) return {Angle(), Rat(0)};
    Rat center(0);
    Int prod = 1;
    std::size_t n = s + 1;
    for (; n <= s + kTorusWindow; ++n) {
        if (finite && n >= end) break;
        prod *= x.model.bases.term(n);
        Int c = x.digit(n);
        if (c != 0) {
            Rat term(c, prod);
            term.canonicalize();
            center += term;
        }
    }
    Rat slack(0);
    if (!(finite && n >= end)) {
        slack = Rat(Int(2), prod);
        slack.canonicalize();
    }
    return {Angle(center), slack};
}

struct SupState {
    double lo = 0.0, hi = 0.0;
    bool all_exact = true;
    void include(const BoundInterval& e) {
        lo = std::max(lo, e.lo);
        hi = std::max(hi, e.hi);
        all_exact = all_exact && e.exact;
    }
    void include_upper(double bound) {
        hi = std::max(hi, bound);
        if (bound > 0) all_exact = false;
    }
    void mark_unbounded() {
        hi = std::numeric_limits<double>::infinity();
        all_exact = false;
    }
};

Rat clamp_half(const Rat& q) { return q > Rat(1, 2) ? Rat(1, 2) : q; }

double norm_upper_from_dist(const Rat& dist) {
    return norm_from_dist_range(Rat(0), clamp_half(dist)).hi;
}

// Upper bounds for |1-(u_s,x)| over s > h, derived from the tail rule
// alone. +inf means no analytic estimate applies.

double torus_tail_norm_bound(const Element& x, std::size_t h) {
    if (h + 1 < x.prefix.size()) return std::numeric_limits<double>::infinity();
    if (x.tail.kind() == TailRule::Kind::ScaledFloor) {
        // u_s * sum_{n>s} floor((a_n-1)t)/u_n <= t * u_s * sum (1/u_{n-1} - 1/u_n) <= t
        return norm_upper_from_dist(x.tail.scale());
    }
    Int c = x.tail.max_digit_bound();
    if (c >= 0) {
        // u_s * sum_{n>s} c/u_n <= c * (1/a_{s+1}) * (1 + 1/2 + ...) <= 2c/a_{s+1}
        Rat bound(Int(2) * c, x.model.bases.min_term_from(h + 2));
        bound.canonicalize();
        return norm_upper_from_dist(bound);
    }
    return std::numeric_limits<double>::infinity();
}

double padic_tail_norm_bound(const CharSequence& u, const Element& x, std::size_t h) {
    if (x.tail.kind() != TailRule::Kind::SpacedOnes)
        return std::numeric_limits<double>::infinity();
    // one-positions below n_k stop at n_k - s, so the digit sum stays below
    // p^(n_k-s+1); the prefix block adds at most p^(prefix)/p^(n_k+1)
    Rat bound(Int(1), ipow(u.model.p, x.tail.spaced_s()));
    bound.canonicalize();
    Int nk_next = u.nk.term(h + 1);
    if (nk_next.fits_ulong_p()) {
        unsigned long e = nk_next.get_ui() + 1;
        if (e > x.prefix.size()) {
            Rat pref(ipow(u.model.p, x.prefix.size()), ipow(u.model.p, e));
            pref.canonicalize();
            bound += pref;
        }
    }
    return norm_upper_from_dist(bound);
}

double product_tail_norm_bound(const Element& x, std::size_t h) {
    if (h + 1 < x.prefix.size()) return std::numeric_limits<double>::infinity();
    if (x.tail.kind() == TailRule::Kind::ScaledFloor)
        return norm_upper_from_dist(x.tail.scale());
    Int c = x.tail.max_digit_bound();
    if (c >= 0) {
        Rat bound(c, x.model.bases.min_term_from(h + 1));
        bound.canonicalize();
        return norm_upper_from_dist(bound);
    }
    return std::numeric_limits<double>::infinity();
}

// |(u_n,x) - (u_n,y)| <= |1-(u_n,x)| + |1-(u_n,y)| on the circle, so the
// tail of the sup splits into per-element bounds.
void rho_torus(const CharSequence&, const Element& x, const Element& y,
               std::size_t horizon, SupState& sup) {
    std::size_t h = std::max({horizon, x.prefix.size(), y.prefix.size()});
    bool fx = x.finite_support(), fy = y.finite_support();
    if (fx) h = std::max(h, x.support_end());
    if (fy) h = std::max(h, y.support_end());

    for (std::size_t s = 0; s <= h; ++s) {
        PairValue ax = torus_seq_angle(x, s);
        PairValue ay = torus_seq_angle(y, s);
        sup.include(norm_within(ax.center - ay.center, ax.slack + ay.slack));
    }

    if (fx && fy) return;          // pairings are exactly 1 past the supports
    if (x.tail == y.tail) return;  // digits agree beyond both prefixes
    double tx = fx ? 0.0 : torus_tail_norm_bound(x, h);
    double ty = fy ? 0.0 : torus_tail_norm_bound(y, h);
    if (std::isfinite(tx) && std::isfinite(ty))
        sup.include_upper(tx + ty);
    else
        sup.mark_unbounded();
}

// p-adic pairing angle for u_k = 1/p^(n_k+1): exact whenever the digit
// sum closes out (finite support, or short expansions), otherwise windowed
// to the top digits with a p^-W allowance.
PairValue padic_angle(const Element& x, const Int& p, const Int& nk_val) {
    if (!nk_val.fits_ulong_p()) throw DomainError("index rule value too large");
    std::size_t digits = nk_val.get_ui() + 1;
    auto horner = [&](std::size_t from, std::size_t count) {
        std::vector<Int> w = x.digits_window(from, count);
        Int acc = 0;
        for (std::size_t j = count; j-- > 0;) acc = acc * p + w[j];
        return acc;
    };
    if (x.finite_support()) {
        std::size_t end = std::min(digits, x.support_end());
        if (digits - end >= kDoubleFloorBits) {
            // the angle sits below 2^-1100, beyond double resolution: a
            // capped enclosure [0, 2^-1100] is as sharp as the output type
            Rat slack(Int(1), ipow(Int(2), kDoubleFloorBits));
            slack.canonicalize();
            return {Angle(), slack};
        }
        Rat a(horner(0, end), ipow(p, digits));
        a.canonicalize();
        return {Angle(a), Rat(0)};
    }
    if (digits <= kExactPAdicDigits) {
        Rat a(horner(0, digits), ipow(p, digits));
        a.canonicalize();
        return {Angle(a), Rat(0)};
    }
    Rat a(horner(digits - kPAdicWindow, kPAdicWindow), ipow(p, kPAdicWindow));
    a.canonicalize();
    Rat slack(Int(1), ipow(p, kPAdicWindow));
    slack.canonicalize();
    return {Angle(a), slack};
}

void rho_padic(const CharSequence& u, const Element& x, const Element& y,
               std::size_t horizon, SupState& sup) {
    const Int& p = u.model.p;
    auto diff_norm = [&](std::size_t k) {
        Int nk_val = u.nk.term(k);
        PairValue ax = padic_angle(x, p, nk_val);
        PairValue ay = padic_angle(y, p, nk_val);
        return norm_within(ax.center - ay.center, ax.slack + ay.slack);
    };
    for (std::size_t k = 0; k <= horizon; ++k) sup.include(diff_norm(k));

    bool fx = x.finite_support(), fy = y.finite_support();
    if (fx && fy) {
        // once n_k passes both supports the difference numerator is fixed
        // against a growing power, so one extra index dominates the tail
        Int end(static_cast<unsigned long>(std::max(x.support_end(), y.support_end())));
        std::size_t k = horizon + 1;
        while (u.nk.term(k) < end) {
            sup.include(diff_norm(k));
            if (++k > horizon + (1u << 16)) {
                sup.mark_unbounded();
                return;
            }
        }
        sup.include(diff_norm(k));
        return;
    }
    auto tail_bound = [&](const Element& e, bool fin) -> double {
        if (fin) {
            std::size_t end = e.support_end();
            if (end == 0) return 0.0;
            Int nk_next = u.nk.term(horizon + 1);
            if (!nk_next.fits_ulong_p()) return std::numeric_limits<double>::infinity();
            unsigned long exp = nk_next.get_ui() + 1;
            if (exp <= end) return std::numeric_limits<double>::infinity();
            Rat b(ipow(p, end), ipow(p, exp));
            b.canonicalize();
            return norm_upper_from_dist(b);
        }
        return padic_tail_norm_bound(u, e, horizon);
    };
    double tx = tail_bound(x, fx), ty = tail_bound(y, fy);
    if (std::isfinite(tx) && std::isfinite(ty))
        sup.include_upper(tx + ty);
    else
        sup.mark_unbounded();
}

void rho_product(const CharSequence&, const Element& x, const Element& y,
                 std::size_t horizon, SupState& sup) {
    std::size_t h = std::max({horizon, x.prefix.size(), y.prefix.size()});
    bool fx = x.finite_support(), fy = y.finite_support();
    if (fx) h = std::max(h, x.support_end());
    if (fy) h = std::max(h, y.support_end());
    for (std::size_t n = 0; n <= h; ++n) {
        Rat dx(x.digit(n) - y.digit(n), x.model.bases.term(n));
        dx.canonicalize();
        sup.include(unit_norm(Angle(dx)));
    }
    if ((fx && fy) || x.tail == y.tail) return;
    double tx = fx ? 0.0 : product_tail_norm_bound(x, h);
    double ty = fy ? 0.0 : product_tail_norm_bound(y, h);
    if (std::isfinite(tx) && std::isfinite(ty))
        sup.include_upper(tx + ty);
    else
        sup.mark_unbounded();
}

}  // namespace

PairValue seq_pair(const CharSequence& u, std::size_t s, const Element& x) {
    if (!(u.model == x.model))
        throw ModelMismatch("sequence and element live in different models");
    switch (u.model.kind) {
        case ModelKind::Torus:
            return torus_seq_angle(x, s);
        case ModelKind::PAdic:
            return padic_angle(x, u.model.p, u.nk.term(s));
        case ModelKind::Product: {
            Rat a(x.digit(s), u.model.bases.term(s));
            a.canonicalize();
            return {Angle(a), Rat(0)};
        }
    }
    throw DomainError("unreachable");
}

BoundInterval seq_pair_norm(const CharSequence& u, std::size_t s, const Element& x) {
    PairValue p = seq_pair(u, s, x);
    return norm_within(p.center, p.slack);
}

std::vector<BoundInterval> pairing_norm_trace(const CharSequence& u, const Element& x,
                                              std::size_t horizon) {
    std::vector<BoundInterval> out;
    out.reserve(horizon);
    for (std::size_t n = 0; n < horizon; ++n) out.push_back(seq_pair_norm(u, n, x));
    return out;
}

BoundInterval rho(const CharSequence& u, const Element& x, const Element& y,
                  std::size_t horizon) {
    if (!(u.model == x.model) || !(u.model == y.model))
        throw ModelMismatch("rho needs the sequence and both elements in one model");
    RatInterval d = metric_d_bounds(x, y, horizon);
    SupState sup;
    switch (u.model.kind) {
        case ModelKind::Torus:
            rho_torus(u, x, y, horizon, sup);
            break;
        case ModelKind::PAdic:
            rho_padic(u, x, y, horizon, sup);
            break;
        case ModelKind::Product:
            rho_product(u, x, y, horizon, sup);
            break;
    }
    BoundInterval out;
    out.lo = add_down(to_double_down(d.lo), sup.lo);
    out.hi = add_up(to_double_up(d.hi), sup.hi);
    out.lo = std::max(0.0, out.lo);
    out.exact = d.exact() && sup.all_exact && out.lo == out.hi;
    return out;
}

Element add(const Element& x, const Element& y) {
    if (x.model != y.model) throw ModelMismatch("add needs a shared model");
    if (!x.finite_support() || !y.finite_support())
        throw DomainError("add is defined for finite-support elements");
    switch (x.model.kind) {
        case ModelKind::Torus: {
            Rat sum = mod1(evaluate_torus(x) + evaluate_torus(y));
            return encode_torus(sum, x.model.bases,
                                std::max(x.support_end(), y.support_end()) + 2);
        }
        case ModelKind::PAdic: {
            std::size_t end = std::max(x.support_end(), y.support_end());
            std::vector<Int> digits;
            Int carry = 0;
            for (std::size_t n = 0; n < end + 1 || carry != 0; ++n) {
                Int s = x.digit(n) + y.digit(n) + carry;
                carry = s >= x.model.p ? 1 : 0;
                digits.push_back(carry != 0 ? Int(s - x.model.p) : s);
            }
            while (!digits.empty() && digits.back() == 0) digits.pop_back();
            return Element::make(x.model, std::move(digits), TailRule::zero());
        }
        case ModelKind::Product: {
            std::size_t end = std::max(x.support_end(), y.support_end());
            std::vector<Int> digits;
            for (std::size_t n = 0; n < end; ++n) {
                Int b = x.model.bases.term(n);
                Int s = x.digit(n) + y.digit(n);
                digits.push_back(s >= b ? Int(s - b) : s);
            }
            while (!digits.empty() && digits.back() == 0) digits.pop_back();
            return Element::make(x.model, std::move(digits), TailRule::zero());
        }
    }
    throw DomainError("unreachable");
}

}  // namespace tchar
