#include "tchar/angle.hpp"

#include <mpfr.h>

#include <algorithm>

namespace tchar {

namespace {

constexpr mpfr_prec_t kPrec = 96;

// 2*sin(pi*d) for exact rational d in [0, 1/2], rounded in direction rnd
// and stepped once outward. Monotone in d on this range, so directed
// endpoint evaluation gives a certified enclosure.
double two_sin_pi(const Rat& d, mpfr_rnd_t rnd) {
    mpfr_t x, pi;
    mpfr_init2(x, kPrec);
    mpfr_init2(pi, kPrec);
    mpfr_const_pi(pi, rnd);
    mpfr_set_q(x, d.get_mpq_t(), rnd);
    mpfr_mul(x, x, pi, rnd);
    mpfr_sin(x, x, rnd);
    mpfr_mul_ui(x, x, 2, rnd);
    if (rnd == MPFR_RNDD)
        mpfr_nextbelow(x);
    else
        mpfr_nextabove(x);
    double r = mpfr_get_d(x, rnd);
    mpfr_clear(x);
    mpfr_clear(pi);
    return r;
}

double pi_mul_dir(const Rat& q, unsigned mult, mpfr_rnd_t rnd) {
    mpfr_t x, pi;
    mpfr_init2(x, kPrec);
    mpfr_init2(pi, kPrec);
    mpfr_const_pi(pi, rnd);
    mpfr_set_q(x, q.get_mpq_t(), rnd);
    mpfr_mul(x, x, pi, rnd);
    mpfr_mul_ui(x, x, mult, rnd);
    if (rnd == MPFR_RNDD)
        mpfr_nextbelow(x);
    else
        mpfr_nextabove(x);
    double r = mpfr_get_d(x, rnd);
    mpfr_clear(x);
    mpfr_clear(pi);
    return r;
}

Rat dist_of(const Rat& residue) {
    // residue in [0,1)
    return residue <= Rat(1, 2) ? residue : Rat(1) - residue;
}

}  // namespace

Rat nearest_int_dist(const Angle& a) { return dist_of(a.value()); }

BoundInterval norm_from_dist_range(const Rat& dlo, const Rat& dhi) {
    if (dlo == dhi && dlo == 0) return BoundInterval::exactly(0.0);
    double lo = std::max(0.0, two_sin_pi(dlo, MPFR_RNDD));
    double hi = std::min(2.0, two_sin_pi(dhi, MPFR_RNDU));
    return BoundInterval::of(lo, hi);
}

BoundInterval unit_norm(const Angle& a) {
    Rat d = nearest_int_dist(a);
    return norm_from_dist_range(d, d);
}

std::pair<Rat, Rat> dist_range(const Rat& lo, const Rat& hi) {
    if (hi - lo >= 1) return {Rat(0), Rat(1, 2)};
    Rat dl = dist_of(mod1(lo));
    Rat dh = dist_of(mod1(hi));
    bool hits_int = floor_rat(lo) != floor_rat(hi) || mod1(lo) == 0;
    Rat half(1, 2);
    bool hits_half;  // does [lo,hi] contain a point at distance exactly 1/2?
    {
        Rat a = lo - half, b = hi - half;
        hits_half = floor_rat(a) != floor_rat(b) || mod1(a) == 0;
    }
    Rat dmin = hits_int ? Rat(0) : std::min(dl, dh);
    Rat dmax = hits_half ? half : std::max(dl, dh);
    return {dmin, dmax};
}

BoundInterval norm_within(const Angle& center, const Rat& slack) {
    if (slack == 0) return unit_norm(center);
    if (slack < 0) throw DomainError("negative angle slack");
    auto [dmin, dmax] = dist_range(center.value() - slack, center.value() + slack);
    return norm_from_dist_range(dmin, dmax);
}

BoundInterval pi_mul(const Rat& q) {
    if (q == 0) return BoundInterval::exactly(0.0);
    return BoundInterval::of(std::max(0.0, pi_mul_dir(q, 1, MPFR_RNDD)),
                             pi_mul_dir(q, 1, MPFR_RNDU));
}

BoundInterval two_pi_mul(const Rat& q) {
    if (q == 0) return BoundInterval::exactly(0.0);
    return BoundInterval::of(std::max(0.0, pi_mul_dir(q, 2, MPFR_RNDD)),
                             pi_mul_dir(q, 2, MPFR_RNDU));
}

}  // namespace tchar
