#pragma once

#include "tchar/numeric.hpp"

#include <utility>

namespace tchar {

// An exact rational residue mod 1: the value phi of a character pairing
// e^{2*pi*i*phi}. Always reduced and normalized into [0, 1).
class Angle {
public:
    Angle() : value_(0) {}
    explicit Angle(const Rat& q) : value_(mod1(q)) {}

    const Rat& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    Angle operator+(const Angle& o) const { return Angle(value_ + o.value_); }
    Angle operator-(const Angle& o) const { return Angle(value_ - o.value_); }
    Angle operator-() const { return Angle(-value_); }
    Angle scaled(const Int& k) const { return Angle(Rat(k) * value_); }

    bool operator==(const Angle& o) const { return value_ == o.value_; }
    bool operator!=(const Angle& o) const { return value_ != o.value_; }

    std::string str() const { return rat_str(value_); }
    static Angle parse(const std::string& s) { return Angle(parse_rat(s)); }

private:
    Rat value_;
};

// Distance from the angle to the nearest integer: min(v, 1-v), in [0, 1/2].
Rat nearest_int_dist(const Angle& a);

// Certified enclosure of |1 - e^{2*pi*i*a}| = 2*sin(pi*||a||).
// The endpoints are computed with directed rounding and widened one step
// outward, so pi*||a|| <= hi and lo <= 2*pi*||a|| always hold.
BoundInterval unit_norm(const Angle& a);

// Enclosure of 2*sin(pi*d) over d in [dlo, dhi] subset of [0, 1/2].
BoundInterval norm_from_dist_range(const Rat& dlo, const Rat& dhi);

// Exact range of the nearest-integer distance ||theta|| over the real
// interval [lo, hi] (width < 1).
std::pair<Rat, Rat> dist_range(const Rat& lo, const Rat& hi);

// Enclosure of |1 - e^{2*pi*i*theta}| over all theta within +-slack of the
// center angle. slack = 0 reduces to unit_norm(center).
BoundInterval norm_within(const Angle& center, const Rat& slack);

// Enclosures of pi*q and 2*pi*q for q >= 0.
BoundInterval pi_mul(const Rat& q);
BoundInterval two_pi_mul(const Rat& q);

}  // namespace tchar
