#pragma once

#include "tchar/angle.hpp"
#include "tchar/element.hpp"

namespace tchar {

// Result of a character pairing: the true angle lies within +-slack of
// center (slack = 0 means the pairing was evaluated exactly).
struct PairValue {
    Angle center;
    Rat slack;
    bool exact() const { return slack == 0; }
};

// (chi, x) as an angle. P-adic and product pairings are always exact; torus
// pairings are exact for finite-support elements and otherwise enclose the
// value by truncating at the horizon with a 2k/u_h tail allowance.
PairValue pair_eval(const Character& chi, const Element& x, std::size_t horizon);

// |1 - (chi, x)| enclosure.
BoundInterval pair_norm(const Character& chi, const Element& x, std::size_t horizon);

// (u_s, x) evaluated against the s-th member of the characterizing
// sequence. Exact whenever finitely many digits decide the value (p-adic
// always, product always, torus with the support inside the digit window);
// otherwise carries a tiny window allowance instead of a horizon-wide one.
PairValue seq_pair(const CharSequence& u, std::size_t s, const Element& x);
BoundInterval seq_pair_norm(const CharSequence& u, std::size_t s, const Element& x);

// |1 - (u_n, x)| enclosures for n = 0..horizon-1.
std::vector<BoundInterval> pairing_norm_trace(const CharSequence& u, const Element& x,
                                              std::size_t horizon);

// Greedy mixed-radix digits of q in [0,1). Throws NonTerminating when the
// expansion does not close out within the horizon.
Element encode_torus(const Rat& q, const BaseSequence& bases, std::size_t horizon);

// Value of a finite-support torus element: sum c_n / u_n.
Rat evaluate_torus(const Element& x);

// Exact distance in the ambient metric: torus ||x-y||, p-adic and product
// 2^(-first differing index). Throws DomainError for tail rules it cannot
// compare exactly.
Rat metric_d(const Element& x, const Element& y, std::size_t horizon = 256);

struct RatInterval {
    Rat lo, hi;
    bool exact() const { return lo == hi; }
};

// Certified distance enclosure; never fails.
RatInterval metric_d_bounds(const Element& x, const Element& y, std::size_t horizon = 256);

// Enclosure of rho(x,y) = d(x,y) + sup_n |(u_n,x) - (u_n,y)|. The lower
// bound always comes from exact evaluation up to the horizon; the upper
// bound is finite when the tails admit an analytic estimate (finite
// support, scaled floors, spaced ones, bounded-digit tails against zero)
// and is +infinity otherwise.
BoundInterval rho(const CharSequence& u, const Element& x, const Element& y,
                  std::size_t horizon);

// Sum of two finite-support elements (digitwise with carries where the
// model has them).
Element add(const Element& x, const Element& y);

}  // namespace tchar
