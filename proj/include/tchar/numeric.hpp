#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tchar {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
    std::size_t pos;
};

struct ModelMismatch : Error {
    using Error::Error;
};

struct HorizonError : Error {
    using Error::Error;
};

// encode_torus: expansion of q did not terminate within the horizon.
struct NonTerminating : Error {
    explicit NonTerminating(std::size_t horizon)
        : Error("mixed-radix expansion does not terminate within horizon " +
                std::to_string(horizon)),
          horizon(horizon) {}
    std::size_t horizon;
};

struct DomainError : Error {
    using Error::Error;
};

Int ipow(const Int& base, unsigned long e);

// floor(q) and q - floor(q)
Int floor_rat(const Rat& q);
Rat mod1(const Rat& q);

// "num/den" serialization; den is always printed, even when it is 1.
std::string rat_str(const Rat& q);
// Accepts "p/q" and plain "p"; rejects anything else.
Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

// Largest double <= q / smallest double >= q.
double to_double_down(const Rat& q);
double to_double_up(const Rat& q);

// A certified enclosure lo <= v <= hi of a non-negative real quantity.
// hi may be +infinity, which marks a lower-bound-only enclosure.
struct BoundInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool exact = false;

    static BoundInterval exactly(double v) { return {v, v, true}; }
    static BoundInterval of(double lo, double hi) { return {lo, hi, false}; }
    static BoundInterval lower_only(double lo);

    bool upper_finite() const;
    // "[lo,hi]" with 17 significant digits per endpoint.
    std::string str() const;
};

BoundInterval add(const BoundInterval& a, const BoundInterval& b);
BoundInterval max(const BoundInterval& a, const BoundInterval& b);

// Directed double arithmetic (one-ulp outward step after rounding to nearest).
double add_down(double a, double b);
double add_up(double a, double b);

std::string double_str17(double v);

}  // namespace tchar
