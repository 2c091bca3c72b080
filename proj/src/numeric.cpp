#include "tchar/numeric.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace tchar {

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Rat mod1(const Rat& q) {
    Rat r = q - Rat(floor_rat(q));
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational", 0);
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("expected integer in rational", j);
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    i = digits(0);
    if (i == s.size()) return Rat(Int(s));
    if (s[i] != '/') throw ParseError("expected '/' in rational", i);
    std::size_t j = digits(i + 1);
    if (j != s.size()) throw ParseError("trailing characters in rational", j);
    Int num(s.substr(0, i));
    Int den(s.substr(i + 1));
    if (den == 0) throw ParseError("zero denominator", i + 1);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int parse_int(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer", 0);
    std::size_t j = 0;
    if (s[j] == '-' || s[j] == '+') ++j;
    if (j >= s.size()) throw ParseError("expected digits", j);
    for (; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError("invalid integer", j);
    return Int(s);
}

namespace {

double rat_to_double(const Rat& q, mpfr_rnd_t rnd) {
    mpfr_t x;
    mpfr_init2(x, 64);
    mpfr_set_q(x, q.get_mpq_t(), rnd);
    double d = mpfr_get_d(x, rnd);
    mpfr_clear(x);
    return d;
}

}  // namespace

double to_double_down(const Rat& q) { return rat_to_double(q, MPFR_RNDD); }
double to_double_up(const Rat& q) { return rat_to_double(q, MPFR_RNDU); }

BoundInterval BoundInterval::lower_only(double lo) {
    return {lo, std::numeric_limits<double>::infinity(), false};
}

bool BoundInterval::upper_finite() const { return std::isfinite(hi); }

std::string BoundInterval::str() const {
    return "[" + double_str17(lo) + "," + double_str17(hi) + "]";
}

BoundInterval add(const BoundInterval& a, const BoundInterval& b) {
    BoundInterval r;
    r.lo = add_down(a.lo, b.lo);
    r.hi = add_up(a.hi, b.hi);
    r.exact = a.exact && b.exact && r.lo == r.hi;
    return r;
}

BoundInterval max(const BoundInterval& a, const BoundInterval& b) {
    BoundInterval r;
    r.lo = std::max(a.lo, b.lo);
    r.hi = std::max(a.hi, b.hi);
    r.exact = r.lo == r.hi && ((a.exact && a.hi == r.hi) || (b.exact && b.hi == r.hi));
    return r;
}

double add_down(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return s;
    if (s - a == b && s - b == a) return s;  // sum is exact
    return std::nextafter(s, -std::numeric_limits<double>::infinity());
}

double add_up(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return s;
    if (s - a == b && s - b == a) return s;
    return std::nextafter(s, std::numeric_limits<double>::infinity());
}

std::string double_str17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace tchar
