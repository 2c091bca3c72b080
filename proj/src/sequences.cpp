#include "tchar/sequences.hpp"

#include "parse_util.hpp"

#include <algorithm>

namespace tchar {

using parse::expect;
using parse::expect_end;
using parse::peek;
using parse::read_integer;
using parse::read_name;
using parse::read_rational;

// --- BaseSequence --------------------------------------------------------

BaseSequence BaseSequence::arithmetic(Int start, Int step) {
    if (start < 1 || step < 0) throw DomainError("arith: terms must stay positive");
    BaseSequence r;
    r.kind_ = Kind::Arithmetic;
    r.a_ = std::move(start);
    r.b_ = std::move(step);
    return r;
}

BaseSequence BaseSequence::geometric(Int start, Int ratio) {
    if (start < 1 || ratio < 1) throw DomainError("geom: terms must stay positive");
    BaseSequence r;
    r.kind_ = Kind::Geometric;
    r.a_ = std::move(start);
    r.b_ = std::move(ratio);
    return r;
}

BaseSequence BaseSequence::product_of(BaseSequence inner) {
    BaseSequence r;
    r.kind_ = Kind::Product;
    r.inner_ = std::make_shared<const BaseSequence>(std::move(inner));
    return r;
}

BaseSequence BaseSequence::explicit_list(std::vector<Int> terms, BaseSequence cont) {
    for (const Int& t : terms)
        if (t < 1) throw DomainError("explicit: terms must be positive");
    BaseSequence r;
    r.kind_ = Kind::Explicit;
    r.terms_ = std::move(terms);
    r.inner_ = std::make_shared<const BaseSequence>(std::move(cont));
    return r;
}

Int BaseSequence::term(std::size_t n) const {
    switch (kind_) {
        case Kind::Arithmetic:
            return a_ + Int(static_cast<unsigned long>(n)) * b_;
        case Kind::Geometric:
            return a_ * ipow(b_, static_cast<unsigned long>(n));
        case Kind::Product: {
            Int p = 1;
            for (std::size_t k = 0; k <= n; ++k) p *= inner_->term(k);
            return p;
        }
        case Kind::Explicit:
            if (n < terms_.size()) return terms_[n];
            return inner_->term(n);
    }
    throw DomainError("unreachable");
}

Int BaseSequence::min_term_from(std::size_t n0) const {
    switch (kind_) {
        case Kind::Arithmetic:
        case Kind::Geometric:
        case Kind::Product:
            // nondecreasing by the positivity constraints
            return term(n0);
        case Kind::Explicit: {
            if (n0 >= terms_.size()) return inner_->min_term_from(n0);
            Int m = terms_[n0];
            for (std::size_t i = n0 + 1; i < terms_.size(); ++i) m = std::min(m, terms_[i]);
            return std::min(m, inner_->min_term_from(terms_.size()));
        }
    }
    throw DomainError("unreachable");
}

bool BaseSequence::strictly_increasing() const {
    switch (kind_) {
        case Kind::Arithmetic:
            return b_ >= 1;
        case Kind::Geometric:
            return b_ >= 2;
        case Kind::Product:
            return inner_->min_term_from(1) >= 2;
        case Kind::Explicit: {
            for (std::size_t i = 0; i + 1 < terms_.size(); ++i)
                if (terms_[i] >= terms_[i + 1]) return false;
            if (!inner_->strictly_increasing()) return false;
            return terms_.empty() || inner_->term(terms_.size()) > terms_.back();
        }
    }
    return false;
}

bool BaseSequence::has_infinitely_many_at_least(const Int& b) const {
    switch (kind_) {
        case Kind::Arithmetic:
            return b_ >= 1 || a_ >= b;
        case Kind::Geometric:
            return b_ >= 2 || a_ >= b;
        case Kind::Product: {
            if (inner_->has_infinitely_many_at_least(2)) return true;
            // nondecreasing: some term reaching b suffices
            for (std::size_t n = 0; n < 64; ++n)
                if (term(n) >= b) return true;
            return false;
        }
        case Kind::Explicit:
            return inner_->has_infinitely_many_at_least(b);
    }
    return false;
}

bool BaseSequence::tends_to_infinity() const {
    switch (kind_) {
        case Kind::Arithmetic:
            return b_ >= 1;
        case Kind::Geometric:
            return b_ >= 2;
        case Kind::Product:
            return inner_->has_infinitely_many_at_least(2);
        case Kind::Explicit:
            return inner_->tends_to_infinity();
    }
    return false;
}

bool BaseSequence::valid_torus_base() const {
    return all_terms_at_least(2) && tends_to_infinity();
}

bool BaseSequence::valid_product_base() const {
    return all_terms_at_least(2) && strictly_increasing();
}

bool BaseSequence::operator==(const BaseSequence& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Arithmetic:
        case Kind::Geometric:
            return a_ == o.a_ && b_ == o.b_;
        case Kind::Product:
            return *inner_ == *o.inner_;
        case Kind::Explicit:
            return terms_ == o.terms_ && *inner_ == *o.inner_;
    }
    return false;
}

std::string BaseSequence::str() const {
    switch (kind_) {
        case Kind::Arithmetic:
            return "arith(" + a_.get_str() + "," + b_.get_str() + ")";
        case Kind::Geometric:
            return "geom(" + a_.get_str() + "," + b_.get_str() + ")";
        case Kind::Product:
            return "prod(" + inner_->str() + ")";
        case Kind::Explicit: {
            std::string s = "explicit(";
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                if (i) s += ",";
                s += terms_[i].get_str();
            }
            s += ";" + inner_->str() + ")";
            return s;
        }
    }
    throw DomainError("unreachable");
}

BaseSequence BaseSequence::parse_at(const std::string& s, std::size_t& pos) {
    std::string name = read_name(s, pos);
    if (name == "arith") {
        expect(s, pos, '(');
        Int a = read_integer(s, pos);
        expect(s, pos, ',');
        Int b = read_integer(s, pos);
        expect(s, pos, ')');
        return arithmetic(std::move(a), std::move(b));
    }
    if (name == "geom") {
        expect(s, pos, '(');
        Int a = read_integer(s, pos);
        expect(s, pos, ',');
        Int b = read_integer(s, pos);
        expect(s, pos, ')');
        return geometric(std::move(a), std::move(b));
    }
    if (name == "prod") {
        expect(s, pos, '(');
        BaseSequence inner = parse_at(s, pos);
        expect(s, pos, ')');
        return product_of(std::move(inner));
    }
    if (name == "explicit") {
        expect(s, pos, '(');
        std::vector<Int> terms;
        while (!peek(s, pos, ';')) {
            terms.push_back(read_integer(s, pos));
            if (peek(s, pos, ',')) expect(s, pos, ',');
        }
        expect(s, pos, ';');
        BaseSequence cont = parse_at(s, pos);
        expect(s, pos, ')');
        return explicit_list(std::move(terms), std::move(cont));
    }
    throw ParseError("unknown base-sequence rule '" + name + "'", pos);
}

BaseSequence BaseSequence::parse(const std::string& s) {
    std::size_t pos = 0;
    BaseSequence r = parse_at(s, pos);
    expect_end(s, pos);
    return r;
}

const Int& ProductLadder::at(std::size_t n) {
    while (cache_.size() <= n) {
        std::size_t k = cache_.size();
        Int t = base_.term(k);
        cache_.push_back(k == 0 ? t : cache_.back() * t);
    }
    return cache_[n];
}

// --- IndexRule ------------------------------------------------------------

IndexRule IndexRule::arithmetic(Int start, Int step) {
    if (start < 0 || step < 1) throw DomainError("index arith: needs step >= 1");
    IndexRule r(Kind::Arithmetic);
    r.a_ = std::move(start);
    r.b_ = std::move(step);
    return r;
}

IndexRule IndexRule::geometric(Int start, Int ratio) {
    if (start < 1 || ratio < 2) throw DomainError("index geom: needs start >= 1, ratio >= 2");
    IndexRule r(Kind::Geometric);
    r.a_ = std::move(start);
    r.b_ = std::move(ratio);
    return r;
}

Int IndexRule::term(std::size_t k) const {
    Int ki(static_cast<unsigned long>(k));
    switch (kind_) {
        case Kind::Squares:
            return ki * ki;
        case Kind::Cubes:
            return ki * ki * ki;
        case Kind::Triangular:
            return (ki + 1) * (ki + 2) / 2;
        case Kind::Arithmetic:
            return a_ + ki * b_;
        case Kind::Geometric:
            return a_ * ipow(b_, static_cast<unsigned long>(k));
    }
    throw DomainError("unreachable");
}

bool IndexRule::gaps_diverge() const {
    switch (kind_) {
        case Kind::Squares:
        case Kind::Cubes:
        case Kind::Triangular:
        case Kind::Geometric:
            return true;
        case Kind::Arithmetic:
            return false;
    }
    return false;
}

std::size_t IndexRule::min_l_with_gaps_above(const Int& s, std::size_t l_min) const {
    // gaps are nondecreasing for every supported kind, so the first index
    // whose gap exceeds s works for all later indices too
    for (std::size_t l = l_min;; ++l) {
        if (gap(l) > s) return l;
        if (!gaps_diverge() && l > l_min + 4)
            throw DomainError("index rule gaps never exceed " + s.get_str());
        if (l > l_min + (1u << 20)) throw DomainError("gap search exceeded cap");
    }
}

bool IndexRule::operator==(const IndexRule& o) const {
    return kind_ == o.kind_ && a_ == o.a_ && b_ == o.b_;
}

std::string IndexRule::str() const {
    switch (kind_) {
        case Kind::Squares:
            return "squares";
        case Kind::Cubes:
            return "cubes";
        case Kind::Triangular:
            return "triangular";
        case Kind::Arithmetic:
            return "arith(" + a_.get_str() + "," + b_.get_str() + ")";
        case Kind::Geometric:
            return "geom(" + a_.get_str() + "," + b_.get_str() + ")";
    }
    throw DomainError("unreachable");
}

IndexRule IndexRule::parse_at(const std::string& s, std::size_t& pos) {
    std::string name = read_name(s, pos);
    if (name == "squares") return squares();
    if (name == "cubes") return cubes();
    if (name == "triangular") return triangular();
    if (name == "arith" || name == "geom") {
        expect(s, pos, '(');
        Int a = read_integer(s, pos);
        expect(s, pos, ',');
        Int b = read_integer(s, pos);
        expect(s, pos, ')');
        return name == "arith" ? arithmetic(std::move(a), std::move(b))
                               : geometric(std::move(a), std::move(b));
    }
    throw ParseError("unknown index rule '" + name + "'", pos);
}

IndexRule IndexRule::parse(const std::string& s) {
    std::size_t pos = 0;
    IndexRule r = parse_at(s, pos);
    expect_end(s, pos);
    return r;
}

// --- TailRule ---------------------------------------------------------------

TailRule TailRule::zero() { return TailRule(); }

TailRule TailRule::constant(Int c) {
    if (c < 0) throw DomainError("constant digit must be non-negative");
    if (c == 0) return zero();
    TailRule r;
    r.kind_ = Kind::ConstantDigit;
    r.c_ = std::move(c);
    return r;
}

TailRule TailRule::periodic(std::vector<Int> pattern) {
    if (pattern.empty()) throw DomainError("periodic pattern must be nonempty");
    bool all_zero = true;
    for (const Int& d : pattern) {
        if (d < 0) throw DomainError("pattern digits must be non-negative");
        if (d != 0) all_zero = false;
    }
    if (all_zero) return zero();
    if (pattern.size() == 1) return constant(pattern[0]);
    TailRule r;
    r.kind_ = Kind::Periodic;
    r.pattern_ = std::move(pattern);
    return r;
}

TailRule TailRule::scaled_floor(Rat t) {
    if (t < 0 || t >= 1) throw DomainError("scaledfloor needs 0 <= t < 1");
    if (t == 0) return zero();
    TailRule r;
    r.kind_ = Kind::ScaledFloor;
    r.t_ = std::move(t);
    return r;
}

TailRule TailRule::spaced_ones(std::size_t l, std::size_t s, IndexRule nk) {
    if (s < 1) throw DomainError("spacedones needs s >= 1");
    if (!nk.gaps_diverge())
        throw DomainError("spacedones needs an index rule with divergent gaps");
    if (nk.gap(l) <= Int(static_cast<unsigned long>(s)))
        throw DomainError("spacedones needs gap(l) > s");
    TailRule r;
    r.kind_ = Kind::SpacedOnes;
    r.l_ = l;
    r.s_ = s;
    r.nk_ = std::make_shared<const IndexRule>(std::move(nk));
    return r;
}

Int TailRule::digit(std::size_t n, const Int& base, bool scale_full_base) const {
    switch (kind_) {
        case Kind::Zero:
            return 0;
        case Kind::ConstantDigit:
            return c_;
        case Kind::Periodic:
            return pattern_[n % pattern_.size()];
        case Kind::ScaledFloor: {
            Rat v = (scale_full_base ? Rat(base) : Rat(base - 1)) * t_;
            return floor_rat(v);
        }
        case Kind::SpacedOnes: {
            Int target = Int(static_cast<unsigned long>(n)) +
                         Int(static_cast<unsigned long>(s_));
            // find minimal k >= l+1 with nk(k) >= target, then test equality
            std::size_t lo = l_ + 1, hi = lo;
            while (nk_->term(hi) < target) {
                lo = hi + 1;
                hi = hi * 2 + 1;
            }
            while (lo < hi) {
                std::size_t mid = lo + (hi - lo) / 2;
                if (nk_->term(mid) >= target)
                    hi = mid;
                else
                    lo = mid + 1;
            }
            return nk_->term(lo) == target && lo >= l_ + 1 ? 1 : 0;
        }
    }
    throw DomainError("unreachable");
}

Int TailRule::max_digit_bound() const {
    switch (kind_) {
        case Kind::Zero:
            return 0;
        case Kind::ConstantDigit:
            return c_;
        case Kind::Periodic:
            return *std::max_element(pattern_.begin(), pattern_.end());
        case Kind::SpacedOnes:
            return 1;
        case Kind::ScaledFloor:
            return -1;
    }
    return -1;
}

bool TailRule::operator==(const TailRule& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Zero:
            return true;
        case Kind::ConstantDigit:
            return c_ == o.c_;
        case Kind::Periodic:
            return pattern_ == o.pattern_;
        case Kind::ScaledFloor:
            return t_ == o.t_;
        case Kind::SpacedOnes:
            return l_ == o.l_ && s_ == o.s_ && *nk_ == *o.nk_;
    }
    return false;
}

std::string TailRule::str() const {
    switch (kind_) {
        case Kind::Zero:
            return "zero";
        case Kind::ConstantDigit:
            return "const(" + c_.get_str() + ")";
        case Kind::Periodic: {
            std::string s = "periodic(";
            for (std::size_t i = 0; i < pattern_.size(); ++i) {
                if (i) s += ",";
                s += pattern_[i].get_str();
            }
            return s + ")";
        }
        case Kind::ScaledFloor:
            return "scaledfloor(" + rat_str(t_) + ")";
        case Kind::SpacedOnes:
            return "spacedones(" + std::to_string(l_) + "," + std::to_string(s_) + "," +
                   nk_->str() + ")";
    }
    throw DomainError("unreachable");
}

TailRule TailRule::parse_at(const std::string& s, std::size_t& pos) {
    std::string name = read_name(s, pos);
    if (name == "zero") return zero();
    if (name == "const") {
        expect(s, pos, '(');
        Int c = read_integer(s, pos);
        expect(s, pos, ')');
        return constant(std::move(c));
    }
    if (name == "periodic") {
        expect(s, pos, '(');
        std::vector<Int> pat;
        pat.push_back(read_integer(s, pos));
        while (peek(s, pos, ',')) {
            expect(s, pos, ',');
            pat.push_back(read_integer(s, pos));
        }
        expect(s, pos, ')');
        return periodic(std::move(pat));
    }
    if (name == "scaledfloor") {
        expect(s, pos, '(');
        Rat t = read_rational(s, pos);
        expect(s, pos, ')');
        return scaled_floor(std::move(t));
    }
    if (name == "spacedones") {
        expect(s, pos, '(');
        Int l = read_integer(s, pos);
        expect(s, pos, ',');
        Int ss = read_integer(s, pos);
        expect(s, pos, ',');
        IndexRule nk = IndexRule::parse_at(s, pos);
        expect(s, pos, ')');
        if (l < 0 || ss < 0) throw ParseError("spacedones parameters must be >= 0", pos);
        return spaced_ones(l.get_ui(), ss.get_ui(), std::move(nk));
    }
    throw ParseError("unknown tail rule '" + name + "'", pos);
}

TailRule TailRule::parse(const std::string& s) {
    std::size_t pos = 0;
    TailRule r = parse_at(s, pos);
    expect_end(s, pos);
    return r;
}

}  // namespace tchar
