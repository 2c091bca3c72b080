#pragma once

#include "tchar/numeric.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace tchar {

// An infinite sequence of positive integers given by a symbolic rule.
// Serialized forms: arith(start,step), geom(start,ratio), prod(rule),
// explicit(t0,t1,...;rule). Explicit continuations are evaluated at the
// absolute index n, not relative to the end of the list.
class BaseSequence {
public:
    enum class Kind { Arithmetic, Geometric, Product, Explicit };

    BaseSequence() : a_(1), b_(0) {}  // constant-1 placeholder

    static BaseSequence arithmetic(Int start, Int step);
    static BaseSequence geometric(Int start, Int ratio);
    // term(n) = product of inner(0..n)
    static BaseSequence product_of(BaseSequence inner);
    static BaseSequence explicit_list(std::vector<Int> terms, BaseSequence cont);

    Kind kind() const { return kind_; }
    Int term(std::size_t n) const;

    Int min_term_from(std::size_t n0) const;
    bool all_terms_at_least(const Int& b) const { return min_term_from(0) >= b; }
    bool strictly_increasing() const;
    bool tends_to_infinity() const;

    // torus coordinates: a_n >= 2 and a_n -> infinity
    bool valid_torus_base() const;
    // product coordinates: 1 < b_0 < b_1 < ...
    bool valid_product_base() const;

    bool operator==(const BaseSequence& o) const;
    bool operator!=(const BaseSequence& o) const { return !(*this == o); }

    std::string str() const;
    static BaseSequence parse(const std::string& s);
    static BaseSequence parse_at(const std::string& s, std::size_t& pos);

private:
    bool has_infinitely_many_at_least(const Int& b) const;

    Kind kind_ = Kind::Arithmetic;
    Int a_, b_;                              // arith start/step, geom start/ratio
    std::shared_ptr<const BaseSequence> inner_;  // product inner / explicit continuation
    std::vector<Int> terms_;                 // explicit head
};

// Cached partial products u_n = prod_{k<=n} base(k). Local helper for the
// hot loops; build one per operation call.
class ProductLadder {
public:
    explicit ProductLadder(const BaseSequence& base) : base_(base) {}
    const Int& at(std::size_t n);

private:
    const BaseSequence& base_;
    std::vector<Int> cache_;
};

// Index rule n_k for p-adic character sequences u_k = 1/p^(n_k+1).
// Serialized forms: squares, cubes, triangular, arith(a,d), geom(c,r).
class IndexRule {
public:
    enum class Kind { Squares, Cubes, Triangular, Arithmetic, Geometric };

    static IndexRule squares() { return IndexRule(Kind::Squares); }
    static IndexRule cubes() { return IndexRule(Kind::Cubes); }
    static IndexRule triangular() { return IndexRule(Kind::Triangular); }
    static IndexRule arithmetic(Int start, Int step);
    static IndexRule geometric(Int start, Int ratio);

    Kind kind() const { return kind_; }
    Int term(std::size_t k) const;
    Int gap(std::size_t k) const { return term(k + 1) - term(k); }

    bool gaps_diverge() const;
    bool gaps_nondecreasing() const { return true; }  // holds for every kind here

    // Minimal l >= l_min with gap(w) > s for all w >= l. Throws DomainError
    // when the gaps never exceed s.
    std::size_t min_l_with_gaps_above(const Int& s, std::size_t l_min) const;

    bool operator==(const IndexRule& o) const;
    bool operator!=(const IndexRule& o) const { return !(*this == o); }

    std::string str() const;
    static IndexRule parse(const std::string& s);
    static IndexRule parse_at(const std::string& s, std::size_t& pos);

private:
    explicit IndexRule(Kind k) : kind_(k) {}
    Kind kind_;
    Int a_, b_;
};

// Symbolic digit rule for the infinite tail of an element, evaluated at
// absolute indices. Serialized forms: zero, const(c), periodic(c0,c1,...),
// scaledfloor(t), spacedones(l,s,nkrule).
class TailRule {
public:
    enum class Kind { Zero, ConstantDigit, Periodic, ScaledFloor, SpacedOnes };

    TailRule() = default;  // the zero rule

    static TailRule zero();
    static TailRule constant(Int c);
    static TailRule periodic(std::vector<Int> pattern);
    static TailRule scaled_floor(Rat t);
    // digit(n) = 1 iff n = nk(l+i) - s for some i >= 1. Requires s >= 1 and
    // gap(w) > s for all w >= l (so the one-positions are distinct and the
    // run-length analysis of the p-adic criterion applies verbatim).
    static TailRule spaced_ones(std::size_t l, std::size_t s, IndexRule nk);

    Kind kind() const { return kind_; }

    // Digit at absolute index n with modulus 'base'. scale_full_base selects
    // floor(base*t) (product coordinates) over floor((base-1)*t).
    Int digit(std::size_t n, const Int& base, bool scale_full_base) const;

    bool eventually_zero() const { return kind_ == Kind::Zero; }
    Int max_digit_bound() const;  // upper bound on digits for bounded rules; -1 if none

    const Int& constant_value() const { return c_; }
    const std::vector<Int>& pattern() const { return pattern_; }
    const Rat& scale() const { return t_; }
    std::size_t spaced_l() const { return l_; }
    std::size_t spaced_s() const { return s_; }
    const IndexRule& spaced_rule() const { return *nk_; }

    bool operator==(const TailRule& o) const;
    bool operator!=(const TailRule& o) const { return !(*this == o); }

    std::string str() const;
    static TailRule parse(const std::string& s);
    static TailRule parse_at(const std::string& s, std::size_t& pos);

private:
    Kind kind_ = Kind::Zero;
    Int c_;
    std::vector<Int> pattern_;
    Rat t_;
    std::size_t l_ = 0, s_ = 0;
    std::shared_ptr<const IndexRule> nk_;
};

}  // namespace tchar
