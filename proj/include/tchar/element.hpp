#pragma once

#include "tchar/sequences.hpp"

#include <map>
#include <vector>

namespace tchar {

enum class ModelKind { Torus, PAdic, Product };

// One of the three concrete compact groups: the torus with mixed-radix
// coordinates over bases a_n, the p-adic integers, or a product of strictly
// increasing finite cyclic groups Z(b_n).
struct Model {
    ModelKind kind;
    BaseSequence bases;  // torus / product coordinates (ignored for p-adic)
    Int p;               // p-adic only

    static Model torus(BaseSequence a);
    static Model padic(Int p);
    static Model product(BaseSequence b);

    Int base_at(std::size_t n) const;
    bool operator==(const Model& o) const;
    bool operator!=(const Model& o) const { return !(*this == o); }
    std::string params_str() const;  // the "model=... bases=..." fragment
};

// A point of the model: finite digit prefix plus a symbolic tail rule.
struct Element {
    Model model;
    std::vector<Int> prefix;
    TailRule tail;

    static Element zero(Model m) { return Element{std::move(m), {}, TailRule::zero()}; }
    static Element make(Model m, std::vector<Int> prefix, TailRule tail);

    Int digit(std::size_t n) const;
    // digits at indices [from, from+count), evaluated in bulk (sparse tail
    // rules fill their support directly instead of being probed per index)
    std::vector<Int> digits_window(std::size_t from, std::size_t count) const;
    bool is_zero() const;
    bool finite_support() const { return tail.eventually_zero(); }
    // For finite-support elements: index one past the last nonzero digit.
    std::size_t support_end() const;
    // First index with a nonzero digit, scanning up to 'cap'; returns cap if
    // none found (callers treat that as "zero as far as inspected").
    std::size_t first_nonzero(std::size_t cap) const;

    void validate() const;  // digit ranges for prefix and tail

    bool operator==(const Element& o) const {
        return model == o.model && prefix == o.prefix && tail == o.tail;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string str() const;
    static Element parse(const std::string& line);
};

std::vector<Int> materialize_digits(const Element& x, std::size_t count);

// A continuous character of the model.
// torus: x -> k*x; p-adic: the fraction m/p^t acting by Eq-style digit sums;
// product: finitely supported tuple acting coordinatewise.
struct Character {
    ModelKind kind;
    Int k;                         // torus
    Int m;                         // p-adic numerator, 0 < m < p^t, p does not divide m
    unsigned long t = 0;           // p-adic: character m / p^t
    std::map<std::size_t, Int> support;  // product

    static Character torus(Int k);
    static Character padic(Int m, unsigned long t, const Int& p);
    static Character product(std::map<std::size_t, Int> support);
    bool is_identity() const;
};

// The characterizing sequence u of one of the three families:
// torus: u_n = prod_{k<=n} a_k; p-adic: u_k = 1/p^(n_k+1) for an index rule;
// product: u_n = 1 in the n-th coordinate.
struct CharSequence {
    Model model;
    IndexRule nk = IndexRule::squares();  // p-adic only

    static CharSequence torus(BaseSequence a);
    static CharSequence padic(Int p, IndexRule nk);
    static CharSequence product(BaseSequence b);

    Character at(std::size_t n) const;
    bool operator==(const CharSequence& o) const;

    std::string str() const;
    static CharSequence parse(const std::string& line);
};

}  // namespace tchar
