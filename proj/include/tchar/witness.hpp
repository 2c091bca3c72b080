#pragma once

#include "tchar/decision.hpp"
#include "tchar/membership.hpp"

namespace tchar {

struct BudgetCheck {
    std::string name;
    std::string asserted;  // the bound being certified
    BoundInterval computed;
    bool pass = false;
};

struct WitnessEntry {
    std::size_t index;
    Element element;
    BoundInterval rho_enclosure;
    Verdict verdict;
};

// One full run of a dense-witness construction: the characterizing
// sequence, the witness elements with their rho enclosures, the limit
// element with its verdict, and every inequality the construction asserts,
// certified as a budget check.
struct WitnessReport {
    std::string family;  // "A", "B" or "C"
    Rat epsilon;
    std::size_t l = 0;      // derived start index
    std::size_t s = 0;      // family B: derived spacing
    std::size_t scale = 0;  // k_max / r_max
    CharSequence sequence;
    std::vector<WitnessEntry> witnesses;
    Element limit;
    Verdict limit_verdict;
    std::vector<BudgetCheck> budgets;

    std::size_t failed_budgets() const;
    bool all_pass() const { return failed_budgets() == 0; }
};

// Witness elements, exposed for tests. Indices at or below the start index
// give the zero element (the construction only uses k > l).
Element torus_witness_element(const BaseSequence& a, const Rat& epsilon, std::size_t l,
                              std::size_t k);
Element padic_witness_element(const Int& p, const IndexRule& nk, std::size_t l,
                              std::size_t s, std::size_t r);
Element product_witness_element(const BaseSequence& b, const Rat& epsilon, std::size_t l,
                                std::size_t k);

// Derived parameters: minimal l with 2/u_{l-1} < eps/20 (torus), minimal s
// with 2^-s < eps/20 and minimal l > s with gap(l) > s (p-adic), minimal l
// with 2^-l < eps/3 (product).
std::size_t torus_witness_start(const BaseSequence& a, const Rat& epsilon);
std::pair<std::size_t, std::size_t> padic_witness_params(const IndexRule& nk,
                                                         const Rat& epsilon);
std::size_t product_witness_start(const Rat& epsilon);

WitnessReport torus_witness(const BaseSequence& a, const Rat& epsilon, std::size_t k_max);
WitnessReport padic_witness(const Int& p, const IndexRule& nk, const Rat& epsilon,
                            std::size_t r_max);
WitnessReport product_witness(const BaseSequence& b, const Rat& epsilon, std::size_t k_max);

struct WitnessConfig {
    BaseSequence torus_bases = BaseSequence::arithmetic(Int(100), Int(100));
    IndexRule padic_nk = IndexRule::squares();
};

// Dispatch over the selected witness family of an unbounded descriptor.
WitnessReport unbounded_witness_report(const GroupDescriptor& d, const Rat& epsilon,
                                       std::size_t scale, const WitnessConfig& cfg = {});

}  // namespace tchar
