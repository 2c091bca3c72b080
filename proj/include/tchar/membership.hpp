#pragma once

#include "tchar/models.hpp"

#include <span>

namespace tchar {

// Result of a membership decision for x in s_u(X), together with the
// evidence that produced it. For the p-adic criterion the "limit" of a
// NonMember verdict is the constant defect of n_k - m_k; for the torus and
// product criteria it is the nonzero limit of the nearest-integer distance
// of the digit ratio.
struct Verdict {
    enum class Outcome { Member, NonMember, Undetermined };
    Outcome outcome = Outcome::Undetermined;
    Rat limit;
    std::size_t horizon = 0;  // set for Undetermined
    std::string criterion;    // wire tag: "eq2", "eq4" or "eq5"
    std::string reason;
    std::vector<std::pair<std::size_t, Rat>> trace;  // sampled criterion quantities

    bool member() const { return outcome == Outcome::Member; }
    std::string outcome_str() const;
};

// Torus criterion: x is a member iff ||c_n / a_n|| -> 0.
Verdict member_torus(const CharSequence& u, const Element& x, std::size_t horizon = 256);

// p-adic criterion: membership iff n_k - m_k -> infinity, where m_k is the
// run statistic below. Finite-support elements are members outright (their
// digit sum is fixed against a growing power of p).
Verdict member_padic(const CharSequence& u, const Element& x, std::size_t horizon = 256);

// Product criterion: membership iff ||a_n / b_n|| -> 0.
Verdict member_product(const CharSequence& u, const Element& x, std::size_t horizon = 256);

Verdict decide_membership(const CharSequence& u, const Element& x, std::size_t horizon = 256);

// m_k = max{j_k, n_{k-1}}: j_k = n_k when 0 < digit(n_k) < p-1, otherwise
// the minimal j >= 0 such that the digits on (j, n_k] are all 0 or all p-1.
// Defined for k >= 2; digits must cover indices 0..n_k.
std::size_t compute_mk(const Int& p, const IndexRule& nk, std::span<const Int> digits,
                       std::size_t k);

// Independent numeric check of the raw definition of s_u: it reports
// consistency only, never a verdict of its own.
struct OracleReport {
    enum class Consistency { MemberConsistent, NonMemberConsistent, Undetermined };
    Consistency consistency = Consistency::Undetermined;
    double tail_level = 0.0;           // largest certified lower bound seen in the tail
    std::vector<BoundInterval> trace;  // |1-(u_n,x)| enclosures, n = 0..horizon-1
    std::string consistency_str() const;
};

OracleReport numeric_oracle(const CharSequence& u, const Element& x,
                            std::size_t horizon = 256, const Rat& tol = Rat(1, 1000000));

// The criterion/oracle consistency property: Member verdicts force the
// trace tail under 2*pi*(criterion quantity + slack) at the matching index;
// NonMember(L) verdicts force recurring lower bounds above pi*L*(1-1/100).
bool verdict_consistent_with_trace(const Verdict& v, const OracleReport& o,
                                   const CharSequence& u, const Element& x,
                                   std::string* why = nullptr);

}  // namespace tchar
