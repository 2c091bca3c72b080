#pragma once

#include "tchar/descriptor.hpp"

namespace tchar {

struct Exponent {
    bool finite = true;
    Int value;  // meaningful when finite
    std::string str() const { return finite ? value.get_str() : "inf"; }
};

// Least n with n*g = 0 for all g, infinity when unbounded.
Exponent exponent(const GroupDescriptor& d);

struct SocleRank {
    unsigned long rank = 0;  // with omega multiplicities replaced by the truncation
    bool unbounded = false;  // the exact rank grows without bound in the truncation
};

// Maximal r such that Z(e)^r embeds into d. For e | exp(d) this is, prime
// power by prime power p^a || e, the number of cyclic factors whose order
// p^a divides (a diagonal copy of Z(e) needs one such factor per prime).
// Returns rank 0 when e does not divide the exponent.
SocleRank socle_rank(const GroupDescriptor& d, const Int& e, unsigned long truncation);

struct Decision {
    bool yes = false;
    std::string branch;  // which clause fired
    std::string reason;
};

// Is a proper closed subgroup H with the given annihilator T-characterized?
// yes iff H is a G-delta subgroup and the annihilator either is unbounded or
// contains an unbounded direct sum of Z(exp).
Decision tchar_decide(const GroupDescriptor& annihilator, bool is_gdelta, bool is_proper);

// Does the countable group admit a Hausdorff minimally almost periodic
// topology? Finite groups never do (they are discrete); otherwise the same
// exponent/socle criterion as tchar_decide's last clause.
Decision minap_admissible(const GroupDescriptor& d);

// The compact dual of d is connected iff d is torsion-free, which in this
// grammar means every factor is Z.
bool connected_dual(const GroupDescriptor& d);

// All closed G-delta subgroups of the dual are T-characterized iff the dual
// is connected.
bool all_gdelta_tchar(const GroupDescriptor& d);

struct WitnessFamily {
    enum class Case { A, B, C };  // Z / Prufer(p) / direct sum of Z(b_n)
    Case c = Case::A;
    Int p;                              // case B
    std::optional<BaseSequence> bases;  // case C
    std::string label() const;
};

// For an unbounded descriptor, pick the countable witness subgroup the
// dense-non-closed construction runs on (preference order A > B > C).
WitnessFamily select_unbounded_witness(const GroupDescriptor& d);

}  // namespace tchar
