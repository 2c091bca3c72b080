#pragma once

#include "tchar/sequences.hpp"

#include <optional>
#include <vector>

namespace tchar {

// Symbolic countable abelian group: a finite list of factor kinds with
// multiplicities in {1, 2, ...} or omega. Textual form, whitespace-free or
// not: "Z:1 + Z(2):omega + Zp(3,inf):1 + Zfam(geom(2,2)):1".
struct GroupDescriptor {
    enum class FactorKind { InfiniteCyclic, Cyclic, Prufer, CyclicFamily };

    struct Factor {
        FactorKind kind;
        Int order;                           // Cyclic: n >= 2
        Int p;                               // Prufer: prime
        std::optional<BaseSequence> family;  // CyclicFamily: strictly increasing, b_0 > 1
        unsigned long multiplicity = 1;      // ignored when omega
        bool omega = false;

        static Factor infinite_cyclic(unsigned long mult, bool omega);
        static Factor cyclic(Int order, unsigned long mult, bool omega);
        static Factor prufer(Int p, unsigned long mult, bool omega);
        static Factor cyclic_family(BaseSequence b, unsigned long mult, bool omega);

        bool operator==(const Factor& o) const {
            return kind == o.kind && order == o.order && p == o.p && family == o.family &&
                   omega == o.omega && (omega || multiplicity == o.multiplicity);
        }
    };

    std::vector<Factor> factors;

    bool trivial() const { return factors.empty(); }
    // every factor finite cyclic with finite multiplicity
    bool finite_group() const;

    bool operator==(const GroupDescriptor& o) const { return factors == o.factors; }

    std::string str() const;
    static GroupDescriptor parse(const std::string& s);
};

}  // namespace tchar
