#include "tchar/descriptor.hpp"

#include "parse_util.hpp"

namespace tchar {

using Factor = GroupDescriptor::Factor;

Factor Factor::infinite_cyclic(unsigned long mult, bool omega) {
    Factor f;
    f.kind = GroupDescriptor::FactorKind::InfiniteCyclic;
    f.multiplicity = mult;
    f.omega = omega;
    return f;
}

Factor Factor::cyclic(Int order, unsigned long mult, bool omega) {
    if (order < 2) throw DomainError("cyclic order must be >= 2");
    Factor f;
    f.kind = GroupDescriptor::FactorKind::Cyclic;
    f.order = std::move(order);
    f.multiplicity = mult;
    f.omega = omega;
    return f;
}

Factor Factor::prufer(Int p, unsigned long mult, bool omega) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
        throw DomainError("Prufer parameter must be prime, got " + p.get_str());
    Factor f;
    f.kind = GroupDescriptor::FactorKind::Prufer;
    f.p = std::move(p);
    f.multiplicity = mult;
    f.omega = omega;
    return f;
}

Factor Factor::cyclic_family(BaseSequence b, unsigned long mult, bool omega) {
    if (!b.valid_product_base())
        throw DomainError("cyclic family base must be strictly increasing with b_0 > 1");
    Factor f;
    f.kind = GroupDescriptor::FactorKind::CyclicFamily;
    f.family = std::move(b);
    f.multiplicity = mult;
    f.omega = omega;
    return f;
}

bool GroupDescriptor::finite_group() const {
    for (const Factor& f : factors)
        if (f.kind != FactorKind::Cyclic || f.omega) return false;
    return true;
}

std::string GroupDescriptor::str() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Factor& f = factors[i];
        if (i) s += " + ";
        switch (f.kind) {
            case FactorKind::InfiniteCyclic:
                s += "Z";
                break;
            case FactorKind::Cyclic:
                s += "Z(" + f.order.get_str() + ")";
                break;
            case FactorKind::Prufer:
                s += "Zp(" + f.p.get_str() + ",inf)";
                break;
            case FactorKind::CyclicFamily:
                s += "Zfam(" + f.family->str() + ")";
                break;
        }
        s += ":";
        s += f.omega ? "omega" : std::to_string(f.multiplicity);
    }
    return s;
}

GroupDescriptor GroupDescriptor::parse(const std::string& s) {
    GroupDescriptor d;
    std::size_t pos = 0;
    parse::skip_ws(s, pos);
    if (pos == s.size()) return d;  // the trivial group
    for (;;) {
        std::string name = parse::read_name(s, pos);
        Factor f;
        if (name == "Z" && parse::peek(s, pos, '(')) {
            parse::expect(s, pos, '(');
            Int order = parse::read_integer(s, pos);
            parse::expect(s, pos, ')');
            f = Factor::cyclic(std::move(order), 1, false);
        } else if (name == "Z") {
            f = Factor::infinite_cyclic(1, false);
        } else if (name == "Zp") {
            parse::expect(s, pos, '(');
            Int p = parse::read_integer(s, pos);
            parse::expect(s, pos, ',');
            std::string inf = parse::read_name(s, pos);
            if (inf != "inf") throw ParseError("expected 'inf' in Zp(p,inf)", pos);
            parse::expect(s, pos, ')');
            f = Factor::prufer(std::move(p), 1, false);
        } else if (name == "Zfam") {
            parse::expect(s, pos, '(');
            BaseSequence b = BaseSequence::parse_at(s, pos);
            parse::expect(s, pos, ')');
            f = Factor::cyclic_family(std::move(b), 1, false);
        } else {
            throw ParseError("unknown factor kind '" + name + "'", pos);
        }
        parse::expect(s, pos, ':');
        parse::skip_ws(s, pos);
        if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
            std::string m = parse::read_name(s, pos);
            if (m != "omega") throw ParseError("multiplicity must be a number or 'omega'", pos);
            f.omega = true;
        } else {
            Int m = parse::read_integer(s, pos);
            if (m < 1 || !m.fits_ulong_p())
                throw ParseError("multiplicity must be a positive integer or 'omega'", pos);
            f.multiplicity = m.get_ui();
        }
        d.factors.push_back(std::move(f));
        if (!parse::try_consume(s, pos, '+')) break;
    }
    parse::expect_end(s, pos);
    return d;
}

}  // namespace tchar
