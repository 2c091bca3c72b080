#include "tchar/verify.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <random>

namespace tchar {

// --- structure oracle -------------------------------------------------------

std::vector<Int> invariant_factors(std::vector<Int> orders) {
    std::map<Int, unsigned long> counts;
    for (Int& o : orders) {
        if (o < 1) throw DomainError("cyclic orders must be positive");
        if (o > 1) ++counts[o];
    }
    // replace incomparable pairs by (gcd, lcm) until divisibility is total
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto i = counts.begin(); i != counts.end() && !changed; ++i) {
            for (auto j = std::next(i); j != counts.end() && !changed; ++j) {
                const Int& a = i->first;
                const Int& b = j->first;
                if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) continue;
                Int g, l;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                unsigned long m = std::min(i->second, j->second);
                if ((i->second -= m) == 0) counts.erase(i);
                auto jt = counts.find(b);
                if ((jt->second -= m) == 0) counts.erase(jt);
                if (g > 1) counts[g] += m;
                counts[l] += m;
                changed = true;
            }
        }
    }
    std::vector<Int> out;
    for (const auto& [v, c] : counts)
        for (unsigned long i = 0; i < c; ++i) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long socle_rank_oracle(const std::vector<Int>& orders, const Int& e) {
    unsigned long r = 0;
    for (const Int& d : invariant_factors(orders))
        if (mpz_divisible_p(d.get_mpz_t(), e.get_mpz_t())) ++r;
    return r;
}

// --- suite machinery ----------------------------------------------------------

namespace {

struct Ctx {
    std::mt19937 rng;
    const VerifyOptions& opt;
    SuiteResult res;

    Ctx(const std::string& name, const VerifyOptions& o) : rng(o.seed), opt(o) {
        res.name = name;
    }
    void check(bool ok, const std::string& what) {
        ++res.checks;
        if (!ok) {
            ++res.failures;
            if (res.notes.size() < 8) res.notes.push_back(what);
        }
    }
    unsigned long ri(unsigned long lo, unsigned long hi) {
        return std::uniform_int_distribution<unsigned long>(lo, hi)(rng);
    }
};

bool contains_true_norm(const Rat& dist, const BoundInterval& enc) {
    mpfr_t x, pi;
    mpfr_init2(x, 256);
    mpfr_init2(pi, 256);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_q(x, dist.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(x, x, pi, MPFR_RNDN);
    mpfr_sin(x, x, MPFR_RNDN);
    mpfr_mul_ui(x, x, 2, MPFR_RNDN);
    bool ok = mpfr_cmp_d(x, enc.lo) >= 0 && mpfr_cmp_d(x, enc.hi) <= 0;
    mpfr_clear(x);
    mpfr_clear(pi);
    return ok;
}

Rat random_angle_value(Ctx& c, unsigned long max_den) {
    unsigned long den = c.ri(1, max_den);
    unsigned long num = c.ri(0, den - 1 + (den == 1 ? 1 : 0));
    Rat q(Int(num % den), Int(den));
    q.canonicalize();
    return q;
}

// --- eq02 / angle ------------------------------------------------------------

void suite_eq02(Ctx& c) {
    for (std::size_t i = 0; i < c.opt.samples; ++i) {
        Angle a(random_angle_value(c, 10000));
        Rat dist = nearest_int_dist(a);
        BoundInterval n = unit_norm(a);
        BoundInterval lhs = pi_mul(dist);
        BoundInterval rhs = two_pi_mul(dist);
        c.check(lhs.lo <= n.hi && n.lo <= rhs.hi,
                "sandwich pi*|phi| <= |1-e| <= 2*pi*|phi| failed at " + a.str());
        c.check(contains_true_norm(dist, n), "enclosure misses 2*sin(pi*||phi||) at " + a.str());
    }
}

void suite_angle(Ctx& c) {
    for (std::size_t i = 0; i < 2000; ++i) {
        Angle a(random_angle_value(c, 10000));
        Angle b(random_angle_value(c, 10000));
        Angle d(random_angle_value(c, 10000));
        c.check((a + (-a)).is_zero(), "a + (-a) != 0 at " + a.str());
        c.check(((a + b) + d) == (a + (b + d)), "associativity failed");
        if (!a.is_zero())
            c.check(nearest_int_dist(a) == nearest_int_dist(-a),
                    "||a|| != ||1-a|| at " + a.str());
        c.check(Angle::parse(a.str()) == a, "angle text round trip failed");
    }
    c.check(nearest_int_dist(Angle(Rat(3, 8))) == Rat(3, 8), "||3/8||");
    c.check(nearest_int_dist(Angle(Rat(7, 8))) == Rat(1, 8), "||7/8||");
    c.check(nearest_int_dist(Angle(Rat(1, 2))) == Rat(1, 2), "||1/2||");
}

// --- element generators ---------------------------------------------------------

BaseSequence random_torus_bases(Ctx& c, bool fast_only) {
    switch (fast_only ? c.ri(0, 1) : c.ri(0, 2)) {
        case 0:
            return BaseSequence::arithmetic(Int(100), Int(100));
        case 1:
            return BaseSequence::geometric(Int(2), Int(2));
        default:
            return BaseSequence::arithmetic(Int(2), Int(1));
    }
}

BaseSequence random_product_bases(Ctx& c, bool fast_only) {
    switch (fast_only ? 0 : c.ri(0, 1)) {
        case 0:
            return BaseSequence::geometric(Int(2), Int(2));
        default:
            return BaseSequence::arithmetic(Int(2), Int(1));
    }
}

std::vector<Int> random_prefix(Ctx& c, const Model& m, std::size_t max_len) {
    std::size_t len = c.ri(0, max_len);
    std::vector<Int> d;
    for (std::size_t n = 0; n < len; ++n) {
        Int b = m.base_at(n);
        unsigned long cap = b.fits_ulong_p() ? b.get_ui() - 1 : 1000;
        d.push_back(Int(c.ri(0, cap)));
    }
    return d;
}

Rat random_scale(Ctx& c, bool keep_distance_large) {
    static const std::pair<int, int> pool[] = {{1, 4}, {1, 3}, {2, 5}, {9, 20},
                                               {3, 5}, {7, 10}, {1, 25}, {24, 25}};
    static const std::pair<int, int> large[] = {{1, 4}, {1, 3}, {2, 5}, {9, 20},
                                                {3, 5}, {7, 10}};
    auto [n, d] = keep_distance_large ? large[c.ri(0, 5)] : pool[c.ri(0, 7)];
    Rat t(n, d);
    t.canonicalize();
    return t;
}

struct Sample {
    CharSequence u;
    Element x;
};

// mixed member/nonmember/undetermined elements within the decidable grammar
Sample random_sample(Ctx& c, ModelKind kind) {
    unsigned long shape = c.ri(0, 9);
    bool nonmember = shape >= 6 && shape <= 8;  // scaled floors
    bool undetermined = shape == 9;
    switch (kind) {
        case ModelKind::Torus: {
            BaseSequence a = random_torus_bases(c, nonmember);
            Model m = Model::torus(a);
            CharSequence u = CharSequence::torus(a);
            if (nonmember)
                return {u, Element::make(m, random_prefix(c, m, 4),
                                         TailRule::scaled_floor(random_scale(c, true)))};
            if (undetermined) {
                IndexRule nk = IndexRule::squares();
                return {u, Element::make(m, {}, TailRule::spaced_ones(4, 2, nk))};
            }
            if (shape < 3) return {u, Element::make(m, random_prefix(c, m, 6), TailRule::zero())};
            if (shape < 5)
                return {u, Element::make(m, random_prefix(c, m, 3),
                                         TailRule::constant(Int(c.ri(0, 1))))};
            return {u, Element::make(m, {}, TailRule::periodic({Int(c.ri(0, 1)),
                                                                Int(c.ri(0, 1)), Int(1)}))};
        }
        case ModelKind::PAdic: {
            static const unsigned long primes[] = {2, 3, 5};
            Int p(primes[c.ri(0, 2)]);
            IndexRule nk = c.ri(0, 2) == 0   ? IndexRule::squares()
                           : c.ri(0, 1) == 0 ? IndexRule::cubes()
                                             : IndexRule::triangular();
            Model m = Model::padic(p);
            CharSequence u = CharSequence::padic(p, nk);
            if (nonmember || undetermined) {
                std::size_t s = c.ri(1, 5);
                std::size_t l = nk.min_l_with_gaps_above(Int(static_cast<unsigned long>(s)),
                                                         1) + c.ri(0, 2);
                return {u, Element::make(m, random_prefix(c, m, 3),
                                         TailRule::spaced_ones(l, s, nk))};
            }
            return {u, Element::make(m, random_prefix(c, m, 24), TailRule::zero())};
        }
        case ModelKind::Product: {
            BaseSequence b = random_product_bases(c, nonmember);
            Model m = Model::product(b);
            CharSequence u = CharSequence::product(b);
            if (nonmember)
                return {u, Element::make(m, random_prefix(c, m, 4),
                                         TailRule::scaled_floor(random_scale(c, false)))};
            if (undetermined) {
                IndexRule nk = IndexRule::squares();
                return {u, Element::make(m, {}, TailRule::spaced_ones(4, 2, nk))};
            }
            if (shape < 3) return {u, Element::make(m, random_prefix(c, m, 8), TailRule::zero())};
            if (shape < 5)
                return {u, Element::make(m, random_prefix(c, m, 3),
                                         TailRule::constant(Int(c.ri(0, 1))))};
            return {u, Element::make(m, {}, TailRule::periodic({Int(0), Int(1), Int(1)}))};
        }
    }
    throw DomainError("unreachable");
}

Element random_finite_element(Ctx& c, const Model& m, std::size_t max_len) {
    return Element::make(m, random_prefix(c, m, max_len), TailRule::zero());
}

// --- encode / metric / pairing / rho ------------------------------------------

void suite_encode(Ctx& c) {
    std::vector<BaseSequence> pool = {
        BaseSequence::arithmetic(Int(2), Int(1)), BaseSequence::arithmetic(Int(100), Int(100)),
        BaseSequence::geometric(Int(2), Int(2)),
        BaseSequence::product_of(BaseSequence::arithmetic(Int(2), Int(1))),
        BaseSequence::explicit_list({Int(5), Int(7)}, BaseSequence::arithmetic(Int(9), Int(2)))};
    for (std::size_t i = 0; i < 400; ++i) {
        const BaseSequence& a = pool[c.ri(0, pool.size() - 1)];
        Model m = Model::torus(a);
        Element e = random_finite_element(c, m, 8);
        Rat q = evaluate_torus(e);
        Element enc = encode_torus(q, a, 64);
        c.check(evaluate_torus(enc) == q, "evaluate(encode(q)) != q for q = " + rat_str(q));
        std::size_t end = e.support_end();
        bool same = end == enc.prefix.size();
        for (std::size_t n = 0; same && n < end; ++n) same = e.digit(n) == enc.digit(n);
        c.check(same, "encode is not the digit inverse of evaluate at " + rat_str(q));
    }
    c.check(encode_torus(Rat(0), pool[0], 8).is_zero(), "encode(0) != 0");
    bool threw = false;
    try {
        encode_torus(Rat(1, 3), BaseSequence::geometric(Int(2), Int(2)), 40);
    } catch (const NonTerminating&) {
        threw = true;
    }
    c.check(threw, "1/3 should not terminate in dyadic bases");
}

void suite_metric(Ctx& c) {
    for (std::size_t i = 0; i < 300; ++i) {
        ModelKind kind = static_cast<ModelKind>(c.ri(0, 2));
        Model m = kind == ModelKind::Torus
                      ? Model::torus(random_torus_bases(c, false))
                      : kind == ModelKind::PAdic
                            ? Model::padic(Int(2 + 3 * c.ri(0, 1)))
                            : Model::product(random_product_bases(c, false));
        Element x = random_finite_element(c, m, 8);
        Element y = random_finite_element(c, m, 8);
        Element z = random_finite_element(c, m, 8);
        Rat dxy = metric_d(x, y), dyx = metric_d(y, x), dxz = metric_d(x, z),
            dyz = metric_d(y, z), dxx = metric_d(x, x);
        c.check(dxx == 0, "d(x,x) != 0");
        c.check(dxy == dyx, "metric asymmetry");
        c.check(dxy >= 0, "negative distance");
        c.check(dxz <= dxy + dyz, "triangle inequality failed");
    }
}

void suite_pairing(Ctx& c) {
    for (std::size_t i = 0; i < 300; ++i) {
        ModelKind kind = static_cast<ModelKind>(c.ri(0, 2));
        Model m;
        Character chi = Character::torus(Int(0));
        switch (kind) {
            case ModelKind::Torus:
                m = Model::torus(random_torus_bases(c, false));
                chi = Character::torus(Int(c.ri(0, 5000)) - Int(2500));
                break;
            case ModelKind::PAdic: {
                m = Model::padic(Int(2 + 3 * c.ri(0, 1)));
                unsigned long t = c.ri(1, 10);
                Int q = ipow(m.p, t);
                Int num;
                do {
                    num = Int(c.ri(1, q.get_ui() - 1));
                } while (mpz_divisible_p(num.get_mpz_t(), m.p.get_mpz_t()));
                chi = Character::padic(num, t, m.p);
                break;
            }
            case ModelKind::Product: {
                m = Model::product(random_product_bases(c, false));
                std::map<std::size_t, Int> supp;
                for (unsigned long j = 0, n = c.ri(1, 4); j < n; ++j) {
                    std::size_t slot = c.ri(0, 6);
                    Int b = m.bases.term(slot);
                    supp[slot] = Int(c.ri(0, b.get_ui() - 1));
                }
                chi = Character::product(std::move(supp));
                break;
            }
        }
        Element x = random_finite_element(c, m, 8);
        Element y = random_finite_element(c, m, 8);
        PairValue px = pair_eval(chi, x, 64);
        PairValue py = pair_eval(chi, y, 64);
        PairValue ps = pair_eval(chi, add(x, y), 64);
        c.check(px.exact() && py.exact() && ps.exact(), "finite pairings must be exact");
        c.check(ps.center == px.center + py.center, "pairing is not additive in x");
        Character id = kind == ModelKind::Torus   ? Character::torus(Int(0))
                       : kind == ModelKind::PAdic ? Character::padic(Int(0), 0, m.p)
                                                  : Character::product({});
        c.check(pair_eval(id, x, 64).center.is_zero(), "identity character must give 0");
    }
    // the p-adic pairing reads exactly n_k+1 digits: a horizon there works,
    // one digit earlier fails
    Model m = Model::padic(Int(2));
    Element x = Element::make(m, {Int(1), Int(1), Int(0), Int(1)}, TailRule::zero());
    Character chi = Character::padic(Int(3), 3, m.p);
    bool ok = true;
    try {
        pair_eval(chi, x, 2);
    } catch (const HorizonError&) {
        ok = false;
    }
    c.check(ok, "horizon n_k is enough for the p-adic pairing");
    bool threw = false;
    try {
        pair_eval(chi, x, 1);
    } catch (const HorizonError&) {
        threw = true;
    }
    c.check(threw, "horizon below n_k must be rejected");
}

void suite_rho(Ctx& c) {
    for (std::size_t i = 0; i < 120; ++i) {
        Sample s = random_sample(c, static_cast<ModelKind>(c.ri(0, 2)));
        Element zero = Element::zero(s.u.model);
        BoundInterval r = rho(s.u, s.x, zero, 48);
        RatInterval d = metric_d_bounds(s.x, zero, 48);
        c.check(r.lo >= 0 && (!r.upper_finite() || r.hi >= r.lo), "malformed rho interval");
        c.check(!r.upper_finite() || r.hi >= to_double_down(d.lo),
                "rho upper bound below the ambient distance");
        c.check(r.lo <= to_double_up(d.hi) + 2.0 + 2.0, "rho lower bound impossible");
    }
    // exact cases
    Model m = Model::torus(BaseSequence::arithmetic(Int(2), Int(1)));
    CharSequence u = CharSequence::torus(m.bases);
    Element zero = Element::zero(m);
    BoundInterval rz = rho(u, zero, zero, 16);
    c.check(rz.exact && rz.lo == 0 && rz.hi == 0, "rho(0,0) != [0,0]");
    Element half = encode_torus(Rat(1, 2), m.bases, 8);
    BoundInterval rh = rho(u, half, zero, 16);
    c.check(rh.exact && rh.lo == 0.5 && rh.hi == 0.5,
            "rho(0,1/2) over factorial-type characters must be exactly 1/2");
}

// --- membership / consistency ------------------------------------------------

void suite_membership(Ctx& c) {
    for (int kind = 0; kind < 3; ++kind) {
        for (std::size_t i = 0; i < c.opt.elements_per_model; ++i) {
            Sample s = random_sample(c, static_cast<ModelKind>(kind));
            Verdict v = decide_membership(s.u, s.x, c.opt.horizon);
            OracleReport o = numeric_oracle(s.u, s.x, c.opt.horizon, c.opt.tol);
            std::string why;
            c.check(verdict_consistent_with_trace(v, o, s.u, s.x, &why),
                    "criterion/oracle contradiction (" + v.outcome_str() + "): " + why +
                        " at " + s.x.str());
            Verdict v2 = decide_membership(s.u, s.x, c.opt.horizon / 2);
            c.check(v2.outcome == Verdict::Outcome::Undetermined ||
                        v2.outcome == v.outcome,
                    "verdict flipped under a horizon change");
        }
    }
    // numeric subgroup property on finite members: trace(x+y) <= trace(x)+trace(y)
    for (std::size_t i = 0; i < 60; ++i) {
        ModelKind kind = static_cast<ModelKind>(c.ri(0, 2));
        Model m = kind == ModelKind::Torus
                      ? Model::torus(random_torus_bases(c, false))
                      : kind == ModelKind::PAdic
                            ? Model::padic(Int(2 + 3 * c.ri(0, 1)))
                            : Model::product(random_product_bases(c, false));
        CharSequence u = kind == ModelKind::Torus ? CharSequence::torus(m.bases)
                         : kind == ModelKind::PAdic
                             ? CharSequence::padic(m.p, IndexRule::squares())
                             : CharSequence::product(m.bases);
        Element x = random_finite_element(c, m, 6);
        Element y = random_finite_element(c, m, 6);
        Element sum = add(x, y);
        auto tx = pairing_norm_trace(u, x, 48);
        auto ty = pairing_norm_trace(u, y, 48);
        auto ts = pairing_norm_trace(u, sum, 48);
        for (std::size_t n = 0; n < 48; ++n)
            c.check(ts[n].lo <= tx[n].hi + ty[n].hi + 1e-12,
                    "subgroup triangle bound failed at index " + std::to_string(n));
    }
}

// --- decision / socle ---------------------------------------------------------

GroupDescriptor random_descriptor(Ctx& c) {
    GroupDescriptor d;
    std::size_t n = c.ri(1, 4);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned long mult = c.ri(1, 3);
        bool omega = c.ri(0, 3) == 0;
        switch (c.ri(0, 3)) {
            case 0:
                d.factors.push_back(
                    GroupDescriptor::Factor::infinite_cyclic(mult, omega));
                break;
            case 1:
                d.factors.push_back(
                    GroupDescriptor::Factor::cyclic(Int(c.ri(2, 16)), mult, omega));
                break;
            case 2: {
                static const unsigned long primes[] = {2, 3, 5, 7};
                d.factors.push_back(
                    GroupDescriptor::Factor::prufer(Int(primes[c.ri(0, 3)]), mult, omega));
                break;
            }
            default:
                d.factors.push_back(GroupDescriptor::Factor::cyclic_family(
                    BaseSequence::geometric(Int(2), Int(2)), mult, omega));
        }
    }
    return d;
}

void suite_decision(Ctx& c) {
    // anchored decision table
    auto dec = [](const std::string& s) {
        return tchar_decide(GroupDescriptor::parse(s), true, true);
    };
    c.check(dec("Z:1").yes, "annihilator Z must give yes");
    c.check(!dec("Z(2):1").yes, "annihilator Z(2) must give no");
    c.check(dec("Z(2):omega").yes, "annihilator Z(2)^omega must give yes");
    c.check(!dec("Z(2):omega + Z(4):1").yes, "exponent 4 with one Z(4) must give no");
    c.check(connected_dual(GroupDescriptor::parse("Z:1")), "dual of Z is connected");
    c.check(!connected_dual(GroupDescriptor::parse("Z(2):1 + Z:1")),
            "dual of Z(2)+Z is disconnected");
    c.check(all_gdelta_tchar(GroupDescriptor::parse("Z:omega")), "Z^omega dual");
    c.check(!all_gdelta_tchar(GroupDescriptor::parse("Z(2):1")), "Z(2) dual");
    c.check(!dec("Z(2):1").yes && !tchar_decide(GroupDescriptor::parse("Z(2):1"), true, true).yes,
            "open subgroup of index 2 is never T-characterized");
    c.check(!tchar_decide(GroupDescriptor::parse("Z:1"), false, true).yes,
            "non-G-delta subgroups are rejected");
    c.check(tchar_decide(GroupDescriptor::parse(""), true, false).yes,
            "the whole group is characterized by the zero sequence");

    c.check(minap_admissible(GroupDescriptor::parse("Z:1")).yes, "Z admits MinAP");
    c.check(minap_admissible(GroupDescriptor::parse("Z(2):omega")).yes,
            "Z(2)^omega admits MinAP");
    c.check(!minap_admissible(GroupDescriptor::parse("Z(2):1 + Z(4):1")).yes,
            "finite groups admit only the discrete topology");

    // witness family selection
    auto fam = [](const std::string& s) {
        return select_unbounded_witness(GroupDescriptor::parse(s)).label();
    };
    c.check(fam("Z:1 + Z(3):5") == "A", "case A selection");
    c.check(fam("Zp(2,inf):1 + Z(9):omega") == "B", "case B selection");
    c.check(fam("Zfam(geom(2,2)):1") == "C", "case C selection");

    for (std::size_t i = 0; i < 400; ++i) {
        GroupDescriptor d = random_descriptor(c);
        if (!d.finite_group()) {
            Decision a = tchar_decide(d, true, true);
            Decision b = minap_admissible(d);
            c.check(a.yes == b.yes, "tchar and MinAP disagree on " + d.str());
        }
        if (!connected_dual(d)) {
            // a finite-order character yields an open annihilator kernel,
            // which is never T-characterized
            Int order(0);
            for (const auto& f : d.factors) {
                if (f.kind == GroupDescriptor::FactorKind::Cyclic) order = f.order;
                if (f.kind == GroupDescriptor::FactorKind::Prufer) order = f.p;
                if (f.kind == GroupDescriptor::FactorKind::CyclicFamily)
                    order = f.family->term(0);
                if (order > 1) break;
            }
            GroupDescriptor ann;
            ann.factors.push_back(GroupDescriptor::Factor::cyclic(order, 1, false));
            c.check(!tchar_decide(ann, true, true).yes,
                    "disconnected dual must reject the open-kernel annihilator");
        }
    }
}

void suite_socle(Ctx& c) {
    const unsigned long max_order = c.opt.quick ? 9 : 16;
    const std::size_t max_kinds = c.opt.quick ? 3 : 4;
    // (order, multiplicity) atoms; multiplicity 0 encodes omega
    struct Atom {
        unsigned long order;
        unsigned long mult;
    };
    std::vector<Atom> atoms;
    for (unsigned long o = 2; o <= max_order; ++o)
        for (unsigned long m : {1ul, 2ul, 3ul, 0ul}) atoms.push_back({o, m});

    std::vector<std::size_t> pick;
    // decisive truncation: finite multiplicities sum to at most 4*3, so a
    // rank of 13 at truncation 13 certifies unbounded growth
    const unsigned long decisive = 13;
    auto visit = [&](auto&& self, std::size_t start) -> void {
        if (!pick.empty()) {
            GroupDescriptor d;
            for (std::size_t idx : pick) {
                const Atom& a = atoms[idx];
                d.factors.push_back(GroupDescriptor::Factor::cyclic(
                    Int(a.order), a.mult == 0 ? 1 : a.mult, a.mult == 0));
            }
            Exponent e = exponent(d);
            bool closed_unbounded = socle_rank(d, e.value, 1).unbounded;
            for (unsigned long k = 1; k <= 5; ++k) {
                std::vector<Int> orders;
                for (std::size_t idx : pick) {
                    const Atom& a = atoms[idx];
                    unsigned long copies = a.mult == 0 ? k : a.mult;
                    for (unsigned long i = 0; i < copies; ++i)
                        orders.push_back(Int(a.order));
                }
                c.check(socle_rank(d, e.value, k).rank == socle_rank_oracle(orders, e.value),
                        "socle rank mismatch at truncation " + std::to_string(k) + " for " +
                            d.str());
            }
            std::vector<Int> orders;
            for (std::size_t idx : pick) {
                const Atom& a = atoms[idx];
                unsigned long copies = a.mult == 0 ? decisive : a.mult;
                for (unsigned long i = 0; i < copies; ++i) orders.push_back(Int(a.order));
            }
            bool oracle_unbounded = socle_rank_oracle(orders, e.value) >= decisive;
            c.check(closed_unbounded == oracle_unbounded,
                    "socle growth disagreement for " + d.str());
            c.check(tchar_decide(d, true, true).yes == oracle_unbounded,
                    "decision vs socle-growth oracle disagreement for " + d.str());
        }
        if (pick.size() == max_kinds) return;
        for (std::size_t i = start; i < atoms.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    visit(visit, 0);
}

// --- witness budget grid ----------------------------------------------------------

void suite_budgets(Ctx& c) {
    std::vector<Rat> grid = {Rat(1, 100), Rat(1, 50), Rat(2, 25), Rat(9, 100)};
    if (c.opt.quick) grid = {Rat(2, 25)};
    std::size_t scale = c.opt.quick ? 12 : c.opt.witness_scale;
    for (const Rat& eps : grid) {
        WitnessReport a =
            torus_witness(BaseSequence::arithmetic(Int(100), Int(100)), eps, scale);
        WitnessReport b = padic_witness(Int(2), IndexRule::squares(), eps, scale);
        WitnessReport d =
            product_witness(BaseSequence::geometric(Int(2), Int(2)), eps, scale);
        for (const WitnessReport* r : {&a, &b, &d}) {
            for (const auto& bc : r->budgets)
                c.check(bc.pass, "family " + r->family + " eps " + rat_str(eps) +
                                     " budget failed: " + bc.name + " (" + bc.asserted +
                                     "), computed " + bc.computed.str());
            for (const auto& w : r->witnesses)
                c.check(w.verdict.member(), "family " + r->family + " witness " +
                                                std::to_string(w.index) + " not a member");
            c.check(r->limit_verdict.outcome == Verdict::Outcome::NonMember,
                    "family " + r->family + " limit must be a non-member");
        }
    }
}

// --- round trips --------------------------------------------------------------

void suite_roundtrip(Ctx& c) {
    for (std::size_t i = 0; i < 500; ++i) {
        Sample s = random_sample(c, static_cast<ModelKind>(c.ri(0, 2)));
        c.check(Element::parse(s.x.str()) == s.x, "element line round trip: " + s.x.str());
        c.check(CharSequence::parse(s.u.str()) == s.u,
                "sequence line round trip: " + s.u.str());
    }
    for (std::size_t i = 0; i < 300; ++i) {
        GroupDescriptor d = random_descriptor(c);
        c.check(GroupDescriptor::parse(d.str()) == d, "descriptor round trip: " + d.str());
    }
    c.check(GroupDescriptor::parse("Z:1+Z(2):omega") ==
                GroupDescriptor::parse("  Z : 1 +  Z( 2 ) : omega "),
            "descriptor parsing must ignore whitespace");
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"eq02",       "angle",    "encode", "metric",  "pairing", "rho",
            "membership", "decision", "socle",  "budgets", "roundtrip"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    Ctx c(name, opt);
    if (name == "eq02")
        suite_eq02(c);
    else if (name == "angle")
        suite_angle(c);
    else if (name == "encode")
        suite_encode(c);
    else if (name == "metric")
        suite_metric(c);
    else if (name == "pairing")
        suite_pairing(c);
    else if (name == "rho")
        suite_rho(c);
    else if (name == "membership")
        suite_membership(c);
    else if (name == "decision")
        suite_decision(c);
    else if (name == "socle")
        suite_socle(c);
    else if (name == "budgets")
        suite_budgets(c);
    else if (name == "roundtrip")
        suite_roundtrip(c);
    else
        throw DomainError("unknown suite '" + name + "'");
    return c.res;
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    for (const std::string& n : suite_names()) out.push_back(run_suite(n, opt));
    return out;
}

}  // namespace tchar
