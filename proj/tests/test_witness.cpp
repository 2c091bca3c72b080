#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tchar/verify.hpp"
#include "tchar/witness.hpp"

using namespace tchar;

namespace {
const Rat kEps(2, 25);

const BudgetCheck* find_budget(const WitnessReport& r, const std::string& name) {
    for (const auto& b : r.budgets)
        if (b.name == name) return &b;
    return nullptr;
}
}  // namespace

TEST_CASE("torus witness run at desk scale") {
    BaseSequence a = BaseSequence::arithmetic(Int(100), Int(100));
    WitnessReport r = torus_witness(a, kEps, 24);
    CHECK(r.family == "A");
    CHECK(r.l == 2);  // u_0 = 100, u_1 = 20000 > 40/eps = 500
    CHECK(r.failed_budgets() == 0);
    CHECK(r.witnesses.size() == 24 - r.l);
    for (const auto& w : r.witnesses) {
        CHECK(w.verdict.member());
        CHECK(w.rho_enclosure.hi < to_double_down(kEps));
        // the strengthened bound eps/20 + 2*eps/3 = 43/750
        CHECK(w.rho_enclosure.hi < to_double_down(Rat(43, 750)));
    }
    CHECK(r.limit_verdict.outcome == Verdict::Outcome::NonMember);
    CHECK(r.limit_verdict.limit == Rat(1, 250));
    CHECK(r.limit.tail == TailRule::scaled_floor(Rat(1, 250)));

    // first witness digits: floor((a_n-1)*eps/20) = floor((100n+99)/250)
    const Element& x = r.witnesses.front().element;
    CHECK(x.digit(0) == 0);
    CHECK(x.digit(2) == 1);  // 299/250
    CHECK(x.digit(3) == 1);  // 399/250
}

TEST_CASE("torus witness degenerate range") {
    BaseSequence a = BaseSequence::arithmetic(Int(100), Int(100));
    std::size_t l = torus_witness_start(a, kEps);
    Element x = torus_witness_element(a, kEps, l, l);
    CHECK(x.is_zero());
    CharSequence u = CharSequence::torus(a);
    BoundInterval rz = rho(u, x, Element::zero(u.model), 8);
    CHECK(rz.hi == 0.0);
}

TEST_CASE("p-adic witness parameters and budgets") {
    auto [l, s] = padic_witness_params(IndexRule::squares(), kEps);
    CHECK(s == 8);  // 1/128 > 1/250 >= 1/256
    CHECK(l == 9);  // minimal l > 8 with 2w+1 > 8 from l on

    WitnessReport r = padic_witness(Int(2), IndexRule::squares(), kEps, 12);
    CHECK(r.family == "B");
    CHECK(r.failed_budgets() == 0);
    for (const auto& w : r.witnesses) {
        CHECK(w.verdict.member());
        CHECK(w.rho_enclosure.hi < to_double_down(kEps));
        CHECK(w.rho_enclosure.hi < to_double_down(kEps / 20 + kEps / 2));
    }
    CHECK(r.limit_verdict.outcome == Verdict::Outcome::NonMember);
    CHECK(r.limit_verdict.limit == Rat(8));

    // limit digits sit at (9+i)^2 - 8
    CHECK(r.limit.digit(92) == 1);
    CHECK(r.limit.digit(113) == 1);
    CHECK(r.limit.digit(100) == 0);

    // first witness: a single one at 92, distance 2^-92
    const Element& w1 = r.witnesses.front().element;
    CHECK(w1.support_end() == 93);
    const BudgetCheck* mk = find_budget(r, "mk-defect");
    REQUIRE(mk != nullptr);
    CHECK(mk->pass);

    CHECK_THROWS_AS(padic_witness(Int(2), IndexRule::arithmetic(Int(1), Int(3)), kEps, 8),
                    DomainError);  // constant gaps never beat s
    CHECK_THROWS_AS(padic_witness(Int(4), IndexRule::squares(), kEps, 8), DomainError);
}

TEST_CASE("product witness run") {
    BaseSequence b = BaseSequence::geometric(Int(2), Int(2));
    WitnessReport r = product_witness(b, kEps, 20);
    CHECK(r.family == "C");
    CHECK(r.l == 6);  // 2^-6 < (2/25)/3 = 2/75
    CHECK(r.failed_budgets() == 0);
    for (const auto& w : r.witnesses) {
        CHECK(w.verdict.member());
        CHECK(w.rho_enclosure.hi < to_double_down(kEps));
    }
    CHECK(r.limit_verdict.outcome == Verdict::Outcome::NonMember);
    CHECK(r.limit_verdict.limit == Rat(1, 250));

    // digits floor(eps*b_n/20) = floor(2^(n+1)/250) vanish through n = 6
    const Element& w = r.witnesses.back().element;
    CHECK(w.digit(6) == 0);
    CHECK(w.digit(7) == 1);  // 256/250
    CHECK(w.digit(9) == 4);  // 1024/250
}

TEST_CASE("product witness with all-zero digits is vacuous") {
    // small strictly increasing bases: floor(eps*b_n/20) = 0 while b_n < 250
    BaseSequence b = BaseSequence::arithmetic(Int(2), Int(1));
    WitnessReport r = product_witness(b, kEps, 12);
    CHECK(r.failed_budgets() == 0);
    for (const auto& w : r.witnesses) {
        CHECK(w.element.is_zero());
        CHECK(w.rho_enclosure.hi == 0.0);
    }
}

TEST_CASE("witness dispatch follows the selected family") {
    WitnessConfig cfg;
    cfg.torus_bases = BaseSequence::arithmetic(Int(100), Int(100));
    WitnessReport a =
        unbounded_witness_report(GroupDescriptor::parse("Z:1"), kEps, 8, cfg);
    CHECK(a.family == "A");
    WitnessReport b =
        unbounded_witness_report(GroupDescriptor::parse("Zp(2,inf):1"), kEps, 4, cfg);
    CHECK(b.family == "B");
    WitnessReport c =
        unbounded_witness_report(GroupDescriptor::parse("Zfam(geom(2,2)):1"), kEps, 10, cfg);
    CHECK(c.family == "C");
    CHECK_THROWS_AS(unbounded_witness_report(GroupDescriptor::parse("Z(2):omega"), kEps, 8,
                                             cfg),
                    DomainError);
}

TEST_CASE("epsilon domain") {
    BaseSequence a = BaseSequence::arithmetic(Int(100), Int(100));
    CHECK_THROWS_AS(torus_witness(a, Rat(1, 10), 8), DomainError);
    CHECK_THROWS_AS(torus_witness(a, Rat(0), 8), DomainError);
    CHECK_THROWS_AS(torus_witness(BaseSequence::arithmetic(Int(2), Int(0)), kEps, 8),
                    DomainError);
}

TEST_CASE("budget grid over the epsilon pool") {
    VerifyOptions opt;
    opt.quick = true;
    SuiteResult r = run_suite("budgets", opt);
    INFO((r.notes.empty() ? std::string() : r.notes[0]));
    CHECK(r.failures == 0);
}
