#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tchar/membership.hpp"
#include "tchar/verify.hpp"

using namespace tchar;

namespace {
CharSequence torus_u() { return CharSequence::torus(BaseSequence::arithmetic(Int(2), Int(1))); }
}  // namespace

TEST_CASE("torus criterion") {
    CharSequence u = torus_u();
    Element zero = Element::zero(u.model);
    CHECK(member_torus(u, zero).member());

    // scaled-floor tail with eps = 2/25: limit 1/250
    Element lim = Element::make(u.model, {}, TailRule::scaled_floor(Rat(1, 250)));
    Verdict v = member_torus(u, lim);
    CHECK(v.outcome == Verdict::Outcome::NonMember);
    CHECK(v.limit == Rat(1, 250));
    CHECK(v.criterion == "eq2");

    // a constant digit over growing bases vanishes in ratio
    Element c1 = Element::make(u.model, {}, TailRule::constant(Int(1)));
    CHECK(member_torus(u, c1).member());

    // scaled floor near 1: the distance limit reflects the wraparound
    Element hi = Element::make(u.model, {}, TailRule::scaled_floor(Rat(9, 10)));
    Verdict vh = member_torus(u, hi);
    CHECK(vh.outcome == Verdict::Outcome::NonMember);
    CHECK(vh.limit == Rat(1, 10));

    Element sp = Element::make(u.model, {}, TailRule::spaced_ones(4, 2, IndexRule::squares()));
    CHECK(member_torus(u, sp).outcome == Verdict::Outcome::Undetermined);
}

TEST_CASE("m_k run statistic") {
    // n = (1,3,6,10,...) and w = (1,0,0,...): k=2 gives j_2 = 0, m_2 = n_1 = 3
    IndexRule tri = IndexRule::triangular();
    std::vector<Int> w = {Int(1), Int(0), Int(0), Int(0), Int(0), Int(0), Int(0)};
    CHECK(compute_mk(Int(2), tri, w, 2) == 3);

    // all-zero digits: j_k = 0 is forced, m_k = n_{k-1}
    std::vector<Int> z(50, Int(0));
    CHECK(compute_mk(Int(2), tri, z, 2) == 3);
    CHECK(compute_mk(Int(2), IndexRule::squares(), z, 3) == 4);

    // digit strictly between 0 and p-1 pins j_k = n_k
    std::vector<Int> mid(10, Int(0));
    mid[4] = 1;  // n_2 = 4 for squares, p = 3
    CHECK(compute_mk(Int(3), IndexRule::squares(), mid, 2) == 4);

    CHECK_THROWS_AS(compute_mk(Int(2), tri, w, 1), DomainError);
    CHECK_THROWS_AS(compute_mk(Int(2), tri, std::vector<Int>{Int(0)}, 2), DomainError);
}

TEST_CASE("spaced ones realize the constant defect") {
    IndexRule sq = IndexRule::squares();
    Model m = Model::padic(Int(2));
    Element w = Element::make(m, {}, TailRule::spaced_ones(9, 8, sq));
    std::vector<Int> digits = materialize_digits(w, 1700);
    for (std::size_t k = 10; k <= 40; ++k) {
        Int expect = sq.term(k) - 8;
        CHECK(Int(static_cast<unsigned long>(compute_mk(Int(2), sq, digits, k))) == expect);
    }
}

TEST_CASE("p-adic criterion") {
    CharSequence u = CharSequence::padic(Int(2), IndexRule::squares());
    Element zero = Element::zero(u.model);
    CHECK(member_padic(u, zero).member());

    // the identity (1,0,0,...) with divergent gaps
    Element one = Element::make(u.model, {Int(1)}, TailRule::zero());
    Verdict v1 = member_padic(u, one);
    CHECK(v1.member());
    CHECK(v1.criterion == "eq4");

    Element w = Element::make(u.model, {}, TailRule::spaced_ones(9, 8, IndexRule::squares()));
    Verdict vw = member_padic(u, w);
    CHECK(vw.outcome == Verdict::Outcome::NonMember);
    CHECK(vw.limit == Rat(8));
    // trace records the constant defect
    for (const auto& [k, q] : vw.trace) CHECK(q == Rat(8));

    // mismatched index rule on the tail cannot be decided
    Element other =
        Element::make(u.model, {}, TailRule::spaced_ones(9, 8, IndexRule::cubes()));
    CHECK(member_padic(u, other).outcome == Verdict::Outcome::Undetermined);

    Element constant = Element::make(u.model, {}, TailRule::constant(Int(1)));
    CHECK(member_padic(u, constant).outcome == Verdict::Outcome::Undetermined);
}

TEST_CASE("product criterion") {
    CharSequence u = CharSequence::product(BaseSequence::geometric(Int(2), Int(2)));
    Element zero = Element::zero(u.model);
    CHECK(member_product(u, zero).member());

    Element fin = Element::make(u.model, {Int(1), Int(3), Int(0), Int(7)}, TailRule::zero());
    CHECK(member_product(u, fin).member());

    Element lim = Element::make(u.model, {}, TailRule::scaled_floor(Rat(1, 250)));
    Verdict v = member_product(u, lim);
    CHECK(v.outcome == Verdict::Outcome::NonMember);
    CHECK(v.limit == Rat(1, 250));
    CHECK(v.criterion == "eq5");

    Element c1 = Element::make(u.model, {}, TailRule::constant(Int(1)));
    CHECK(member_product(u, c1).member());
}

TEST_CASE("numeric oracle on anchor elements") {
    CharSequence u = torus_u();
    Element zero = Element::zero(u.model);
    OracleReport oz = numeric_oracle(u, zero, 64, Rat(1, 1000000));
    CHECK(oz.consistency == OracleReport::Consistency::MemberConsistent);
    for (const auto& e : oz.trace) {
        CHECK(e.lo == 0.0);
        CHECK(e.hi == 0.0);
    }

    // scaled-floor tail keeps recurring mass near 2*sin(pi/4)
    CharSequence uf = CharSequence::torus(BaseSequence::arithmetic(Int(100), Int(100)));
    Element sf = Element::make(uf.model, {}, TailRule::scaled_floor(Rat(1, 4)));
    OracleReport os = numeric_oracle(uf, sf, 128, Rat(1, 1000000));
    CHECK(os.consistency == OracleReport::Consistency::NonMemberConsistent);
    CHECK(os.tail_level > 1.0);  // 2*sin(pi/4) ~ 1.414

    // p-adic witness tail: the trace decays to zero
    CharSequence up = CharSequence::padic(Int(2), IndexRule::squares());
    Element wr = Element::make(
        up.model, materialize_digits(Element::make(up.model, {},
                                                   TailRule::spaced_ones(9, 8,
                                                                         IndexRule::squares())),
                                     200),
        TailRule::zero());
    OracleReport op = numeric_oracle(up, wr, 64, Rat(1, 100));
    CHECK(op.trace.back().hi < 1e-9);
}

TEST_CASE("verdicts agree with oracle traces") {
    CharSequence u = CharSequence::torus(BaseSequence::arithmetic(Int(100), Int(100)));
    Element sf = Element::make(u.model, {}, TailRule::scaled_floor(Rat(1, 4)));
    Verdict v = member_torus(u, sf, 256);
    OracleReport o = numeric_oracle(u, sf, 256, Rat(1, 1000000));
    std::string why;
    CHECK(verdict_consistent_with_trace(v, o, u, sf, &why));

    Element fin = Element::make(u.model, {Int(55), Int(120)}, TailRule::zero());
    Verdict vm = member_torus(u, fin, 256);
    OracleReport om = numeric_oracle(u, fin, 256, Rat(1, 1000000));
    CHECK(vm.member());
    CHECK(verdict_consistent_with_trace(vm, om, u, fin, &why));
}

TEST_CASE("membership property suite") {
    VerifyOptions opt;
    opt.elements_per_model = 25;
    opt.horizon = 128;
    SuiteResult r = run_suite("membership", opt);
    INFO((r.notes.empty() ? std::string() : r.notes[0]));
    CHECK(r.failures == 0);
}
