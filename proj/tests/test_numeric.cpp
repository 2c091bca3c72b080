#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tchar/angle.hpp"
#include "tchar/verify.hpp"

#include <cmath>

using namespace tchar;

TEST_CASE("rational text form") {
    CHECK(rat_str(parse_rat("3/8")) == "3/8");
    CHECK(rat_str(parse_rat("6/16")) == "3/8");
    CHECK(rat_str(parse_rat("5")) == "5/1");
    CHECK(parse_rat("-1/2") == Rat(-1, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("a/2"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/2x"), ParseError);
}

TEST_CASE("angle normalization and group law") {
    CHECK(Angle(Rat(5, 2)).value() == Rat(1, 2));
    CHECK(Angle(Rat(-1, 4)).value() == Rat(3, 4));
    Angle a(Rat(3, 8)), b(Rat(7, 8));
    CHECK((a + b).value() == Rat(1, 4));
    CHECK((a + (-a)).is_zero());
    CHECK(a.scaled(Int(4)).value() == Rat(1, 2));
}

TEST_CASE("nearest integer distance") {
    CHECK(nearest_int_dist(Angle(Rat(3, 8))) == Rat(3, 8));
    CHECK(nearest_int_dist(Angle(Rat(7, 8))) == Rat(1, 8));
    CHECK(nearest_int_dist(Angle(Rat(1, 2))) == Rat(1, 2));
    CHECK(nearest_int_dist(Angle()) == 0);
}

TEST_CASE("unit norm enclosures at anchor points") {
    BoundInterval z = unit_norm(Angle());
    CHECK(z.exact);
    CHECK(z.lo == 0.0);
    CHECK(z.hi == 0.0);

    // |1 - e^{pi i}| = 2
    BoundInterval h = unit_norm(Angle(Rat(1, 2)));
    CHECK(h.lo <= 2.0);
    CHECK(h.hi >= 2.0);
    CHECK(h.hi - h.lo < 1e-12);

    // |1 - e^{pi i/2}| = sqrt(2)
    BoundInterval q = unit_norm(Angle(Rat(1, 4)));
    double root2 = std::sqrt(2.0);
    CHECK(q.lo <= root2);
    CHECK(q.hi >= root2);
    CHECK(q.lo > 0.785);   // above pi/4
    CHECK(q.hi < 1.5708);  // below pi/2
}

TEST_CASE("interval arithmetic stays outward") {
    BoundInterval a = BoundInterval::of(0.1, 0.2);
    BoundInterval b = BoundInterval::of(0.3, 0.4);
    BoundInterval s = add(a, b);
    CHECK(s.lo <= 0.1 + 0.3);
    CHECK(s.hi >= 0.2 + 0.4);
    BoundInterval m = max(a, b);
    CHECK(m.lo == 0.3);
    CHECK(m.hi == 0.4);
    CHECK(BoundInterval::lower_only(1.0).upper_finite() == false);
    CHECK(BoundInterval::of(0.5, 1.0).str().front() == '[');
}

TEST_CASE("norm over an angle window") {
    // window [0.4, 0.6] crosses 1/2, so the maximum is the diameter 2
    BoundInterval w = norm_within(Angle(Rat(1, 2)), Rat(1, 10));
    CHECK(w.hi >= 2.0 - 1e-12);
    // window [-1/10, 1/10] crosses 0, so the minimum is 0
    BoundInterval v = norm_within(Angle(), Rat(1, 10));
    CHECK(v.lo == 0.0);
    CHECK(v.hi < 0.63);  // 2*sin(pi/10) ~ 0.618
}

TEST_CASE("sandwich and containment property suites") {
    VerifyOptions opt;
    opt.samples = 2000;
    SuiteResult eq02 = run_suite("eq02", opt);
    CHECK(eq02.failures == 0);
    CHECK(eq02.checks == 2 * opt.samples);
    SuiteResult ang = run_suite("angle", opt);
    CHECK(ang.failures == 0);
}
