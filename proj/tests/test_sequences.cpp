#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tchar/element.hpp"
#include "tchar/descriptor.hpp"

using namespace tchar;

TEST_CASE("base sequence rules evaluate") {
    BaseSequence a = BaseSequence::arithmetic(Int(2), Int(1));
    CHECK(a.term(0) == 2);
    CHECK(a.term(5) == 7);
    BaseSequence g = BaseSequence::geometric(Int(2), Int(2));
    CHECK(g.term(3) == 16);
    BaseSequence p = BaseSequence::product_of(a);
    CHECK(p.term(0) == 2);
    CHECK(p.term(2) == 24);  // 2*3*4
    BaseSequence e = BaseSequence::explicit_list({Int(5), Int(7)},
                                                 BaseSequence::arithmetic(Int(9), Int(2)));
    CHECK(e.term(0) == 5);
    CHECK(e.term(1) == 7);
    CHECK(e.term(2) == 13);  // continuation at absolute index 2
}

TEST_CASE("base sequence validation predicates") {
    CHECK(BaseSequence::arithmetic(Int(2), Int(1)).valid_torus_base());
    CHECK(BaseSequence::arithmetic(Int(100), Int(100)).valid_torus_base());
    CHECK_FALSE(BaseSequence::arithmetic(Int(2), Int(0)).valid_torus_base());  // constant
    CHECK_FALSE(BaseSequence::arithmetic(Int(1), Int(1)).all_terms_at_least(Int(2)));
    CHECK(BaseSequence::geometric(Int(2), Int(2)).valid_product_base());
    CHECK_FALSE(BaseSequence::geometric(Int(2), Int(1)).valid_product_base());
    CHECK(BaseSequence::product_of(BaseSequence::arithmetic(Int(2), Int(1)))
              .strictly_increasing());
}

TEST_CASE("index rules") {
    IndexRule sq = IndexRule::squares();
    CHECK(sq.term(0) == 0);
    CHECK(sq.term(7) == 49);
    CHECK(sq.gap(4) == 9);
    CHECK(sq.gaps_diverge());
    IndexRule tri = IndexRule::triangular();
    CHECK(tri.term(0) == 1);
    CHECK(tri.term(3) == 10);
    CHECK_FALSE(IndexRule::arithmetic(Int(1), Int(3)).gaps_diverge());
    // minimal l with gap(w) > 8 for all w >= l, subject to l >= 9
    CHECK(sq.min_l_with_gaps_above(Int(8), 9) == 9);
    CHECK(sq.min_l_with_gaps_above(Int(8), 1) == 4);  // 2*4+1 = 9 > 8
}

TEST_CASE("tail rules produce digits in range") {
    TailRule sf = TailRule::scaled_floor(Rat(1, 250));
    CHECK(sf.digit(7, Int(256), true) == 1);    // floor(256/250)
    CHECK(sf.digit(7, Int(256), false) == 1);   // floor(255/250)
    CHECK(sf.digit(3, Int(16), true) == 0);
    CHECK(TailRule::constant(Int(0)) == TailRule::zero());
    CHECK(TailRule::periodic({Int(0), Int(0)}) == TailRule::zero());
    CHECK(TailRule::periodic({Int(3)}) == TailRule::constant(Int(3)));
    CHECK_THROWS_AS(TailRule::scaled_floor(Rat(3, 2)), DomainError);

    IndexRule sq = IndexRule::squares();
    TailRule ones = TailRule::spaced_ones(9, 8, sq);
    // positions (9+i)^2 - 8: 92, 113, ...
    CHECK(ones.digit(92, Int(2), false) == 1);
    CHECK(ones.digit(113, Int(2), false) == 1);
    CHECK(ones.digit(93, Int(2), false) == 0);
    CHECK(ones.digit(0, Int(2), false) == 0);
    CHECK_THROWS_AS(TailRule::spaced_ones(9, 0, sq), DomainError);
    CHECK_THROWS_AS(TailRule::spaced_ones(1, 8, sq), DomainError);  // gap(1) = 3 <= 8
}

TEST_CASE("rule grammar round trips") {
    for (const char* s : {"arith(2,1)", "geom(2,2)", "prod(arith(2,1))",
                          "explicit(5,7;arith(9,2))"}) {
        BaseSequence b = BaseSequence::parse(s);
        CHECK(b.str() == s);
        CHECK(BaseSequence::parse(b.str()) == b);
    }
    for (const char* s : {"squares", "cubes", "triangular", "arith(1,3)", "geom(1,2)"}) {
        IndexRule r = IndexRule::parse(s);
        CHECK(r.str() == s);
    }
    for (const char* s : {"zero", "const(3)", "periodic(0,1)", "scaledfloor(1/250)",
                          "spacedones(9,8,squares)"}) {
        TailRule t = TailRule::parse(s);
        CHECK(t.str() == s);
    }
    CHECK_THROWS_AS(BaseSequence::parse("arith(2,1) junk"), ParseError);
    CHECK_THROWS_AS(BaseSequence::parse("wavelet(2)"), ParseError);
}

TEST_CASE("element digits mix prefix and tail") {
    Model m = Model::torus(BaseSequence::arithmetic(Int(2), Int(1)));
    Element e = Element::make(m, {Int(1), Int(2)}, TailRule::constant(Int(1)));
    CHECK(e.digit(0) == 1);
    CHECK(e.digit(1) == 2);
    CHECK(e.digit(5) == 1);
    CHECK_FALSE(e.finite_support());
    CHECK(e.digits_window(0, 4) == std::vector<Int>{Int(1), Int(2), Int(1), Int(1)});

    Element z = Element::zero(m);
    CHECK(z.is_zero());
    CHECK(z.support_end() == 0);

    CHECK_THROWS_AS(Element::make(m, {Int(5)}, TailRule::zero()), DomainError);
}

TEST_CASE("sparse window of spaced ones") {
    Model m = Model::padic(Int(2));
    Element w = Element::make(m, {}, TailRule::spaced_ones(9, 8, IndexRule::squares()));
    auto win = w.digits_window(90, 30);  // covers 92 and 113
    CHECK(win[2] == 1);
    CHECK(win[23] == 1);
    Int total = 0;
    for (const Int& d : win) total += d;
    CHECK(total == 2);
}

TEST_CASE("element and sequence line format") {
    const char* line = "model=torus bases=arith(2,1) prefix=[1,2] tail=zero";
    Element e = Element::parse(line);
    CHECK(e.str() == line);
    Element p = Element::parse("model=padic p=2 nk=squares prefix=[1] tail=zero");
    CHECK(p.model.kind == ModelKind::PAdic);
    CHECK(p.digit(0) == 1);
    Element pr = Element::parse(
        "model=product bases=geom(2,2) prefix=[0,1] tail=scaledfloor(1/250)");
    CHECK(pr.model.kind == ModelKind::Product);
    CHECK(pr.digit(1) == 1);

    CharSequence u = CharSequence::parse("model=padic p=2 nk=squares");
    CHECK(u.model.p == 2);
    CHECK(u.nk == IndexRule::squares());
    CHECK(CharSequence::parse(u.str()) == u);
    CHECK_THROWS_AS(CharSequence::parse("model=padic p=2"), ParseError);
    CHECK_THROWS_AS(Element::parse("model=torus bases=arith(2,1) prefix=[1,2]"), ParseError);
    CHECK_THROWS_AS(Element::parse("model=torus bases=arith(2,1) prefix=[9] tail=zero"),
                    DomainError);
}

TEST_CASE("characters validate against the model") {
    Model m = Model::padic(Int(2));
    CHECK_THROWS_AS(Character::padic(Int(2), 3, m.p), DomainError);  // 2/8 not reduced
    CHECK_THROWS_AS(Character::padic(Int(9), 3, m.p), DomainError);  // 9 >= 8
    Character ok = Character::padic(Int(3), 3, m.p);
    CHECK(ok.t == 3);
    CHECK(Character::product({{2, Int(0)}}).is_identity());
    CHECK_THROWS_AS(Model::padic(Int(6)), DomainError);
}

TEST_CASE("descriptor text form") {
    const char* s = "Z:1 + Z(2):omega + Zp(3,inf):1 + Zfam(geom(2,2)):1";
    GroupDescriptor d = GroupDescriptor::parse(s);
    CHECK(d.factors.size() == 4);
    CHECK(d.str() == s);
    CHECK(GroupDescriptor::parse("Z:1+Z(2):omega") ==
          GroupDescriptor::parse(" Z : 1 + Z(2) : omega"));
    CHECK(GroupDescriptor::parse("").trivial());
    CHECK(GroupDescriptor::parse("Z(2):1 + Z(4):3").finite_group());
    CHECK_FALSE(GroupDescriptor::parse("Z(2):omega").finite_group());
    CHECK_THROWS_AS(GroupDescriptor::parse("Z(1):1"), DomainError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Zp(4,inf):1"), DomainError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Z:0"), ParseError);
    CHECK_THROWS_AS(GroupDescriptor::parse("Q:1"), ParseError);
}

TEST_CASE("random object round trips") {
    // covered in depth by the roundtrip suite; spot-check it here
    Model m = Model::product(BaseSequence::geometric(Int(2), Int(2)));
    Element e = Element::make(m, {Int(1), Int(2), Int(7)},
                              TailRule::spaced_ones(4, 2, IndexRule::triangular()));
    CHECK(Element::parse(e.str()) == e);
}
