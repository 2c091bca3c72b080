#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tchar/decision.hpp"
#include "tchar/verify.hpp"

#include <numeric>

using namespace tchar;

namespace {

// Literal embedding rank for tiny groups: enumerate tuples, generate
// subgroups by closure, and grow independent families of order-e elements.
struct TinyGroup {
    std::vector<unsigned long> orders;
    unsigned long size = 1;

    explicit TinyGroup(std::vector<unsigned long> o) : orders(std::move(o)) {
        for (unsigned long n : orders) size *= n;
    }
    std::vector<unsigned long> element(unsigned long idx) const {
        std::vector<unsigned long> e(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            e[i] = idx % orders[i];
            idx /= orders[i];
        }
        return e;
    }
    unsigned long index(const std::vector<unsigned long>& e) const {
        unsigned long idx = 0;
        for (std::size_t i = orders.size(); i-- > 0;) idx = idx * orders[i] + e[i];
        return idx;
    }
    unsigned long add(unsigned long a, unsigned long b) const {
        auto ea = element(a), eb = element(b);
        for (std::size_t i = 0; i < orders.size(); ++i) ea[i] = (ea[i] + eb[i]) % orders[i];
        return index(ea);
    }
    unsigned long order_of(unsigned long a) const {
        auto e = element(a);
        unsigned long o = 1;
        for (std::size_t i = 0; i < orders.size(); ++i)
            o = std::lcm(o, orders[i] / std::gcd(e[i], orders[i]));
        return o;
    }
    std::size_t span_size(const std::vector<unsigned long>& gens) const {
        std::vector<char> seen(size, 0);
        std::vector<unsigned long> frontier = {0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!frontier.empty()) {
            unsigned long x = frontier.back();
            frontier.pop_back();
            for (unsigned long g : gens) {
                unsigned long y = add(x, g);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    frontier.push_back(y);
                }
            }
        }
        return count;
    }
};

unsigned long enumeration_rank(const std::vector<unsigned long>& orders, unsigned long e) {
    TinyGroup g(orders);
    std::vector<unsigned long> of_order_e;
    for (unsigned long a = 0; a < g.size; ++a)
        if (g.order_of(a) == e) of_order_e.push_back(a);
    unsigned long best = 0;
    std::vector<unsigned long> chosen;
    unsigned long target = 1;
    auto grow = [&](auto&& self, std::size_t start) -> void {
        best = std::max<unsigned long>(best, chosen.size());
        for (std::size_t i = start; i < of_order_e.size(); ++i) {
            chosen.push_back(of_order_e[i]);
            unsigned long next_target = target * e;
            if (g.span_size(chosen) == next_target) {
                target = next_target;
                self(self, i + 1);
                target /= e;
            }
            chosen.pop_back();
        }
    };
    grow(grow, 0);
    return best;
}

GroupDescriptor cyclics(const std::vector<std::pair<unsigned long, long>>& spec) {
    // multiplicity -1 encodes omega
    GroupDescriptor d;
    for (auto [order, mult] : spec)
        d.factors.push_back(GroupDescriptor::Factor::cyclic(
            Int(order), mult < 0 ? 1 : static_cast<unsigned long>(mult), mult < 0));
    return d;
}

}  // namespace

TEST_CASE("exponent") {
    CHECK(exponent(cyclics({{6, 1}, {4, 2}})).value == 12);
    CHECK(exponent(cyclics({{6, 1}, {4, 2}})).finite);
    CHECK_FALSE(exponent(GroupDescriptor::parse("Z:1")).finite);
    CHECK_FALSE(exponent(GroupDescriptor::parse("Zp(3,inf):1")).finite);
    CHECK_FALSE(exponent(GroupDescriptor::parse("Zfam(geom(2,2)):1")).finite);
    CHECK(exponent(GroupDescriptor::parse("")).value == 1);
}

TEST_CASE("socle rank closed form") {
    GroupDescriptor d = cyclics({{4, 2}, {2, 1}});
    CHECK(socle_rank(d, Int(2), 1).rank == 3);
    CHECK(socle_rank(d, Int(4), 1).rank == 2);
    CHECK_FALSE(socle_rank(d, Int(4), 1).unbounded);
    CHECK(socle_rank(d, Int(8), 1).rank == 0);  // 8 does not divide the exponent

    GroupDescriptor w = cyclics({{2, -1}});
    for (unsigned long k = 1; k <= 5; ++k) CHECK(socle_rank(w, Int(2), k).rank == k);
    CHECK(socle_rank(w, Int(2), 1).unbounded);
}

TEST_CASE("invariant factor oracle") {
    auto inv = [](std::vector<unsigned long> v) {
        std::vector<Int> o;
        for (auto x : v) o.push_back(Int(x));
        std::vector<Int> f = invariant_factors(o);
        std::vector<unsigned long> r;
        for (auto& x : f) r.push_back(x.get_ui());
        return r;
    };
    CHECK(inv({4, 3}) == std::vector<unsigned long>{12});
    CHECK(inv({2, 4}) == std::vector<unsigned long>{2, 4});
    CHECK(inv({2, 2, 3}) == std::vector<unsigned long>{2, 6});
    CHECK(inv({6, 4}) == std::vector<unsigned long>{2, 12});
    CHECK(inv({2, 3, 5}) == std::vector<unsigned long>{30});
}

TEST_CASE("diagonal copies across coprime factors carry the socle") {
    // Z(4) + Z(3) contains Z(12) even though no single factor has order 12,
    // so the embedding test must work prime power by prime power
    GroupDescriptor d = cyclics({{4, 1}, {3, 1}});
    CHECK(socle_rank(d, Int(12), 1).rank == 1);
    CHECK(socle_rank_oracle({Int(4), Int(3)}, Int(12)) == 1);
    CHECK(enumeration_rank({4, 3}, 12) == 1);

    GroupDescriptor dd = cyclics({{4, -1}, {3, -1}});
    CHECK(socle_rank(dd, Int(12), 1).unbounded);
    CHECK(tchar_decide(dd, true, true).yes);
}

TEST_CASE("three routes agree on small groups") {
    const std::vector<std::vector<unsigned long>> groups = {
        {2}, {4}, {2, 2}, {4, 2}, {4, 4, 2}, {8, 2}, {6, 4}, {4, 3}, {9, 3}, {6, 6},
        {12, 2}, {8, 4, 2}, {5, 5}, {10, 4}, {16, 4},
    };
    for (const auto& orders : groups) {
        std::vector<std::pair<unsigned long, long>> spec;
        std::vector<Int> ints;
        unsigned long lcm_all = 1;
        for (unsigned long o : orders) {
            spec.push_back({o, 1});
            ints.push_back(Int(o));
            lcm_all = std::lcm(lcm_all, o);
        }
        GroupDescriptor d = cyclics(spec);
        for (unsigned long e : {2ul, 3ul, 4ul, 6ul, 8ul, 12ul}) {
            if (lcm_all % e != 0) continue;
            unsigned long closed = socle_rank(d, Int(e), 1).rank;
            unsigned long oracle = socle_rank_oracle(ints, Int(e));
            CAPTURE(e);
            CHECK(closed == oracle);
            if (TinyGroup(orders).size <= 1200) CHECK(closed == enumeration_rank(orders, e));
        }
    }
}

TEST_CASE("decision table") {
    auto dec = [](const char* s, bool gd = true, bool proper = true) {
        return tchar_decide(GroupDescriptor::parse(s), gd, proper);
    };
    Decision a = dec("Z:1");
    CHECK(a.yes);
    CHECK(a.branch == "infinite-exponent");
    Decision b = dec("Z(2):1");
    CHECK_FALSE(b.yes);
    CHECK(b.branch == "bounded-socle");
    Decision c = dec("Z(2):omega");
    CHECK(c.yes);
    CHECK(c.branch == "omega-socle");
    CHECK_FALSE(dec("Z(2):omega + Z(4):1").yes);
    CHECK(dec("Zp(3,inf):1").yes);
    CHECK_FALSE(dec("Z:1", false).yes);
    CHECK(dec("Z:1", false, false).yes);  // the whole group is always characterized
    CHECK_THROWS_AS(tchar_decide(GroupDescriptor::parse(""), true, true), DomainError);
}

TEST_CASE("MinAP admissibility") {
    CHECK(minap_admissible(GroupDescriptor::parse("Z:1")).yes);
    CHECK(minap_admissible(GroupDescriptor::parse("Z(2):omega")).yes);
    Decision fin = minap_admissible(GroupDescriptor::parse("Z(2):1 + Z(4):1"));
    CHECK_FALSE(fin.yes);
    CHECK(fin.branch == "finite-discrete");
}

TEST_CASE("connectivity of the dual") {
    CHECK(connected_dual(GroupDescriptor::parse("Z:1")));
    CHECK_FALSE(connected_dual(GroupDescriptor::parse("Z(2):1 + Z:1")));
    CHECK_FALSE(connected_dual(GroupDescriptor::parse("Zp(2,inf):1")));
    CHECK(all_gdelta_tchar(GroupDescriptor::parse("Z:omega")));
    CHECK(all_gdelta_tchar(GroupDescriptor::parse("Z:1")));
    CHECK_FALSE(all_gdelta_tchar(GroupDescriptor::parse("Z(2):1")));
}

TEST_CASE("witness family selection") {
    CHECK(select_unbounded_witness(GroupDescriptor::parse("Z:1 + Z(3):5")).label() == "A");
    WitnessFamily b =
        select_unbounded_witness(GroupDescriptor::parse("Zp(5,inf):1 + Zp(2,inf):1"));
    CHECK(b.label() == "B");
    CHECK(b.p == 2);  // smallest prime wins
    WitnessFamily c = select_unbounded_witness(GroupDescriptor::parse("Zfam(geom(2,2)):1"));
    CHECK(c.label() == "C");
    CHECK(c.bases->term(1) == 4);
    CHECK_THROWS_AS(select_unbounded_witness(GroupDescriptor::parse("Z(2):omega")),
                    DomainError);
}

TEST_CASE("decision property suite and quick socle sweep") {
    VerifyOptions opt;
    opt.quick = true;
    SuiteResult dec = run_suite("decision", opt);
    INFO((dec.notes.empty() ? std::string() : dec.notes[0]));
    CHECK(dec.failures == 0);
    SuiteResult soc = run_suite("socle", opt);
    INFO((soc.notes.empty() ? std::string() : soc.notes[0]));
    CHECK(soc.failures == 0);
    CHECK(soc.checks > 10000);
}
