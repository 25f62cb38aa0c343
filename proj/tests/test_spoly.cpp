#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

const auto xyz = make_alphabet({"x", "y", "z"});
const Ordering dl(OrderKind::DegLex, xyz);

std::set<Placement4> as_set(const std::vector<OverlapSpec>& v) {
    std::set<Placement4> out;
    for (const auto& o : v) out.insert({o.l1, o.r1, o.l2, o.r2});
    return out;
}

OverlapSpec find_spec(const Word& u1, const Word& u2, std::size_t i, std::size_t j, const Word& l1,
                      const Word& l2) {
    for (auto o : enumerate_overlaps(u1, u2, i == j))
        if (o.l1 == l1 && o.l2 == l2) {
            o.i = i;
            o.j = j;
            return o;
        }
    throw std::logic_error("overlap not found");
}

}  // namespace

TEST_CASE("overlap enumeration on documented words") {
    auto v = enumerate_overlaps(w("xy"), w("yz"), false);
    REQUIRE(v.size() == 1);
    CHECK(v[0].word == w("xyz"));
    CHECK(v[0].l1.empty());
    CHECK(v[0].r1 == w("z"));
    CHECK(v[0].l2 == w("x"));
    CHECK(v[0].r2.empty());

    v = enumerate_overlaps(w("xyx"), w("xyx"), true);
    REQUIRE(v.size() == 1);
    CHECK(v[0].word == w("xyxyx"));

    CHECK(enumerate_overlaps(w("x"), w("y"), false).empty());
    // a word against itself in two different elements also meets at the identical placement
    CHECK(enumerate_overlaps(w("yz"), w("yz"), false).size() == 1);
    CHECK(enumerate_overlaps(w("yz"), w("yz"), true).empty());
}

TEST_CASE("overlap kinds") {
    auto v = enumerate_overlaps(w("xyz"), w("y"), false);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == OverlapKind::Subword);
    // a prefix or suffix placement of a shorter word counts as a subword overlap
    v = enumerate_overlaps(w("xy"), w("x"), false);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == OverlapKind::Subword);
    v = enumerate_overlaps(w("xy"), w("yz"), false);
    CHECK(v[0].kind == OverlapKind::Suffix);
    v = enumerate_overlaps(w("yz"), w("xy"), false);
    CHECK(v[0].kind == OverlapKind::Prefix);
}

TEST_CASE("overlap enumeration matches the sliding oracle") {
    Rng rng(21);
    for (int t = 0; t < 1500; ++t) {
        const Word u1 = rng.word(2, 1, 6), u2 = rng.word(2, 1, 6);
        CHECK(as_set(enumerate_overlaps(u1, u2, false)) == brute_overlaps(u1, u2, false));
        CHECK(as_set(enumerate_overlaps(u1, u1, true)) == brute_overlaps(u1, u1, true));
    }
}

TEST_CASE("every overlap reproduces its word") {
    Rng rng(22);
    for (int t = 0; t < 500; ++t) {
        const Word u1 = rng.word(3, 1, 6), u2 = rng.word(3, 1, 6);
        for (const auto& o : enumerate_overlaps(u1, u2, false)) {
            CHECK(word_concat(o.l1, u1, o.r1) == o.word);
            CHECK(word_concat(o.l2, u2, o.r2) == o.word);
            CHECK((o.l1.empty() || o.l2.empty()));
            CHECK((o.r1.empty() || o.r2.empty()));
        }
        for (const auto& o : enumerate_overlaps(u1, u1, true)) CHECK(o.l1 != o.l2);
    }
}

TEST_CASE("S-polynomials") {
    const Polynomial a = poly(dl, "x*y - z"), b = poly(dl, "y*z - x");
    CHECK(s_polynomial(find_spec(a.lm(), b.lm(), 0, 1, {}, w("x")), a, b) == poly(dl, "x^2 - z^2"));

    const Polynomial c = poly(dl, "y*z + 2*x + z"), d = poly(dl, "y*z + x");
    CHECK(s_polynomial(find_spec(c.lm(), d.lm(), 0, 1, {}, {}), c, d) == poly(dl, "x + z"));

    const Polynomial e = poly(dl, "x + z");
    CHECK(s_polynomial(find_spec(a.lm(), e.lm(), 0, 1, {}, {}), a, e) == poly(dl, "-z*y - z"));

    OverlapSpec bad = find_spec(a.lm(), b.lm(), 0, 1, {}, w("x"));
    bad.r1 = w("y");
    CHECK_THROWS_AS(s_polynomial(bad, a, b), ArgumentError);
}

TEST_CASE("S-polynomials never contain their overlap word") {
    Rng rng(23);
    for (int t = 0; t < 300; ++t) {
        const Polynomial p = rng.polynomial(dl, 4, 4), q = rng.polynomial(dl, 4, 4);
        if (p.is_zero() || q.is_zero() || p.lm().empty() || q.lm().empty()) continue;
        for (auto o : enumerate_overlaps(p.lm(), q.lm(), false)) {
            o.i = 0;
            o.j = 1;
            const Polynomial s = s_polynomial(o, p, q);
            for (const auto& term : s.terms()) CHECK(term.mon != o.word);
            if (!s.is_zero()) CHECK(dl.less(s.lm(), o.word));
        }
    }
}

TEST_CASE("second criterion on the worked example") {
    const auto G = polys(dl, {"x*y - z", "y*z + 2*x + z", "y*z + x", "x + z", "-z*y - z", "2*z^2"});
    const OverlapSpec target = find_spec(G[2].lm(), G[4].lm(), 2, 4, w("z"), {});
    CHECK(target.word == w("zyz"));

    SettledSet settled;
    CHECK_FALSE(criterion2_applies(target, G, settled));

    settled.insert(settled_key(find_spec(G[1].lm(), G[2].lm(), 1, 2, {}, {})));
    settled.insert(settled_key(find_spec(G[1].lm(), G[4].lm(), 1, 4, w("z"), {})));
    CHECK(criterion2_applies(target, G, settled));

    // dropping one of the induced overlaps disables the criterion
    SettledSet partial;
    partial.insert(settled_key(find_spec(G[1].lm(), G[4].lm(), 1, 4, w("z"), {})));
    CHECK_FALSE(criterion2_applies(target, G, partial));
}

TEST_CASE("second criterion needs a third placement") {
    const auto G = polys(dl, {"x*y - z", "y*z - x"});
    const OverlapSpec only = find_spec(G[0].lm(), G[1].lm(), 0, 1, {}, w("x"));
    SettledSet settled;
    settled.insert(settled_key(only));
    CHECK_FALSE(criterion2_applies(only, G, settled));
}

TEST_CASE("settled keys ignore argument order") {
    CHECK(placement_key(1, 0, 4, 1) == placement_key(4, 1, 1, 0));
    CHECK_FALSE(placement_key(1, 0, 4, 1) == placement_key(1, 1, 4, 0));
}

TEST_CASE("sugar") {
    const auto G = polys(dl, {"x*y*x - z", "x*z + 1"});
    OverlapSpec o = find_spec(G[0].lm(), G[1].lm(), 0, 1, {}, w("xy"));
    CHECK(o.r1 == w("z"));
    CHECK(sugar_value(o, 3, 2) == 4);
    OverlapSpec eq = find_spec(w("yz"), w("yz"), 0, 1, {}, {});
    CHECK(sugar_value(eq, 5, 5) == 5);
    CHECK(sugar_value(eq, 2, 7) == 7);
}
