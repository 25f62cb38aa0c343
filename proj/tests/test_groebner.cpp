#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

const auto xyz = make_alphabet({"x", "y", "z"});
const Ordering dl(OrderKind::DegLex, xyz);
const auto xy = make_alphabet({"x", "y"});
const Ordering dl2(OrderKind::DegLex, xy);

const std::vector<std::string> mora_fixture = {"x*y - z", "y*z + 2*x + z", "y*z + x"};

LoggedRepresentation rep(std::initializer_list<std::tuple<int, std::string, std::size_t, std::string>> entries) {
    LoggedRepresentation l;
    for (const auto& [c, left, idx, right] : entries) l.add_entry(c, w(left), idx, w(right));
    return l;
}

}  // namespace

TEST_CASE("division") {
    const auto P = polys(dl, {"x*y - z", "y*z - x"});
    const DivisionResult d = divide(poly(dl, "x*y*z + 2*y"), P);
    CHECK(d.remainder == poly(dl, "z^2 + 2*y"));
    const auto Q = polys(dl, {"y*z - x", "x*y - z"});
    CHECK(divide(poly(dl, "x*y*z + 2*y"), Q).remainder == poly(dl, "x^2 + 2*y"));

    const Polynomial p = poly(dl, "x*y - z + y^2");
    CHECK(divide(p, {p}).remainder.is_zero());
    CHECK(divide(Polynomial(dl), P).remainder.is_zero());
    CHECK(divide(Polynomial(dl), P).log.empty());

    const DivisionResult e =
        divide(poly(dl, "3*x*y*x*z^2*x^3 + 2*x^2"), polys(dl, {"5*z^2*x + 2*y^2 + x + 4"}));
    CHECK(e.remainder == poly(dl, "-6/5*x*y*x*y^2*x^2 - 3/5*x*y*x^4 - 12/5*x*y*x^3 + 2*x^2"));
    CHECK(e.log.entries().size() == 1);
    CHECK(e.log.entries().begin()->second == Rational(3, 5));
}

TEST_CASE("division takes the leftmost placement") {
    const auto P = polys(dl, {"x - z"});
    const DivisionResult d = divide(poly(dl, "y*x*y*x"), P);
    // first step rewrites the leftmost x, leaving y z y x to be reduced again
    bool saw_left = false;
    for (const auto& [key, c] : d.log.entries())
        if (std::get<0>(key) == w("y") && std::get<2>(key) == w("yx")) saw_left = true;
    CHECK(saw_left);
    CHECK(d.remainder == poly(dl, "y*z*y*z"));
}

TEST_CASE("division remainder and log add back to the input") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        std::vector<Polynomial> P;
        while (P.size() < 3) {
            Polynomial q = rng.polynomial(dl, 3, 3);
            if (!q.is_zero() && !q.lm().empty()) P.push_back(q);
        }
        const Polynomial p = rng.polynomial(dl, 6, 5);
        const DivisionResult d = divide(p, P);
        CHECK(d.remainder + d.log.expand(P, dl) == p);
        for (const auto& term : d.remainder.terms())
            for (const auto& q : P) CHECK_FALSE(divides(q.lm(), term.mon));
    }
}

TEST_CASE("Mora on the worked example") {
    const GroebnerResult r = mora(polys(dl, mora_fixture));
    CHECK(r.status == RunStatus::Complete);
    CHECK(r.basis == polys(dl, {"x*y - z", "y*z + 2*x + z", "y*z + x", "x + z", "-z*y - z", "2*z^2"}));
    CHECK(is_groebner_basis(r.basis));
    CHECK(r.stats.criterion_skips > 0);
}

TEST_CASE("logged representations of the worked example") {
    GroebnerOptions opts;
    opts.logging = true;
    const auto F = polys(dl, mora_fixture);
    const GroebnerResult r = mora(F, opts);
    REQUIRE(r.logs.size() == 6);
    CHECK(r.logs[3].entries() == rep({{1, "", 1, ""}, {-1, "", 2, ""}}).entries());
    CHECK(r.logs[4].entries() == rep({{1, "", 0, ""}, {-1, "", 1, "y"}, {1, "", 2, "y"}}).entries());
    CHECK(r.logs[5].entries() ==
          rep({{-1, "", 0, "z"}, {1, "z", 1, ""}, {1, "", 1, "yz"}, {-2, "z", 2, ""}, {-1, "", 2, "yz"}}).entries());
    for (std::size_t k = 0; k < r.basis.size(); ++k) CHECK(r.logs[k].expand(F, dl) == r.basis[k]);
}

TEST_CASE("Mora on small inputs") {
    CHECK(mora(polys(dl, {"x"})).basis == polys(dl, {"x"}));
    const GroebnerResult r = mora(polys(dl2, {"2*x*y + y^2 + 5", "x^2 + y^2 + 8"}));
    CHECK(r.status == RunStatus::Complete);
    CHECK(r.basis.size() == 5);
    CHECK(reduce_basis(r.basis) ==
          polys(dl2, {"y^3 - 2*x + 37/5*y", "x^2 + y^2 + 8", "x*y + 1/2*y^2 + 5/2", "y*x + 1/2*y^2 + 5/2"}));
    CHECK_THROWS_AS(mora({}), ArgumentError);
    CHECK_THROWS_AS(mora({Polynomial(dl)}), ArgumentError);
}

TEST_CASE("reduced basis") {
    const GroebnerResult r = mora(polys(dl, mora_fixture));
    const auto R = reduce_basis(r.basis);
    CHECK(R == polys(dl, {"y*z - z", "z*y + z", "z^2", "x + z"}));
    CHECK(reduce_basis(R) == R);
    CHECK(reduce_basis(polys(dl, {"2*x", "x^2"})) == polys(dl, {"x"}));
    for (std::size_t k = 1; k < R.size(); ++k) CHECK(dl.greater(R[k - 1].lm(), R[k].lm()));
}

TEST_CASE("reduced basis ignores input order") {
    auto G = mora(polys(dl, mora_fixture)).basis;
    const auto R = reduce_basis(G);
    std::mt19937 gen(5);
    for (int t = 0; t < 20; ++t) {
        std::shuffle(G.begin(), G.end(), gen);
        CHECK(reduce_basis(G) == R);
    }
}

TEST_CASE("reduced basis with logs") {
    GroebnerOptions opts;
    opts.logging = true;
    const auto F = polys(dl, mora_fixture);
    const GroebnerResult r = mora(F, opts);
    const LoggedBasis lb = reduce_basis_logged(r.basis, r.logs);
    CHECK(lb.basis == reduce_basis(r.basis));
    for (std::size_t k = 0; k < lb.basis.size(); ++k) CHECK(lb.logs[k].expand(F, dl) == lb.basis[k]);
}

TEST_CASE("strategy and criterion do not change the reduced basis") {
    const std::vector<std::vector<std::string>> fixtures = {
        mora_fixture,
        {"x*y*x - y", "y^2 - x*y + 1"},
        {"x*y - y*x - z", "y*z - z*y - x", "z*x - x*z - y"},
    };
    for (const auto& f : fixtures) {
        const auto F = polys(dl, f);
        GroebnerOptions base;
        base.limits.max_degree = 9;
        const GroebnerResult a = mora(F, base);
        if (a.status != RunStatus::Complete) continue;
        for (Strategy s : {Strategy::Normal, Strategy::Sugar})
            for (bool c : {true, false}) {
                GroebnerOptions o = base;
                o.strategy = s;
                o.criterion2 = c;
                const GroebnerResult b = mora(F, o);
                REQUIRE(b.status == RunStatus::Complete);
                CHECK(reduce_basis(b.basis) == reduce_basis(a.basis));
            }
    }
}

TEST_CASE("caps report a status") {
    // x y x - y x y does not have a finite basis under DegLex
    const auto F = polys(dl2, {"x*y*x - y*x*y"});
    GroebnerOptions o;
    o.limits.max_degree = 8;
    CHECK(mora(F, o).status == RunStatus::DegreeCapHit);
    o.limits.max_degree = 100;
    o.limits.max_iterations = 5;
    CHECK(mora(F, o).status == RunStatus::IterationCapHit);
}

TEST_CASE("ideal membership") {
    const auto F = polys(dl, {"x + y + z - 3", "x^2 + y^2 + z^2 - 9", "x^3 + y^3 + z^3 - 24"});
    const auto R = reduce_basis(mora(F).basis);
    for (const auto& f : F) CHECK(divide(f, R).remainder.is_zero());
    CHECK(divide(poly(dl, "x + y + z - 2"), R).remainder == poly(dl, "1"));

    // second opinion from a basis built with the other strategy and without the criterion
    GroebnerOptions o;
    o.strategy = Strategy::Sugar;
    o.criterion2 = false;
    const auto R2 = reduce_basis(mora(F, o).basis);
    for (const char* q : {"x*z^2 + y*z^2 - 1", "x*y*z - 2", "y*x - x*y"})
        CHECK(divide(poly(dl, q), R).remainder == divide(poly(dl, q), R2).remainder);
}
