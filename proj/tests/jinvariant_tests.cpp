#include <doctest.h>

#include <random>
#include <vector>

#include "tribill/errors.hpp"
#include "tribill/j_invariant.hpp"
#include "tribill/lemma_covers.hpp"

using namespace tribill;

namespace {

RealCyclotomic rc(long n) { return RealCyclotomic::from_rational(Rational(n)); }
RealCyclotomic rc(long p, long q) { return RealCyclotomic::from_rational(make_rational(p, q)); }

} // namespace

TEST_SUITE("jinvariant") {

TEST_CASE("unit square wedge matrix at conductor 1") {
    std::vector<Vec2> square = {{rc(0), rc(0)}, {rc(1), rc(0)}, {rc(1), rc(1)}, {rc(0), rc(1)}};
    auto J = j_of_polygon(square);
    CHECK(J.conductor() == 1);
    CHECK(J.dimension() == 1);
    CHECK(J.at(0, 1) == Rational(2));   // twice the area in the 1 wedge 1 slot
    CHECK(J.at(1, 0) == Rational(-2));
    CHECK(J == JInvariant(1, {Rational(0), Rational(2), Rational(-2), Rational(0)}));
    CHECK_THROWS_AS(JInvariant(1, {Rational(0), Rational(1), Rational(1), Rational(0)}),
                    domain_error);
    CHECK_THROWS_AS(JInvariant(5, {Rational(0)}), domain_error);
}

TEST_CASE("wedges are antisymmetric and Q-bilinear") {
    Vec2 u{cos_pi(make_rational(1, 5)), rc(1)};
    Vec2 w{rc(2, 3), sin_pi(make_rational(1, 7))};
    JInvariant J(lcm_conductor(u.x.conductor(), w.y.conductor()));
    J.add_wedge(u, w);
    CHECK(!J.is_zero());
    J.add_wedge(w, u);
    CHECK(J.is_zero());
    J.add_wedge(u, w);
    J.add_wedge(u, w, -1);
    CHECK(J.is_zero());
    // u wedge u dies even when the coordinates are irrational
    J.add_wedge(u, u);
    CHECK(J.is_zero());
}

TEST_CASE("translating a polygon leaves its wedge sum alone") {
    std::vector<Vec2> poly = {{rc(0), rc(0)},
                              {rc(1), rc(0)},
                              {cos_pi(make_rational(1, 5)), sin_pi(make_rational(1, 5))}};
    Vec2 t{rc(-7, 3), rc(22, 9)};
    std::vector<Vec2> moved;
    for (const auto& v : poly) moved.push_back(v + t);
    CHECK(j_of_polygon(moved) == j_of_polygon(poly));
    // an irrational translation works too
    Vec2 s{sin_pi(make_rational(2, 9)), cos_pi(make_rational(1, 12))};
    std::vector<Vec2> moved2;
    for (const auto& v : poly) moved2.push_back(v + s);
    CHECK(j_of_polygon(moved2) == j_of_polygon(poly));
}

TEST_CASE("a flat triangle can still carry a nonzero wedge") {
    // Zero area, but 1 and cos(pi/5) are rationally independent.
    std::vector<Vec2> flat = {{rc(0), rc(0)}, {rc(1), rc(0)}, {cos_pi(make_rational(1, 5)), rc(0)}};
    CHECK(!j_of_polygon(flat).is_zero());
    // With rational coordinates the same shape collapses.
    std::vector<Vec2> flatq = {{rc(0), rc(0)}, {rc(1), rc(0)}, {rc(5, 7), rc(0)}};
    CHECK(j_of_polygon(flatq).is_zero());
}

TEST_CASE("quarter turn matches rotating the inputs and is an involution") {
    std::vector<Vec2> poly = {{rc(0), rc(0)},
                              {rc(1), rc(0)},
                              {cos_pi(make_rational(1, 5)), sin_pi(make_rational(1, 5))}};
    auto J = j_of_polygon(poly);
    std::vector<Vec2> rot;
    for (const auto& v : poly) rot.push_back({Rational(-1) * v.y, v.x});
    CHECK(j_of_polygon(rot) == J.quarter_turned());
    CHECK(J.quarter_turned().quarter_turned() == J);
    CHECK(!(J.quarter_turned() == J));
}

TEST_CASE("rational rescaling acts quadratically") {
    TriangleSignature sig(3, 4, 5);
    auto J = j_invariant(sig);
    CHECK(!J.is_zero());
    CHECK(J.conductor() == 48);
    CHECK(J.dimension() == 16);
    CHECK(j_compare(j_invariant(sig, rc(3)), J, Rational(9)));
    CHECK(j_compare(j_invariant(sig, rc(1, 2)), J, make_rational(1, 4)));
}

TEST_CASE("irrational rescaling is not a scalar on the wedge") {
    // sqrt(2) doubles the area but moves J off the rational line through it.
    TriangleSignature sig(3, 4, 5);
    auto J = j_invariant(sig);
    auto Jr = j_invariant(sig, Rational(2) * cos_pi(make_rational(1, 4)));
    CHECK_FALSE(j_compare(Jr, J, Rational(2)));
    CHECK_FALSE(j_compare(Jr, J, Rational(-2)));
}

TEST_CASE("j_compare scales the right-hand side") {
    auto J = j_invariant(TriangleSignature(1, 2, 2));
    CHECK(j_compare(J, J, Rational(1)));
    CHECK(j_compare(J + J, J, Rational(2)));
    CHECK_FALSE(j_compare(J, J, Rational(2)));
    JInvariant zero(12);
    CHECK(j_compare(zero, zero, Rational(7)));
}

TEST_CASE("lifting to a larger conductor preserves the element") {
    auto J = j_invariant(TriangleSignature(1, 2, 2)); // conductor divides 20
    auto L = J.lifted_to(3 * J.conductor());
    CHECK(L.conductor() == 3 * J.conductor());
    CHECK(L == J);
    CHECK(J == L);
}

TEST_CASE("the surface wedge is scissors invariant under copy translations") {
    std::mt19937 rng(20260822);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    auto check_surface = [&](const TriangleSignature& sig, int trials) {
        UnfoldedSurface surf(sig);
        auto J = j_invariant(surf);
        for (int trial = 0; trial < trials; ++trial) {
            JInvariant total(1);
            for (long c = 0; c < surf.num_copies(); ++c) {
                auto v = surf.copy_vertices(c);
                Vec2 t{rc(num(rng), den(rng)), rc(num(rng), den(rng))};
                std::vector<Vec2> tri;
                if (surf.element(c).eps == 0)
                    tri = {v[0] + t, v[1] + t, v[2] + t};
                else
                    tri = {v[0] + t, v[2] + t, v[1] + t};
                total += j_of_polygon(tri);
            }
            CHECK(total == J);
        }
    };
    check_surface(TriangleSignature(2, 3, 4), 20);
    for (const auto& sig : canonical_signatures_up_to(10)) check_surface(sig, 2);
}

TEST_CASE("cover family members reproduce the base wedge") {
    auto f12 = lemma7_family(1, 2);
    auto JY12 = j_invariant(f12.y);
    CHECK(j_compare(j_invariant(f12.x1.sig, f12.x1.sigma), JY12, Rational(f12.x1.degree)));
    REQUIRE(f12.x2.j_quarter_turn);
    auto JX2 = j_invariant(f12.x2.sig, f12.x2.sigma);
    CHECK(j_compare(JX2.quarter_turned(), JY12, Rational(f12.x2.degree)));
    CHECK_FALSE(j_compare(JX2, JY12, Rational(f12.x2.degree)));

    auto f23 = lemma7_family(2, 3);
    auto JY23 = j_invariant(f23.y);
    CHECK_FALSE(f23.x1.j_quarter_turn);
    CHECK(j_compare(j_invariant(f23.x1.sig, f23.x1.sigma), JY23, Rational(f23.x1.degree)));
    CHECK(j_compare(j_invariant(f23.x2.sig, f23.x2.sigma), JY23, Rational(f23.x2.degree)));
}

}
