#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "tribill/errors.hpp"
#include "tribill/lemma_covers.hpp"

using namespace tribill;

namespace {

RealCyclotomic one() { return RealCyclotomic::from_rational(Rational(1)); }

bool sigma_inverts_sine(const FamilyCover& x, long s, long leg) {
    return x.sigma * sin_pi(make_rational(leg, 2 * s)) == one();
}

} // namespace

TEST_SUITE("covers") {

TEST_CASE("cover kind and profile rendering") {
    CHECK(to_string(CoverKind::F1) == "F1");
    CHECK(to_string(CoverKind::F2) == "F2");
    CHECK(to_string(CoverKind::Composition) == "Composition");
    CHECK(to_string(CoverKind::Equivalence) == "Equivalence");
    CHECK(to_string(RamificationEntry{3, 0, 2, 2}) == "3->ns m=2 x2");
    CHECK(to_string(RamificationEntry{2, 3, 1, 1}) == "2->3 m=1 x1");
}

TEST_CASE("profile entries order singular targets ahead of the ns bucket") {
    std::vector<RamificationEntry> p = {{3, 0, 2, 2}, {1, 2, 1, 1}, {3, 1, 2, 1}, {1, 1, 1, 1}};
    std::sort(p.begin(), p.end());
    std::vector<RamificationEntry> want = {{1, 1, 1, 1}, {1, 2, 1, 1}, {3, 1, 2, 1}, {3, 0, 2, 2}};
    CHECK(p == want);
}

TEST_CASE("profile_balanced means no cone point lands on a regular point") {
    CHECK(profile_balanced({{2, 3, 1, 1}, {3, 3, 1, 1}}));
    CHECK_FALSE(profile_balanced({{3, 0, 2, 2}}));
    CHECK(profile_balanced({}));
}

TEST_CASE("family over the (3,1,2) right triangle") {
    auto f = lemma7_family(1, 2);
    CHECK(f.y == TriangleSignature(3, 1, 2));
    CHECK_FALSE(f.degenerate);

    CHECK(f.x1.sig == TriangleSignature(1, 1, 4));
    CHECK(f.x1.degree == 2);
    CHECK(f.x1.apex_index == 3);
    CHECK_FALSE(f.x1.j_quarter_turn);
    CHECK(f.x1.sigma == RealCyclotomic::from_rational(Rational(2)));
    CHECK(sigma_inverts_sine(f.x1, 3, 1));

    CHECK(f.x2.sig == TriangleSignature(1, 1, 1));
    CHECK(f.x2.degree == 1);
    CHECK(f.x2.apex_index == 1);
    CHECK(f.x2.j_quarter_turn);
    CHECK(sigma_inverts_sine(f.x2, 3, 2));

    REQUIRE(f.composition.has_value());
    CHECK(to_string(*f.composition) == "X(1,1,4) -> X(1,1,1) deg 2 Composition [3->ns m=2 x2]");
    CHECK_FALSE(f.composition->balanced);
}

TEST_CASE("family over the (5,2,3) right triangle") {
    auto f = lemma7_family(2, 3);
    CHECK(f.y == TriangleSignature(5, 2, 3));

    CHECK(f.x1.sig == TriangleSignature(1, 1, 3));
    CHECK(f.x1.degree == 1);
    CHECK(f.x1.apex_index == 3);
    CHECK_FALSE(f.x1.j_quarter_turn);
    CHECK(sigma_inverts_sine(f.x1, 5, 2));

    CHECK(f.x2.sig == TriangleSignature(4, 3, 3));
    CHECK(f.x2.degree == 2);
    CHECK(f.x2.apex_index == 1);
    CHECK_FALSE(f.x2.j_quarter_turn);
    CHECK(sigma_inverts_sine(f.x2, 5, 3));

    REQUIRE(f.composition.has_value());
    CHECK(to_string(*f.composition) ==
          "X(3,3,4) -> X(1,1,3) deg 2 Composition [1->3 m=1 x1, 2->3 m=1 x1, 3->ns m=2 x2]");
}

TEST_CASE("family with both legs odd has no composition") {
    auto f = lemma7_family(1, 3);
    CHECK(f.y == TriangleSignature(4, 1, 3));
    CHECK(f.x1.sig == TriangleSignature(1, 1, 6));
    CHECK(f.x1.degree == 2);
    CHECK(f.x1.apex_index == 3);
    CHECK(f.x2.sig == TriangleSignature(3, 3, 2));
    CHECK(f.x2.degree == 2);
    CHECK(f.x2.apex_index == 3);
    CHECK_FALSE(f.composition.has_value());
}

TEST_CASE("family with the larger leg even composes with a balanced profile") {
    auto f = lemma7_family(3, 4);
    CHECK(f.x1.sig == TriangleSignature(3, 3, 8));
    CHECK(f.x2.sig == TriangleSignature(3, 2, 2));
    CHECK(f.x2.j_quarter_turn);
    REQUIRE(f.composition.has_value());
    CHECK(to_string(*f.composition) ==
          "X(3,3,8) -> X(2,2,3) deg 2 Composition "
          "[1->3 m=1 x1, 2->3 m=1 x1, 3->1 m=2 x1, 3->2 m=2 x1]");
    CHECK(f.composition->balanced);
}

TEST_CASE("degenerate family folds onto the square torus") {
    auto f = lemma7_family(1, 1);
    CHECK(f.degenerate);
    CHECK(f.y == TriangleSignature(2, 1, 1));
    CHECK(f.x1.sig == TriangleSignature(1, 1, 2));
    CHECK(f.x2.sig == TriangleSignature(1, 1, 2));
    CHECK(f.x1.degree == 2);
    CHECK(f.x2.degree == 2);
}

TEST_CASE("family arguments are validated") {
    CHECK_THROWS_AS(lemma7_family(2, 4), not_coprime);
    CHECK_THROWS_AS(lemma7_family(3, 9), not_coprime);
    CHECK_THROWS_AS(lemma7_family(0, 1), non_positive_entry);
    CHECK_THROWS_AS(lemma7_family(1, -2), non_positive_entry);
}

TEST_CASE("parity decides degrees across all small families") {
    for (long a1 = 1; a1 <= 12; ++a1)
        for (long a2 = 1; a2 <= 12; ++a2) {
            if (std::gcd(a1, a2) != 1) continue;
            auto f = lemma7_family(a1, a2);
            long s = a1 + a2;
            CHECK(f.y == TriangleSignature(s, a1, a2));
            CHECK(f.x1.degree == (a1 % 2 == 1 ? 2 : 1));
            CHECK(f.x2.degree == (a2 % 2 == 1 ? 2 : 1));
            CHECK(f.x1.degree + f.x2.degree >= 3); // legs cannot both be even
            CHECK(f.x1.apex_index == 3);
            CHECK(f.x2.apex_index == (a1 % 2 == 1 && a2 % 2 == 1 ? 3 : 1));
            CHECK(f.x1.j_quarter_turn == false);
            CHECK(f.x2.j_quarter_turn == (a2 % 2 == 0));
            CHECK(f.composition.has_value() == (f.x1.degree != f.x2.degree));
            CHECK(f.degenerate == (a1 == 1 && a2 == 1));
            CHECK(sigma_inverts_sine(f.x1, s, a1));
            CHECK(sigma_inverts_sine(f.x2, s, a2));
        }
}

TEST_CASE("doubling partners of isosceles unfoldings") {
    auto part = [](long u, long v, long w) { return doubling_partner(TriangleSignature(u, v, w)); };
    CHECK(part(1, 1, 3) == TriangleSignature(2, 3, 5));
    CHECK(part(2, 2, 3) == TriangleSignature(3, 4, 7));
    CHECK(part(1, 4, 4) == TriangleSignature(1, 8, 9));
    CHECK(part(1, 1, 1) == TriangleSignature(1, 2, 3));
    CHECK_FALSE(part(1, 1, 4).has_value());   // even base
    CHECK_FALSE(part(3, 3, 4).has_value());
    CHECK_FALSE(part(3, 4, 5).has_value());   // scalene
}

TEST_CASE("translation equivalence is symmetric and catches the doubled form") {
    TriangleSignature a(1, 1, 3), b(2, 3, 5), c(3, 4, 5);
    CHECK(translation_equivalent(a, a));
    CHECK(translation_equivalent(a, b));
    CHECK(translation_equivalent(b, a));
    CHECK_FALSE(translation_equivalent(a, c));
    CHECK(translation_equivalent(TriangleSignature(1, 2, 2), TriangleSignature(1, 4, 5)));
    CHECK(translation_equivalent(TriangleSignature(5, 4, 1), TriangleSignature(2, 2, 1)));
}

TEST_CASE("feasible degrees from genus and mass counting") {
    TriangleSignature sg(3, 4, 5);
    CHECK(feasible_degrees(sg, sg) == std::vector<long>{1});
    CHECK(feasible_degrees(TriangleSignature(1, 1, 3), TriangleSignature(2, 3, 5)) ==
          std::vector<long>{1});
    CHECK(feasible_degrees(TriangleSignature(4, 3, 3), TriangleSignature(5, 2, 3)) ==
          std::vector<long>{2, 3});
    CHECK(feasible_degrees(TriangleSignature(1, 1, 28), TriangleSignature(3, 5, 7)) ==
          std::vector<long>{2, 3, 4});
    CHECK_THROWS_AS(feasible_degrees(TriangleSignature(1, 1, 4), TriangleSignature(1, 2, 3)),
                    domain_error);
}

TEST_CASE("class matchings of the worked pairs") {
    using Profile = std::vector<RamificationEntry>;

    auto m1 = class_matching(TriangleSignature(1, 3, 6), TriangleSignature(2, 3, 5), 3);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0] == Profile{{2, 2, 1, 1}, {3, 2, 1, 2}});
    CHECK(profile_balanced(m1[0]));

    CHECK(class_matching(TriangleSignature(1, 3, 6), TriangleSignature(2, 3, 5), 2).empty());

    auto m2 = class_matching(TriangleSignature(2, 5, 5), TriangleSignature(3, 4, 5), 2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == Profile{{2, 3, 1, 1}, {3, 3, 1, 1}});

    auto m3 = class_matching(TriangleSignature(1, 1, 10), TriangleSignature(3, 4, 5), 2);
    REQUIRE(m3.size() == 1);
    CHECK(m3[0] == Profile{{3, 3, 1, 2}});

    auto m4 = class_matching(TriangleSignature(15, 14, 1), TriangleSignature(3, 5, 7), 2);
    REQUIRE(m4.size() == 1);
    CHECK(m4[0] == Profile{{2, 3, 1, 2}});

    auto m5 = class_matching(TriangleSignature(1, 1, 28), TriangleSignature(3, 5, 7), 4);
    REQUIRE(m5.size() == 1);
    CHECK(m5[0] == Profile{{3, 3, 2, 2}});

    CHECK_THROWS_AS(class_matching(TriangleSignature(1, 3, 6), TriangleSignature(2, 3, 5), 5),
                    domain_error);
}

}
