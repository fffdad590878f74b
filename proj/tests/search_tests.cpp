#include <doctest.h>

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tribill/errors.hpp"
#include "tribill/search.hpp"

using namespace tribill;

namespace {

using Row = std::tuple<TriangleSignature, TriangleSignature, long, CoverKind>;

Row row(long s1, long s2, long s3, long t1, long t2, long t3, long deg, CoverKind k) {
    return {TriangleSignature(s1, s2, s3), TriangleSignature(t1, t2, t3), deg, k};
}

// Every family arrow with source genus >= 2 and source Q <= 12, in search
// order: sources by Q then entries, targets by Q.
const std::vector<Row> kClosure12 = {
    row(1, 1, 3, 2, 3, 5, 1, CoverKind::Equivalence),
    row(1, 2, 2, 1, 4, 5, 1, CoverKind::Equivalence),
    row(1, 1, 4, 1, 1, 1, 2, CoverKind::Composition),
    row(1, 1, 4, 1, 2, 3, 2, CoverKind::F1),
    row(1, 1, 5, 2, 5, 7, 1, CoverKind::Equivalence),
    row(1, 3, 3, 1, 6, 7, 1, CoverKind::Equivalence),
    row(2, 2, 3, 3, 4, 7, 1, CoverKind::Equivalence),
    row(1, 1, 6, 1, 3, 4, 2, CoverKind::F1),
    row(2, 3, 3, 1, 3, 4, 2, CoverKind::F2),
    row(1, 1, 7, 2, 7, 9, 1, CoverKind::Equivalence),
    row(1, 4, 4, 1, 8, 9, 1, CoverKind::Equivalence),
    row(2, 2, 5, 4, 5, 9, 1, CoverKind::Equivalence),
    row(1, 1, 8, 1, 2, 2, 2, CoverKind::Composition),
    row(1, 1, 8, 1, 4, 5, 2, CoverKind::F1),
    row(1, 4, 5, 1, 2, 2, 1, CoverKind::Equivalence),
    row(2, 3, 5, 1, 1, 3, 1, CoverKind::Equivalence),
    row(3, 3, 4, 1, 1, 3, 2, CoverKind::Composition),
    row(3, 3, 4, 2, 3, 5, 2, CoverKind::F2),
    row(1, 1, 9, 2, 9, 11, 1, CoverKind::Equivalence),
    row(1, 5, 5, 1, 10, 11, 1, CoverKind::Equivalence),
    row(2, 2, 7, 4, 7, 11, 1, CoverKind::Equivalence),
    row(3, 3, 5, 5, 6, 11, 1, CoverKind::Equivalence),
    row(3, 4, 4, 3, 8, 11, 1, CoverKind::Equivalence),
    row(1, 1, 10, 1, 5, 6, 2, CoverKind::F1),
    row(2, 5, 5, 1, 5, 6, 2, CoverKind::F2),
};

Row row_of(const CoverDescriptor& d) { return {d.source, d.target, d.degree, d.kind}; }

std::vector<std::string> flatten(const SearchReport& rep) {
    std::vector<std::string> out;
    out.push_back(std::to_string(rep.q_max) + "/" + std::to_string(rep.pairs_evaluated));
    for (const auto& p : rep.in_family)
        for (const auto& c : p.verdict.covers) out.push_back(to_string(c));
    for (const auto& [k, v] : rep.impossible_by_reason)
        out.push_back(k + "=" + std::to_string(v));
    for (const auto& p : rep.undecided)
        out.push_back(to_string(p.source) + "?" + to_string(p.target));
    return out;
}

} // namespace

TEST_SUITE("search") {

TEST_CASE("filter_chain proves the cited impossibilities with the cited reasons") {
    using V = std::vector<std::string>;
    auto reasons = [](long s1, long s2, long s3, long t1, long t2, long t3) {
        auto v = filter_chain(TriangleSignature(s1, s2, s3), TriangleSignature(t1, t2, t3));
        REQUIRE(v.kind == VerdictKind::Impossible);
        return v.reasons;
    };

    CHECK(reasons(3, 4, 5, 1, 2, 3) == V{"q-incompatible"});
    CHECK(reasons(1, 2, 16, 3, 4, 5) == V{"q-incompatible"});
    CHECK(reasons(3, 4, 5, 3, 4, 5) == V{"self-cover"});
    CHECK(reasons(2, 2, 5, 1, 1, 7) == V{"riemann-hurwitz-mass"});
    CHECK(reasons(1, 3, 6, 2, 3, 5) ==
          V{"class-matching(n=2)", "fingerprint-mismatch(n=3) 3->2 {6/5·pi} vs {3/5·pi}"});
    CHECK(reasons(2, 5, 5, 3, 4, 5) == V{"type2-rigidity(n=2)"});
    CHECK(reasons(1, 1, 10, 3, 4, 5) == V{"type2-rigidity(n=2)"});
    CHECK(reasons(15, 14, 1, 3, 5, 7) == V{"type2-rigidity(n=2)"});
    CHECK(reasons(1, 1, 28, 3, 5, 7) ==
          V{"class-matching(n=2)", "class-matching(n=3)", "type2-rigidity(n=4)"});
}

TEST_CASE("filter_chain certifies family pairs with verified covers") {
    auto one_cover = [](long s1, long s2, long s3, long t1, long t2, long t3) {
        auto v = filter_chain(TriangleSignature(s1, s2, s3), TriangleSignature(t1, t2, t3));
        REQUIRE(v.kind == VerdictKind::InFamily);
        REQUIRE(v.covers.size() == 1);
        return to_string(v.covers[0]);
    };

    // entry order of the query does not matter
    CHECK(one_cover(4, 1, 1, 1, 2, 3) == "X(1,1,4) -> X(1,2,3) deg 2 F1 [3->ns m=2 x2]");
    CHECK(one_cover(1, 1, 4, 1, 1, 1) == "X(1,1,4) -> X(1,1,1) deg 2 Composition [3->ns m=2 x2]");
    CHECK(one_cover(1, 1, 3, 2, 3, 5) == "X(1,1,3) -> X(2,3,5) deg 1 Equivalence [3->2 m=1 x1]");
    CHECK(one_cover(2, 3, 5, 1, 1, 3) == "X(2,3,5) -> X(1,1,3) deg 1 Equivalence [2->3 m=1 x1]");
    CHECK(one_cover(4, 3, 3, 5, 2, 3) ==
          "X(3,3,4) -> X(2,3,5) deg 2 F2 [1->2 m=1 x1, 2->2 m=1 x1, 3->ns m=2 x2]");
    CHECK(one_cover(1, 4, 4, 1, 8, 9) ==
          "X(1,4,4) -> X(1,8,9) deg 1 Equivalence [2->2 m=1 x1, 3->2 m=1 x1]");
}

TEST_CASE("genus-1 sources are outside the search domain") {
    CHECK_THROWS_AS(filter_chain(TriangleSignature(1, 1, 1), TriangleSignature(1, 2, 3)),
                    domain_error);
    CHECK_THROWS_AS(filter_chain(TriangleSignature(1, 2, 3), TriangleSignature(1, 1, 4)),
                    domain_error);
}

TEST_CASE("family closure up to Q 12") {
    auto closure = family_closure(12);
    REQUIRE(closure.size() == kClosure12.size());
    std::vector<Row> got;
    for (const auto& d : closure) {
        CHECK(d.source.genus() >= 2);
        CHECK(d.source.Q() <= 12);
        CHECK(d.source.is_canonical());
        CHECK(d.target.is_canonical());
        got.push_back(row_of(d));
    }
    auto want = kClosure12;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);

    CHECK_THROWS_AS(family_closure(1), domain_error);
    CHECK(family_closure(3).empty());
}

TEST_CASE("search up to Q 12 matches the frozen report") {
    auto rep = search(12);
    CHECK(rep.q_max == 12);
    CHECK(rep.pairs_evaluated == 755);
    CHECK(rep.undecided.empty());

    std::map<std::string, long> hist = {{"class-matching(n=2)", 10},
                                        {"riemann-hurwitz-mass", 677},
                                        {"self-cover", 41},
                                        {"type2-rigidity(n=2)", 2}};
    CHECK(rep.impossible_by_reason == hist);

    REQUIRE(rep.in_family.size() == kClosure12.size());
    for (std::size_t i = 0; i < rep.in_family.size(); ++i) {
        const auto& p = rep.in_family[i];
        REQUIRE(p.verdict.covers.size() == 1);
        CHECK(row_of(p.verdict.covers[0]) == kClosure12[i]);
        CHECK(p.source == std::get<0>(kClosure12[i]));
        CHECK(p.target == std::get<1>(kClosure12[i]));
    }
}

TEST_CASE("search totals are consistent") {
    auto rep = search(12);
    long impossible = 0;
    for (const auto& [reason, count] : rep.impossible_by_reason) impossible += count;
    CHECK(impossible + static_cast<long>(rep.in_family.size()) +
              static_cast<long>(rep.undecided.size()) ==
          rep.pairs_evaluated);
}

TEST_CASE("small bounds") {
    auto rep = search(3);
    CHECK(rep.pairs_evaluated == 0);
    CHECK(rep.in_family.empty());
    CHECK(rep.impossible_by_reason.empty());
    CHECK_THROWS_AS(search(2), domain_error);
}

TEST_CASE("search is deterministic") {
    CHECK(flatten(search(12)) == flatten(search(12)));
}

}
