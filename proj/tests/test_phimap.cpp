#include "doctest.h"

#include <set>

#include "isofam/family.hpp"
#include "isofam/phimap.hpp"
#include "support.hpp"

using isofam::ErrorKind;
using isofam::Subspace;
using isofam::Vector;
using testing::bits;
using testing::e;
using testing::element_set;
using testing::thrown_kind;

TEST_CASE("profile examples") {
    const auto zero = isofam::profile(Subspace(2));
    CHECK(zero.f == std::vector<int>{0, 0, 0, 0});
    CHECK(zero.phi == std::vector<std::uint8_t>{0, 0, 0, 0});

    const auto p = isofam::profile(Subspace::span(2, {e(2, 2), bits("1110")}));
    CHECK(p.f == std::vector<int>{1, 2, 1, 0});
    CHECK(p.phi == std::vector<std::uint8_t>{1, 1, 1, 0});

    const auto line = isofam::profile(Subspace::span(1, {e(1, 1)}));
    CHECK(line.f == std::vector<int>{1, 0});
    CHECK(line.phi == std::vector<std::uint8_t>{1, 0});
}

TEST_CASE("phi examples") {
    CHECK(isofam::phi(Subspace(3)).is_zero());
    const Subspace X = Subspace::span(2, {e(2, 2), bits("1110")});
    CHECK(isofam::phi(X) == bits("1110"));
    CHECK(X.contains(isofam::phi(X)));
    CHECK(isofam::phi(Subspace::span(1, {e(1, 1)})) == e(1, 1));
}

TEST_CASE("profile and phi agree with the coverage oracle") {
    for (int d = 0; d <= 3; ++d)
        for (const auto& X : isofam::enumerate_family(d)) {
            const auto set = element_set(X);
            CHECK(isofam::profile(X).f == oracle::coverage(d, set));
            CHECK(isofam::phi(X).bits() == oracle::phi(d, set));
        }
}

TEST_CASE("phi lands in its own subspace") {
    for (int d = 0; d <= 5; ++d)
        for (const auto& X : isofam::enumerate_family(d)) CHECK(X.contains(isofam::phi(X)));
}

TEST_CASE("phi is compatible with projection") {
    for (int d = 1; d <= 5; ++d)
        for (int i = 1; i <= 2 * d; ++i) {
            const isofam::QuotientModel q(d, i);
            for (const auto& child : isofam::enumerate_family(d - 1)) {
                const Subspace X = isofam::lift_member(q, child);
                const Vector image = isofam::phi(X);
                REQUIRE_FALSE(isofam::pairing(image, q.pivot_vector()));
                CHECK(q.project(image) == isofam::phi(child));
            }
        }
}

TEST_CASE("tilde_v examples") {
    CHECK(isofam::tilde_v(0).elements == std::vector<Vector>{Vector(0)});
    CHECK(isofam::tilde_v(1).elements == std::vector<Vector>{bits("00"), bits("01"), bits("10")});
    const std::set<Vector> expected{bits("0000"), bits("1000"), bits("0100"), bits("0010"), bits("0001"),
                                    bits("1001"), bits("0101"), bits("1010"), bits("1110"), bits("0111")};
    const auto& v2 = isofam::tilde_v(2);
    CHECK(std::set<Vector>(v2.elements.begin(), v2.elements.end()) == expected);
    CHECK(v2.size() == 10);
    CHECK(v2.contains(bits("0111")));
    CHECK_FALSE(v2.contains(bits("1100")));
}

TEST_CASE("tilde_v agrees with the union over the oracle family") {
    for (int d = 0; d <= 3; ++d) {
        oracle::ElementSet ours = 0;
        for (const auto& v : isofam::tilde_v(d).elements) ours |= oracle::ElementSet{1} << v.bits();
        CHECK(ours == oracle::tilde_v(d));
    }
}

TEST_CASE("reachable set examples") {
    const auto r2 = isofam::reachable_set(2);
    CHECK(r2.distance.at(Vector(2)) == 0);
    CHECK(r2.distance.at(e(2, 1)) == 1);
    CHECK(r2.elements == isofam::tilde_v(2).elements);
}

TEST_CASE("reachability distances agree with a plain breadth-first search") {
    for (int d = 0; d <= 4; ++d) {
        const auto ours = isofam::reachable_set(d);
        const auto expected = oracle::reachable(d);
        CHECK(ours.distance.size() == expected.size());
        for (const auto& [x, n] : expected) CHECK(ours.distance.at(Vector(d, x)) == n);
    }
}

TEST_CASE("reachable set equals tilde V") {
    for (int d = 0; d <= 5; ++d) CHECK(isofam::reachable_set(d).elements == isofam::tilde_v(d).elements);
}

TEST_CASE("phi is a bijection onto tilde V") {
    for (int d = 0; d <= 5; ++d) {
        const auto& table = isofam::phi_table(d);
        CHECK(table.injective());
        std::set<Vector> image(table.images().begin(), table.images().end());
        const auto& support = isofam::tilde_v(d).elements;
        CHECK(image == std::set<Vector>(support.begin(), support.end()));
    }
}

TEST_CASE("phi_inverse") {
    CHECK(isofam::phi_inverse(Vector(2)) == Subspace(2));
    CHECK(isofam::phi_inverse(e(1, 1)) == Subspace::span(1, {e(1, 1)}));

    const Vector target = e(2, 1) + e(2, 3);
    oracle::ElementSet expected = 0;
    int hits = 0;
    for (oracle::ElementSet X : oracle::family(2))
        if (oracle::phi(2, X) == target.bits()) {
            expected = X;
            ++hits;
        }
    REQUIRE(hits == 1);
    CHECK(element_set(isofam::phi_inverse(target)) == expected);

    CHECK(thrown_kind([] { (void)isofam::phi_inverse(bits("1100")); }) == ErrorKind::NotInRange);
}
