#include "doctest.h"

#include <algorithm>

#include "isofam/f2space.hpp"
#include "support.hpp"

using isofam::ErrorKind;
using isofam::Interval;
using isofam::QuotientModel;
using isofam::Vector;
using testing::bits;
using testing::e;
using testing::thrown_kind;

namespace {

int f2_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int bit = 0; bit < 64; ++bit) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](auto r) { return (r >> bit) & 1; });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != static_cast<std::size_t>(rank) && ((rows[k] >> bit) & 1)) rows[k] ^= rows[rank];
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("pairing of basis vectors") {
    CHECK(isofam::pairing(e(2, 1), e(2, 2)));
    CHECK_FALSE(isofam::pairing(e(2, 1), e(2, 3)));
    CHECK(isofam::pairing(e(3, 4), e(3, 3)));
    CHECK_FALSE(isofam::pairing(e(3, 1), e(3, 6)));
}

TEST_CASE("pairing agrees with the defining double sum and is alternating") {
    for (int d = 0; d <= 3; ++d) {
        const std::uint64_t n = std::uint64_t{1} << (2 * d);
        for (std::uint64_t x = 0; x < n; ++x) {
            CHECK_FALSE(isofam::pairing(Vector(d, x), Vector(d, x)));
            for (std::uint64_t y = 0; y < n; ++y)
                REQUIRE(static_cast<int>(isofam::pairing(Vector(d, x), Vector(d, y))) == oracle::pairing(d, x, y));
        }
    }
}

TEST_CASE("pairing rejects vectors of different d") {
    CHECK(thrown_kind([] { (void)isofam::pairing(e(2, 1), e(3, 1)); }) == ErrorKind::Dimension);
}

TEST_CASE("the Gram matrix of the basis is nonsingular") {
    for (int d = 1; d <= 12; ++d) {
        std::vector<std::uint64_t> gram;
        for (int i = 1; i <= 2 * d; ++i) {
            std::uint64_t row = 0;
            for (int j = 1; j <= 2 * d; ++j)
                if (isofam::pairing(e(d, i), e(d, j))) row |= std::uint64_t{1} << (j - 1);
            gram.push_back(row);
        }
        CHECK(f2_rank(gram) == 2 * d);
    }
}

TEST_CASE("bitstrings round-trip and order lexicographically") {
    CHECK(e(2, 1).to_bitstring() == "1000");
    CHECK(bits("0110") == e(2, 2) + e(2, 3));
    CHECK(bits("1000") > bits("0111"));
    CHECK(Vector(0).to_bitstring().empty());
}

TEST_CASE("interval vectors") {
    CHECK(isofam::interval_vector({1, 3}, 2) == bits("1110"));
    CHECK(isofam::interval_vector({2, 2}, 2) == e(2, 2));
    CHECK(thrown_kind([] { (void)isofam::interval_vector({1, 2}, 2); }) == ErrorKind::InvalidInterval);
    CHECK(thrown_kind([] { (void)isofam::interval_vector({3, 5}, 2); }) == ErrorKind::InvalidInterval);
    CHECK(Interval::parse("[2,4]") == Interval{2, 4});
    CHECK(Interval{1, 3}.to_string() == "[1,3]");
}

TEST_CASE("project rewrites perpendicular vectors in the induced basis") {
    CHECK(QuotientModel(2, 2).project(e(2, 4)) == e(1, 2));
    CHECK(QuotientModel(2, 2).project(e(2, 1) + e(2, 3)) == e(1, 1));
    CHECK(QuotientModel(2, 1).project(e(2, 3)) == e(1, 1));
    CHECK(QuotientModel(2, 2).project(e(2, 2)).is_zero());
    CHECK(thrown_kind([] { (void)QuotientModel(2, 2).project(e(2, 1)); }) == ErrorKind::NotPerpendicular);
}

TEST_CASE("project matches a brute-force solve in the induced basis") {
    for (int d = 1; d <= 4; ++d)
        for (int i = 1; i <= 2 * d; ++i) {
            const QuotientModel q(d, i);
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << (2 * d)); ++x) {
                if (oracle::pairing(d, x, oracle::e(i)) != 0) continue;
                REQUIRE(q.project(Vector(d, x)).bits() == oracle::project(d, i, x));
            }
        }
}

TEST_CASE("the quotient form is the standard form of one lower dimension") {
    for (int d = 1; d <= 5; ++d)
        for (int i = 1; i <= 2 * d; ++i) {
            const QuotientModel q(d, i);
            for (int k = 1; k <= 2 * (d - 1); ++k)
                for (int l = 1; l <= 2 * (d - 1); ++l)
                    CHECK(isofam::pairing(q.induced_basis(k), q.induced_basis(l)) == (k - l == 1 || l - k == 1));
            if (d > 3) continue;
            const std::uint64_t n = std::uint64_t{1} << (2 * d);
            for (std::uint64_t x = 0; x < n; ++x)
                for (std::uint64_t y = 0; y < n; ++y) {
                    const Vector vx(d, x), vy(d, y);
                    if (isofam::pairing(vx, q.pivot_vector()) || isofam::pairing(vy, q.pivot_vector())) continue;
                    REQUIRE(isofam::pairing(q.project(vx), q.project(vy)) == isofam::pairing(vx, vy));
                }
        }
}

TEST_CASE("lift_interval returns the fibre over a child interval vector") {
    const auto middle = QuotientModel(2, 2).lift_interval({1, 1});
    CHECK(middle[0] == isofam::interval_vector({1, 3}, 2));
    CHECK(middle[1] == isofam::interval_vector({1, 3}, 2) + e(2, 2));
    const auto left = QuotientModel(2, 1).lift_interval({1, 1});
    CHECK(left[0] == e(2, 3));
    CHECK(left[1] == e(2, 1) + e(2, 3));
    const auto right = QuotientModel(2, 3).lift_interval({1, 1});
    CHECK(right[0] == e(2, 1));
    CHECK(right[1] == e(2, 1) + e(2, 3));
}

TEST_CASE("project_interval follows the interval rules") {
    CHECK(QuotientModel(2, 2).project_interval({1, 3}) == e(1, 1));
    CHECK(QuotientModel(2, 4).project_interval({1, 1}) == e(1, 1));
    CHECK(QuotientModel(2, 2).project_interval({2, 2}).is_zero());
    CHECK(thrown_kind([] { (void)QuotientModel(2, 2).project_interval({1, 1}); }) == ErrorKind::NotPerpendicular);
}

TEST_CASE("lifting then projecting an interval is the identity") {
    for (int d = 1; d <= 6; ++d)
        for (int i = 1; i <= 2 * d; ++i) {
            const QuotientModel q(d, i);
            for (const auto& child : isofam::odd_intervals(d - 1)) {
                const auto fibre = q.lift_interval(child);
                const Vector target = isofam::interval_vector(child, d - 1);
                CHECK(q.project(fibre[0]) == target);
                CHECK(q.project(fibre[1]) == target);
                CHECK(q.project_interval(q.lift_interval_bounds(child)) == target);
            }
            for (const auto& I : isofam::odd_intervals(d)) {
                const Vector v = isofam::interval_vector(I, d);
                if (isofam::pairing(v, q.pivot_vector())) continue;
                CHECK(q.project_interval(I) == q.project(v));
            }
        }
}

TEST_CASE("section is a right inverse of project") {
    for (int d = 1; d <= 4; ++d)
        for (int i = 1; i <= 2 * d; ++i) {
            const QuotientModel q(d, i);
            for (std::uint64_t y = 0; y < (std::uint64_t{1} << (2 * (d - 1))); ++y)
                REQUIRE(q.project(q.section(Vector(d - 1, y))) == Vector(d - 1, y));
        }
}

TEST_CASE("d = 0 has a single zero vector") {
    const Vector zero(0);
    CHECK(zero.is_zero());
    CHECK(zero.length() == 0);
    CHECK(isofam::odd_intervals(0).empty());
}
