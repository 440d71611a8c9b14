#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "isofam/f2space.hpp"

namespace isofam {

/// Subspace of F2^{2d} held in canonical form: fully reduced row echelon with
/// pivot = lowest set bit, rows sorted by pivot. Two subspaces are equal iff
/// their canonical rows are equal.
///
/// The interval set alpha(X) = { I odd : e_I in X } is computed on
/// construction, so instances are immutable and safe to share.
class Subspace {
public:
    /// The zero subspace of F2^{2d}.
    explicit Subspace(int d = 0);

    static Subspace span(int d, std::span<const Vector> generators);
    static Subspace span(int d, std::span<const std::uint64_t> generators);
    static Subspace span(int d, std::initializer_list<Vector> generators) {
        return span(d, std::span<const Vector>(generators.begin(), generators.size()));
    }

    int d() const noexcept { return d_; }
    int dim() const noexcept { return static_cast<int>(rows_.size()); }
    bool is_zero() const noexcept { return rows_.empty(); }

    const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }
    std::vector<Vector> basis() const;
    const std::vector<Interval>& alpha() const noexcept { return alpha_; }

    bool contains(const Vector& x) const;
    bool contains_bits(std::uint64_t x) const noexcept;
    bool contains_basis_vector(int i) const noexcept {
        return contains_bits(std::uint64_t{1} << (i - 1));
    }

    /// All 2^dim members, in increasing mask order of coefficient combinations.
    std::vector<Vector> elements() const;

    bool is_isotropic() const noexcept;
    bool is_subspace_of(const Subspace& other) const noexcept;

    /// X intersected with the coordinate subspace spanned by the e_k in mask.
    Subspace intersect_coordinates(std::uint64_t mask) const;

    friend bool operator==(const Subspace& lhs, const Subspace& rhs) {
        return lhs.d_ == rhs.d_ && lhs.rows_ == rhs.rows_;
    }
    /// Orders by (dim, row bitstrings lexicographically).
    friend std::strong_ordering operator<=>(const Subspace& lhs, const Subspace& rhs);

    std::size_t hash() const noexcept;

private:
    int d_;
    std::vector<std::uint64_t> rows_;
    std::vector<Interval> alpha_;

    void canonicalize();
    void compute_alpha();
};

/// Reduces x against canonical rows; returns the residue (zero iff in span).
std::uint64_t reduce_bits(std::span<const std::uint64_t> rows, std::uint64_t x) noexcept;

/// Coordinate subspace spanned by e_i with i = parity mod 2.
std::uint64_t parity_mask(int d, int parity) noexcept;

/// { x in span(e_k : k in mask) : (x, y) = 0 for all y in X }.
Subspace perp_within(const Subspace& X, std::uint64_t mask);

/// All odd intervals of [1,2d] in (a, b) order.
std::vector<Interval> odd_intervals(int d);

} // namespace isofam

template <>
struct std::hash<isofam::Subspace> {
    std::size_t operator()(const isofam::Subspace& s) const noexcept { return s.hash(); }
};
