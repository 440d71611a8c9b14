#pragma once

// Based symplectic space over F2: V = F2^{2d} with basis e_1..e_{2d} and
// (e_i, e_j) = 1 exactly when |i - j| = 1.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace isofam {

/// Largest supported half-dimension; vectors live in one 64-bit word.
inline constexpr int kMaxHalfDim = 31;

/// Element of F2^{2d}. Bit k-1 of the mask is the coefficient of e_k.
class Vector {
public:
    Vector() = default;
    explicit Vector(int d, std::uint64_t bits = 0);

    /// The basis vector e_i, 1-based.
    static Vector basis(int d, int i);
    /// Parses a '0'/'1' string of length 2d; position k is the coefficient of e_k.
    static Vector from_bitstring(std::string_view text);

    int d() const noexcept { return d_; }
    int length() const noexcept { return 2 * d_; }
    std::uint64_t bits() const noexcept { return bits_; }
    bool is_zero() const noexcept { return bits_ == 0; }

    /// Coefficient of e_i (1-based).
    bool operator[](int i) const noexcept { return (bits_ >> (i - 1)) & 1u; }

    Vector& operator+=(const Vector& other);
    friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }

    std::string to_bitstring() const;

    friend bool operator==(const Vector&, const Vector&) = default;
    /// Lexicographic order on the bitstring (e_1 most significant).
    friend std::strong_ordering operator<=>(const Vector& lhs, const Vector& rhs);

private:
    int d_ = 0;
    std::uint64_t bits_ = 0;
};

/// Mask with the low 2d bits set.
constexpr std::uint64_t full_mask(int d) noexcept {
    return d == 0 ? 0 : (~std::uint64_t{0} >> (64 - 2 * d));
}

/// Bit-reversed key within the 2d positions so that integer order equals
/// bitstring order.
std::uint64_t lex_key(std::uint64_t bits, int d) noexcept;

/// The symplectic pairing (x, y).
bool pairing(const Vector& x, const Vector& y);

/// Pairing on raw masks; both must be within the same 2d positions.
inline bool pairing_bits(std::uint64_t x, std::uint64_t y) noexcept {
    return (std::popcount(x & ((y << 1) ^ (y >> 1))) & 1) != 0;
}

/// Odd-length interval [a,b] of indices, 1 <= a <= b <= 2d.
struct Interval {
    int a = 1;
    int b = 1;

    int length() const noexcept { return b - a + 1; }
    bool contains(int j) const noexcept { return a <= j && j <= b; }
    std::string to_string() const;
    static Interval parse(std::string_view text);

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

bool is_valid_interval(const Interval& interval, int d) noexcept;

/// Mask of e_{[a,b]}; no validation.
constexpr std::uint64_t interval_bits(const Interval& interval) noexcept {
    const std::uint64_t upto_b = interval.b >= 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << interval.b) - 1;
    const std::uint64_t below_a = (std::uint64_t{1} << (interval.a - 1)) - 1;
    return upto_b & ~below_a;
}

/// e_{[a,b]} = sum of e_j for j in [a,b]. Throws InvalidInterval unless the
/// interval has odd length and lies in [1,2d].
Vector interval_vector(const Interval& interval, int d);

/// The quotient V_i = e_i^perp / F2 e_i, identified with the standard model of
/// half-dimension d-1 through the induced basis
///   e^i_k = pi(e_k)             for k <= i-2,
///   e^i_{i-1} = pi(e_{i-1} + e_{i+1})   when 1 < i < 2d,
///   e^i_k = pi(e_{k+2})         for k >= i.
class QuotientModel {
public:
    QuotientModel(int parent_d, int pivot);

    int parent_d() const noexcept { return parent_d_; }
    int child_d() const noexcept { return parent_d_ - 1; }
    int pivot() const noexcept { return pivot_; }
    Vector pivot_vector() const { return Vector::basis(parent_d_, pivot_); }

    /// Representative in V of the child basis vector e^i_k.
    Vector induced_basis(int k) const;

    /// pi_i(x) in child coordinates. Throws NotPerpendicular unless (x, e_i) = 0.
    Vector project(const Vector& x) const;

    /// Linear section of pi_i: sends e^i_k to its representative above.
    /// project(section(y)) == y for every child vector y.
    Vector section(const Vector& y) const;

    /// pi_i(e_{[a,b]}) by the interval rules; zero when a = b = i.
    Vector project_interval(const Interval& interval) const;

    /// The parent interval whose vector lies in the fibre over e^i_{[a',b']}.
    Interval lift_interval_bounds(const Interval& child) const;

    /// Fibre of pi_i over e^i_{[a',b']}: element 0 is the interval vector,
    /// element 1 is that vector plus e_i.
    std::array<Vector, 2> lift_interval(const Interval& child) const;

private:
    int parent_d_;
    int pivot_;
};

} // namespace isofam

template <>
struct std::hash<isofam::Vector> {
    std::size_t operator()(const isofam::Vector& v) const noexcept {
        return std::hash<std::uint64_t>{}(v.bits() * 0x9E3779B97F4A7C15ull ^
                                          static_cast<std::uint64_t>(v.d()));
    }
};
