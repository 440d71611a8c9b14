#include "isofam/f2space.hpp"

#include <charconv>

#include "isofam/error.hpp"

namespace isofam {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::InvalidInterval: return "invalid-interval";
    case ErrorKind::NotPerpendicular: return "not-perpendicular";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotInRange: return "not-in-range";
    case ErrorKind::TheoremViolation: return "theorem-violation";
    case ErrorKind::Uniqueness: return "uniqueness-violation";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::Mismatch: return "mismatch";
    case ErrorKind::Overflow: return "overflow";
    }
    return "unknown";
}

namespace {

void check_half_dim(int d) {
    if (d < 0 || d > kMaxHalfDim)
        raise(ErrorKind::Dimension, "half-dimension " + std::to_string(d) +
                                        " outside [0," + std::to_string(kMaxHalfDim) + "]");
}

void check_same_space(const Vector& x, const Vector& y) {
    if (x.d() != y.d())
        raise(ErrorKind::Dimension, "vectors of half-dimension " + std::to_string(x.d()) +
                                        " and " + std::to_string(y.d()));
}

} // namespace

Vector::Vector(int d, std::uint64_t bits) : d_(d), bits_(bits) {
    check_half_dim(d);
    if ((bits & ~full_mask(d)) != 0)
        raise(ErrorKind::Dimension, "bits set beyond position 2d");
}

Vector Vector::basis(int d, int i) {
    if (i < 1 || i > 2 * d)
        raise(ErrorKind::Dimension, "basis index " + std::to_string(i) +
                                        " outside [1," + std::to_string(2 * d) + "]");
    return Vector(d, std::uint64_t{1} << (i - 1));
}

Vector Vector::from_bitstring(std::string_view text) {
    if (text.size() % 2 != 0)
        raise(ErrorKind::Dimension, "bitstring of odd length " + std::to_string(text.size()));
    const int d = static_cast<int>(text.size() / 2);
    check_half_dim(d);
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '1')
            bits |= std::uint64_t{1} << k;
        else if (text[k] != '0')
            raise(ErrorKind::Dimension, "bitstring contains '" + std::string(1, text[k]) + "'");
    }
    return Vector(d, bits);
}

Vector& Vector::operator+=(const Vector& other) {
    check_same_space(*this, other);
    bits_ ^= other.bits_;
    return *this;
}

std::string Vector::to_bitstring() const {
    std::string out(static_cast<std::size_t>(length()), '0');
    for (int k = 0; k < length(); ++k)
        if ((bits_ >> k) & 1u) out[static_cast<std::size_t>(k)] = '1';
    return out;
}

std::uint64_t lex_key(std::uint64_t bits, int d) noexcept {
    std::uint64_t key = 0;
    for (int k = 0; k < 2 * d; ++k)
        if ((bits >> k) & 1u) key |= std::uint64_t{1} << (2 * d - 1 - k);
    return key;
}

std::strong_ordering operator<=>(const Vector& lhs, const Vector& rhs) {
    if (auto c = lhs.d_ <=> rhs.d_; c != 0) return c;
    return lex_key(lhs.bits_, lhs.d_) <=> lex_key(rhs.bits_, rhs.d_);
}

bool pairing(const Vector& x, const Vector& y) {
    check_same_space(x, y);
    return pairing_bits(x.bits(), y.bits());
}

std::string Interval::to_string() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

Interval Interval::parse(std::string_view text) {
    auto fail = [&] { raise(ErrorKind::InvalidInterval, "cannot parse interval '" + std::string(text) + "'"); };
    if (text.size() < 5 || text.front() != '[' || text.back() != ']') fail();
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) fail();
    Interval out;
    const auto first = text.substr(1, comma - 1);
    const auto second = text.substr(comma + 1, text.size() - comma - 2);
    if (std::from_chars(first.data(), first.data() + first.size(), out.a).ec != std::errc{}) fail();
    if (std::from_chars(second.data(), second.data() + second.size(), out.b).ec != std::errc{}) fail();
    return out;
}

bool is_valid_interval(const Interval& interval, int d) noexcept {
    return 1 <= interval.a && interval.a <= interval.b && interval.b <= 2 * d &&
           interval.length() % 2 == 1;
}

Vector interval_vector(const Interval& interval, int d) {
    check_half_dim(d);
    if (!is_valid_interval(interval, d))
        raise(ErrorKind::InvalidInterval,
              interval.to_string() + " is not an odd interval in [1," + std::to_string(2 * d) + "]");
    return Vector(d, interval_bits(interval));
}

QuotientModel::QuotientModel(int parent_d, int pivot) : parent_d_(parent_d), pivot_(pivot) {
    check_half_dim(parent_d);
    if (parent_d < 1)
        raise(ErrorKind::Dimension, "quotient requires half-dimension >= 1");
    if (pivot < 1 || pivot > 2 * parent_d)
        raise(ErrorKind::Dimension, "pivot " + std::to_string(pivot) + " outside [1," +
                                        std::to_string(2 * parent_d) + "]");
}

Vector QuotientModel::induced_basis(int k) const {
    const int i = pivot_;
    const int d = parent_d_;
    if (k < 1 || k > 2 * d - 2)
        raise(ErrorKind::Dimension, "induced basis index " + std::to_string(k) + " out of range");
    if (k <= i - 2) return Vector::basis(d, k);
    if (k >= i) return Vector::basis(d, k + 2);
    return Vector::basis(d, i - 1) + Vector::basis(d, i + 1);
}

Vector QuotientModel::project(const Vector& x) const {
    if (x.d() != parent_d_)
        raise(ErrorKind::Dimension, "project: vector does not live in the parent space");
    if (pairing_bits(x.bits(), std::uint64_t{1} << (pivot_ - 1)))
        raise(ErrorKind::NotPerpendicular,
              "project: " + x.to_bitstring() + " is not perpendicular to e_" + std::to_string(pivot_));
    const int i = pivot_;
    const std::uint64_t bits = x.bits();
    // Child coordinate k reads parent coordinate k below the pivot and k+2
    // above it; the coordinate i-1 carries x_{i-1} (which equals x_{i+1}).
    const std::uint64_t low = i >= 2 ? bits & ((std::uint64_t{1} << (i - 1)) - 1) : 0;
    const std::uint64_t high = (bits >> (i + 1)) << (i - 1);
    return Vector(child_d(), (low | high) & full_mask(child_d()));
}

Vector QuotientModel::section(const Vector& y) const {
    if (y.d() != child_d())
        raise(ErrorKind::Dimension, "section: vector does not live in the child space");
    const int i = pivot_;
    const std::uint64_t bits = y.bits();
    const std::uint64_t below = i >= 3 ? bits & ((std::uint64_t{1} << (i - 2)) - 1) : 0;
    const std::uint64_t above = i >= 1 ? (bits >> (i - 1)) << (i + 1) : 0;
    std::uint64_t out = below | above;
    if (i >= 2 && ((bits >> (i - 2)) & 1u))
        out |= (std::uint64_t{1} << (i - 2)) | (std::uint64_t{1} << i);
    return Vector(parent_d_, out);
}

Vector QuotientModel::project_interval(const Interval& interval) const {
    if (!is_valid_interval(interval, parent_d_))
        raise(ErrorKind::InvalidInterval, interval.to_string() + " is not an odd interval of the parent");
    const int i = pivot_;
    const auto [a, b] = interval;
    if (a == i && b == i) return Vector(child_d());
    if (a < i && i < b) return interval_vector({a, b - 2}, child_d());
    if (i < a - 1) return interval_vector({a - 2, b - 2}, child_d());
    if (i > b + 1) return interval_vector({a, b}, child_d());
    raise(ErrorKind::NotPerpendicular,
          "project_interval: e_" + interval.to_string() + " pairs nontrivially with e_" + std::to_string(i));
}

Interval QuotientModel::lift_interval_bounds(const Interval& child) const {
    if (!is_valid_interval(child, child_d()))
        raise(ErrorKind::InvalidInterval, child.to_string() + " is not an odd interval of the child");
    const int i = pivot_;
    const auto [a, b] = child;
    if (a < i && i < b + 2) return {a, b + 2};
    if (i <= a) return {a + 2, b + 2};
    return {a, b};
}

std::array<Vector, 2> QuotientModel::lift_interval(const Interval& child) const {
    const Vector lifted = interval_vector(lift_interval_bounds(child), parent_d_);
    return {lifted, lifted + pivot_vector()};
}

} // namespace isofam
