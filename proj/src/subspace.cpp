#include "isofam/subspace.hpp"

#include <algorithm>
#include <bit>

#include "isofam/error.hpp"

namespace isofam {

namespace {

int lowest_bit(std::uint64_t x) noexcept { return std::countr_zero(x); }

} // namespace

std::uint64_t reduce_bits(std::span<const std::uint64_t> rows, std::uint64_t x) noexcept {
    for (std::uint64_t row : rows)
        if ((x >> lowest_bit(row)) & 1u) x ^= row;
    return x;
}

std::uint64_t parity_mask(int d, int parity) noexcept {
    // Index i (1-based) sits at bit i-1; odd indices are even bits.
    const std::uint64_t odd_positions = 0x5555555555555555ull;
    return (parity % 2 == 1 ? odd_positions : ~odd_positions) & full_mask(d);
}

std::vector<Interval> odd_intervals(int d) {
    std::vector<Interval> out;
    for (int a = 1; a <= 2 * d; ++a)
        for (int b = a; b <= 2 * d; b += 2) out.push_back({a, b});
    return out;
}

Subspace::Subspace(int d) : d_(d) {
    if (d < 0 || d > kMaxHalfDim)
        raise(ErrorKind::Dimension, "subspace half-dimension " + std::to_string(d) + " out of range");
}

Subspace Subspace::span(int d, std::span<const Vector> generators) {
    std::vector<std::uint64_t> bits;
    bits.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.d() != d)
            raise(ErrorKind::Dimension, "generator of half-dimension " + std::to_string(g.d()) +
                                            " in a space of half-dimension " + std::to_string(d));
        bits.push_back(g.bits());
    }
    return span(d, bits);
}

Subspace Subspace::span(int d, std::span<const std::uint64_t> generators) {
    Subspace out(d);
    for (std::uint64_t g : generators) {
        if ((g & ~full_mask(d)) != 0) raise(ErrorKind::Dimension, "generator has bits beyond 2d");
        const std::uint64_t r = reduce_bits(out.rows_, g);
        if (r == 0) continue;
        // Keep the rows reduced against the new pivot as we go.
        const int p = lowest_bit(r);
        for (auto& row : out.rows_)
            if ((row >> p) & 1u) row ^= r;
        out.rows_.push_back(r);
        std::sort(out.rows_.begin(), out.rows_.end(),
                  [](std::uint64_t x, std::uint64_t y) { return lowest_bit(x) < lowest_bit(y); });
    }
    out.canonicalize();
    out.compute_alpha();
    return out;
}

void Subspace::canonicalize() {
    // Rows were inserted fully reduced; back-substitute once more so the form
    // does not depend on insertion order.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const int p = lowest_bit(rows_[k]);
        for (std::size_t m = 0; m < rows_.size(); ++m)
            if (m != k && ((rows_[m] >> p) & 1u)) rows_[m] ^= rows_[k];
    }
    std::sort(rows_.begin(), rows_.end(),
              [](std::uint64_t x, std::uint64_t y) { return lowest_bit(x) < lowest_bit(y); });
}

void Subspace::compute_alpha() {
    alpha_.clear();
    if (rows_.empty()) return;
    for (const auto& interval : odd_intervals(d_))
        if (contains_bits(interval_bits(interval))) alpha_.push_back(interval);
}

std::vector<Vector> Subspace::basis() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (auto r : rows_) out.emplace_back(d_, r);
    return out;
}

bool Subspace::contains_bits(std::uint64_t x) const noexcept {
    return reduce_bits(rows_, x) == 0;
}

bool Subspace::contains(const Vector& x) const {
    if (x.d() != d_) raise(ErrorKind::Dimension, "membership test across different spaces");
    return contains_bits(x.bits());
}

std::vector<Vector> Subspace::elements() const {
    const std::size_t n = rows_.size();
    std::vector<Vector> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << n); ++combo) {
        std::uint64_t x = 0;
        for (std::size_t k = 0; k < n; ++k)
            if ((combo >> k) & 1u) x ^= rows_[k];
        out.emplace_back(d_, x);
    }
    return out;
}

bool Subspace::is_isotropic() const noexcept {
    for (std::size_t k = 0; k < rows_.size(); ++k)
        for (std::size_t m = k + 1; m < rows_.size(); ++m)
            if (pairing_bits(rows_[k], rows_[m])) return false;
    return true;
}

bool Subspace::is_subspace_of(const Subspace& other) const noexcept {
    if (other.d_ != d_) return false;
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](std::uint64_t r) { return other.contains_bits(r); });
}

Subspace Subspace::intersect_coordinates(std::uint64_t mask) const {
    // Eliminate on the positions outside the mask; rows left with no bits
    // there span the intersection.
    std::vector<std::uint64_t> work = rows_;
    const std::uint64_t outside = full_mask(d_) & ~mask;
    std::vector<std::uint64_t> inside;
    std::size_t next = 0;
    for (int bit = 0; bit < 2 * d_; ++bit) {
        if (!((outside >> bit) & 1u)) continue;
        auto it = std::find_if(work.begin() + static_cast<std::ptrdiff_t>(next), work.end(),
                               [&](std::uint64_t r) { return (r >> bit) & 1u; });
        if (it == work.end()) continue;
        std::iter_swap(work.begin() + static_cast<std::ptrdiff_t>(next), it);
        for (std::size_t m = 0; m < work.size(); ++m)
            if (m != next && ((work[m] >> bit) & 1u)) work[m] ^= work[next];
        ++next;
    }
    for (std::size_t m = next; m < work.size(); ++m) inside.push_back(work[m]);
    return span(d_, inside);
}

std::strong_ordering operator<=>(const Subspace& lhs, const Subspace& rhs) {
    if (auto c = lhs.d_ <=> rhs.d_; c != 0) return c;
    if (auto c = lhs.dim() <=> rhs.dim(); c != 0) return c;
    for (std::size_t k = 0; k < lhs.rows_.size(); ++k) {
        const auto c = lex_key(lhs.rows_[k], lhs.d_) <=> lex_key(rhs.rows_[k], rhs.d_);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::size_t Subspace::hash() const noexcept {
    std::size_t h = std::hash<int>{}(d_);
    for (auto r : rows_) h ^= std::hash<std::uint64_t>{}(r) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

Subspace perp_within(const Subspace& X, std::uint64_t mask) {
    const int d = X.d();
    mask &= full_mask(d);
    // Constraint rows: x . J(y) = 0 where J(y) has bits at the neighbours of y.
    std::vector<std::uint64_t> constraints;
    for (auto y : X.rows()) constraints.push_back(((y << 1) ^ (y >> 1)) & mask);
    // Reduce constraints to echelon form on the mask positions.
    std::vector<std::uint64_t> echelon;
    std::vector<int> pivots;
    for (auto c : constraints) {
        for (std::size_t k = 0; k < echelon.size(); ++k)
            if ((c >> pivots[k]) & 1u) c ^= echelon[k];
        if (c == 0) continue;
        const int p = std::countr_zero(c);
        for (std::size_t k = 0; k < echelon.size(); ++k)
            if ((echelon[k] >> p) & 1u) echelon[k] ^= c;
        echelon.push_back(c);
        pivots.push_back(p);
    }
    // Null space: one vector per free position in the mask.
    std::vector<std::uint64_t> kernel;
    for (int bit = 0; bit < 2 * d; ++bit) {
        if (!((mask >> bit) & 1u)) continue;
        if (std::find(pivots.begin(), pivots.end(), bit) != pivots.end()) continue;
        std::uint64_t v = std::uint64_t{1} << bit;
        for (std::size_t k = 0; k < echelon.size(); ++k)
            if ((echelon[k] >> bit) & 1u) v |= std::uint64_t{1} << pivots[k];
        kernel.push_back(v);
    }
    return Subspace::span(d, kernel);
}

} // namespace isofam
