#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "isofam/family.hpp"

namespace isofam {

/// Interval coverage counts of a member X: f(j) = #{I in alpha(X) : j in I}
/// and phi(j) = f(j)(f(j)+1)/2 mod 2, for j in [1,2d]. Index 0 holds j = 1.
struct Profile {
    int d = 0;
    std::vector<int> f;
    std::vector<std::uint8_t> phi;
};

Profile profile(const Subspace& X);

/// Sum of phi(j) e_j.
Vector phi(const Subspace& X);

/// Union of all members of F(V), sorted in bitstring order.
struct TildeV {
    int d = 0;
    std::vector<Vector> elements;

    bool contains(const Vector& v) const;
    std::size_t size() const noexcept { return elements.size(); }
};

const TildeV& tilde_v(int d);

/// Breadth-first closure from 0 under x -> x + e_j with (e_j, x) = 0.
/// `distance` holds the least number of moves to reach each element.
struct Reachability {
    int d = 0;
    std::vector<Vector> elements;  // sorted in bitstring order
    std::unordered_map<Vector, int> distance;
};

Reachability reachable_set(int d);

/// Precomputed Phi over the whole enumeration for one d.
class PhiTable {
public:
    explicit PhiTable(const FamilyEnumeration& family);

    int d() const noexcept { return d_; }
    const std::vector<Vector>& images() const noexcept { return images_; }
    bool injective() const noexcept { return preimage_.size() == images_.size(); }
    /// Index of the member mapping to v, if any.
    const std::size_t* find(const Vector& v) const;

private:
    int d_;
    std::vector<Vector> images_;
    std::unordered_map<Vector, std::size_t> preimage_;
};

const PhiTable& phi_table(int d);

/// The unique X in F(V) with Phi(X) = v. Throws NotInRange when v is outside
/// the image.
const Subspace& phi_inverse(const Vector& v);

} // namespace isofam
