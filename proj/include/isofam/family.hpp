#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isofam/f2space.hpp"
#include "isofam/subspace.hpp"

namespace isofam {

/// The recursively defined family F(V) for one half-dimension d: the zero
/// subspace together with every preimage pi_i^{-1}(X') for X' in F(V_i).
/// Members are deduplicated by canonical form and sorted by Subspace order.
class FamilyEnumeration {
public:
    FamilyEnumeration(int d, std::vector<Subspace> members);

    int d() const noexcept { return d_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<Subspace>& members() const noexcept { return members_; }
    const Subspace& operator[](std::size_t k) const { return members_[k]; }

    bool contains(const Subspace& X) const { return index_.contains(X); }
    std::optional<std::size_t> index_of(const Subspace& X) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

private:
    int d_;
    std::vector<Subspace> members_;
    std::unordered_map<Subspace, std::size_t> index_;
};

/// Memoized, thread-safe. The returned reference stays valid for the process.
const FamilyEnumeration& enumerate_family(int d);

/// pi_i^{-1}(X') where X' lives in the child model of the quotient.
Subspace lift_member(const QuotientModel& q, const Subspace& child);

/// Interval set of X; same as X.alpha().
const std::vector<Interval>& alpha(const Subspace& X);

/// True iff X is a member of F(V) for its own d.
bool is_in_family(const Subspace& X);

/// pi_i(X) in the standard model of half-dimension d-1. Requires e_i in X;
/// throws Precondition otherwise.
Subspace project_member(const Subspace& X, int i);

/// A member of F(V) containing X of dimension d, following the inductive
/// construction: the zero subspace extends to span(e_1, e_3, ..., e_{2d-1});
/// otherwise recurse through the smallest i with e_i in X.
Subspace extend_to_lagrangian(const Subspace& X);

/// (X cap V^0, X cap V^1), V^delta spanned by e_i with i = delta mod 2.
std::pair<Subspace, Subspace> parity_split(const Subspace& X);

/// Smallest k with e_k in X, if any.
std::optional<int> first_basis_index(const Subspace& X);

} // namespace isofam
