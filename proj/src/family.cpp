#include "isofam/family.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "isofam/error.hpp"

namespace isofam {

FamilyEnumeration::FamilyEnumeration(int d, std::vector<Subspace> members)
    : d_(d), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    index_.reserve(members_.size());
    for (std::size_t k = 0; k < members_.size(); ++k) index_.emplace(members_[k], k);
}

std::optional<std::size_t> FamilyEnumeration::index_of(const Subspace& X) const {
    if (auto it = index_.find(X); it != index_.end()) return it->second;
    return std::nullopt;
}

Subspace lift_member(const QuotientModel& q, const Subspace& child) {
    if (child.d() != q.child_d())
        raise(ErrorKind::Dimension, "lift_member: subspace is not in the child model");
    std::vector<std::uint64_t> generators;
    generators.reserve(child.rows().size() + 1);
    for (auto row : child.rows()) generators.push_back(q.section(Vector(q.child_d(), row)).bits());
    generators.push_back(q.pivot_vector().bits());
    return Subspace::span(q.parent_d(), generators);
}

namespace {

std::vector<Subspace> build_members(int d, const FamilyEnumeration& previous) {
    std::vector<Subspace> members{Subspace(d)};
    for (int i = 1; i <= 2 * d; ++i) {
        const QuotientModel q(d, i);
        for (const auto& child : previous) members.push_back(lift_member(q, child));
    }
    return members;
}

struct FamilyCache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<FamilyEnumeration>> by_d;
};

FamilyCache& cache() {
    static FamilyCache instance;
    return instance;
}

} // namespace

const FamilyEnumeration& enumerate_family(int d) {
    if (d < 0 || d > kMaxHalfDim)
        raise(ErrorKind::Dimension, "enumerate_family: d = " + std::to_string(d) + " out of range");
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    if (auto it = c.by_d.find(d); it != c.by_d.end()) return *it->second;
    // Build bottom-up so each level reuses the memoized previous one.
    int start = 0;
    while (c.by_d.contains(start) && start < d) ++start;
    for (int level = start; level <= d; ++level) {
        if (c.by_d.contains(level)) continue;
        std::vector<Subspace> members =
            level == 0 ? std::vector<Subspace>{Subspace(0)} : build_members(level, *c.by_d.at(level - 1));
        c.by_d.emplace(level, std::make_unique<FamilyEnumeration>(level, std::move(members)));
    }
    return *c.by_d.at(d);
}

const std::vector<Interval>& alpha(const Subspace& X) { return X.alpha(); }

bool is_in_family(const Subspace& X) { return enumerate_family(X.d()).contains(X); }

Subspace project_member(const Subspace& X, int i) {
    if (X.d() < 1 || i < 1 || i > 2 * X.d())
        raise(ErrorKind::Precondition, "project_member: pivot " + std::to_string(i) + " out of range");
    if (!X.contains_basis_vector(i))
        raise(ErrorKind::Precondition, "project_member: e_" + std::to_string(i) + " is not in X");
    const QuotientModel q(X.d(), i);
    std::vector<std::uint64_t> images;
    for (const auto& b : X.basis()) images.push_back(q.project(b).bits());
    return Subspace::span(q.child_d(), images);
}

std::optional<int> first_basis_index(const Subspace& X) {
    for (int k = 1; k <= 2 * X.d(); ++k)
        if (X.contains_basis_vector(k)) return k;
    return std::nullopt;
}

Subspace extend_to_lagrangian(const Subspace& X) {
    const int d = X.d();
    if (X.is_zero()) {
        std::vector<Vector> odd;
        for (int k = 1; k <= 2 * d; k += 2) odd.push_back(Vector::basis(d, k));
        return Subspace::span(d, odd);
    }
    const auto pivot = first_basis_index(X);
    if (!pivot)
        raise(ErrorKind::Precondition, "extend_to_lagrangian: nonzero X contains no basis vector");
    const QuotientModel q(d, *pivot);
    return lift_member(q, extend_to_lagrangian(project_member(X, *pivot)));
}

std::pair<Subspace, Subspace> parity_split(const Subspace& X) {
    return {X.intersect_coordinates(parity_mask(X.d(), 0)),
            X.intersect_coordinates(parity_mask(X.d(), 1))};
}

} // namespace isofam
