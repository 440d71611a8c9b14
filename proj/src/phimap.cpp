#include "isofam/phimap.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>

#include "isofam/error.hpp"

namespace isofam {

Profile profile(const Subspace& X) {
    Profile p;
    p.d = X.d();
    p.f.assign(static_cast<std::size_t>(2 * p.d), 0);
    p.phi.assign(static_cast<std::size_t>(2 * p.d), 0);
    for (const auto& I : X.alpha())
        for (int j = I.a; j <= I.b; ++j) ++p.f[static_cast<std::size_t>(j - 1)];
    for (std::size_t k = 0; k < p.f.size(); ++k) {
        const int f = p.f[k];
        p.phi[k] = static_cast<std::uint8_t>((f * (f + 1) / 2) % 2);
    }
    return p;
}

Vector phi(const Subspace& X) {
    const Profile p = profile(X);
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < p.phi.size(); ++k)
        if (p.phi[k]) bits |= std::uint64_t{1} << k;
    return Vector(X.d(), bits);
}

bool TildeV::contains(const Vector& v) const {
    return std::binary_search(elements.begin(), elements.end(), v);
}

namespace {

template <typename T>
class PerDimensionCache {
public:
    template <typename Build>
    const T& get(int d, Build&& build) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = items_.find(d); it != items_.end()) return *it->second;
        }
        // Build outside the lock: builders may consult other caches.
        auto built = std::make_unique<T>(build());
        std::lock_guard lock(mutex_);
        auto [it, inserted] = items_.emplace(d, std::move(built));
        return *it->second;
    }

private:
    std::mutex mutex_;
    std::map<int, std::unique_ptr<T>> items_;
};

} // namespace

const TildeV& tilde_v(int d) {
    static PerDimensionCache<TildeV> cache;
    return cache.get(d, [d] {
        std::set<Vector> all;
        for (const auto& X : enumerate_family(d))
            for (const auto& x : X.elements()) all.insert(x);
        return TildeV{d, {all.begin(), all.end()}};
    });
}

Reachability reachable_set(int d) {
    if (d < 0 || d > kMaxHalfDim)
        raise(ErrorKind::Dimension, "reachable_set: d out of range");
    Reachability out;
    out.d = d;
    const Vector zero(d);
    out.distance.emplace(zero, 0);
    std::deque<Vector> queue{zero};
    while (!queue.empty()) {
        const Vector x = queue.front();
        queue.pop_front();
        const int next = out.distance.at(x) + 1;
        for (int j = 1; j <= 2 * d; ++j) {
            const Vector e = Vector::basis(d, j);
            if (pairing(e, x)) continue;
            const Vector y = x + e;
            if (out.distance.emplace(y, next).second) queue.push_back(y);
        }
    }
    out.elements.reserve(out.distance.size());
    for (const auto& [v, n] : out.distance) out.elements.push_back(v);
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

PhiTable::PhiTable(const FamilyEnumeration& family) : d_(family.d()) {
    images_.reserve(family.size());
    for (std::size_t k = 0; k < family.size(); ++k) {
        images_.push_back(phi(family[k]));
        preimage_.emplace(images_.back(), k);
    }
}

const std::size_t* PhiTable::find(const Vector& v) const {
    auto it = preimage_.find(v);
    return it == preimage_.end() ? nullptr : &it->second;
}

const PhiTable& phi_table(int d) {
    static PerDimensionCache<PhiTable> cache;
    return cache.get(d, [d] { return PhiTable(enumerate_family(d)); });
}

const Subspace& phi_inverse(const Vector& v) {
    const auto& table = phi_table(v.d());
    if (!table.injective())
        raise(ErrorKind::TheoremViolation, "phi is not injective for d = " + std::to_string(v.d()));
    const std::size_t* k = table.find(v);
    if (k == nullptr)
        raise(ErrorKind::NotInRange, v.to_bitstring() + " is not in the image of phi");
    return enumerate_family(v.d())[*k];
}

} // namespace isofam
