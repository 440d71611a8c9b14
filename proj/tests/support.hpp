#pragma once

#include <string>
#include <vector>

#include "isofam/subspace.hpp"
#include "oracle.hpp"

namespace testing {

inline isofam::Vector e(int d, int i) { return isofam::Vector::basis(d, i); }

inline isofam::Vector bits(const std::string& text) { return isofam::Vector::from_bitstring(text); }

inline oracle::ElementSet element_set(const isofam::Subspace& X) {
    oracle::ElementSet out = 0;
    for (const auto& x : X.elements()) out |= oracle::ElementSet{1} << x.bits();
    return out;
}

inline isofam::Subspace from_masks(int d, const std::vector<std::uint64_t>& masks) {
    return isofam::Subspace::span(d, std::span<const std::uint64_t>(masks));
}

} // namespace testing

#include <optional>

#include "isofam/error.hpp"

namespace testing {

/// The kind of the isofam::Error thrown by fn, or nullopt when none is thrown.
template <typename Fn>
std::optional<isofam::ErrorKind> thrown_kind(Fn&& fn) {
    try {
        fn();
    } catch (const isofam::Error& err) {
        return err.kind();
    }
    return std::nullopt;
}

} // namespace testing
