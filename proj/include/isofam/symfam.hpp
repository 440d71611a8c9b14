#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isofam {

/// Integer partition, parts weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    /// Throws Precondition unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    /// Parses "3+1+1"; a single part "4" is accepted.
    static Partition parse(std::string_view text);
    /// (1, 1, ..., 1) of size m.
    static Partition column(int m);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int operator[](int k) const { return parts_.at(static_cast<std::size_t>(k)); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Reverse lexicographic: (m) < (m-1,1) < ... < (1^m).
    friend std::strong_ordering operator<=>(const Partition& lhs, const Partition& rhs);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of m, (m) first and (1^m) last.
std::vector<Partition> partitions(int m);

/// Partitions of m other than (1^m). Indexes both the non-sign irreducible
/// representations and the nontrivial Young subgroups of S_m.
std::vector<Partition> nonsign_partitions(int m);

/// Number of semistandard tableaux of shape lambda and content mu, by
/// exhaustive filling. Throws Precondition when sizes differ.
long kostka(const Partition& lambda, const Partition& mu);

/// Multiplicity of the irreducible lambda in the permutation module of S_m on
/// the cosets of the Young subgroup S_mu, computed as a character inner
/// product over all m! permutations. Irreducible characters come from the
/// determinantal expansion in permutation characters of compositions.
long kostka_by_characters(const Partition& lambda, const Partition& mu);

/// Bijection rho -> mu(rho) between nonsign_partitions(m) and itself (as
/// Young-subgroup types) such that kostka(rho, mu(rho)) = 1. Throws
/// Uniqueness unless exactly one such bijection exists.
std::vector<std::pair<Partition, Partition>> unique_bijection(int m);

/// Number of bijections with all matched Kostka numbers equal to 1.
std::size_t count_unit_bijections(int m);

/// True when distinct Young subgroup types give non-isomorphic permutation
/// modules (their Kostka columns differ).
bool young_modules_distinct(int m);

struct CxRow {
    int m = 0;
    Partition rho;
    Partition matched;                 // Young subgroup type paired with rho
    std::vector<long> multiplicities;  // over nonsign_partitions(m)
};

/// For each rho in nonsign_partitions(m), the multiplicities of every rho'
/// in the permutation module of type matched(rho).
std::vector<CxRow> cx_multiplicities(int m);

} // namespace isofam
