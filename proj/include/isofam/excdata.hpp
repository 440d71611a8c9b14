#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "isofam/int_matrix.hpp"
#include "isofam/symfam.hpp"

namespace isofam {

enum class WeylType { G2, F4, E6, E7, E8 };

std::string to_string(WeylType type);
WeylType parse_weyl_type(std::string_view text);
inline constexpr WeylType kAllWeylTypes[] = {WeylType::G2, WeylType::F4, WeylType::E6, WeylType::E7,
                                             WeylType::E8};

enum class RowClass { Special, Cx, Intermediate, Constructible };

std::string to_string(RowClass cls);

/// Multiplicity matrix of one exceptional family: rows are the new basis
/// elements of the family, columns its irreducible members.
struct FamilyTable {
    WeylType weyl_type = WeylType::G2;
    int n_c = 0;
    std::vector<std::string> column_labels;
    std::vector<std::vector<int>> matrix;
    std::vector<int> marks;  // row -> column of the marked unit entry (0-based)
    std::vector<RowClass> row_class;

    IntegerMatrix to_integer_matrix() const;
};

/// Family sizes realized for a type.
std::vector<int> family_sizes(WeylType type);

/// Every (type, size) pair with a stored table.
std::vector<std::pair<WeylType, int>> all_tables();

/// Throws NotFound for pairs that do not occur.
FamilyTable family_table(WeylType type, int n_c);

struct TableReport {
    bool ok = true;
    mpz_class determinant;
    std::vector<std::string> violations;
};

/// Checks: marks form a bijection onto unit entries, the marks sit on the
/// diagonal in stored order, nothing lies right of a mark, determinant 1,
/// and rows classified special are unit vectors.
TableReport verify_table(const FamilyTable& table);

struct CxCrossCheck {
    bool ok = false;
    int m = 0;
    std::size_t consistent_correspondences = 0;
    std::vector<std::pair<Partition, std::string>> column_for;  // partition -> column label
    std::vector<std::pair<int, Partition>> row_for;             // cx row (0-based) -> rho
    std::string message;
};

/// Matches the cx rows of the G2 / F4 / E8 family (n_c = 4 / 11 / 17) against
/// cx_multiplicities(m) for m = 3 / 4 / 5, searching every assignment of the
/// supporting columns to partitions. Throws Precondition for other n_c.
CxCrossCheck cross_check_cx(WeylType type, int n_c);

/// The printed direct-sum descriptions of the cx rows, one string per row,
/// terms joined by '+' with optional '^k' multiplicity. Representation names
/// map to column labels through printed_sum_aliases.
std::vector<std::string> printed_cx_sums(WeylType type);
std::map<std::string, std::string> printed_sum_aliases(WeylType type);

/// Parses "a+b^2+c" into name -> multiplicity.
std::map<std::string, int> parse_direct_sum(std::string_view text);

struct PrintedSumCheck {
    bool ok = false;
    std::vector<std::string> mismatches;
};

/// Compares each printed sum with the corresponding cx row of the table.
PrintedSumCheck check_printed_sums(WeylType type);

} // namespace isofam
