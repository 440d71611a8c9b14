#include "isofam/excdata.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "isofam/error.hpp"

namespace isofam {

std::string to_string(WeylType type) {
    switch (type) {
    case WeylType::G2: return "G2";
    case WeylType::F4: return "F4";
    case WeylType::E6: return "E6";
    case WeylType::E7: return "E7";
    case WeylType::E8: return "E8";
    }
    return "?";
}

WeylType parse_weyl_type(std::string_view text) {
    for (auto type : kAllWeylTypes)
        if (to_string(type) == text) return type;
    raise(ErrorKind::NotFound, "unknown Weyl type '" + std::string(text) + "'");
}

std::string to_string(RowClass cls) {
    switch (cls) {
    case RowClass::Special: return "special";
    case RowClass::Cx: return "cx";
    case RowClass::Intermediate: return "intermediate";
    case RowClass::Constructible: return "constructible";
    }
    return "?";
}

IntegerMatrix FamilyTable::to_integer_matrix() const {
    IntegerMatrix out(matrix.size(), matrix.empty() ? 0 : matrix.front().size());
    for (std::size_t r = 0; r < matrix.size(); ++r)
        for (std::size_t c = 0; c < matrix[r].size(); ++c) out(r, c) = matrix[r][c];
    return out;
}

namespace {

using R = RowClass;

struct StoredTable {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> matrix;
    std::vector<RowClass> classes;
};

// Literal family matrices. All marks sit on the diagonal.

// n_c = 1, every exceptional type. The single pair of a trivial group.
const StoredTable kSize1{{"(1,1)"}, {{1}}, {R::Special}};

// n_c = 2 (E7, E8).
const StoredTable kSize2{{"(1,1)", "(1,ε)"},
                         {{1, 0},
                          {1, 1}},
                         {R::Special, R::Constructible}};

// n_c = 3 (F4, E6, E7, E8).
const StoredTable kSize3{{"(1,1)", "(g_2,1)", "(1,ε)"},
                         {{1, 0, 0},
                          {1, 1, 0},
                          {1, 0, 1}},
                         {R::Special, R::Constructible, R::Constructible}};

// n_c = 4 (G2).
const StoredTable kSize4{{"(1,1)", "(1,r)", "(g_2,1)", "(g_3,1)"},
                         {{1, 0, 0, 0},
                          {1, 1, 0, 0},
                          {1, 1, 1, 0},
                          {1, 0, 1, 1}},
                         {R::Cx, R::Cx, R::Constructible, R::Constructible}};

// n_c = 5, one matrix shared by E6, E7 and E8.
const StoredTable kSize5{{"(1,1)", "(1,r)", "(g_2,1)", "(g_3,1)", "(1,ε)"},
                         {{1, 0, 0, 0, 0},
                          {1, 1, 0, 0, 0},
                          {1, 1, 1, 0, 0},
                          {1, 0, 1, 1, 0},
                          {1, 2, 0, 0, 1}},
                         {R::Special, R::Intermediate, R::Constructible, R::Constructible,
                          R::Constructible}};

// n_c = 11 (F4).
const StoredTable kSize11{
    {"12_1", "9_3", "6_2", "1_3", "16_1", "9_2", "4_4", "6_1", "4_3", "4_1", "1_2"},
    {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0},
     {1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0},
     {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0},
     {1, 2, 1, 1, 1, 0, 1, 0, 0, 0, 0},
     {1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0},
     {1, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0},
     {1, 1, 1, 0, 2, 1, 0, 0, 0, 1, 0},
     {1, 0, 1, 0, 1, 2, 0, 0, 1, 0, 1}},
    {R::Cx, R::Cx, R::Cx, R::Cx, R::Intermediate, R::Intermediate, R::Constructible,
     R::Constructible, R::Constructible, R::Constructible, R::Constructible}};

// n_c = 17 (E8). Labels are degrees with subscripts omitted.
const StoredTable kSize17{
    {"4480", "5670", "4536", "1680", "1400", "70", "7168", "5600", "3150", "4200", "2688", "2016",
     "448", "1134", "1344", "420", "168"},
    {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 2, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 3, 3, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 2, 2, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
     {1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
     {1, 2, 2, 1, 1, 0, 2, 2, 0, 1, 1, 0, 0, 0, 0, 0, 0},
     {1, 1, 1, 0, 0, 0, 2, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
     {1, 3, 3, 3, 2, 1, 1, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0},
     {1, 2, 1, 1, 0, 0, 1, 2, 1, 0, 0, 0, 1, 1, 0, 0, 0},
     {1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0},
     {1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0},
     {1, 1, 1, 0, 1, 0, 1, 1, 0, 2, 0, 0, 0, 0, 1, 0, 1}},
    {R::Cx, R::Cx, R::Cx, R::Cx, R::Cx, R::Cx, R::Intermediate, R::Intermediate, R::Intermediate,
     R::Intermediate, R::Constructible, R::Constructible, R::Constructible, R::Constructible,
     R::Constructible, R::Constructible, R::Constructible}};

const StoredTable* stored(int n_c) {
    switch (n_c) {
    case 1: return &kSize1;
    case 2: return &kSize2;
    case 3: return &kSize3;
    case 4: return &kSize4;
    case 5: return &kSize5;
    case 11: return &kSize11;
    case 17: return &kSize17;
    default: return nullptr;
    }
}

} // namespace

std::vector<int> family_sizes(WeylType type) {
    switch (type) {
    case WeylType::G2: return {1, 4};
    case WeylType::F4: return {1, 3, 11};
    case WeylType::E6: return {1, 3, 5};
    case WeylType::E7: return {1, 2, 3, 5};
    case WeylType::E8: return {1, 2, 3, 5, 17};
    }
    return {};
}

std::vector<std::pair<WeylType, int>> all_tables() {
    std::vector<std::pair<WeylType, int>> out;
    for (auto type : kAllWeylTypes)
        for (int n : family_sizes(type)) out.emplace_back(type, n);
    return out;
}

FamilyTable family_table(WeylType type, int n_c) {
    const auto sizes = family_sizes(type);
    const StoredTable* data = stored(n_c);
    if (data == nullptr || std::find(sizes.begin(), sizes.end(), n_c) == sizes.end())
        raise(ErrorKind::NotFound, "no family of size " + std::to_string(n_c) + " in type " + to_string(type));
    FamilyTable table;
    table.weyl_type = type;
    table.n_c = n_c;
    table.column_labels = data->labels;
    table.matrix = data->matrix;
    table.row_class = data->classes;
    table.marks.resize(static_cast<std::size_t>(n_c));
    std::iota(table.marks.begin(), table.marks.end(), 0);
    return table;
}

TableReport verify_table(const FamilyTable& table) {
    TableReport report;
    auto fail = [&](std::string message) {
        report.ok = false;
        report.violations.push_back(std::move(message));
    };
    const auto n = static_cast<std::size_t>(table.n_c);
    const auto row_name = [](std::size_t r) { return "r" + std::to_string(r + 1); };

    bool shape_ok = table.matrix.size() == n && table.marks.size() == n && table.row_class.size() == n &&
                    table.column_labels.size() == n;
    for (const auto& row : table.matrix) shape_ok = shape_ok && row.size() == n;
    if (!shape_ok) {
        fail("shape: table is not " + std::to_string(n) + "x" + std::to_string(n));
        return report;
    }

    std::set<int> used;
    for (std::size_t r = 0; r < n; ++r) {
        const int mark = table.marks[r];
        if (mark < 0 || mark >= table.n_c) {
            fail("marks: " + row_name(r) + " marks a column outside the table");
            continue;
        }
        if (!used.insert(mark).second) fail("marks: column " + table.column_labels[static_cast<std::size_t>(mark)] + " marked twice");
        if (table.matrix[r][static_cast<std::size_t>(mark)] != 1) fail("marks: " + row_name(r) + " marked entry is not 1");
        if (mark != static_cast<int>(r)) fail("marks: " + row_name(r) + " mark is off the diagonal");
    }
    if (!report.ok) return report;

    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (table.matrix[r][c] < 0) fail("entries: " + row_name(r) + " has a negative entry");

    // In the column order given by the marks, nothing may sit right of the diagonal.
    std::vector<std::size_t> position(n);
    for (std::size_t r = 0; r < n; ++r) position[static_cast<std::size_t>(table.marks[r])] = r;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (position[c] > r && table.matrix[r][c] != 0)
                fail("unitriangular: " + row_name(r) + " has entry " + std::to_string(table.matrix[r][c]) +
                     " right of its mark in column " + table.column_labels[c]);

    report.determinant = determinant(table.to_integer_matrix());
    if (report.determinant != 1) fail("determinant: " + report.determinant.get_str() + " != 1");

    for (std::size_t r = 0; r < n; ++r) {
        if (table.row_class[r] != RowClass::Special) continue;
        int ones = 0, nonzero = 0;
        for (int v : table.matrix[r]) {
            nonzero += v != 0;
            ones += v == 1;
        }
        if (nonzero != 1 || ones != 1) fail("special: " + row_name(r) + " is not a unit vector");
    }
    return report;
}

namespace {

int symmetric_degree(WeylType type, int n_c) {
    if (type == WeylType::G2 && n_c == 4) return 3;
    if (type == WeylType::F4 && n_c == 11) return 4;
    if (type == WeylType::E8 && n_c == 17) return 5;
    raise(ErrorKind::Precondition, "cx cross-check needs (G2,4), (F4,11) or (E8,17); got (" +
                                       to_string(type) + "," + std::to_string(n_c) + ")");
}

} // namespace

CxCrossCheck cross_check_cx(WeylType type, int n_c) {
    CxCrossCheck out;
    out.m = symmetric_degree(type, n_c);
    const FamilyTable table = family_table(type, n_c);
    const auto expected = cx_multiplicities(out.m);
    const auto labels = nonsign_partitions(out.m);
    const std::size_t k = labels.size();

    std::vector<std::size_t> cx_rows;
    for (std::size_t r = 0; r < table.row_class.size(); ++r)
        if (table.row_class[r] == RowClass::Cx) cx_rows.push_back(r);
    if (cx_rows.size() != k) {
        out.message = std::to_string(cx_rows.size()) + " cx rows but " + std::to_string(k) + " partitions";
        return out;
    }
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < static_cast<std::size_t>(n_c); ++c)
        if (std::any_of(cx_rows.begin(), cx_rows.end(), [&](std::size_t r) { return table.matrix[r][c] != 0; }))
            support.push_back(c);
    if (support.size() != k) {
        out.message = "cx rows are supported on " + std::to_string(support.size()) + " columns, expected " +
                      std::to_string(k);
        return out;
    }

    // assignment[p] = index into support of the column carrying partition p.
    std::vector<std::size_t> assignment(k);
    std::iota(assignment.begin(), assignment.end(), 0);
    do {
        std::vector<std::pair<int, Partition>> rows_found;
        std::vector<bool> taken(k, false);
        for (std::size_t r : cx_rows) {
            bool matched = false;
            for (std::size_t e = 0; e < k && !matched; ++e) {
                if (taken[e]) continue;
                bool equal = true;
                for (std::size_t p = 0; p < k && equal; ++p)
                    equal = table.matrix[r][support[assignment[p]]] == expected[e].multiplicities[p];
                if (equal) {
                    taken[e] = true;
                    matched = true;
                    rows_found.emplace_back(static_cast<int>(r), expected[e].rho);
                }
            }
            if (!matched) break;
        }
        if (rows_found.size() != k) continue;
        if (++out.consistent_correspondences == 1) {
            for (std::size_t p = 0; p < k; ++p)
                out.column_for.emplace_back(labels[p], table.column_labels[support[assignment[p]]]);
            out.row_for = std::move(rows_found);
        }
    } while (std::next_permutation(assignment.begin(), assignment.end()));

    out.ok = out.consistent_correspondences >= 1;
    out.message = out.ok ? std::to_string(out.consistent_correspondences) + " consistent column correspondence(s)"
                         : "no column correspondence reproduces the cx rows";
    return out;
}

std::vector<std::string> printed_cx_sums(WeylType type) {
    switch (type) {
    case WeylType::G2: return {"V", "V+ε_1"};
    case WeylType::F4: return {"12_1", "12_1+9_3", "12_1+9_3+6_2", "12_1+9_3^2+6_2+1_3"};
    case WeylType::E8:
        return {"4480",
                "4480+5670",
                "4480+5670+4536",
                "4480+5670^2+4536+1680",
                "4480+5670^2+4536^2+1400+1680",
                "4480+5670^3+4536^3+1400^2+1680^3+70"};
    default: raise(ErrorKind::NotFound, "no printed cx sums for type " + to_string(type));
    }
}

std::map<std::string, std::string> printed_sum_aliases(WeylType type) {
    // G2: V is the special member, labelled (1,1); the one-dimensional
    // member carries the pair (1,r).
    if (type == WeylType::G2) return {{"V", "(1,1)"}, {"ε_1", "(1,r)"}};
    return {};
}

std::map<std::string, int> parse_direct_sum(std::string_view text) {
    std::map<std::string, int> out;
    while (!text.empty()) {
        const auto plus = text.find('+');
        std::string_view term = text.substr(0, plus);
        int multiplicity = 1;
        if (const auto caret = term.find('^'); caret != std::string_view::npos) {
            const auto digits = term.substr(caret + 1);
            const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), multiplicity);
            if (ec != std::errc{} || ptr != digits.data() + digits.size() || multiplicity < 1)
                raise(ErrorKind::Precondition, "bad multiplicity in '" + std::string(term) + "'");
            term = term.substr(0, caret);
        }
        if (term.empty()) raise(ErrorKind::Precondition, "empty term in direct sum");
        out[std::string(term)] += multiplicity;
        if (plus == std::string_view::npos) break;
        text.remove_prefix(plus + 1);
    }
    return out;
}

PrintedSumCheck check_printed_sums(WeylType type) {
    const int n_c = type == WeylType::G2 ? 4 : type == WeylType::F4 ? 11 : 17;
    const FamilyTable table = family_table(type, n_c);
    const auto sums = printed_cx_sums(type);
    const auto aliases = printed_sum_aliases(type);
    PrintedSumCheck out;
    std::vector<std::size_t> cx_rows;
    for (std::size_t r = 0; r < table.row_class.size(); ++r)
        if (table.row_class[r] == RowClass::Cx) cx_rows.push_back(r);
    if (cx_rows.size() != sums.size()) {
        out.mismatches.push_back("row count " + std::to_string(cx_rows.size()) + " vs " +
                                 std::to_string(sums.size()) + " printed sums");
        return out;
    }
    for (std::size_t k = 0; k < sums.size(); ++k) {
        std::vector<int> expected(static_cast<std::size_t>(n_c), 0);
        for (const auto& [name, mult] : parse_direct_sum(sums[k])) {
            const auto alias = aliases.find(name);
            const std::string& label = alias == aliases.end() ? name : alias->second;
            const auto it = std::find(table.column_labels.begin(), table.column_labels.end(), label);
            if (it == table.column_labels.end()) {
                out.mismatches.push_back("unknown representation '" + name + "'");
                continue;
            }
            expected[static_cast<std::size_t>(it - table.column_labels.begin())] = mult;
        }
        if (expected != table.matrix[cx_rows[k]])
            out.mismatches.push_back("r" + std::to_string(cx_rows[k] + 1) + " differs from '" + sums[k] + "'");
    }
    out.ok = out.mismatches.empty();
    return out;
}

} // namespace isofam
