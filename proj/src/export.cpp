#include "isofam/export.hpp"

#include <sstream>

#include "isofam/phimap.hpp"
#include "isofam/symfam.hpp"

namespace isofam {

std::vector<std::string> basis_bitstrings(const Subspace& X) {
    std::vector<std::string> out;
    for (const auto& v : X.basis()) out.push_back(v.to_bitstring());
    return out;
}

Json family_json(const FamilyEnumeration& family) {
    Json subspaces = Json::array();
    for (const auto& X : family) {
        Json alpha = Json::array();
        for (const auto& I : X.alpha()) alpha.push_back(I.to_string());
        subspaces.push_back({{"basis", basis_bitstrings(X)}, {"alpha", alpha}});
    }
    return {{"d", family.d()}, {"count", family.size()}, {"subspaces", subspaces}};
}

Json phi_json(int d) {
    const auto& family = enumerate_family(d);
    const auto& table = phi_table(d);
    Json pairs = Json::array();
    for (std::size_t k = 0; k < family.size(); ++k)
        pairs.push_back({{"subspace", basis_bitstrings(family[k])}, {"phi", table.images()[k].to_bitstring()}});
    return {{"d", d}, {"pairs", pairs}, {"tilde_v_size", tilde_v(d).size()}};
}

namespace {

std::string row_string(const IntegerMatrix& m, std::size_t r) {
    std::string out;
    for (std::size_t c = 0; c < m.cols(); ++c) out += m(r, c).get_str();
    return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0) out += sep;
        out += parts[k];
    }
    return out;
}

} // namespace

Json certificate_json(const BasisCertificate& cert) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < cert.matrix.rows(); ++r) rows.push_back(row_string(cert.matrix, r));
    Json row_order = Json::array();
    for (const auto& X : cert.row_order) row_order.push_back(basis_bitstrings(X));
    Json column_order = Json::array();
    for (const auto& v : cert.column_order) column_order.push_back(v.to_bitstring());
    return {{"d", cert.d},
            {"size", cert.matrix.rows()},
            {"determinant", cert.determinant.get_str()},
            {"unimodular", cert.unimodular()},
            {"matrix", rows},
            {"row_order", row_order},
            {"column_order", column_order}};
}

std::string certificate_csv(const BasisCertificate& cert) {
    std::ostringstream out;
    out << "subspace";
    for (const auto& v : cert.column_order) out << ',' << v.to_bitstring();
    out << '\n';
    for (std::size_t r = 0; r < cert.matrix.rows(); ++r) {
        out << join(basis_bitstrings(cert.row_order[r]), ';');
        for (std::size_t c = 0; c < cert.matrix.cols(); ++c) out << ',' << cert.matrix(r, c).get_str();
        out << '\n';
    }
    return out.str();
}

std::string table_csv(const FamilyTable& table) {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.column_labels.size(); ++c) {
        if (c > 0) out << ',';
        // Labels such as "(1,1)" contain commas.
        out << '"' << table.column_labels[c] << '"';
    }
    out << '\n';
    for (const auto& row : table.matrix) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c > 0 ? "," : "") << row[c];
        out << '\n';
    }
    return out.str();
}

Json table_json(const FamilyTable& table) {
    Json classes = Json::array();
    for (auto cls : table.row_class) classes.push_back(to_string(cls));
    return {{"type", to_string(table.weyl_type)},
            {"n_c", table.n_c},
            {"column_labels", table.column_labels},
            {"marks", table.marks},
            {"row_class", classes}};
}

Json kostka_json(int m) {
    const auto all = partitions(m);
    Json names = Json::array();
    for (const auto& p : all) names.push_back(p.to_string());
    Json table = Json::object();
    for (const auto& lambda : all) {
        Json row = Json::object();
        for (const auto& mu : all) row[mu.to_string()] = kostka(lambda, mu);
        table[lambda.to_string()] = row;
    }
    Json bijection = Json::object();
    for (const auto& [rho, mu] : unique_bijection(m)) bijection[rho.to_string()] = mu.to_string();
    Json cx = Json::array();
    const auto labels = nonsign_partitions(m);
    for (const auto& row : cx_multiplicities(m)) {
        Json mult = Json::object();
        for (std::size_t k = 0; k < labels.size(); ++k) mult[labels[k].to_string()] = row.multiplicities[k];
        cx.push_back({{"rho", row.rho.to_string()}, {"matched", row.matched.to_string()}, {"multiplicities", mult}});
    }
    return {{"m", m}, {"partitions", names}, {"kostka", table}, {"bijection", bijection}, {"cx_rows", cx}};
}

Json checks_json(const std::vector<CheckResult>& results) {
    Json checks = Json::array();
    bool all_passed = true;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed();
        checks.push_back({{"name", r.name},
                          {"scope", r.scope},
                          {"status", r.passed() ? "PASS" : "FAIL"},
                          {"violations", r.violations},
                          {"samples", r.samples}});
    }
    return {{"passed", all_passed}, {"checks", checks}};
}

} // namespace isofam
