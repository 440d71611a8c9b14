#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "isofam/excdata.hpp"
#include "isofam/family.hpp"
#include "isofam/lemmas.hpp"
#include "isofam/zbasis.hpp"

namespace isofam {

using Json = nlohmann::ordered_json;

std::vector<std::string> basis_bitstrings(const Subspace& X);

/// { "d", "count", "subspaces": [ { "basis": [...], "alpha": ["[a,b]", ...] } ] }
Json family_json(const FamilyEnumeration& family);

/// { "d", "pairs": [ { "subspace": [...], "phi": bitstring } ], "tilde_v_size" }
Json phi_json(int d);

/// Matrix as rows of 0/1 strings, determinant as a decimal string, plus the
/// row and column orderings.
Json certificate_json(const BasisCertificate& cert);
/// Header: "subspace" then one column per point; rows start with the basis
/// bitstrings joined by ';'.
std::string certificate_csv(const BasisCertificate& cert);

/// Matrix rows as CSV with the column labels as header.
std::string table_csv(const FamilyTable& table);
/// Labels, marks (0-based column per row), row classes.
Json table_json(const FamilyTable& table);

/// Kostka table, unique bijection and cx rows for S_m, keyed by "3+1" strings.
Json kostka_json(int m);

Json checks_json(const std::vector<CheckResult>& results);

} // namespace isofam
