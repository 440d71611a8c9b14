#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

#include "isofam/family.hpp"
#include "isofam/int_matrix.hpp"
#include "isofam/phimap.hpp"

namespace isofam {

/// Default bound on d for exact basis certificates.
inline constexpr int kDefaultMaxD = 5;

/// Integer-valued function on the support set tilde V (for a fixed d),
/// stored in the column order of tilde_v(d).elements.
struct FunctionOnTildeV {
    int d = 0;
    std::vector<mpz_class> values;

    /// Characteristic function of a single point.
    static FunctionOnTildeV point_mass(const Vector& x);
    /// Characteristic function of a subspace restricted to tilde V.
    static FunctionOnTildeV indicator(const Subspace& X);
    static FunctionOnTildeV constant(int d, long value);

    const mpz_class& at(const Vector& x) const;
    friend bool operator==(const FunctionOnTildeV&, const FunctionOnTildeV&) = default;
};

/// Characteristic-function matrix: row k is the indicator of family member
/// row_order[k] over the points column_order, with its exact determinant.
struct BasisCertificate {
    int d = 0;
    IntegerMatrix matrix;
    mpz_class determinant;
    std::vector<Subspace> row_order;
    std::vector<Vector> column_order;

    bool unimodular() const { return matrix.is_square() && abs(determinant) == 1; }
};

/// Builds and certifies the matrix for d. Throws TheoremViolation when the
/// matrix is not square with determinant +-1; Dimension when d > max_d.
const BasisCertificate& basis_matrix(int d, int max_d = kDefaultMaxD);

/// Coefficients c_X with f = sum c_X * indicator(X), X over the family in
/// certificate row order.
std::vector<mpz_class> decompose(const FunctionOnTildeV& f);

/// sum c_X * indicator(X) evaluated on tilde V.
FunctionOnTildeV recompose(int d, const std::vector<mpz_class>& coefficients);

/// Decomposition keyed by subspace, omitting zero coefficients.
std::map<Subspace, mpz_class> decompose_by_subspace(const FunctionOnTildeV& f);

} // namespace isofam
