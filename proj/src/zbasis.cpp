#include "isofam/zbasis.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "isofam/error.hpp"

namespace isofam {

namespace {

std::size_t column_of(const Vector& x) {
    const auto& points = tilde_v(x.d()).elements;
    auto it = std::lower_bound(points.begin(), points.end(), x);
    if (it == points.end() || *it != x)
        raise(ErrorKind::NotInRange, x.to_bitstring() + " is not in tilde V");
    return static_cast<std::size_t>(it - points.begin());
}

BasisCertificate build_certificate(int d) {
    BasisCertificate cert;
    cert.d = d;
    const auto& family = enumerate_family(d);
    // Family members are already sorted by (dim, canonical rows); tilde V by
    // bitstring.
    cert.row_order = family.members();
    cert.column_order = tilde_v(d).elements;
    cert.matrix = IntegerMatrix(cert.row_order.size(), cert.column_order.size());
    for (std::size_t r = 0; r < cert.row_order.size(); ++r)
        for (const auto& x : cert.row_order[r].elements()) cert.matrix(r, column_of(x)) = 1;
    if (!cert.matrix.is_square())
        raise(ErrorKind::TheoremViolation,
              "d = " + std::to_string(d) + ": " + std::to_string(cert.matrix.rows()) +
                  " family members but " + std::to_string(cert.matrix.cols()) + " points");
    cert.determinant = determinant(cert.matrix);
    if (abs(cert.determinant) != 1)
        raise(ErrorKind::TheoremViolation,
              "d = " + std::to_string(d) + ": determinant " + cert.determinant.get_str());
    return cert;
}

struct BasisCache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<BasisCertificate>> certificates;
    std::map<int, std::unique_ptr<IntegerMatrix>> inverses;  // of the transpose
};

BasisCache& cache() {
    static BasisCache instance;
    return instance;
}

const IntegerMatrix& transpose_inverse(int d) {
    const auto& cert = basis_matrix(d, kMaxHalfDim);
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    auto& slot = c.inverses[d];
    if (!slot) slot = std::make_unique<IntegerMatrix>(unimodular_inverse(cert.matrix.transpose()));
    return *slot;
}

} // namespace

FunctionOnTildeV FunctionOnTildeV::point_mass(const Vector& x) {
    FunctionOnTildeV f = constant(x.d(), 0);
    f.values[column_of(x)] = 1;
    return f;
}

FunctionOnTildeV FunctionOnTildeV::indicator(const Subspace& X) {
    FunctionOnTildeV f = constant(X.d(), 0);
    const auto& points = tilde_v(X.d()).elements;
    for (std::size_t k = 0; k < points.size(); ++k)
        if (X.contains(points[k])) f.values[k] = 1;
    return f;
}

FunctionOnTildeV FunctionOnTildeV::constant(int d, long value) {
    return {d, std::vector<mpz_class>(tilde_v(d).size(), mpz_class(value))};
}

const mpz_class& FunctionOnTildeV::at(const Vector& x) const { return values.at(column_of(x)); }

const BasisCertificate& basis_matrix(int d, int max_d) {
    if (d < 0 || d > max_d)
        raise(ErrorKind::Dimension, "basis_matrix: d = " + std::to_string(d) +
                                        " outside [0," + std::to_string(max_d) + "]");
    auto& c = cache();
    {
        std::lock_guard lock(c.mutex);
        if (auto it = c.certificates.find(d); it != c.certificates.end()) return *it->second;
    }
    auto built = std::make_unique<BasisCertificate>(build_certificate(d));
    std::lock_guard lock(c.mutex);
    auto [it, inserted] = c.certificates.emplace(d, std::move(built));
    return *it->second;
}

std::vector<mpz_class> decompose(const FunctionOnTildeV& f) {
    const auto& inverse = transpose_inverse(f.d);
    if (f.values.size() != inverse.cols())
        raise(ErrorKind::Dimension, "function is not defined on tilde V");
    return inverse.multiply(f.values);
}

FunctionOnTildeV recompose(int d, const std::vector<mpz_class>& coefficients) {
    const auto& cert = basis_matrix(d, kMaxHalfDim);
    return {d, cert.matrix.transpose().multiply(coefficients)};
}

std::map<Subspace, mpz_class> decompose_by_subspace(const FunctionOnTildeV& f) {
    const auto coefficients = decompose(f);
    const auto& rows = basis_matrix(f.d, kMaxHalfDim).row_order;
    std::map<Subspace, mpz_class> out;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (sgn(coefficients[k]) != 0) out.emplace(rows[k], coefficients[k]);
    return out;
}

} // namespace isofam
