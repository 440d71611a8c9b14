#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace isofam {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntegerMatrix transpose() const;
    std::vector<mpz_class> multiply(const std::vector<mpz_class>& x) const;
    IntegerMatrix multiply(const IntegerMatrix& other) const;

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
mpz_class determinant(const IntegerMatrix& m);

/// Smith normal form invariant factors d_1 | d_2 | ... (length min(rows, cols)),
/// all nonnegative; zeros trail for rank-deficient input.
std::vector<mpz_class> smith_invariants(const IntegerMatrix& m);

/// Inverse of a unimodular matrix by integer row reduction (gcd combinations,
/// then unit pivots). Throws TheoremViolation when the matrix is not
/// invertible over Z.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

} // namespace isofam
