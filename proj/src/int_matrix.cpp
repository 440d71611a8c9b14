#include "isofam/int_matrix.hpp"

#include <algorithm>
#include <utility>

#include "isofam/error.hpp"

namespace isofam {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) raise(ErrorKind::Dimension, "ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) out(k, k) = 1;
    return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

std::vector<mpz_class> IntegerMatrix::multiply(const std::vector<mpz_class>& x) const {
    if (x.size() != cols_) raise(ErrorKind::Dimension, "matrix-vector size mismatch");
    std::vector<mpz_class> out(rows_, mpz_class(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * x[c];
    return out;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) raise(ErrorKind::Dimension, "matrix product size mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
        }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

mpz_class determinant(const IntegerMatrix& m) {
    if (!m.is_square()) raise(ErrorKind::Dimension, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    mpz_class previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
            if (swap_with == n) return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), previous.get_mpz_t());
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Replaces rows (p, q) by a unimodular combination so that column c holds
// gcd(a_pc, a_qc) in row p and 0 in row q. Applies the same transform to `aux`
// when given.
void gcd_combine_rows(IntegerMatrix& a, IntegerMatrix* aux, std::size_t p, std::size_t q, std::size_t c) {
    if (mpz_divisible_p(a(q, c).get_mpz_t(), a(p, c).get_mpz_t())) {
        const mpz_class factor = a(q, c) / a(p, c);
        auto subtract = [&](IntegerMatrix& m) {
            for (std::size_t k = 0; k < m.cols(); ++k)
                if (sgn(m(p, k)) != 0) m(q, k) -= factor * m(p, k);
        };
        subtract(a);
        if (aux != nullptr) subtract(*aux);
        return;
    }
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(p, c).get_mpz_t(), a(q, c).get_mpz_t());
    const mpz_class u = a(p, c) / g;
    const mpz_class v = a(q, c) / g;
    // [s t; -v u] has determinant s*u + t*v = 1.
    auto apply = [&](IntegerMatrix& m) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const mpz_class x = m(p, k);
            const mpz_class y = m(q, k);
            m(p, k) = s * x + t * y;
            m(q, k) = u * y - v * x;
        }
    };
    apply(a);
    if (aux != nullptr) apply(*aux);
}

void gcd_combine_cols(IntegerMatrix& a, std::size_t p, std::size_t q, std::size_t r) {
    if (mpz_divisible_p(a(r, q).get_mpz_t(), a(r, p).get_mpz_t())) {
        const mpz_class factor = a(r, q) / a(r, p);
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (sgn(a(k, p)) != 0) a(k, q) -= factor * a(k, p);
        return;
    }
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, p).get_mpz_t(), a(r, q).get_mpz_t());
    const mpz_class u = a(r, p) / g;
    const mpz_class v = a(r, q) / g;
    for (std::size_t k = 0; k < a.rows(); ++k) {
        const mpz_class x = a(k, p);
        const mpz_class y = a(k, q);
        a(k, p) = s * x + t * y;
        a(k, q) = u * y - v * x;
    }
}

} // namespace

std::vector<mpz_class> smith_invariants(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    const std::size_t n = std::min(a.rows(), a.cols());
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < n; ++t) {
        // Move a nonzero entry of minimal magnitude into (t, t).
        std::size_t br = a.rows(), bc = a.cols();
        for (std::size_t r = t; r < a.rows(); ++r)
            for (std::size_t c = t; c < a.cols(); ++c)
                if (sgn(a(r, c)) != 0 && (br == a.rows() || abs(a(r, c)) < abs(a(br, bc)))) {
                    br = r;
                    bc = c;
                }
        if (br == a.rows()) break;
        a.swap_rows(t, br);
        if (bc != t)
            for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, t), a(k, bc));

        bool clean = false;
        while (!clean) {
            for (std::size_t r = t + 1; r < a.rows(); ++r)
                if (sgn(a(r, t)) != 0) gcd_combine_rows(a, nullptr, t, r, t);
            for (std::size_t c = t + 1; c < a.cols(); ++c)
                if (sgn(a(t, c)) != 0) gcd_combine_cols(a, t, c, t);
            clean = true;
            for (std::size_t r = t + 1; r < a.rows() && clean; ++r)
                if (sgn(a(r, t)) != 0) clean = false;
            if (!clean) continue;
            // Divisibility: fold any entry not divisible by the pivot into row t.
            for (std::size_t r = t + 1; r < a.rows() && clean; ++r)
                for (std::size_t c = t + 1; c < a.cols(); ++c)
                    if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t k = t; k < a.cols(); ++k) a(t, k) += a(r, k);
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(a(t, t)));
    }
    diag.resize(n, mpz_class(0));
    return diag;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
    if (!m.is_square()) raise(ErrorKind::Dimension, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    IntegerMatrix a = m;
    IntegerMatrix inv = IntegerMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        // Prefer a unit pivot; otherwise gather the column gcd by combinations.
        std::size_t pivot = n;
        for (std::size_t r = c; r < n; ++r)
            if (abs(a(r, c)) == 1) {
                pivot = r;
                break;
            }
        if (pivot == n) {
            for (std::size_t r = c; r < n; ++r)
                if (sgn(a(r, c)) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot == n) raise(ErrorKind::TheoremViolation, "matrix is singular");
            for (std::size_t r = pivot + 1; r < n; ++r)
                if (sgn(a(r, c)) != 0) {
                    gcd_combine_rows(a, &inv, pivot, r, c);
                }
        }
        a.swap_rows(c, pivot);
        inv.swap_rows(c, pivot);
        if (abs(a(c, c)) != 1) raise(ErrorKind::TheoremViolation, "matrix is not unimodular");
        if (a(c, c) < 0) {
            for (std::size_t k = 0; k < n; ++k) {
                a(c, k) = -a(c, k);
                inv(c, k) = -inv(c, k);
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a(r, c)) == 0) continue;
            const mpz_class factor = a(r, c);
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(a(c, k)) != 0) a(r, k) -= factor * a(c, k);
                if (sgn(inv(c, k)) != 0) inv(r, k) -= factor * inv(c, k);
            }
        }
    }
    return inv;
}

} // namespace isofam
