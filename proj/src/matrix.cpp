#include "pathmat/matrix.hpp"

#include <string>
#include <utility>

namespace pathmat {

Matrix::Matrix(RingSpec spec, int m, int n) : spec_(spec), m_(m), n_(n) {
    if (m < 0 || n < 0) throw Error("negative matrix dimension");
    e_.assign(static_cast<size_t>(m) * n, ring_zero(spec_));
}

Matrix Matrix::identity(const RingSpec& spec, int n) {
    Matrix r(spec, n, n);
    RingValue one = ring_one(spec);
    for (int i = 0; i < n; ++i) r.set(i, i, one);
    return r;
}

void Matrix::set(int i, int j, RingValue v) {
    if (!(v.spec() == spec_))
        throw SpecMismatch("entry spec " + to_string(v.spec()) +
                           " differs from matrix spec " + to_string(spec_));
    e_[static_cast<size_t>(i) * n_ + j] = std::move(v);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (!(a.spec() == b.spec()))
        throw SpecMismatch("matmul over different rings");
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
    Matrix r(a.spec(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const RingValue& aik = a.at(i, k);
            if (ring_is_zero(aik)) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const RingValue& bkj = b.at(k, j);
                if (ring_is_zero(bkj)) continue;
                r.set(i, j, ring_add(r.at(i, j), ring_mul(aik, bkj)));
            }
        }
    return r;
}

bool is_lower_triangular(const Matrix& a) {
    if (a.rows() != a.cols())
        throw NotSquare("triangularity asked of a non-square matrix");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (!ring_is_zero(a.at(i, j))) return false;
    return true;
}

Matrix forward_substitution_inverse(const Matrix& a) {
    if (a.rows() != a.cols())
        throw NotSquare("inverse of a non-square matrix");
    if (!is_lower_triangular(a))
        throw NotTriangular("forward substitution needs a lower triangular matrix");
    const int n = a.rows();
    Matrix b(a.spec(), n, n);
    for (int r = 0; r < n; ++r) {
        RingValue diag_inv;
        try {
            diag_inv = ring_inv(a.at(r, r));
        } catch (const NotInvertible&) {
            throw SingularDiagonal(
                r, "diagonal entry " + std::to_string(r + 1) + " not invertible");
        }
        b.set(r, r, diag_inv);
        for (int j = 0; j < r; ++j) {
            RingValue s = ring_zero(a.spec());
            for (int i = j; i < r; ++i) {
                if (ring_is_zero(a.at(r, i)) || ring_is_zero(b.at(i, j)))
                    continue;
                s = ring_add(s, ring_mul(a.at(r, i), b.at(i, j)));
            }
            if (!ring_is_zero(s))
                b.set(r, j, ring_neg(ring_mul(diag_inv, s)));
        }
    }
    return b;
}

PatternMatrix pattern(const Matrix& a) {
    PatternMatrix p;
    p.m = a.rows();
    p.n = a.cols();
    p.bits.assign(static_cast<size_t>(p.m) * p.n, 0);
    for (int i = 0; i < p.m; ++i)
        for (int j = 0; j < p.n; ++j)
            p.bits[static_cast<size_t>(i) * p.n + j] =
                ring_is_zero(a.at(i, j)) ? 0 : 1;
    return p;
}

Matrix transpose(const Matrix& a) {
    Matrix r(a.spec(), a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
    return r;
}

Matrix symmetric_embed(const Matrix& a) {
    const int m = a.rows(), n = a.cols();
    Matrix r(a.spec(), m + n, m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            r.set(i, m + j, a.at(i, j));
            r.set(m + j, i, a.at(i, j));
        }
    return r;
}

}  // namespace pathmat
