#pragma once

#include <cstdint>
#include <vector>

#include "pathmat/ring.hpp"

namespace pathmat {

/// Dense m x n matrix over one ring. Entries all share the spec; immutable
/// use is the norm (operations return fresh matrices). Zero-dimensional
/// matrices are legal and behave via empty-product conventions.
class Matrix {
public:
    Matrix(RingSpec spec, int m, int n);

    static Matrix identity(const RingSpec& spec, int n);

    int rows() const { return m_; }
    int cols() const { return n_; }
    const RingSpec& spec() const { return spec_; }

    const RingValue& at(int i, int j) const {
        return e_[static_cast<size_t>(i) * n_ + j];
    }

    /// Assigns entry (i, j); the value must share the matrix spec.
    void set(int i, int j, RingValue v);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.spec_ == b.spec_ &&
               a.e_ == b.e_;
    }

private:
    RingSpec spec_;
    int m_, n_;
    std::vector<RingValue> e_;  // row-major
};

struct PatternMatrix {
    int m = 0, n = 0;
    std::vector<std::uint8_t> bits;  // row-major, 1 = nonzero

    int at(int i, int j) const { return bits[static_cast<size_t>(i) * n + j]; }

    friend bool operator==(const PatternMatrix&, const PatternMatrix&) = default;
};

/// Exact product in operand order. Throws SpecMismatch, DimensionMismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

/// True iff every entry strictly above the diagonal is zero. Throws NotSquare.
bool is_lower_triangular(const Matrix& a);

/// Inverse of a lower triangular matrix by the row-by-row substitution
/// recurrence b_rj = -a_rr^{-1} * sum_{i<r} a_ri b_ij. Exact and two-sided.
/// Throws NotSquare, NotTriangular, SingularDiagonal.
Matrix forward_substitution_inverse(const Matrix& a);

/// Zero-nonzero footprint.
PatternMatrix pattern(const Matrix& a);

Matrix transpose(const Matrix& a);

/// The (m+n) x (m+n) matrix [[O, A], [A^T, O]]: the weighted adjacency
/// matrix of the bipartite graph of A on vertices R_1..R_m, C_1..C_n.
Matrix symmetric_embed(const Matrix& a);

}  // namespace pathmat
