#ifndef MCGFORGE_MATRIX_HPP
#define MCGFORGE_MATRIX_HPP

#include "mcgforge/rational.hpp"

#include <vector>
#include <string>
#include <cstddef>

namespace mcgforge {

// Dense matrix over exact rationals, row-major. All arithmetic exact.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_ints(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const Rational& s) const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const;
    ExactMatrix pow(unsigned k) const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    // Horizontal concatenation [this | o]; row counts must agree.
    ExactMatrix hcat(const ExactMatrix& o) const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Exact rank over Q via fraction-free (Bareiss) elimination on a
// denominator-cleared integer copy. No floating point anywhere.
int rank(const ExactMatrix& a);

// Determinant of a square matrix, Bareiss.
Rational det(const ExactMatrix& a);

// dim of the span of all column spaces = rank of the horizontal concatenation.
// Empty list -> 0. Throws on shape mismatch.
int range_sum_dim(const std::vector<ExactMatrix>& mats);

// dim(U cap V) = dim U + dim V - dim(U + V), with U, V spanned by the columns
// of the given matrices (same ambient row dimension).
int subspace_intersection_dim(const ExactMatrix& u_span, const ExactMatrix& v_span);

// Non-decreasing dims of ker (A - lambda)^k, k = 0, 1, ..., until stabilization.
// dims[0] = 0; if lambda is not an eigenvalue the flag is just [0].
struct FlagDims {
    std::vector<int> dims;
    bool operator==(const FlagDims& o) const { return dims == o.dims; }
};
FlagDims jordan_flag(const ExactMatrix& a, const Rational& lambda);

// True iff A*A = 0 exactly. A must be square.
bool is_square_zero(const ExactMatrix& a);

// Solve A x = b exactly (A square invertible). Throws if singular.
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b);

// Inverse of a square invertible matrix. Throws if singular.
ExactMatrix inverse(const ExactMatrix& a);

} // namespace mcgforge

#endif
