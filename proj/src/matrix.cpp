#include "mcgforge/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace mcgforge {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return ExactMatrix(0, 0);
    ExactMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("from_ints: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sub: shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::operator*(const Rational& s) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * s;
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::pow(unsigned k) const {
    if (!is_square()) throw std::invalid_argument("pow: matrix not square");
    ExactMatrix acc = identity(rows_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
    ExactMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

namespace {

// Clear denominators row by row, yielding an integer matrix with the same
// row space (hence same rank and, up to a known factor, the same pivots).
std::vector<std::vector<Int>> to_int_rows(const ExactMatrix& a) {
    std::vector<std::vector<Int>> m(a.rows(), std::vector<Int>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Int d = a.at(i, j).den();
            l = lcm(l, d);
        }
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = a.at(i, j).num() * (l / a.at(i, j).den());
    }
    return m;
}

// Bareiss fraction-free elimination; returns rank, and optionally the product
// structure for determinants (square full-rank case).
int bareiss_rank(std::vector<std::vector<Int>>& m) {
    if (m.empty()) return 0;
    const std::size_t nr = m.size(), nc = m[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = r;
        while (piv < nr && m[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = t / prev;  // exact by Sylvester's identity
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int rank(const ExactMatrix& a) {
    auto m = to_int_rows(a);
    return bareiss_rank(m);
}

Rational det(const ExactMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);
    // Track the denominator scaling introduced by clearing rows.
    Rational scale(1);
    auto m = to_int_rows(a);
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, a.at(i, j).den());
        scale = scale * Rational(Int(1), l);
    }
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) { std::swap(m[piv], m[c]); sign = -sign; }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return Rational(Int(sign) * m[n - 1][n - 1]) * scale;
}

int range_sum_dim(const std::vector<ExactMatrix>& mats) {
    if (mats.empty()) return 0;
    ExactMatrix cat = mats[0];
    for (std::size_t i = 1; i < mats.size(); ++i) {
        if (mats[i].rows() != cat.rows())
            throw std::invalid_argument("range_sum_dim: ambient dimension mismatch");
        cat = cat.hcat(mats[i]);
    }
    return rank(cat);
}

int subspace_intersection_dim(const ExactMatrix& u_span, const ExactMatrix& v_span) {
    if (u_span.rows() != v_span.rows())
        throw std::invalid_argument("subspace_intersection_dim: ambient dimension mismatch");
    int du = rank(u_span);
    int dv = rank(v_span);
    int dsum = rank(u_span.hcat(v_span));
    return du + dv - dsum;
}

FlagDims jordan_flag(const ExactMatrix& a, const Rational& lambda) {
    if (!a.is_square()) throw std::invalid_argument("jordan_flag: matrix not square");
    const std::size_t n = a.rows();
    ExactMatrix shifted = a - ExactMatrix::identity(n) * lambda;
    FlagDims flag;
    flag.dims.push_back(0);
    ExactMatrix p = ExactMatrix::identity(n);
    int prev = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        p = p * shifted;
        int dim_ker = static_cast<int>(n) - rank(p);
        if (dim_ker == prev) break;
        flag.dims.push_back(dim_ker);
        prev = dim_ker;
    }
    return flag;
}

bool is_square_zero(const ExactMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("is_square_zero: matrix not square");
    return (a * a).is_zero();
}

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows(), m = b.cols();
    // Gauss-Jordan over Q; for the small systems we solve exactness matters
    // more than the Bareiss growth bound.
    ExactMatrix w = a.hcat(b);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w.at(piv, c).is_zero()) ++piv;
        if (piv == n) throw std::runtime_error("solve: singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n + m; ++j) std::swap(w.at(piv, j), w.at(c, j));
        Rational inv = Rational(1) / w.at(c, c);
        for (std::size_t j = c; j < n + m; ++j) w.at(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w.at(i, c).is_zero()) continue;
            Rational f = w.at(i, c);
            for (std::size_t j = c; j < n + m; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    ExactMatrix x(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) x.at(i, j) = w.at(i, n + j);
    return x;
}

ExactMatrix inverse(const ExactMatrix& a) {
    return solve(a, ExactMatrix::identity(a.rows()));
}

} // namespace mcgforge
