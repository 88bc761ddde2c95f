#include "sgi/rat_matrix.hpp"

#include <stdexcept>

namespace sgi {

RatMat::RatMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::permutation(const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    RatMat m(n, n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || seen[order[i]])
            throw std::invalid_argument("bad permutation");
        seen[order[i]] = true;
        m.at(order[i], i) = 1;
    }
    return m;
}

RatMat RatMat::column(const RatVec& v) {
    RatMat m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

RatMat RatMat::row(const RatVec& v) {
    RatMat m(1, static_cast<int>(v.size()));
    for (size_t j = 0; j < v.size(); ++j) m.at(0, static_cast<int>(j)) = v[j];
    return m;
}

RatMat RatMat::transposed() const {
    RatMat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

RatMat RatMat::operator*(const RatMat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    RatMat m(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                if (other.at(k, j) == 0) continue;
                m.at(i, j) += aik * other.at(k, j);
            }
        }
    return m;
}

bool RatMat::operator==(const RatMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

bool RatMat::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

namespace {

// Row echelon form by exact Gaussian elimination; returns pivot column of
// each pivot row. Operates on (a | b) jointly when b is non-null.
std::vector<int> echelon(RatMat& a, RatMat* b) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
            if (b)
                for (int j = 0; j < b->cols(); ++j) std::swap(b->at(piv, j), b->at(row, j));
        }
        const Rat inv = Rat(1) / a.at(row, col);
        for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        if (b)
            for (int j = 0; j < b->cols(); ++j) b->at(row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            const Rat f = a.at(i, col);
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
            if (b)
                for (int j = 0; j < b->cols(); ++j) b->at(i, j) -= f * b->at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

std::vector<RatVec> kernel_basis(const RatMat& a) {
    RatMat m = a;
    const std::vector<int> pivots = echelon(m, nullptr);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(a.cols(), Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatMat> solve_linear(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve dimension mismatch");
    RatMat m = a;
    RatMat rhs = b;
    const std::vector<int> pivots = echelon(m, &rhs);
    // consistency: zero rows of m must have zero rhs
    for (int i = static_cast<int>(pivots.size()); i < m.rows(); ++i)
        for (int j = 0; j < rhs.cols(); ++j)
            if (rhs.at(i, j) != 0) return std::nullopt;
    RatMat x(a.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < rhs.cols(); ++j) x.at(pivots[r], j) = rhs.at(static_cast<int>(r), j);
    return x;
}

std::optional<RatMat> inverse(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    RatMat m = a;
    RatMat rhs = RatMat::identity(a.rows());
    const std::vector<int> pivots = echelon(m, &rhs);
    if (static_cast<int>(pivots.size()) != a.rows()) return std::nullopt;
    return rhs;
}

int rank(const RatMat& a) {
    RatMat m = a;
    return static_cast<int>(echelon(m, nullptr).size());
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
    if (a.cols() != static_cast<int>(x.size()))
        throw std::invalid_argument("mat_vec dimension mismatch");
    RatVec y(a.rows(), Rat(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && x[j] != 0) y[i] += a.at(i, j) * x[j];
    return y;
}

}  // namespace sgi
