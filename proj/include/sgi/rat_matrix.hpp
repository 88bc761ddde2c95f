#ifndef SGI_RAT_MATRIX_HPP
#define SGI_RAT_MATRIX_HPP

#include <optional>
#include <vector>

#include "sgi/rational.hpp"

namespace sgi {

using RatVec = std::vector<Rat>;

/// Dense rectangular matrix over exact rationals. Row-major, 0-indexed.
/// Zero rows or zero columns are allowed; a 0xn times nxm product is 0xm.
class RatMat {
  public:
    RatMat() = default;
    RatMat(int rows, int cols);

    static RatMat identity(int n);
    /// Square permutation matrix with entry (order[i], i) = 1, so that
    /// (P^T A P)(i,j) = A(order[i], order[j]): position i of the result holds
    /// whatever sat at order[i].
    static RatMat permutation(const std::vector<int>& order);
    static RatMat column(const RatVec& v);
    static RatMat row(const RatVec& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatMat transposed() const;
    RatMat operator*(const RatMat& other) const;
    bool operator==(const RatMat& other) const;
    bool is_zero() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

/// Basis of the null space {x : Ax = 0}, one vector per pivot-free column,
/// ordered by that column index.
std::vector<RatVec> kernel_basis(const RatMat& a);

/// Exact solution X of A X = B, or nullopt when the system is inconsistent.
/// When A has free columns the free variables are set to zero.
std::optional<RatMat> solve_linear(const RatMat& a, const RatMat& b);

/// Exact inverse, or nullopt when singular.
std::optional<RatMat> inverse(const RatMat& a);

int rank(const RatMat& a);

RatVec mat_vec(const RatMat& a, const RatVec& x);

}  // namespace sgi

#endif
