#ifndef SGI_SYM_MATRIX_HPP
#define SGI_SYM_MATRIX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgi/inertia_set.hpp"
#include "sgi/rat_matrix.hpp"
#include "sgi/rational.hpp"
#include "sgi/signed_graph.hpp"

namespace sgi {

/// Dense symmetric matrix over exact rationals; n = 0 gives the 0x0 matrix.
/// Symmetry is maintained by construction: set() writes both mirror entries,
/// from_rows() and parse_matrix() reject asymmetric data.
class SymMat {
  public:
    SymMat() = default;
    explicit SymMat(int n);
    static SymMat from_rows(const std::vector<RatVec>& rows);
    /// Accepts a square RatMat, rejecting asymmetric input.
    static SymMat from_rect(const RatMat& m);

    int size() const { return n_; }
    const Rat& at(int i, int j) const;
    void set(int i, int j, Rat value);

    RatMat to_rect() const;
    bool operator==(const SymMat& other) const = default;

  private:
    int n_ = 0;
    std::vector<Rat> a_;  // row-major n*n, mirror entries kept equal
};

/// Exact counts of positive and negative eigenvalues, by symmetric
/// congruence elimination: take the largest-magnitude nonzero diagonal pivot
/// (lowest index on ties), record its sign, eliminate; when the remainder is
/// nonzero with an all-zero diagonal, the lexicographically first nonzero
/// off-diagonal entry is removed by a hyperbolic reduction contributing
/// (1,1). pin of the 0x0 matrix is (0,0).
InertiaPair pin(const SymMat& a);

/// P^T A P. P may be rectangular or singular; rows(P) must equal size(A).
SymMat congruence(const SymMat& a, const RatMat& p);

SymMat direct_sum(const SymMat& a, const SymMat& b);

/// k-subdirect sum: glues the trailing k x k block of a onto the leading
/// k x k block of b (overlap entries added, off-corner blocks zero).
/// k = 0 is the direct sum.
SymMat subdirect_sum(const SymMat& a, const SymMat& b, int k);

/// Principal submatrix with row/column j removed (0-based).
SymMat principal_delete(const SymMat& a, int j);

/// Result (i,j) = a(order[i], order[j]); a congruence by the permutation.
SymMat permuted(const SymMat& a, const std::vector<int>& order);

SymMat scaled(const SymMat& a, const Rat& factor);

/// The hyperbolic block [[0,1],[1,0]], inertia (1,1).
SymMat hyperbolic_h();

/// Sign-pattern membership in S(G, Sigma).
bool membership(const SymMat& a, const SignedGraph& g);

enum class SignChoice { Neg, Zero, Pos };

/// Per-pair sign override for Both-profile positions; keys are (u, v) with
/// u <= v, 0-based.
using BranchChoice = std::map<std::pair<int, int>, SignChoice>;

/// Deterministic member of S(G, Sigma): forced-sign entries draw their
/// magnitude from the pool, Both-profile entries follow the branch choice.
/// The pool must offer at least one positive and one negative value.
/// Identical (graph, pool, branch, seed) quadruples yield identical
/// matrices. Throws std::invalid_argument for unsatisfiable branches.
SymMat sample_member(const SignedGraph& g, const std::vector<Rat>& pool,
                     const BranchChoice& branch, std::uint64_t seed);

/// Text format: `m <n>` then n rows of n rationals. Exact round-trip.
SymMat parse_matrix(const std::string& text);
std::string serialize(const SymMat& a);

/// Invertible U and diagonal d with U^T A U = diag(d) (Lagrange
/// diagonalization, exact).
std::pair<RatMat, RatVec> diagonalize_congruence(const SymMat& a);

}  // namespace sgi

#endif
