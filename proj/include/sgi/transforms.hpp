#ifndef SGI_TRANSFORMS_HPP
#define SGI_TRANSFORMS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "sgi/sym_matrix.hpp"

namespace sgi {

/// A congruence with its transform matrices. The defining identity
/// forward^T * source * forward == target is checked exactly on
/// construction (and the reverse identity when present); a failed check is a
/// construction error, never a warning.
struct ArrowWitness {
    SymMat source;
    SymMat target;
    RatMat forward;
    std::optional<RatMat> reverse;

    ArrowWitness(SymMat src, SymMat tgt, RatMat fwd, std::optional<RatMat> rev = std::nullopt);

    bool bidirectional() const { return reverse.has_value(); }

    /// Chains a->b and b->c into a->c (requires ab.target == bc.source).
    static ArrowWitness compose(const ArrowWitness& ab, const ArrowWitness& bc);
};

/// A -> A with the last row/column removed; P = [I; 0].
ArrowWitness vertex_delete_arrow(const SymMat& a);

/// A11 (+) H -> bordered matrix [[A11, A21^T], [A21, a22]]; the explicit P
/// carries the border row and a22/2.
ArrowWitness vertex_embed_arrow(const SymMat& a11, const RatVec& a21, const Rat& a22);

/// For M with m(0,0) = 0, m(0,1) = a != 0 and the rest of row 0 zero:
/// M <-> H (+) M[2.., 2..]. Both transforms are explicit and invertible.
ArrowWitness hyperbolic_reduce(const SymMat& m);

/// For A = [[A, B],[B^T, C]] with the leading block k x k and x in ker(C):
/// bordered [[0, (Bx)^T, 0],[Bx, A, B],[0, B^T, C]] <-> A. Preserves pin.
ArrowWitness adjoin(const SymMat& a, int k, const RatVec& x);

/// One verified outcome of the split-or-border alternative.
struct SplitResult {
    RatMat y;  // k x m solution of A11 Y = A12
    SymMat left;
    SymMat right;
    ArrowWitness witness;  // A <-> left (+) right
};

struct BorderResult {
    RatVec z;  // nonzero image of a kernel vector
    SymMat bordered;
    ArrowWitness witness;  // A <-> bordered
};

using AlternativeResult = std::variant<SplitResult, BorderResult>;

/// For A = [[A11, A12, 0],[A21, A22, A23],[0, A32, A33]] with A11 k x k and
/// A22 m x m: either the split case (i) or the border case (ii), decided by
/// the exact kernel of diag(A11, A33). The first kernel basis vector with
/// nonzero image under [A21 A23] selects the border case.
AlternativeResult alternative_decide(const SymMat& a, int k, int m);

/// A (+) B -> A (+)_k B, Lemma 3's explicit transform.
ArrowWitness subdirect_arrow(const SymMat& a, const SymMat& b, int k);

struct OneSumSplitCase {
    RatVec x;  // k-vector with middle entry split as x^T A11 x
    SymMat left;
    SymMat right;
    ArrowWitness witness;  // A <-> left (+) right
};

struct OneSumHyperbolicCase {
    SymMat reduced;        // A11 (+) A33 (+) H
    ArrowWitness witness;  // A <-> reduced
};

using OneSumResult = std::variant<OneSumSplitCase, OneSumHyperbolicCase>;

/// The m = 1 alternative: split at a scalar middle block, or reduce the
/// bordered matrix hyperbolically to A11 (+) A33 (+) H.
OneSumResult one_sum_decide(const SymMat& a, int k);

/// A member of S(G, Sigma) written as a 1-subdirect sum along a separation.
struct OneSumSplit {
    SymMat b;  // in S(side1), cut vertex last
    SymMat c;  // in S(side2), cut vertex first
    Rat overlap_b;
    Rat overlap_c;               // overlap_b + overlap_c = a_vv
    std::vector<int> order;      // block order of the permuted source
};

/// Splits A in S(G, Sigma) as B (+)_1 C with B in S(side1), C in S(side2);
/// the overlap diagonal entry is divided by the loop-profile case analysis.
OneSumSplit split_1sep(const SymMat& a, const SignedGraph& g, const Separation& sep);

struct ComposedTerm {
    Rat alpha;
    SymMat matrix;  // alpha*C (+)_1 D, in merged block order
};

/// Glues C (a member of side 1 carrying an extra loop at the cut) to D (side
/// 2 with the opposite-parity loop), choosing the positive scalar alpha
/// exactly so the overlap entry's sign is realizable at the cut in the
/// unaugmented graph. prof1/prof2 are the original cut-loop profiles.
/// The scalar is the smallest positive integer satisfying the strict sign
/// inequality, else the exact boundary or midpoint rational.
ComposedTerm compose_term(const SymMat& c, const SymMat& d, EdgeProfile prof1, EdgeProfile prof2);

}  // namespace sgi

#endif
