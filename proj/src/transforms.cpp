#include "sgi/transforms.hpp"

#include <numeric>
#include <stdexcept>

namespace sgi {

namespace {

RatMat block_of(const SymMat& a, int r0, int r1, int c0, int c1) {
    RatMat m(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) m.at(i - r0, j - c0) = a.at(i, j);
    return m;
}

SymMat submatrix(const SymMat& a, int lo, int hi) {
    SymMat m(hi - lo);
    for (int i = lo; i < hi; ++i)
        for (int j = i; j < hi; ++j) m.set(i - lo, j - lo, a.at(i, j));
    return m;
}

std::vector<int> iota_vec(int from, int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), from);
    return v;
}

ArrowWitness permutation_witness(const SymMat& a, const std::vector<int>& order) {
    const RatMat p = RatMat::permutation(order);
    return ArrowWitness(a, permuted(a, order), p, p.transposed());
}

}  // namespace

ArrowWitness::ArrowWitness(SymMat src, SymMat tgt, RatMat fwd, std::optional<RatMat> rev)
    : source(std::move(src)), target(std::move(tgt)), forward(std::move(fwd)), reverse(std::move(rev)) {
    if (forward.rows() != source.size() || forward.cols() != target.size())
        throw std::logic_error("witness transform has wrong shape");
    if (congruence(source, forward) != target)
        throw std::logic_error("witness congruence identity failed");
    if (reverse) {
        if (reverse->rows() != target.size() || reverse->cols() != source.size())
            throw std::logic_error("witness reverse transform has wrong shape");
        if (congruence(target, *reverse) != source)
            throw std::logic_error("witness reverse congruence identity failed");
    }
}

ArrowWitness ArrowWitness::compose(const ArrowWitness& ab, const ArrowWitness& bc) {
    if (!(ab.target == bc.source)) throw std::logic_error("witness composition mismatch");
    std::optional<RatMat> rev;
    if (ab.reverse && bc.reverse) rev = (*bc.reverse) * (*ab.reverse);
    return ArrowWitness(ab.source, bc.target, ab.forward * bc.forward, std::move(rev));
}

ArrowWitness vertex_delete_arrow(const SymMat& a) {
    const int n = a.size();
    if (n == 0) throw std::invalid_argument("vertex_delete_arrow on empty matrix");
    RatMat p(n, n - 1);
    for (int i = 0; i < n - 1; ++i) p.at(i, i) = 1;
    return ArrowWitness(a, principal_delete(a, n - 1), std::move(p));
}

ArrowWitness vertex_embed_arrow(const SymMat& a11, const RatVec& a21, const Rat& a22) {
    const int k = a11.size();
    if (static_cast<int>(a21.size()) != k)
        throw std::invalid_argument("vertex_embed_arrow border row has wrong length");
    SymMat target(k + 1);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) target.set(i, j, a11.at(i, j));
        target.set(i, k, a21[i]);
    }
    target.set(k, k, a22);

    // P = [[I, 0], [0, 1], [A21, a22/2]], one column per target vertex
    RatMat p(k + 2, k + 1);
    for (int i = 0; i < k; ++i) p.at(i, i) = 1;
    p.at(k, k) = 1;
    for (int j = 0; j < k; ++j) p.at(k + 1, j) = a21[j];
    p.at(k + 1, k) = a22 / 2;
    return ArrowWitness(direct_sum(a11, hyperbolic_h()), std::move(target), std::move(p));
}

ArrowWitness hyperbolic_reduce(const SymMat& m) {
    const int n = m.size();
    if (n < 2) throw std::invalid_argument("hyperbolic_reduce needs size >= 2");
    if (m.at(0, 0) != 0) throw std::invalid_argument("hyperbolic_reduce: leading entry not zero");
    const Rat a = m.at(0, 1);
    if (a == 0) throw std::invalid_argument("hyperbolic_reduce: zero at position (0,1)");
    for (int j = 2; j < n; ++j)
        if (m.at(0, j) != 0)
            throw std::invalid_argument("hyperbolic_reduce: first row not in lemma layout");

    RatMat p(n, n);
    p.at(0, 0) = Rat(1) / a;
    p.at(0, 1) = -m.at(1, 1) / (2 * a);
    for (int j = 2; j < n; ++j) p.at(0, j) = -m.at(1, j) / a;
    p.at(1, 1) = 1;
    for (int i = 2; i < n; ++i) p.at(i, i) = 1;

    auto p_inv = inverse(p);
    if (!p_inv) throw std::logic_error("hyperbolic transform must be invertible");
    return ArrowWitness(m, direct_sum(hyperbolic_h(), submatrix(m, 2, n)), std::move(p),
                        std::move(*p_inv));
}

ArrowWitness adjoin(const SymMat& a, int k, const RatVec& x) {
    const int n = a.size();
    if (k < 0 || k > n) throw std::invalid_argument("adjoin block size out of range");
    if (static_cast<int>(x.size()) != n - k)
        throw std::invalid_argument("adjoin kernel vector has wrong length");
    const RatMat c = block_of(a, k, n, k, n);
    for (const Rat& t : mat_vec(c, x))
        if (t != 0) throw std::invalid_argument("adjoin: x is not in ker(C)");

    const RatMat b = block_of(a, 0, k, k, n);
    const RatVec bx = mat_vec(b, x);

    SymMat bordered(n + 1);
    for (int i = 0; i < k; ++i) bordered.set(0, 1 + i, bx[i]);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) bordered.set(1 + i, 1 + j, a.at(i, j));

    RatMat fwd(n, n + 1);
    for (int i = 0; i < k; ++i) fwd.at(i, 1 + i) = 1;
    for (int i = 0; i < n - k; ++i) {
        fwd.at(k + i, 0) = x[i];
        fwd.at(k + i, 1 + k + i) = 1;
    }
    RatMat rev(n + 1, n);
    for (int i = 0; i < n; ++i) rev.at(1 + i, i) = 1;
    return ArrowWitness(a, std::move(bordered), std::move(fwd), std::move(rev));
}

ArrowWitness subdirect_arrow(const SymMat& a, const SymMat& b, int k) {
    if (k < 0 || k > a.size() || k > b.size())
        throw std::invalid_argument("subdirect overlap larger than an operand");
    const int m = a.size(), n = b.size();
    RatMat p(m + n, m + n - k);
    for (int i = 0; i < m; ++i) p.at(i, i) = 1;
    for (int i = 0; i < k; ++i) p.at(m + i, m - k + i) = 1;
    for (int i = 0; i < n - k; ++i) p.at(m + k + i, m + i) = 1;
    return ArrowWitness(direct_sum(a, b), subdirect_sum(a, b, k), std::move(p));
}

AlternativeResult alternative_decide(const SymMat& a, int k, int m) {
    const int n = a.size();
    if (k < 0 || m < 0 || k + m > n) throw std::invalid_argument("malformed partition");
    const int r = n - k - m;
    for (int i = 0; i < k; ++i)
        for (int j = k + m; j < n; ++j)
            if (a.at(i, j) != 0)
                throw std::invalid_argument("malformed partition: corner block not zero");

    // D = diag(A11, A33) lives on the outer indices; J = [A21 A23].
    std::vector<int> outer = iota_vec(0, k);
    for (int i = k + m; i < n; ++i) outer.push_back(i);
    RatMat d(k + r, k + r);
    for (int i = 0; i < k + r; ++i)
        for (int j = 0; j < k + r; ++j) d.at(i, j) = a.at(outer[i], outer[j]);
    RatMat jmat(m, k + r);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k + r; ++j) jmat.at(i, j) = a.at(k + i, outer[j]);

    for (const RatVec& u : kernel_basis(d)) {
        RatVec z = mat_vec(jmat, u);
        bool nonzero = false;
        for (const Rat& t : z)
            if (t != 0) nonzero = true;
        if (!nonzero) continue;

        // border case: adjoin in the [mid, outer] ordering, then permute the
        // bordered matrix back to display order [border, A11, A22, A33]
        std::vector<int> to_adjoin = iota_vec(k, m);
        for (int i : outer) to_adjoin.push_back(i);
        const ArrowWitness perm_in = permutation_witness(a, to_adjoin);
        const ArrowWitness adj = adjoin(perm_in.target, m, u);

        std::vector<int> display(1, 0);
        for (int i = 0; i < k; ++i) display.push_back(1 + m + i);
        for (int i = 0; i < m; ++i) display.push_back(1 + i);
        for (int i = 0; i < r; ++i) display.push_back(1 + m + k + i);
        const ArrowWitness perm_out = permutation_witness(adj.target, display);

        ArrowWitness witness =
            ArrowWitness::compose(ArrowWitness::compose(perm_in, adj), perm_out);
        return BorderResult{std::move(z), witness.target, std::move(witness)};
    }

    // split case: the kernel is annihilated, so A11 Y = A12 is consistent
    const RatMat a11 = block_of(a, 0, k, 0, k);
    const RatMat a12 = block_of(a, 0, k, k, k + m);
    auto y = solve_linear(a11, a12);
    if (!y) throw std::logic_error("split case requires a consistent solve");
    const RatMat yay = y->transposed() * a11 * (*y);

    SymMat left(k + m);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) left.set(i, j, a.at(i, j));
        for (int j = 0; j < m; ++j) left.set(i, k + j, a.at(i, k + j));
    }
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) left.set(k + i, k + j, yay.at(i, j));

    SymMat right(m + r);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) right.set(i, j, a.at(k + i, k + j) - yay.at(i, j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j) right.set(i, m + j, a.at(k + i, k + m + j));
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) right.set(m + i, m + j, a.at(k + m + i, k + m + j));

    // forward per the lemma display, reverse via the subdirect gluing
    RatMat fwd(n, n + m);
    for (int i = 0; i < k; ++i) fwd.at(i, i) = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) {
            fwd.at(i, k + j) = y->at(i, j);
            fwd.at(i, k + m + j) = -y->at(i, j);
        }
    for (int i = 0; i < m; ++i) fwd.at(k + i, k + m + i) = 1;
    for (int i = 0; i < r; ++i) fwd.at(k + m + i, k + 2 * m + i) = 1;

    RatMat rev(n + m, n);
    for (int i = 0; i < k + m; ++i) rev.at(i, i) = 1;
    for (int i = 0; i < m; ++i) rev.at(k + m + i, k + i) = 1;
    for (int i = 0; i < r; ++i) rev.at(k + 2 * m + i, k + m + i) = 1;

    ArrowWitness witness(a, direct_sum(left, right), std::move(fwd), std::move(rev));
    return SplitResult{*y, std::move(left), std::move(right), std::move(witness)};
}

OneSumResult one_sum_decide(const SymMat& a, int k) {
    const int n = a.size();
    if (n < 1 || k < 0 || k > n - 1)
        throw std::invalid_argument("one_sum_decide needs a scalar middle block");
    const int r = n - k - 1;

    AlternativeResult alt = alternative_decide(a, k, 1);
    if (auto* split = std::get_if<SplitResult>(&alt)) {
        RatVec x(k);
        for (int i = 0; i < k; ++i) x[i] = split->y.at(i, 0);
        return OneSumSplitCase{std::move(x), std::move(split->left), std::move(split->right),
                               std::move(split->witness)};
    }
    auto& border = std::get<BorderResult>(alt);

    // [border, A11, mid, A33] -> [border, mid, A11, A33] exposes the
    // hyperbolic pair in the leading corner
    std::vector<int> order(1, 0);
    order.push_back(1 + k);
    for (int i = 0; i < k; ++i) order.push_back(1 + i);
    for (int i = 0; i < r; ++i) order.push_back(2 + k + i);
    const ArrowWitness to_h = permutation_witness(border.bordered, order);
    const ArrowWitness reduce = hyperbolic_reduce(to_h.target);

    // H (+) A11 (+) A33  ->  A11 (+) A33 (+) H
    std::vector<int> rotate;
    for (int i = 0; i < k + r; ++i) rotate.push_back(2 + i);
    rotate.push_back(0);
    rotate.push_back(1);
    const ArrowWitness to_tail = permutation_witness(reduce.target, rotate);

    ArrowWitness witness = ArrowWitness::compose(
        ArrowWitness::compose(ArrowWitness::compose(border.witness, to_h), reduce), to_tail);
    return OneSumHyperbolicCase{witness.target, std::move(witness)};
}

namespace {

// The overlap entry split of Lemma "split1sep": b + c = a, with b legal for
// prof1 and c legal for prof2. Unreachable combinations mean the matrix was
// not in S(G, Sigma); they throw defensively.
std::pair<Rat, Rat> split_overlap(const Rat& a, EdgeProfile prof1, EdgeProfile prof2) {
    auto allows_zero = [](EdgeProfile p) {
        return p == EdgeProfile::None || p == EdgeProfile::Both;
    };
    const int s = rat_sign(a);
    if (s > 0) {
        if (profile_has_odd(prof1) && profile_has_odd(prof2)) return {a / 2, a / 2};
        if (profile_has_odd(prof1)) {
            const Rat c = allows_zero(prof2) ? Rat(0) : Rat(-1);
            if (!allows_zero(prof2) && !profile_has_even(prof2))
                throw std::invalid_argument("split_1sep: no legal overlap split");
            return {a - c, c};
        }
        if (profile_has_odd(prof2)) {
            const Rat b = allows_zero(prof1) ? Rat(0) : Rat(-1);
            if (!allows_zero(prof1) && !profile_has_even(prof1))
                throw std::invalid_argument("split_1sep: no legal overlap split");
            return {b, a - b};
        }
        throw std::invalid_argument("split_1sep: positive overlap without odd loop");
    }
    if (s < 0) {
        if (profile_has_even(prof1) && profile_has_even(prof2)) return {a / 2, a / 2};
        if (profile_has_even(prof1)) {
            const Rat c = allows_zero(prof2) ? Rat(0) : Rat(1);
            if (!allows_zero(prof2) && !profile_has_odd(prof2))
                throw std::invalid_argument("split_1sep: no legal overlap split");
            return {a - c, c};
        }
        if (profile_has_even(prof2)) {
            const Rat b = allows_zero(prof1) ? Rat(0) : Rat(1);
            if (!allows_zero(prof1) && !profile_has_odd(prof1))
                throw std::invalid_argument("split_1sep: no legal overlap split");
            return {b, a - b};
        }
        throw std::invalid_argument("split_1sep: negative overlap without even loop");
    }
    // a == 0
    if (allows_zero(prof1) && allows_zero(prof2)) return {Rat(0), Rat(0)};
    if (prof1 == EdgeProfile::OddOnly || prof2 == EdgeProfile::EvenOnly) {
        if (!profile_has_odd(prof1) || !profile_has_even(prof2))
            throw std::invalid_argument("split_1sep: zero overlap not splittable");
        return {Rat(1), Rat(-1)};
    }
    if (prof1 == EdgeProfile::EvenOnly || prof2 == EdgeProfile::OddOnly) {
        if (!profile_has_even(prof1) || !profile_has_odd(prof2))
            throw std::invalid_argument("split_1sep: zero overlap not splittable");
        return {Rat(-1), Rat(1)};
    }
    throw std::invalid_argument("split_1sep: zero overlap not splittable");
}

}  // namespace

OneSumSplit split_1sep(const SymMat& a, const SignedGraph& g, const Separation& sep) {
    if (!membership(a, g)) throw std::invalid_argument("split_1sep: matrix not in S(G, Sigma)");
    const std::vector<int> order = sep.merged_order();
    const SymMat ap = permuted(a, order);

    const int n1 = sep.side1().vertex_count();
    const int cut_pos = n1 - 1;
    const EdgeProfile prof1 = sep.side1().profile(sep.side1_cut_index(), sep.side1_cut_index());
    const EdgeProfile prof2 = sep.side2().profile(0, 0);
    const auto [b_vv, c_vv] = split_overlap(ap.at(cut_pos, cut_pos), prof1, prof2);

    SymMat b = submatrix(ap, 0, n1);
    b.set(cut_pos, cut_pos, b_vv);
    SymMat c = submatrix(ap, cut_pos, ap.size());
    c.set(0, 0, c_vv);

    if (!membership(b, sep.side1()) || !membership(c, sep.side2()))
        throw std::logic_error("split_1sep: side membership failed");
    if (!(subdirect_sum(b, c, 1) == ap)) throw std::logic_error("split_1sep: gluing failed");
    return OneSumSplit{std::move(b), std::move(c), b_vv, c_vv, order};
}

namespace {

Rat rat_floor(const Rat& t) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return Rat(q);
}

// Smallest positive integer alpha with sign(alpha*cv + dv) == want, falling
// back to the exact midpoint when only a bounded interval works.
Rat solve_scale(const Rat& cv, const Rat& dv, int want) {
    if (want == 0) return -dv / cv;
    // want > 0: alpha*cv + dv > 0; want < 0: alpha*cv + dv < 0
    const bool lower_bound = (want > 0) == (cv > 0);
    const Rat t = -dv / cv;  // threshold, positive since signs are mixed
    if (lower_bound) return rat_floor(t) + 1;
    if (t > 1) return Rat(1);
    return t / 2;
}

}  // namespace

ComposedTerm compose_term(const SymMat& c, const SymMat& d, EdgeProfile prof1, EdgeProfile prof2) {
    if (c.size() < 1 || d.size() < 1)
        throw std::invalid_argument("compose_term needs nonempty operands");
    const Rat cv = c.at(c.size() - 1, c.size() - 1);
    const Rat dv = d.at(0, 0);

    EdgeProfile combined;
    {
        const bool odd = profile_has_odd(prof1) || profile_has_odd(prof2);
        const bool even = profile_has_even(prof1) || profile_has_even(prof2);
        combined = odd && even  ? EdgeProfile::Both
                   : odd        ? EdgeProfile::OddOnly
                   : even       ? EdgeProfile::EvenOnly
                                : EdgeProfile::None;
    }

    Rat alpha(1);
    if (rat_sign(cv) * rat_sign(dv) < 0) {
        if (profile_allows_sign(combined, 0))
            alpha = solve_scale(cv, dv, 0);
        else if (profile_has_odd(combined))
            alpha = solve_scale(cv, dv, 1);
        else
            alpha = solve_scale(cv, dv, -1);
    }
    if (alpha <= 0) throw std::logic_error("compose_term: scale must be positive");
    const Rat overlap = alpha * cv + dv;
    if (!profile_allows_sign(combined, rat_sign(overlap)))
        throw std::invalid_argument("compose_term: no realizable sign at the cut vertex");
    return ComposedTerm{alpha, subdirect_sum(scaled(c, alpha), d, 1)};
}

}  // namespace sgi
