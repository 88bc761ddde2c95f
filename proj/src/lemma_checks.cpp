#include "sgi/lemma_checks.hpp"

#include <functional>
#include <sstream>

#include "sgi/transforms.hpp"

namespace sgi {

SymMat random_sym_mat(Rng& rng, int n) {
    SymMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, rat(rng.range(-9, 9), rng.range(1, 9)));
    return m;
}

SignedGraph random_signed_graph(Rng& rng, int n, int extra_edges, bool loops) {
    SignedGraph g(n);
    if (n == 0) return g;
    // spanning edges keep most samples connected, extras add multiplicity
    for (int v = 1; v < n; ++v)
        g.add_edge(static_cast<int>(rng.below(v)), v, rng.coin() ? Parity::Odd : Parity::Even);
    for (int e = 0; e < extra_edges; ++e) {
        const int u = static_cast<int>(rng.below(n));
        const int v = static_cast<int>(rng.below(n));
        if (u == v && !loops) continue;
        g.add_edge(u, v, rng.coin() ? Parity::Odd : Parity::Even);
    }
    if (loops && rng.coin()) {
        const int v = static_cast<int>(rng.below(n));
        g.add_edge(v, v, rng.coin() ? Parity::Odd : Parity::Even);
    }
    return g;
}

GluedGraph random_glued_graph(Rng& rng, int side_max) {
    const int n1 = static_cast<int>(rng.below(side_max - 1)) + 2;  // >= 2 per side
    const int n2 = static_cast<int>(rng.below(side_max - 1)) + 2;
    const int n = n1 + n2 - 1;
    const int cut = n1 - 1;  // side 1 occupies 0..n1-1, side 2 shares the cut
    SignedGraph g(n);
    auto wire = [&](int lo, int count) {
        for (int v = lo + 1; v < lo + count; ++v)
            g.add_edge(lo + static_cast<int>(rng.below(v - lo)), v,
                       rng.coin() ? Parity::Odd : Parity::Even);
    };
    // side 2 vertices are cut..n-1; wire each side into one component
    wire(0, n1);
    wire(cut, n2);
    for (int e = 0; e < 2; ++e)
        if (rng.coin()) {
            const int v = static_cast<int>(rng.below(n));
            g.add_edge(v, v, rng.coin() ? Parity::Odd : Parity::Even);
        }

    std::vector<int> side1;
    for (int v = 0; v <= cut; ++v) side1.push_back(v);
    std::vector<bool> to1;
    for (const GraphEdge& e : g.edges()) {
        if (e.u == cut && e.v == cut)
            to1.push_back(rng.coin());
        else
            to1.push_back(e.v <= cut);
    }
    return {g, Separation::make(g, cut, side1, to1)};
}

SymMat random_member(Rng& rng, const SignedGraph& g) {
    SymMat m(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u; v < g.vertex_count(); ++v) {
            const EdgeProfile prof = g.profile(u, v);
            int sign = 0;
            if (prof == EdgeProfile::OddOnly) sign = 1;
            if (prof == EdgeProfile::EvenOnly) sign = -1;
            if (prof == EdgeProfile::Both) sign = static_cast<int>(rng.below(3)) - 1;
            if (sign != 0) m.set(u, v, rat(sign * rng.range(1, 9), rng.range(1, 9)));
        }
    return m;
}

namespace {

using CheckFn = std::function<void(Rng&, int)>;  // (rng, size_max); throws on failure

void expect(bool condition, const char* what) {
    if (!condition) throw std::logic_error(what);
}

void check_vertex_delete(Rng& rng, int size_max) {
    const int n = 1 + static_cast<int>(rng.below(size_max));
    const SymMat a = random_sym_mat(rng, n);
    const ArrowWitness w = vertex_delete_arrow(a);  // identity checked on construction
    expect(w.target == principal_delete(a, n - 1), "vertex_delete target mismatch");
    const InertiaPair inner = pin(w.target), outer = pin(a);
    expect(dominates(outer, inner), "deletion must not increase pin");
    expect(dominates(inner + InertiaPair{1, 1}, outer), "A11 + H must dominate A");
}

void check_vertex_embed(Rng& rng, int size_max) {
    const int n = 1 + static_cast<int>(rng.below(size_max));
    const SymMat a = random_sym_mat(rng, n);
    RatVec a21(n - 1);
    for (int i = 0; i < n - 1; ++i) a21[i] = a.at(n - 1, i);
    const ArrowWitness w = vertex_embed_arrow(principal_delete(a, n - 1), a21, a.at(n - 1, n - 1));
    expect(w.target == a, "embed must rebuild the bordered matrix");
    expect(pin(w.source) == pin(principal_delete(a, n - 1)) + InertiaPair{1, 1},
           "embed source is A11 + H");
}

void check_hyperbolic(Rng& rng, int size_max) {
    const int tail = static_cast<int>(rng.below(std::max(1, size_max - 1)));
    SymMat m(tail + 2);
    Rat a = rat(rng.range(-9, 9), rng.range(1, 9));
    if (a == 0) a = 1;
    m.set(0, 1, a);
    for (int j = 1; j < tail + 2; ++j)
        for (int k = j; k < tail + 2; ++k) m.set(j, k, rat(rng.range(-9, 9), rng.range(1, 9)));
    const ArrowWitness w = hyperbolic_reduce(m);
    expect(w.bidirectional(), "hyperbolic reduction must be invertible");
    expect(pin(m) == pin(w.target), "hyperbolic reduction must preserve pin");
    SymMat tail_block(tail);
    for (int i = 0; i < tail; ++i)
        for (int j = i; j < tail; ++j) tail_block.set(i, j, m.at(i + 2, j + 2));
    expect(pin(m) == pin(tail_block) + InertiaPair{1, 1}, "pin(M) = (1,1) + pin(B22)");
}

void check_adjoin(Rng& rng, int size_max) {
    const int n = 1 + static_cast<int>(rng.below(size_max));
    const int k = static_cast<int>(rng.below(n + 1));
    SymMat a = random_sym_mat(rng, n);
    if (rng.coin() && k < n) {
        // rank-deficient trailing block so the kernel is often nontrivial
        const int d = n - k;
        RatMat f(d, std::max(1, d - 1));
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < f.cols(); ++j) f.at(i, j) = rat(rng.range(-3, 3));
        const RatMat c = f * f.transposed();
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) a.set(k + i, k + j, c.at(i, j));
    }
    RatMat cblock(n - k, n - k);
    for (int i = 0; i < n - k; ++i)
        for (int j = 0; j < n - k; ++j) cblock.at(i, j) = a.at(k + i, k + j);
    const auto kb = kernel_basis(cblock);
    RatVec x(n - k, Rat(0));
    for (const RatVec& b : kb) {
        const Rat w = rat(rng.range(-3, 3));
        for (int i = 0; i < n - k; ++i) x[i] += w * b[i];
    }
    const ArrowWitness w = adjoin(a, k, x);
    expect(w.bidirectional(), "adjoin must go both ways");
    expect(pin(w.source) == pin(w.target), "adjoin must preserve pin");
    expect(w.target.size() == n + 1, "adjoin adds one row");
}

void check_subdirect(Rng& rng, int size_max) {
    const int m = 1 + static_cast<int>(rng.below(size_max));
    const int n = 1 + static_cast<int>(rng.below(size_max));
    const int k = static_cast<int>(rng.below(std::min(m, n) + 1));
    const SymMat a = random_sym_mat(rng, m);
    const SymMat b = random_sym_mat(rng, n);
    const ArrowWitness w = subdirect_arrow(a, b, k);
    expect(w.target == subdirect_sum(a, b, k), "subdirect arrow target mismatch");
    expect(dominates(pin(a) + pin(b), pin(w.target)), "subdirect sum must be dominated");
}

SymMat random_cornered(Rng& rng, int k, int m, int r) {
    SymMat a = random_sym_mat(rng, k + m + r);
    for (int i = 0; i < k; ++i)
        for (int j = k + m; j < k + m + r; ++j) a.set(i, j, Rat(0));
    if (rng.coin()) {
        // derank A11 so the border case fires too
        for (int j = 0; j < k; ++j) a.set(0, j, Rat(0));
        if (k > 0 && m > 0 && rng.coin()) a.set(0, k, Rat(1));
    }
    return a;
}

void check_alternative(Rng& rng, int size_max) {
    const int half = std::max(2, size_max / 2);
    const int k = 1 + static_cast<int>(rng.below(half));
    const int m = 1 + static_cast<int>(rng.below(half));
    const int r = static_cast<int>(rng.below(half));
    const SymMat a = random_cornered(rng, k, m, r);
    const AlternativeResult res = alternative_decide(a, k, m);
    if (const auto* split = std::get_if<SplitResult>(&res)) {
        expect(split->witness.bidirectional(), "split case must go both ways");
        expect(pin(a) == pin(split->left) + pin(split->right), "split must preserve pin");
        RatMat a11(k, k), a12(k, m);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) a11.at(i, j) = a.at(i, j);
            for (int j = 0; j < m; ++j) a12.at(i, j) = a.at(i, k + j);
        }
        expect(a11 * split->y == a12, "split solution must satisfy A11 Y = A12");
    } else {
        const auto& border = std::get<BorderResult>(res);
        bool nonzero = false;
        for (const Rat& t : border.z) nonzero = nonzero || t != 0;
        expect(nonzero, "border vector must be nonzero");
        expect(border.witness.bidirectional(), "border case must go both ways");
        expect(pin(a) == pin(border.bordered), "bordering must preserve pin");
    }
}

void check_one_sum(Rng& rng, int size_max) {
    const int half = std::max(2, size_max / 2);
    const int k = 1 + static_cast<int>(rng.below(half));
    const int r = static_cast<int>(rng.below(half));
    const SymMat a = random_cornered(rng, k, 1, r);
    const OneSumResult res = one_sum_decide(a, k);
    if (const auto* split = std::get_if<OneSumSplitCase>(&res)) {
        expect(pin(a) == pin(split->left) + pin(split->right), "one-sum split must preserve pin");
        expect(split->left.size() == k + 1 && split->right.size() == r + 1,
               "one-sum split block sizes");
    } else {
        const auto& hyp = std::get<OneSumHyperbolicCase>(&res);
        expect(hyp.witness.bidirectional(), "one-sum reduction must go both ways");
        expect(pin(a) == pin(hyp.reduced), "one-sum reduction must preserve pin");
        expect(hyp.reduced.size() == a.size() + 1, "reduced matrix has size n + 1");
    }
}

void check_split_1sep(Rng& rng, int size_max) {
    const GluedGraph glued = random_glued_graph(rng, std::max(2, size_max / 2 + 1));
    const SymMat a = random_member(rng, glued.graph);
    const OneSumSplit split = split_1sep(a, glued.graph, glued.sep);
    expect(subdirect_sum(split.b, split.c, 1) == permuted(a, split.order),
           "split must glue back exactly");
    expect(membership(split.b, glued.sep.side1()), "split side 1 membership");
    expect(membership(split.c, glued.sep.side2()), "split side 2 membership");
    expect(split.overlap_b + split.overlap_c ==
               a.at(glued.sep.cut(), glued.sep.cut()),
           "overlap entries must sum to a_vv");
}

void check_compose_term(Rng& rng, int size_max) {
    const GluedGraph glued = random_glued_graph(rng, std::max(2, size_max / 2 + 1));
    const Separation& sep = glued.sep;
    const bool even_first = rng.coin();
    const Parity p1 = even_first ? Parity::Even : Parity::Odd;
    const Parity p2 = even_first ? Parity::Odd : Parity::Even;
    const SignedGraph g1aug = sep.side1().with_loop(sep.side1_cut_index(), p1);
    const SignedGraph g2aug = sep.side2().with_loop(sep.side2_cut_index(), p2);
    const SymMat c = random_member(rng, g1aug);
    const SymMat d = random_member(rng, g2aug);
    const EdgeProfile prof1 = sep.side1().profile(sep.side1_cut_index(), sep.side1_cut_index());
    const EdgeProfile prof2 = sep.side2().profile(sep.side2_cut_index(), sep.side2_cut_index());
    const ComposedTerm term = compose_term(c, d, prof1, prof2);
    expect(term.alpha > 0, "compose scale must be positive");
    const SymMat back = permuted(term.matrix, [&] {
        std::vector<int> inv(glued.graph.vertex_count());
        const std::vector<int> order = sep.merged_order();
        for (size_t i = 0; i < order.size(); ++i) inv[order[i]] = static_cast<int>(i);
        return inv;
    }());
    expect(membership(back, glued.graph), "composed matrix must lie in S(G, Sigma)");
    expect(dominates(pin(c) + pin(d), pin(term.matrix)),
           "composed pin must be dominated by the parts");
}

}  // namespace

LemmaCheckReport run_lemma_checks(const LemmaCheckOptions& opts) {
    const std::pair<const char*, CheckFn> checks[] = {
        {"vertex_delete", check_vertex_delete},
        {"vertex_embed", check_vertex_embed},
        {"hyperbolic_reduce", check_hyperbolic},
        {"adjoin", check_adjoin},
        {"subdirect_domination", check_subdirect},
        {"alternative_decide", check_alternative},
        {"one_sum_decide", check_one_sum},
        {"split_1sep", check_split_1sep},
        {"compose_term", check_compose_term},
    };
    LemmaCheckReport report;
    std::uint64_t salt = 0;
    for (const auto& [name, fn] : checks) {
        LemmaCheckReport::Entry entry;
        entry.name = name;
        entry.trials = opts.trials;
        for (int t = 0; t < opts.trials; ++t) {
            Rng rng(mix_seed(opts.seed, salt * 1000003ULL + static_cast<std::uint64_t>(t)));
            try {
                fn(rng, opts.size_max);
            } catch (const std::exception& e) {
                ++entry.failures;
                if (entry.first_failure.empty()) {
                    std::ostringstream msg;
                    msg << "trial " << t << ": " << e.what();
                    entry.first_failure = msg.str();
                }
            }
        }
        report.entries.push_back(std::move(entry));
        ++salt;
    }
    return report;
}

}  // namespace sgi
