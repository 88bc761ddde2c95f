#include "sgi/oracle.hpp"

#include <algorithm>

#include "sgi/rng.hpp"

namespace sgi {

const std::vector<Rat>& oracle_magnitudes() {
    static const std::vector<Rat> mags = {rat(1), rat(2), rat(1, 2), rat(3)};
    return mags;
}

namespace {

struct Position {
    int u, v;
    EdgeProfile profile;
};

struct BranchOutcome {
    long long samples = 0;
    std::vector<std::pair<InertiaPair, SymMat>> found;  // discovery order, one per pair
};

long long pow3(size_t exponent) {
    long long value = 1;
    for (size_t i = 0; i < exponent; ++i) {
        if (value > (1LL << 60)) return 1LL << 62;  // saturate, only used for reporting
        value *= 3;
    }
    return value;
}

// Per-branch collector: dedupes pairs locally, keeps the first witness.
struct Collector {
    BranchOutcome out;
    PairSet seen;

    void take(const SymMat& m) {
        ++out.samples;
        const InertiaPair ip = pin(m);
        if (!seen.contains(ip)) {
            seen.insert(ip);
            out.found.emplace_back(ip, m);
        }
    }
};

// sign constraint of every vertex pair under one branch: -1, 0 or +1
struct BranchConstraints {
    int n = 0;
    std::vector<int> sign;  // indexed u*n+v, u <= v

    int at(int u, int v) const { return sign[static_cast<size_t>(u) * n + v]; }
};

BranchConstraints build_constraints(const SignedGraph& g, const std::vector<Position>& both,
                                    long long branch) {
    BranchConstraints c;
    c.n = g.vertex_count();
    c.sign.assign(static_cast<size_t>(c.n) * c.n, 0);
    for (int u = 0; u < c.n; ++u)
        for (int v = u; v < c.n; ++v) {
            const EdgeProfile p = g.profile(u, v);
            int s = 0;
            if (p == EdgeProfile::OddOnly) s = 1;
            if (p == EdgeProfile::EvenOnly) s = -1;
            c.sign[static_cast<size_t>(u) * c.n + v] = s;
        }
    long long rest = branch;
    for (const Position& pos : both) {
        const int digit = static_cast<int>(rest % 3);
        rest /= 3;
        c.sign[static_cast<size_t>(pos.u) * c.n + pos.v] = digit - 1;  // 0->-1, 1->0, 2->+1
    }
    return c;
}

SymMat matrix_from_magnitudes(const BranchConstraints& c, const std::vector<Position>& valued,
                              const std::vector<Rat>& mags, const std::vector<int>& pick) {
    SymMat m(c.n);
    for (size_t i = 0; i < valued.size(); ++i) {
        const Rat& mag = mags[pick[i]];
        m.set(valued[i].u, valued[i].v, c.at(valued[i].u, valued[i].v) > 0 ? mag : -mag);
    }
    return m;
}

Rat random_magnitude(Rng& rng) {
    // half pool, half fresh rationals with numerator/denominator up to 9
    if (rng.coin()) return oracle_magnitudes()[rng.below(oracle_magnitudes().size())];
    return rat(rng.range(1, 9), rng.range(1, 9));
}

// ---- low-rank Gram search -------------------------------------------------
//
// Targets pin <= (p,q) by building rows of V with A = V^T D V, D =
// diag(I_p, -I_q). Zero constraints against earlier rows are solved exactly;
// a required zero diagonal needs an isotropic vector, found through the
// diagonalized form when one exists with rational coordinates. Sign
// constraints are retried a few times and otherwise reject the attempt.

RatVec random_vector(Rng& rng, int len) {
    RatVec v(len);
    for (int i = 0; i < len; ++i) v[i] = rat(rng.range(-3, 3));
    return v;
}

Rat d_inner(const RatVec& a, const RatVec& b, int p) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) {
        const Rat t = a[i] * b[i];
        s += (static_cast<int>(i) < p) ? t : -t;
    }
    return s;
}

bool is_square(const Rat& x, Rat& root) {
    if (x < 0) return false;
    mpz_class num_root, den_root;
    if (mpz_perfect_square_p(x.get_num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(x.get_den().get_mpz_t()) == 0) return false;
    mpz_sqrt(num_root.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), x.get_den().get_mpz_t());
    root = Rat(num_root) / Rat(den_root);
    return true;
}

// isotropic vector of the form restricted to span(K), or empty on failure
RatVec isotropic_in_subspace(const std::vector<RatVec>& kbasis, int p, Rng& rng) {
    const int s = static_cast<int>(kbasis.size());
    const int r = static_cast<int>(kbasis[0].size());
    SymMat gram(s);
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) gram.set(i, j, d_inner(kbasis[i], kbasis[j], p));

    auto in_l = [&](const RatVec& coords) {
        RatVec v(r, Rat(0));
        for (int t = 0; t < s; ++t)
            for (int i = 0; i < r; ++i) v[i] += coords[t] * kbasis[t][i];
        return v;
    };

    const auto [u, diag] = diagonalize_congruence(gram);
    auto column = [&](int j) {
        RatVec c(s);
        for (int i = 0; i < s; ++i) c[i] = u.at(i, j);
        return c;
    };
    for (int j = 0; j < s; ++j)
        if (diag[j] == 0) {
            RatVec c = column(j);
            const Rat scale = rat(rng.range(1, 4)) * (rng.coin() ? 1 : -1);
            for (Rat& x : c) x *= scale;
            return in_l(c);
        }
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            if (diag[i] <= 0 || diag[j] >= 0) continue;
            Rat root;
            if (!is_square(-diag[j] / diag[i], root)) continue;
            RatVec ci = column(i), cj = column(j);
            RatVec coords(s, Rat(0));
            for (int t = 0; t < s; ++t) coords[t] = root * ci[t] + cj[t];
            const Rat scale = rat(rng.range(1, 4)) * (rng.coin() ? 1 : -1);
            for (Rat& x : coords) x *= scale;
            return in_l(coords);
        }
    return {};
}

bool lowrank_attempt(const BranchConstraints& c, int p, int q, Rng& rng, SymMat& out) {
    const int n = c.n;
    const int r = p + q;
    std::vector<RatVec> rows;
    rows.reserve(n);
    for (int j = 0; j < n; ++j) {
        bool placed = false;
        for (int attempt = 0; attempt < 4 && !placed; ++attempt) {
            // exact solve of the zero constraints against earlier rows
            std::vector<int> zero_partners;
            for (int i = 0; i < j; ++i)
                if (c.at(i, j) == 0) zero_partners.push_back(i);
            RatVec candidate;
            if (zero_partners.empty() && c.at(j, j) != 0) {
                candidate = random_vector(rng, r);
            } else {
                RatMat constraints(static_cast<int>(zero_partners.size()), r);
                for (size_t t = 0; t < zero_partners.size(); ++t)
                    for (int i = 0; i < r; ++i) {
                        const Rat& x = rows[zero_partners[t]][i];
                        constraints.at(static_cast<int>(t), i) = (i < p) ? x : -x;
                    }
                std::vector<RatVec> kbasis = kernel_basis(constraints);
                if (kbasis.empty()) {
                    candidate.assign(r, Rat(0));
                } else if (c.at(j, j) == 0) {
                    candidate = isotropic_in_subspace(kbasis, p, rng);
                    if (candidate.empty()) return false;
                } else {
                    candidate.assign(r, Rat(0));
                    for (const RatVec& k : kbasis) {
                        const Rat w = rat(rng.range(-3, 3));
                        for (int i = 0; i < r; ++i) candidate[i] += w * k[i];
                    }
                }
            }
            // sign constraints against earlier rows and the diagonal
            bool ok = true;
            for (int i = 0; i < j && ok; ++i) {
                const int want = c.at(i, j);
                if (want != 0 && rat_sign(d_inner(rows[i], candidate, p)) != want) ok = false;
            }
            if (ok) {
                const int want = c.at(j, j);
                if (want != 0 && rat_sign(d_inner(candidate, candidate, p)) != want) ok = false;
            }
            if (ok) {
                rows.push_back(std::move(candidate));
                placed = true;
            }
        }
        if (!placed) return false;
    }
    SymMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, d_inner(rows[i], rows[j], p));
    out = std::move(m);
    return true;
}

// ---------------------------------------------------------------------------

BranchOutcome run_branch(const SignedGraph& g, const std::vector<Position>& both,
                         long long branch, const OracleOptions& opts) {
    const BranchConstraints c = build_constraints(g, both, branch);
    const int n = g.vertex_count();
    std::vector<Position> valued;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (c.at(u, v) != 0) valued.push_back({u, v, g.profile(u, v)});

    Collector col;
    Rng rng(mix_seed(opts.seed, static_cast<std::uint64_t>(branch)));
    const auto& mags = oracle_magnitudes();

    if (valued.empty()) {
        col.take(SymMat(n));  // entirely forced: the zero matrix
        return std::move(col.out);
    }

    // deterministic grid
    if (opts.magnitude_cross && static_cast<int>(valued.size()) <= opts.cross_max_positions) {
        std::vector<int> pick(valued.size(), 0);
        while (true) {
            col.take(matrix_from_magnitudes(c, valued, mags, pick));
            size_t i = 0;
            while (i < pick.size() && ++pick[i] == static_cast<int>(mags.size())) {
                pick[i] = 0;
                ++i;
            }
            if (i == pick.size()) break;
        }
    } else {
        for (int k = 0; k < 8; ++k) {
            std::vector<int> pick(valued.size());
            for (size_t i = 0; i < valued.size(); ++i)
                pick[i] = k < 4 ? k : static_cast<int>((i + k) % mags.size());
            col.take(matrix_from_magnitudes(c, valued, mags, pick));
        }
    }

    // random draws
    for (int s = 0; s < opts.budget; ++s) {
        SymMat m(n);
        for (const Position& pos : valued) {
            const Rat mag = random_magnitude(rng);
            m.set(pos.u, pos.v, c.at(pos.u, pos.v) > 0 ? mag : -mag);
        }
        col.take(m);
    }

    // low-rank witnesses
    if (opts.lowrank_search && n > 0) {
        const int trials = std::max(8, opts.budget / 5);
        for (int p = 0; p <= n - 1; ++p)
            for (int q = 0; p + q <= n - 1; ++q) {
                if (p + q == 0) continue;
                for (int t = 0; t < trials; ++t) {
                    SymMat m;
                    if (!lowrank_attempt(c, p, q, rng, m)) continue;
                    if (!membership(m, g)) continue;
                    col.take(m);
                }
            }
    }
    return std::move(col.out);
}

OracleReport merge_outcomes(const SignedGraph& g, const OracleOptions& opts,
                            long long branches_total, std::vector<BranchOutcome>&& outcomes) {
    (void)g;
    OracleReport report;
    report.seed = opts.seed;
    report.branches_total = branches_total;
    report.branches_run = static_cast<long long>(outcomes.size());
    for (BranchOutcome& out : outcomes) {
        report.samples += out.samples;
        for (auto& [pair, witness] : out.found) {
            report.pairs.insert(pair);
            report.witnesses.emplace(pair, std::move(witness));
        }
    }
    return report;
}

std::vector<Position> both_positions(const SignedGraph& g) {
    std::vector<Position> both;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u; v < g.vertex_count(); ++v)
            if (g.profile(u, v) == EdgeProfile::Both) both.push_back({u, v, EdgeProfile::Both});
    return both;
}

}  // namespace

OracleReport oracle_sample_serial(const SignedGraph& g, const OracleOptions& opts) {
    const std::vector<Position> both = both_positions(g);
    const long long total = pow3(both.size());
    const long long run = std::min(total, opts.max_branches);
    std::vector<BranchOutcome> outcomes(static_cast<size_t>(run));
    for (long long b = 0; b < run; ++b) outcomes[static_cast<size_t>(b)] = run_branch(g, both, b, opts);
    return merge_outcomes(g, opts, total, std::move(outcomes));
}

OracleReport oracle_sample_parallel(const SignedGraph& g, const OracleOptions& opts) {
    const std::vector<Position> both = both_positions(g);
    const long long total = pow3(both.size());
    const long long run = std::min(total, opts.max_branches);
    std::vector<BranchOutcome> outcomes(static_cast<size_t>(run));
#pragma omp parallel for schedule(dynamic)
    for (long long b = 0; b < run; ++b)
        outcomes[static_cast<size_t>(b)] = run_branch(g, both, b, opts);
    return merge_outcomes(g, opts, total, std::move(outcomes));
}

OracleReport oracle_sample(const SignedGraph& g, const OracleOptions& opts) {
    return opts.parallel ? oracle_sample_parallel(g, opts) : oracle_sample_serial(g, opts);
}

}  // namespace sgi
