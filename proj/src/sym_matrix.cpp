#include "sgi/sym_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgi/rng.hpp"

namespace sgi {

SymMat::SymMat(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative matrix size");
    a_.assign(static_cast<size_t>(n) * n, Rat(0));
}

SymMat SymMat::from_rows(const std::vector<RatVec>& rows) {
    SymMat m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.n_)
            throw std::invalid_argument("non-square row data");
        for (int j = 0; j < m.n_; ++j) m.a_[static_cast<size_t>(i) * m.n_ + j] = rows[i][j];
    }
    for (int i = 0; i < m.n_; ++i)
        for (int j = i + 1; j < m.n_; ++j)
            if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("asymmetric input");
    return m;
}

SymMat SymMat::from_rect(const RatMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("asymmetric input");
    std::vector<RatVec> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols());
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    }
    return from_rows(rows);
}

const Rat& SymMat::at(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("matrix index out of range");
    return a_[static_cast<size_t>(i) * n_ + j];
}

void SymMat::set(int i, int j, Rat value) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("matrix index out of range");
    a_[static_cast<size_t>(i) * n_ + j] = value;
    a_[static_cast<size_t>(j) * n_ + i] = std::move(value);
}

RatMat SymMat::to_rect() const {
    RatMat m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
    return m;
}

InertiaPair pin(const SymMat& a) {
    // Working copy shrinks by one (diagonal pivot) or two (hyperbolic step)
    // rows per round; mpq keeps every entry canonical.
    std::vector<RatVec> m(a.size(), RatVec(a.size()));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) m[i][j] = a.at(i, j);

    InertiaPair out;
    int n = a.size();
    while (n > 0) {
        int pivot = -1;
        for (int i = 0; i < n; ++i) {
            if (m[i][i] == 0) continue;
            if (pivot < 0 || abs(m[i][i]) > abs(m[pivot][pivot])) pivot = i;
        }
        if (pivot >= 0) {
            const Rat d = m[pivot][pivot];
            (rat_sign(d) > 0 ? out.p : out.q) += 1;
            std::vector<RatVec> next(n - 1, RatVec(n - 1));
            for (int i = 0, ii = 0; i < n; ++i) {
                if (i == pivot) continue;
                for (int j = 0, jj = 0; j < n; ++j) {
                    if (j == pivot) continue;
                    next[ii][jj] = m[i][j] - m[i][pivot] * m[pivot][j] / d;
                    ++jj;
                }
                ++ii;
            }
            m = std::move(next);
            --n;
            continue;
        }
        // all-zero diagonal: lexicographically first nonzero off-diagonal
        int bi = -1, bj = -1;
        for (int i = 0; i < n && bi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (m[i][j] != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        if (bi < 0) break;  // zero matrix
        const Rat& d = m[bi][bj];
        out.p += 1;
        out.q += 1;
        std::vector<RatVec> next(n - 2, RatVec(n - 2));
        for (int i = 0, ii = 0; i < n; ++i) {
            if (i == bi || i == bj) continue;
            for (int j = 0, jj = 0; j < n; ++j) {
                if (j == bi || j == bj) continue;
                next[ii][jj] = m[i][j] - (m[i][bi] * m[bj][j] + m[i][bj] * m[bi][j]) / d;
                ++jj;
            }
            ++ii;
        }
        m = std::move(next);
        n -= 2;
    }
    return out;
}

SymMat congruence(const SymMat& a, const RatMat& p) {
    if (p.rows() != a.size()) throw std::invalid_argument("congruence dimension mismatch");
    const RatMat result = p.transposed() * a.to_rect() * p;
    return SymMat::from_rect(result);
}

SymMat direct_sum(const SymMat& a, const SymMat& b) { return subdirect_sum(a, b, 0); }

SymMat subdirect_sum(const SymMat& a, const SymMat& b, int k) {
    if (k < 0 || k > a.size() || k > b.size())
        throw std::invalid_argument("subdirect overlap larger than an operand");
    const int na = a.size(), nb = b.size();
    SymMat m(na + nb - k);
    for (int i = 0; i < na; ++i)
        for (int j = i; j < na; ++j) m.set(i, j, a.at(i, j));
    const int off = na - k;
    for (int i = 0; i < nb; ++i)
        for (int j = i; j < nb; ++j) m.set(off + i, off + j, m.at(off + i, off + j) + b.at(i, j));
    return m;
}

SymMat principal_delete(const SymMat& a, int j) {
    if (j < 0 || j >= a.size()) throw std::out_of_range("principal_delete index out of range");
    SymMat m(a.size() - 1);
    for (int r = 0, rr = 0; r < a.size(); ++r) {
        if (r == j) continue;
        for (int c = r, cc = rr; c < a.size(); ++c) {
            if (c == j) continue;
            m.set(rr, cc, a.at(r, c));
            ++cc;
        }
        ++rr;
    }
    return m;
}

SymMat permuted(const SymMat& a, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != a.size())
        throw std::invalid_argument("permutation size mismatch");
    SymMat m(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = i; j < a.size(); ++j) m.set(i, j, a.at(order[i], order[j]));
    return m;
}

SymMat scaled(const SymMat& a, const Rat& factor) {
    SymMat m(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = i; j < a.size(); ++j) m.set(i, j, factor * a.at(i, j));
    return m;
}

SymMat hyperbolic_h() {
    SymMat h(2);
    h.set(0, 1, Rat(1));
    return h;
}

bool membership(const SymMat& a, const SignedGraph& g) {
    if (a.size() != g.vertex_count()) throw std::invalid_argument("matrix/graph size mismatch");
    for (int i = 0; i < a.size(); ++i)
        for (int j = i; j < a.size(); ++j)
            if (!profile_allows_sign(g.profile(i, j), rat_sign(a.at(i, j)))) return false;
    return true;
}

SymMat sample_member(const SignedGraph& g, const std::vector<Rat>& pool,
                     const BranchChoice& branch, std::uint64_t seed) {
    std::vector<Rat> positives, negatives;
    for (const Rat& x : pool) {
        if (x > 0) positives.push_back(x);
        if (x < 0) negatives.push_back(x);
        if (x == 0) throw std::invalid_argument("sample pool contains zero");
    }
    if (positives.empty() || negatives.empty())
        throw std::invalid_argument("sample pool needs a positive and a negative value");

    Rng rng(seed);
    const int n = g.vertex_count();
    SymMat m(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            const EdgeProfile prof = g.profile(u, v);
            const auto choice = branch.find({u, v});
            int sign;
            if (choice != branch.end()) {
                sign = choice->second == SignChoice::Pos   ? 1
                       : choice->second == SignChoice::Neg ? -1
                                                           : 0;
                if (!profile_allows_sign(prof, sign))
                    throw std::invalid_argument("unsatisfiable branch choice at pair (" +
                                                std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                                ")");
            } else {
                switch (prof) {
                    case EdgeProfile::None: sign = 0; break;
                    case EdgeProfile::OddOnly: sign = 1; break;
                    case EdgeProfile::EvenOnly: sign = -1; break;
                    case EdgeProfile::Both:
                        throw std::invalid_argument("branch choice missing for Both pair (" +
                                                    std::to_string(u + 1) + "," +
                                                    std::to_string(v + 1) + ")");
                }
            }
            if (sign > 0)
                m.set(u, v, positives[rng.below(positives.size())]);
            else if (sign < 0)
                m.set(u, v, negatives[rng.below(negatives.size())]);
        }
    }
    return m;
}

SymMat parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    long n = -1;
    if (!(in >> tag) || tag != "m" || !(in >> n) || n < 0)
        throw std::invalid_argument("matrix text must start with 'm <n>'");
    std::vector<RatVec> rows(static_cast<size_t>(n), RatVec(static_cast<size_t>(n)));
    std::string tok;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (!(in >> tok)) throw std::invalid_argument("matrix text ends early");
            rows[i][j] = parse_rat(tok);
        }
    if (in >> tok) throw std::invalid_argument("trailing tokens after matrix");
    return SymMat::from_rows(rows);
}

std::string serialize(const SymMat& a) {
    std::ostringstream out;
    out << "m " << a.size() << "\n";
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) {
            if (j) out << " ";
            out << rat_str(a.at(i, j));
        }
        out << "\n";
    }
    return out.str();
}

std::pair<RatMat, RatVec> diagonalize_congruence(const SymMat& a) {
    const int n = a.size();
    RatMat u = RatMat::identity(n);
    RatMat m = a.to_rect();

    auto add_col = [&](int dst, int src, const Rat& f) {
        // column op C_dst += f*C_src applied congruently
        for (int i = 0; i < n; ++i) m.at(i, dst) += f * m.at(i, src);
        for (int j = 0; j < n; ++j) m.at(dst, j) += f * m.at(src, j);
        for (int i = 0; i < n; ++i) u.at(i, dst) += f * u.at(i, src);
    };
    auto swap_col = [&](int x, int y) {
        for (int i = 0; i < n; ++i) std::swap(m.at(i, x), m.at(i, y));
        for (int j = 0; j < n; ++j) std::swap(m.at(x, j), m.at(y, j));
        for (int i = 0; i < n; ++i) std::swap(u.at(i, x), u.at(i, y));
    };

    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) == 0) {
            int with_diag = -1, with_off = -1;
            for (int j = i + 1; j < n; ++j) {
                if (m.at(j, j) != 0 && with_diag < 0) with_diag = j;
                if (m.at(i, j) != 0 && with_off < 0) with_off = j;
            }
            if (with_diag >= 0)
                swap_col(i, with_diag);
            else if (with_off >= 0)
                add_col(i, with_off, Rat(1));  // makes m(i,i) = 2*m(i,off) != 0
            else
                continue;  // entire row/column zero
        }
        const Rat d = m.at(i, i);
        for (int j = i + 1; j < n; ++j) {
            if (m.at(i, j) == 0) continue;
            add_col(j, i, -m.at(i, j) / d);
        }
    }
    RatVec diag(n);
    for (int i = 0; i < n; ++i) diag[i] = m.at(i, i);
    return {u, diag};
}

}  // namespace sgi
