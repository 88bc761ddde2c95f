#include "sgi/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sgi {

bool profile_has_odd(EdgeProfile p) {
    return p == EdgeProfile::OddOnly || p == EdgeProfile::Both;
}

bool profile_has_even(EdgeProfile p) {
    return p == EdgeProfile::EvenOnly || p == EdgeProfile::Both;
}

bool profile_allows_sign(EdgeProfile p, int sign) {
    if (sign > 0) return profile_has_odd(p);
    if (sign < 0) return profile_has_even(p);
    return p == EdgeProfile::None || p == EdgeProfile::Both;
}

SignedGraph::SignedGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

void SignedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

void SignedGraph::add_edge(int u, int v, Parity parity) {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v, parity});
}

EdgeProfile SignedGraph::profile(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    bool odd = false, even = false;
    for (const GraphEdge& e : edges_) {
        if (e.u != u || e.v != v) continue;
        (e.parity == Parity::Odd ? odd : even) = true;
    }
    if (odd && even) return EdgeProfile::Both;
    if (odd) return EdgeProfile::OddOnly;
    if (even) return EdgeProfile::EvenOnly;
    return EdgeProfile::None;
}

SignedGraph SignedGraph::deleted_vertex(int v) const {
    check_vertex(v);
    SignedGraph g(n_ - 1);
    for (const GraphEdge& e : edges_) {
        if (e.u == v || e.v == v) continue;
        g.add_edge(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v, e.parity);
    }
    return g;
}

SignedGraph SignedGraph::with_loop(int v, Parity parity) const {
    check_vertex(v);
    SignedGraph g = *this;
    g.edges_.push_back({v, v, parity});
    return g;
}

bool SignedGraph::operator==(const SignedGraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    auto key = [](const SignedGraph& g) {
        std::vector<std::tuple<int, int, int>> k;
        k.reserve(g.edges_.size());
        for (const GraphEdge& e : g.edges_) k.emplace_back(e.u, e.v, static_cast<int>(e.parity));
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(*this) == key(other);
}

SignedGraph SignedGraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_n = false;
    SignedGraph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank or comment-only
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (tag == "n") {
            if (have_n) throw std::invalid_argument("duplicate n directive" + where);
            long count = -1;
            std::string extra;
            if (!(ls >> count) || count < 0 || (ls >> extra))
                throw std::invalid_argument("malformed n directive" + where);
            g = SignedGraph(static_cast<int>(count));
            have_n = true;
        } else if (tag == "e") {
            if (!have_n)
                throw std::invalid_argument("edge before n directive" + where);
            long u = 0, v = 0;
            std::string ptok, extra;
            if (!(ls >> u >> v >> ptok) || (ls >> extra))
                throw std::invalid_argument("malformed e directive" + where);
            Parity p;
            if (ptok == "o")
                p = Parity::Odd;
            else if (ptok == "e")
                p = Parity::Even;
            else
                throw std::invalid_argument("unknown parity token '" + ptok + "'" + where);
            if (u < 1 || u > g.n_ || v < 1 || v > g.n_)
                throw std::invalid_argument("vertex index out of range" + where);
            g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1, p);
        } else {
            throw std::invalid_argument("unknown directive '" + tag + "'" + where);
        }
    }
    if (!have_n) throw std::invalid_argument("missing n directive");
    return g;
}

std::string SignedGraph::serialize() const {
    // Even sorts before Odd, matching the 'e' < 'o' token order.
    std::vector<std::tuple<int, int, int, size_t>> order;
    order.reserve(edges_.size());
    for (size_t i = 0; i < edges_.size(); ++i)
        order.emplace_back(edges_[i].u, edges_[i].v, static_cast<int>(edges_[i].parity), i);
    std::sort(order.begin(), order.end());
    std::ostringstream out;
    out << "n " << n_ << "\n";
    for (const auto& [u, v, p, idx] : order)
        out << "e " << u + 1 << " " << v + 1 << " "
            << (static_cast<Parity>(p) == Parity::Odd ? "o" : "e") << "\n";
    return out.str();
}

std::vector<std::vector<int>> SignedGraph::components() const {
    std::vector<int> comp(n_, -1);
    int ncomp = 0;
    for (int start = 0; start < n_; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = ncomp;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const GraphEdge& e : edges_) {
                int other = -1;
                if (e.u == u)
                    other = e.v;
                else if (e.v == u)
                    other = e.u;
                if (other >= 0 && comp[other] < 0) {
                    comp[other] = ncomp;
                    stack.push_back(other);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> out(ncomp);
    for (int v = 0; v < n_; ++v) out[comp[v]].push_back(v);
    return out;  // already ordered by least vertex, lists ascending
}

std::string SignedGraph::canonical_key() const {
    std::set<std::tuple<int, int, int>> profs;
    for (const GraphEdge& e : edges_) {
        const EdgeProfile p = profile(e.u, e.v);
        profs.insert({e.u, e.v, static_cast<int>(p)});
    }
    std::ostringstream out;
    out << n_;
    for (const auto& [u, v, p] : profs) out << ";" << u << ":" << v << ":" << p;
    return out.str();
}

SignedGraph subgraph(const SignedGraph& g, const std::vector<int>& order,
                     const std::vector<int>& edge_indices) {
    std::map<int, int> newid;
    for (size_t i = 0; i < order.size(); ++i) {
        if (newid.count(order[i])) throw std::invalid_argument("duplicate vertex in subgraph order");
        newid[order[i]] = static_cast<int>(i);
    }
    SignedGraph s(static_cast<int>(order.size()));
    for (int idx : edge_indices) {
        const GraphEdge& e = g.edges().at(static_cast<size_t>(idx));
        const auto iu = newid.find(e.u);
        const auto iv = newid.find(e.v);
        if (iu == newid.end() || iv == newid.end())
            throw std::invalid_argument("subgraph edge endpoint outside vertex set");
        s.add_edge(iu->second, iv->second, e.parity);
    }
    return s;
}

Separation Separation::make(const SignedGraph& g, int cut, std::vector<int> side1_vertices,
                            const std::vector<bool>& edge_to_side1) {
    const int n = g.vertex_count();
    if (cut < 0 || cut >= n) throw std::invalid_argument("separation cut vertex out of range");
    if (edge_to_side1.size() != g.edges().size())
        throw std::invalid_argument("separation edge assignment has wrong length");

    std::sort(side1_vertices.begin(), side1_vertices.end());
    side1_vertices.erase(std::unique(side1_vertices.begin(), side1_vertices.end()),
                         side1_vertices.end());
    std::vector<bool> in1(n, false);
    for (int v : side1_vertices) {
        if (v < 0 || v >= n) throw std::invalid_argument("separation side vertex out of range");
        in1[v] = true;
    }
    if (!in1[cut]) throw std::invalid_argument("separation side 1 must contain the cut vertex");

    std::vector<int> side1_order, side2_order{cut};
    for (int v : side1_vertices)
        if (v != cut) side1_order.push_back(v);
    side1_order.push_back(cut);
    for (int v = 0; v < n; ++v)
        if (!in1[v]) side2_order.push_back(v);

    std::vector<int> e1, e2;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const GraphEdge& e = g.edges()[i];
        const bool to1 = edge_to_side1[i];
        auto inside = [&](int v) { return to1 ? in1[v] : (!in1[v] || v == cut); };
        if (!inside(e.u) || !inside(e.v))
            throw std::invalid_argument("separation edge crosses its side");
        (to1 ? e1 : e2).push_back(static_cast<int>(i));
    }

    Separation sep;
    sep.cut_ = cut;
    sep.side1_labels_ = side1_order;
    sep.side2_labels_ = side2_order;
    sep.side1_ = subgraph(g, side1_order, e1);
    sep.side2_ = subgraph(g, side2_order, e2);

    // properness: neither side may be exactly ({cut}, {})
    if (sep.side1_.vertex_count() == 1 && sep.side1_.edges().empty())
        throw std::invalid_argument("separation side 1 is a bare cut vertex");
    if (sep.side2_.vertex_count() == 1 && sep.side2_.edges().empty())
        throw std::invalid_argument("separation side 2 is a bare cut vertex");
    return sep;
}

std::vector<int> Separation::merged_order() const {
    std::vector<int> order(side1_labels_.begin(), side1_labels_.end());
    order.insert(order.end(), side2_labels_.begin() + 1, side2_labels_.end());
    return order;
}

bool Separation::both_sides_have_noncut_vertex() const {
    return side1_.vertex_count() > 1 && side2_.vertex_count() > 1;
}

std::vector<Separation> find_1_separations(const SignedGraph& g) {
    std::vector<Separation> out;
    const int n = g.vertex_count();
    const auto& edges = g.edges();
    for (int v = 0; v < n; ++v) {
        // components of g - v, as original vertex ids
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int start = 0; start < n; ++start) {
            if (start == v || comp[start] >= 0) continue;
            std::vector<int> stack{start};
            comp[start] = ncomp;
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (const GraphEdge& e : edges) {
                    if (e.u == v || e.v == v) continue;
                    int other = -1;
                    if (e.u == u)
                        other = e.v;
                    else if (e.v == u)
                        other = e.u;
                    if (other >= 0 && comp[other] < 0) {
                        comp[other] = ncomp;
                        stack.push_back(other);
                    }
                }
            }
            ++ncomp;
        }
        std::vector<std::vector<int>> comps(ncomp);
        for (int u = 0; u < n; ++u)
            if (u != v) comps[comp[u]].push_back(u);

        std::vector<int> loops_at_v;
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i].u == v && edges[i].v == v) loops_at_v.push_back(static_cast<int>(i));

        if (ncomp >= 2) {
            // one split per carved component; loops at the cut go with it
            for (int i = 0; i < ncomp; ++i) {
                std::vector<bool> to1(edges.size(), false);
                std::vector<int> side1 = comps[i];
                side1.push_back(v);
                std::vector<bool> in1(n, false);
                for (int u : side1) in1[u] = true;
                for (size_t ei = 0; ei < edges.size(); ++ei) {
                    const GraphEdge& e = edges[ei];
                    if (e.u == v && e.v == v)
                        to1[ei] = true;
                    else
                        to1[ei] = in1[e.u] && in1[e.v];
                }
                out.push_back(Separation::make(g, v, side1, to1));
            }
        } else if (ncomp == 1 && !loops_at_v.empty()) {
            // everything except the cut loops vs. ({v}, loops)
            std::vector<bool> to1(edges.size(), true);
            for (int ei : loops_at_v) to1[ei] = false;
            std::vector<int> side1 = comps[0];
            side1.push_back(v);
            out.push_back(Separation::make(g, v, side1, to1));
        } else if (ncomp == 0 && loops_at_v.size() >= 2) {
            // single vertex: first loop vs. the rest
            std::vector<bool> to1(edges.size(), false);
            to1[loops_at_v[0]] = true;
            out.push_back(Separation::make(g, v, {v}, to1));
        }
    }
    return out;
}

}  // namespace sgi
