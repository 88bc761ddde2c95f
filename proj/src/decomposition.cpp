#include "sgi/decomposition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sgi {

const char* term_name(FormulaTerm t) {
    switch (t) {
        case FormulaTerm::Term1: return "term1";
        case FormulaTerm::Term2: return "term2";
        case FormulaTerm::Term3: return "term3";
        case FormulaTerm::Term4: return "term4";
        case FormulaTerm::Base: return "base";
        case FormulaTerm::ComponentSum: return "components";
    }
    return "?";
}

namespace {

// inverse of an order vector: where did original vertex i end up
std::vector<int> inverse_order(const std::vector<int>& order) {
    std::vector<int> inv(order.size());
    for (size_t i = 0; i < order.size(); ++i) inv[order[i]] = static_cast<int>(i);
    return inv;
}

Rat profile_entry(EdgeProfile p) {
    if (p == EdgeProfile::OddOnly) return Rat(1);
    if (p == EdgeProfile::EvenOnly) return Rat(-1);
    return Rat(0);
}

}  // namespace

Decomposer::Decomposer(OracleOptions opts) : opts_(opts) {}

TreeNodePtr Decomposer::formula_tree(const SignedGraph& g) {
    return build(g, 2 * g.vertex_count() + 8);
}

PairSet Decomposer::formula_minimal(const SignedGraph& g) { return formula_tree(g)->frontier; }

OracleReport Decomposer::oracle_inertia(const SignedGraph& g) const {
    return oracle_sample(g, opts_);
}

int Decomposer::minimum_rank(const SignedGraph& g) {
    const PairSet frontier = formula_minimal(g);
    if (frontier.empty()) throw std::logic_error("empty frontier");
    int best = -1;
    for (const InertiaPair& x : frontier.items())
        if (best < 0 || x.p + x.q < best) best = x.p + x.q;
    return best;
}

TreeNodePtr Decomposer::build(const SignedGraph& g, int depth_allowance) {
    const std::string key = g.canonical_key();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    if (depth_allowance < 0) throw std::logic_error("separation recursion exceeded depth bound");

    auto node = std::make_shared<TreeNode>();
    node->graph = g;

    const auto comps = g.components();
    std::vector<Separation> seps;
    if (comps.size() <= 1)
        for (Separation& s : find_1_separations(g))
            if (s.both_sides_have_noncut_vertex()) {
                seps.push_back(std::move(s));
                break;
            }

    if (comps.size() >= 2) {
        node->kind = TreeNode::Kind::Components;
        node->part_vertices = comps;
        PairSet sum{{0, 0}};
        for (const auto& comp : comps) {
            std::vector<int> edge_idx;
            for (size_t i = 0; i < g.edges().size(); ++i)
                if (std::binary_search(comp.begin(), comp.end(), g.edges()[i].u))
                    edge_idx.push_back(static_cast<int>(i));
            TreeNodePtr part = build(subgraph(g, comp, edge_idx), depth_allowance - 1);
            sum = minkowski_add(sum, part->frontier);
            node->parts.push_back(std::move(part));
        }
        node->frontier = minimal(sum);

        // lexicographically first decomposition of each frontier pair
        for (const InertiaPair& target : node->frontier.items()) {
            std::vector<InertiaPair> chosen(node->parts.size());
            std::vector<InertiaPair> partial;
            auto search = [&](auto&& self, size_t idx, InertiaPair acc) -> bool {
                if (idx == node->parts.size()) return acc == target;
                for (const InertiaPair& x : node->parts[idx]->frontier.items()) {
                    const InertiaPair next = acc + x;
                    if (next.p > target.p || next.q > target.q) continue;
                    chosen[idx] = x;
                    if (self(self, idx + 1, next)) return true;
                }
                return false;
            };
            if (!search(search, 0, {0, 0}))
                throw std::logic_error("component frontier pair without decomposition");
            PairProvenance prov;
            prov.term = FormulaTerm::ComponentSum;
            prov.part_pairs = chosen;
            node->provenance.emplace(target, std::move(prov));
        }
    } else if (!seps.empty()) {
        node->kind = TreeNode::Kind::OneSep;
        node->sep = std::move(seps.front());
        const Separation& sep = *node->sep;
        const int c1 = sep.side1_cut_index();
        const int c2 = sep.side2_cut_index();

        node->left = build(sep.side1(), depth_allowance - 1);
        node->right = build(sep.side2(), depth_allowance - 1);
        const PairSet f1d = build(sep.side1().deleted_vertex(c1), depth_allowance - 1)->frontier;
        const PairSet f2d = build(sep.side2().deleted_vertex(c2), depth_allowance - 1)->frontier;
        const PairSet f1e =
            build(sep.side1().with_loop(c1, Parity::Even), depth_allowance - 1)->frontier;
        const PairSet f1o =
            build(sep.side1().with_loop(c1, Parity::Odd), depth_allowance - 1)->frontier;
        const PairSet f2e =
            build(sep.side2().with_loop(c2, Parity::Even), depth_allowance - 1)->frontier;
        const PairSet f2o =
            build(sep.side2().with_loop(c2, Parity::Odd), depth_allowance - 1)->frontier;

        node->terms[0] = minkowski_add(minkowski_add(f1d, f2d), PairSet{{1, 1}});
        node->terms[1] = minkowski_add(node->left->frontier, node->right->frontier);
        node->terms[2] = minkowski_add(f1e, f2o);
        node->terms[3] = minkowski_add(f1o, f2e);

        PairSet all;
        for (const PairSet& t : node->terms) all = set_union(all, t);
        node->frontier = minimal(truncate_n(all, g.vertex_count()));

        const std::array<std::pair<const PairSet*, const PairSet*>, 4> sides = {{
            {&f1d, &f2d},
            {&node->left->frontier, &node->right->frontier},
            {&f1e, &f2o},
            {&f1o, &f2e},
        }};
        for (const InertiaPair& target : node->frontier.items()) {
            bool done = false;
            for (int t = 0; t < 4 && !done; ++t) {
                if (!node->terms[t].contains(target)) continue;
                const InertiaPair extra = (t == 0) ? InertiaPair{1, 1} : InertiaPair{0, 0};
                for (const InertiaPair& l : sides[t].first->items()) {
                    for (const InertiaPair& r : sides[t].second->items()) {
                        if (l + r + extra != target) continue;
                        PairProvenance prov;
                        prov.term = static_cast<FormulaTerm>(t);
                        prov.left = l;
                        prov.right = r;
                        node->provenance.emplace(target, std::move(prov));
                        done = true;
                        break;
                    }
                    if (done) break;
                }
            }
            if (!done) throw std::logic_error("frontier pair without term decomposition");
        }
    } else {
        node->kind = TreeNode::Kind::Base;
        OracleReport report = oracle_sample(g, opts_);
        if (report.truncated()) {
            std::ostringstream msg;
            msg << "oracle branch budget exhausted on base case (" << report.branches_total
                << " branches, cap " << opts_.max_branches << "):\n"
                << g.serialize();
            throw std::runtime_error(msg.str());
        }
        node->frontier = minimal(report.pairs);
        for (const InertiaPair& x : node->frontier.items()) {
            PairProvenance prov;
            prov.term = FormulaTerm::Base;
            node->provenance.emplace(x, prov);
        }
        node->oracle = std::move(report);
    }

    std::lock_guard<std::mutex> lock(mutex_);
    const auto [it, inserted] = memo_.emplace(key, node);
    return it->second;  // first fully built node wins on a race
}

SymMat Decomposer::witness_for_pair(const SignedGraph& g, InertiaPair target) {
    TreeNodePtr node = formula_tree(g);
    return witness_from_node(node, target, 2 * g.vertex_count() + 8);
}

SymMat Decomposer::witness_from_node(const TreeNodePtr& node, InertiaPair target,
                                     int depth_allowance) {
    if (depth_allowance < 0) throw std::logic_error("witness recursion exceeded depth bound");
    const auto pit = node->provenance.find(target);
    if (pit == node->provenance.end()) {
        std::ostringstream msg;
        msg << "no provenance for pair (" << target.p << "," << target.q << ")";
        throw std::invalid_argument(msg.str());
    }
    const PairProvenance& prov = pit->second;
    const SignedGraph& g = node->graph;

    SymMat result;
    switch (node->kind) {
        case TreeNode::Kind::Base: {
            result = node->oracle->witnesses.at(target);
            break;
        }
        case TreeNode::Kind::Components: {
            SymMat acc(0);
            std::vector<int> order;
            for (size_t i = 0; i < node->parts.size(); ++i) {
                acc = direct_sum(acc, witness_from_node(node->parts[i], prov.part_pairs[i],
                                                        depth_allowance - 1));
                order.insert(order.end(), node->part_vertices[i].begin(),
                             node->part_vertices[i].end());
            }
            result = permuted(acc, inverse_order(order));
            break;
        }
        case TreeNode::Kind::OneSep: {
            const Separation& sep = *node->sep;
            const int c1 = sep.side1_cut_index();
            const int c2 = sep.side2_cut_index();
            const EdgeProfile prof1 = sep.side1().profile(c1, c1);
            const EdgeProfile prof2 = sep.side2().profile(c2, c2);
            auto variant_witness = [&](const SignedGraph& sub, InertiaPair pair) {
                return witness_from_node(build(sub, depth_allowance - 1), pair,
                                         depth_allowance - 1);
            };

            SymMat glued;
            if (prov.term == FormulaTerm::Term2) {
                const SymMat b = variant_witness(sep.side1(), prov.left);
                const SymMat c = variant_witness(sep.side2(), prov.right);
                glued = subdirect_sum(b, c, 1);
            } else if (prov.term == FormulaTerm::Term3 || prov.term == FormulaTerm::Term4) {
                const Parity aug1 =
                    prov.term == FormulaTerm::Term3 ? Parity::Even : Parity::Odd;
                const Parity aug2 =
                    prov.term == FormulaTerm::Term3 ? Parity::Odd : Parity::Even;
                const SymMat c = variant_witness(sep.side1().with_loop(c1, aug1), prov.left);
                const SymMat d = variant_witness(sep.side2().with_loop(c2, aug2), prov.right);
                glued = compose_term(c, d, prof1, prof2).matrix;
            } else if (prov.term == FormulaTerm::Term1) {
                const SymMat b = variant_witness(sep.side1().deleted_vertex(c1), prov.left);
                const SymMat c = variant_witness(sep.side2().deleted_vertex(c2), prov.right);
                const SymMat inner = direct_sum(b, c);
                // border row for the cut vertex, entries picked from the
                // profiles: odd-only pairs get 1, even-only -1, else 0
                const std::vector<int> merged = sep.merged_order();
                std::vector<int> inner_ids;
                for (int id : merged)
                    if (id != sep.cut()) inner_ids.push_back(id);
                RatVec border(inner_ids.size());
                for (size_t i = 0; i < inner_ids.size(); ++i)
                    border[i] = profile_entry(g.profile(sep.cut(), inner_ids[i]));
                const Rat corner = profile_entry(g.profile(sep.cut(), sep.cut()));
                glued = vertex_embed_arrow(inner, border, corner).target;
                // embed puts the cut vertex last; move it back between the sides
                std::vector<int> from_embedded(merged.size());
                const int cut_pos = sep.side1().vertex_count() - 1;
                for (size_t i = 0, src = 0; i < merged.size(); ++i)
                    from_embedded[i] =
                        static_cast<int>(i) == cut_pos
                            ? static_cast<int>(merged.size()) - 1
                            : static_cast<int>(src++);
                glued = permuted(glued, from_embedded);
            } else {
                throw std::logic_error("unexpected provenance term");
            }
            result = permuted(glued, inverse_order(sep.merged_order()));
            break;
        }
    }

    if (!membership(result, g)) throw std::logic_error("constructed witness fails membership");
    const InertiaPair actual = pin(result);
    if (!dominates(target, actual))
        throw std::logic_error("constructed witness exceeds the target pin");
    return result;
}

VerifyReport Decomposer::verify_equivalence(const SignedGraph& g) {
    VerifyReport report;
    report.graph = g;
    report.tree = formula_tree(g);
    report.frontier = report.tree->frontier;
    report.oracle = oracle_inertia(g);

    report.sound_ok = true;
    for (const InertiaPair& sampled : report.oracle.pairs.items()) {
        bool dominated = false;
        for (const InertiaPair& f : report.frontier.items())
            if (dominates(sampled, f)) {
                dominated = true;
                break;
            }
        if (!dominated) {
            report.sound_ok = false;
            VerifyReport::Violation v;
            v.kind = "soundness";
            v.pair = sampled;
            v.witness = report.oracle.witnesses.at(sampled);
            v.witness_pin = sampled;
            report.violations.push_back(std::move(v));
        }
    }

    const PairSet oracle_min = minimal(report.oracle.pairs);
    report.cong_ok = oracle_min == report.frontier;
    if (!report.cong_ok) {
        for (const InertiaPair& f : report.frontier.items())
            if (!oracle_min.contains(f)) {
                VerifyReport::Violation v;
                v.kind = "formula_only";
                v.pair = f;
                try {
                    v.witness = witness_for_pair(g, f);
                    v.witness_pin = pin(*v.witness);
                } catch (const std::exception&) {
                    // leave the witness out; the pair itself is the finding
                }
                report.violations.push_back(std::move(v));
            }
        for (const InertiaPair& o : oracle_min.items())
            if (!report.frontier.contains(o)) {
                VerifyReport::Violation v;
                v.kind = "oracle_only";
                v.pair = o;
                v.witness = report.oracle.witnesses.at(o);
                v.witness_pin = o;
                report.violations.push_back(std::move(v));
            }
    }
    return report;
}

namespace {

using json = nlohmann::ordered_json;

json pairs_to_json(const PairSet& s) {
    json arr = json::array();
    for (const InertiaPair& x : s.items()) arr.push_back({x.p, x.q});
    return arr;
}

json pair_to_json(const InertiaPair& x) { return json::array({x.p, x.q}); }

json labels_1based(const std::vector<int>& ids) {
    json arr = json::array();
    for (int id : ids) arr.push_back(id + 1);
    return arr;
}

json node_to_json(const TreeNode& node) {
    json j;
    j["frontier"] = pairs_to_json(node.frontier);
    switch (node.kind) {
        case TreeNode::Kind::Base: {
            j["kind"] = "base";
            j["graph"] = node.graph.serialize();
            if (node.oracle) {
                j["oracle"] = {{"pairs", pairs_to_json(node.oracle->pairs)},
                               {"samples", node.oracle->samples},
                               {"seed", node.oracle->seed},
                               {"branches_total", node.oracle->branches_total},
                               {"branches_run", node.oracle->branches_run}};
            }
            break;
        }
        case TreeNode::Kind::OneSep: {
            j["kind"] = "onesep";
            j["cut"] = node.sep->cut() + 1;
            j["side1"] = labels_1based(node.sep->side1_labels());
            j["side2"] = labels_1based(node.sep->side2_labels());
            json terms;
            for (int t = 0; t < 4; ++t)
                terms[term_name(static_cast<FormulaTerm>(t))] = pairs_to_json(node.terms[t]);
            j["terms"] = terms;
            json pairs = json::array();
            for (const auto& [pair, prov] : node.provenance)
                pairs.push_back({{"pair", pair_to_json(pair)},
                                 {"term", term_name(prov.term)},
                                 {"left", pair_to_json(prov.left)},
                                 {"right", pair_to_json(prov.right)}});
            j["pairs"] = pairs;
            j["left"] = node_to_json(*node.left);
            j["right"] = node_to_json(*node.right);
            break;
        }
        case TreeNode::Kind::Components: {
            j["kind"] = "components";
            json parts = json::array();
            for (size_t i = 0; i < node.parts.size(); ++i)
                parts.push_back({{"vertices", labels_1based(node.part_vertices[i])},
                                 {"tree", node_to_json(*node.parts[i])}});
            j["parts"] = parts;
            json pairs = json::array();
            for (const auto& [pair, prov] : node.provenance) {
                json contributions = json::array();
                for (const InertiaPair& x : prov.part_pairs) contributions.push_back(pair_to_json(x));
                pairs.push_back({{"pair", pair_to_json(pair)}, {"parts", contributions}});
            }
            j["pairs"] = pairs;
            break;
        }
    }
    return j;
}

}  // namespace

std::string tree_json(const TreeNode& node) { return node_to_json(node).dump(2) + "\n"; }

std::string verify_json(const VerifyReport& report) {
    json j;
    j["graph"] = report.graph.serialize();
    j["frontier"] = pairs_to_json(report.frontier);
    j["cong"] = report.cong_ok;
    j["sound"] = report.sound_ok;
    j["ok"] = report.ok();
    j["oracle"] = {{"pairs", pairs_to_json(report.oracle.pairs)},
                   {"minimal", pairs_to_json(minimal(report.oracle.pairs))},
                   {"samples", report.oracle.samples},
                   {"seed", report.oracle.seed},
                   {"branches_total", report.oracle.branches_total},
                   {"branches_run", report.oracle.branches_run}};
    json violations = json::array();
    for (const auto& v : report.violations) {
        json item;
        item["kind"] = v.kind;
        item["pair"] = pair_to_json(v.pair);
        if (v.witness) item["witness"] = serialize(*v.witness);
        if (v.witness_pin) item["witness_pin"] = pair_to_json(*v.witness_pin);
        violations.push_back(std::move(item));
    }
    j["violations"] = violations;
    j["tree"] = node_to_json(*report.tree);
    return j.dump(2) + "\n";
}

}  // namespace sgi
