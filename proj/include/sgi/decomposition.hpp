#ifndef SGI_DECOMPOSITION_HPP
#define SGI_DECOMPOSITION_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sgi/inertia_set.hpp"
#include "sgi/oracle.hpp"
#include "sgi/signed_graph.hpp"
#include "sgi/sym_matrix.hpp"
#include "sgi/transforms.hpp"

namespace sgi {

// Formula terms in display order:
//   term1 = I(G1 - v) + I(G2 - v) + {(1,1)}
//   term2 = I(G1) + I(G2)
//   term3 = I(G1)_E + I(G2)_O
//   term4 = I(G1)_O + I(G2)_E
enum class FormulaTerm { Term1 = 0, Term2 = 1, Term3 = 2, Term4 = 3, Base = 4, ComponentSum = 5 };

const char* term_name(FormulaTerm t);

/// How a frontier pair was produced; drives witness construction.
struct PairProvenance {
    FormulaTerm term = FormulaTerm::Base;
    InertiaPair left;                     // side-1 contribution (one-separation nodes)
    InertiaPair right;                    // side-2 contribution
    std::vector<InertiaPair> part_pairs;  // per-component contributions (component nodes)
};

struct TreeNode;
using TreeNodePtr = std::shared_ptr<const TreeNode>;

/// One node of the separation tree: a base block evaluated by the oracle, a
/// 1-separation with its four term sets, or a split into connected
/// components.
struct TreeNode {
    enum class Kind { Base, OneSep, Components };

    Kind kind = Kind::Base;
    SignedGraph graph;
    PairSet frontier;
    std::map<InertiaPair, PairProvenance> provenance;

    // OneSep
    std::optional<Separation> sep;
    std::array<PairSet, 4> terms;  // minimal-representative term sums, pre-truncation
    TreeNodePtr left, right;       // subtrees for side 1 and side 2

    // Components
    std::vector<TreeNodePtr> parts;
    std::vector<std::vector<int>> part_vertices;  // original ids per part

    // Base
    std::optional<OracleReport> oracle;
};

struct VerifyReport {
    SignedGraph graph;
    PairSet frontier;
    TreeNodePtr tree;
    OracleReport oracle;
    bool cong_ok = false;
    bool sound_ok = false;

    struct Violation {
        std::string kind;  // "soundness", "formula_only", "oracle_only"
        InertiaPair pair;
        std::optional<SymMat> witness;
        std::optional<InertiaPair> witness_pin;
    };
    std::vector<Violation> violations;

    bool ok() const { return cong_ok && sound_ok; }
};

/// Recursive evaluation of the 1-separation formula with the sampling oracle
/// at the base cases, memoized on the canonical graph key. Thread-safe; the
/// cache tolerates concurrent lookup and insertion of identical values.
class Decomposer {
  public:
    explicit Decomposer(OracleOptions opts = {});

    /// Formula frontier and the provenance-carrying tree.
    TreeNodePtr formula_tree(const SignedGraph& g);

    /// Minimal frontier of the inertia set by the formula.
    PairSet formula_minimal(const SignedGraph& g);

    /// Full-graph sampling oracle (independent of the formula recursion).
    OracleReport oracle_inertia(const SignedGraph& g) const;

    /// Frontier vs. oracle comparison: cong must hold on well-covered
    /// graphs, the soundness direction leq(oracle, frontier) must always
    /// hold. Failures become report content, never exceptions.
    VerifyReport verify_equivalence(const SignedGraph& g);

    /// Witness matrix for a frontier pair: membership(A, g) holds and
    /// pin(A) <= target componentwise. Throws std::invalid_argument when the
    /// pair is not on the frontier.
    SymMat witness_for_pair(const SignedGraph& g, InertiaPair target);

    /// min(p + q) over the formula frontier.
    int minimum_rank(const SignedGraph& g);

  private:
    TreeNodePtr build(const SignedGraph& g, int depth_allowance);
    SymMat witness_from_node(const TreeNodePtr& node, InertiaPair target, int depth_allowance);

    OracleOptions opts_;
    mutable std::mutex mutex_;
    std::map<std::string, TreeNodePtr> memo_;
};

/// Report JSON (stable field order, 1-based vertex ids, no floating point).
std::string tree_json(const TreeNode& node);
std::string verify_json(const VerifyReport& report);

}  // namespace sgi

#endif
